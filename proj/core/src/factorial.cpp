#include "wigner/factorial.hpp"

#include "wigner/errors.hpp"

namespace wigner {

FactorialCache::FactorialCache() {
  table_.emplace_back(1); // 0!
  published_.store(1, std::memory_order_release);
}

const mpz_class& FactorialCache::get(std::size_t n) {
  std::size_t have = published_.load(std::memory_order_acquire);
  if (n < have) return table_[n];
  std::lock_guard<std::mutex> lock(grow_mutex_);
  have = published_.load(std::memory_order_relaxed);
  while (have <= n) {
    table_.push_back(table_[have - 1] * mpz_class(static_cast<unsigned long>(have)));
    ++have;
    published_.store(have, std::memory_order_release);
  }
  return table_[n];
}

FactorialCache& factorial_cache() {
  static FactorialCache cache;
  return cache;
}

const mpz_class& factorial(long n) {
  if (n < 0) throw DomainError("factorial of negative argument");
  return factorial_cache().get(static_cast<std::size_t>(n));
}

const mpz_class& factorial(const HalfInt& n) {
  if (!n.is_integer())
    throw ContractError("factorial of non-integer half-integer " + n.str());
  return factorial(n.to_long());
}

} // namespace wigner
