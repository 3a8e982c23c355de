#pragma once

#include <gmpxx.h>

#include <atomic>
#include <cstddef>
#include <deque>
#include <mutex>

#include "wigner/half_int.hpp"

namespace wigner {

/// Growable table of exact factorials. Entries are immutable once
/// published, so concurrent reads need no lock; growth appends under a
/// mutex and publishes the new size with release semantics. A deque keeps
/// element addresses stable across growth.
class FactorialCache {
public:
  FactorialCache();

  /// n! as an exact integer; grows the table on demand.
  const mpz_class& get(std::size_t n);

  std::size_t size() const { return published_.load(std::memory_order_acquire); }

private:
  std::deque<mpz_class> table_;
  std::atomic<std::size_t> published_;
  std::mutex grow_mutex_;
};

/// The process-wide shared cache; the single multiplication sink for all
/// symbol evaluations, so large sweeps amortize.
FactorialCache& factorial_cache();

/// Exact n!. Negative n is a domain error.
const mpz_class& factorial(long n);

/// Factorial of an integer-valued HalfInt (the common call site:
/// factorial(a + b - c) and friends). ContractError if not an integer,
/// domain error if negative.
const mpz_class& factorial(const HalfInt& n);

} // namespace wigner
