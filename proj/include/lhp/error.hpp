#pragma once

/**
 * @file error.hpp
 * @brief Exception types and overflow-checked integer helpers.
 *
 * Every failure mode the library can raise maps onto one of the classes
 * below, so a front end can translate them into distinct exit codes.
 */

#include <cstdint>
#include <stdexcept>
#include <string>

namespace lhp {

/// Malformed or inconsistent input (wrong lengths, invalid posets, ...).
class InputError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// A sequence that fails the 0,1-difference gate was passed to a gated module.
class GateError : public InputError {
  public:
    using InputError::InputError;
};

/// An operation's precondition (e.g. point membership) does not hold.
class PreconditionError : public InputError {
  public:
    using InputError::InputError;
};

/// An enumeration would exceed the configured work budget.
class BudgetExceeded : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// 64-bit arithmetic would have wrapped around.
class OverflowError : public std::overflow_error {
  public:
    using std::overflow_error::overflow_error;
};

/// A mathematical guarantee was observed to fail. Signals a bug.
class InternalError : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

using Int = std::int64_t;

/// Default cap on the number of candidate points an enumeration may scan.
inline constexpr Int kDefaultBudget = 100'000'000;

inline Int checked_add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
    return r;
}

inline Int checked_sub(Int a, Int b) {
    Int r;
    if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in subtraction");
    return r;
}

inline Int checked_mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
    return r;
}

/// Binomial coefficient C(n, k); zero outside 0 <= k <= n.
inline Int binomial(Int n, Int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Int r = 1;
    for (Int i = 1; i <= k; ++i) {
        // r * (n - k + i) is divisible by i at every step
        r = checked_mul(r, n - k + i) / i;
    }
    return r;
}

} // namespace lhp
