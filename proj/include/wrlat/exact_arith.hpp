#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace wrlat {

using Integer = mpz_class;
using Rational = mpq_class;

/// Raised for malformed arguments (bad radicand, invalid triple, guard violations).
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when a mathematical invariant the library relies on is observed to fail.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Canonical rational num/den; throws InvalidInput on a zero denominator.
Rational make_rational(const Integer& num, const Integer& den = 1);

Integer floor_of(const Rational& q);
Integer ceil_of(const Rational& q);
/// Nearest integer, ties rounded up.
Integer round_of(const Rational& q);

/// Checked narrowing of a GMP integer; throws InvalidInput when out of range.
std::int64_t to_int64(const Integer& z);

/// "p" or "p/q".
std::string to_string(const Rational& q);

/// Largest admissible argument for is_squarefree (trial division range).
inline constexpr std::int64_t kSquarefreeLimit = 1'000'000'000'000;

/// True iff no prime square divides n. Requires 1 <= n <= kSquarefreeLimit.
bool is_squarefree(std::int64_t n);

/// Deterministic Miller-Rabin over the full unsigned 64-bit range. Requires n >= 1.
bool is_prime(std::int64_t n);

bool is_perfect_square(std::int64_t n);

/// Moebius function; n >= 1.
int mobius(std::int64_t n);

/// Euler totient; n >= 1.
std::int64_t euler_phi(std::int64_t n);

}  // namespace wrlat
