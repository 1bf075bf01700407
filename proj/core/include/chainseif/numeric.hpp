#pragma once

#include <cstddef>
#include <string>

#include <gmpxx.h>

namespace chainseif {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Converts a nonnegative BigInt that is used as a size or index. Throws
/// InvalidArgument when it is negative or larger than `limit`.
std::size_t to_size(const BigInt& value, std::size_t limit = std::size_t{1} << 20);

/// Natural logarithm of |q| for q != 0, accurate for magnitudes far outside double range.
double log_abs(const Rational& q);
double log_abs(const BigInt& z);

/// Parity helper: (-1)^e.
constexpr int sign_power(long long e) { return (e % 2 == 0) ? 1 : -1; }

}  // namespace chainseif
