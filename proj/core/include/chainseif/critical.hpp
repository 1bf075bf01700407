#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "chainseif/chain.hpp"
#include "chainseif/numeric.hpp"
#include "chainseif/roots.hpp"

namespace chainseif {

/// xi_{k+2} = A_k xi_k - (A_{k+1} - 1) xi_{k+1}, with xi[0], xi[1] given and one term per
/// recursion step, so xi.size() == coeffs.size() + 1.
struct XiSequence {
  std::vector<BigInt> xi;
  std::vector<long> coeffs;
};

/// coeffs.size() must be at least 2.
XiSequence xi_sequence(const BigInt& xi0, const BigInt& xi1, std::span<const long> coeffs);

/// Whenever xi_k == 0: xi_{k+l} == (-1)^{l-1} xi_{k+1} mu(A_{k+1}, ..., A_{k+l-1}) for every l >= 2.
bool xi_closed_form_holds(const XiSequence& s);

/// q^e for any integer e (q != 0 when e < 0).
Rational rational_pow(const Rational& q, long long e);

/// Constants for the critical points of p_a + z_1: z_k = c_k z_1^{xi_k} along the recursion with
/// A = (0, a_1, ..., a_n), xi_0 = 0, xi_1 = 1, and the closing relation 1 = c_{n+1} z_1^{exponent}.
struct MorsificationConstants {
  std::vector<Rational> c;  // c_0 .. c_{n+1}
  std::vector<BigInt> xi;   // xi_0 .. xi_{n+1}
  BigInt exponent;          // xi_{n+1} = (-1)^n mu(a)
  Rational z1_power;        // K with z_1^{mu} = K
};

MorsificationConstants rational_constants(const ChainTuple& a);

/// Values are scale * w where w runs over the roots of w^exponent = constant.
struct ExactForm {
  Rational constant;
  BigInt exponent;
  Rational scale;
};

struct CriticalData {
  std::size_t count = 0;
  double radius = 0;
  double base_angle = 0;
  std::optional<ExactForm> exact;

  /// radius * exp(i (base_angle + 2 pi k / count)), k = 0..count-1.
  std::vector<Complex> values() const;
};

/// Critical values of p_a + z_1.
CriticalData morsification_critical_values(const ChainTuple& a);
/// Critical values of z_1 on the Milnor fibre p_a = 1. For n = 1 these are the a_1-th roots of unity.
CriticalData fa_critical_values(const ChainTuple& a);

/// Critical value curve z_1^d - c (z_0^{a_0} z_1 - 1)^mu = 0 of the bifibration for (a_0, a_1, ..., a_n).
struct CurveCoeffs {
  long a0 = 1;
  BigInt d;   // a_1 ... a_n
  BigInt mu;  // mu(a_2, ..., a_n)
  Rational c;
};

/// Requires at least two entries, a_1 > 1 and a_n >= 2 (UnsupportedInput / InvalidArgument).
CurveCoeffs critv_curve(const ChainTuple& a_tilde);

/// Points z_0 over which the curve has a double root in z_1: z_0^{a_0 d} = C'' with
/// C'' = C'^d / (c (mu/(d-mu))^mu) and C' = d/(d-mu) = z_0^{a_0} z_1.
CriticalData branch_points(const ChainTuple& a_tilde);

}  // namespace chainseif
