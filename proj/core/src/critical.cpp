#include "chainseif/critical.hpp"

#include <cmath>
#include <numbers>

#include "chainseif/errors.hpp"

namespace chainseif {

XiSequence xi_sequence(const BigInt& xi0, const BigInt& xi1, std::span<const long> coeffs) {
  if (coeffs.size() < 2) throw InvalidArgument("xi_sequence needs at least two coefficients");
  XiSequence s;
  s.coeffs.assign(coeffs.begin(), coeffs.end());
  s.xi.reserve(coeffs.size() + 1);
  s.xi.push_back(xi0);
  s.xi.push_back(xi1);
  for (std::size_t k = 0; k + 1 < coeffs.size(); ++k) {
    s.xi.push_back(coeffs[k] * s.xi[k] - (coeffs[k + 1] - 1) * s.xi[k + 1]);
  }
  return s;
}

bool xi_closed_form_holds(const XiSequence& s) {
  for (std::size_t k = 0; k + 2 < s.xi.size(); ++k) {
    if (sgn(s.xi[k]) != 0) continue;
    for (std::size_t l = 2; k + l < s.xi.size(); ++l) {
      const std::span<const long> window(s.coeffs.data() + k + 1, l - 1);
      const BigInt expected = sign_power(static_cast<long long>(l) - 1) * s.xi[k + 1] * milnor_polynomial(window);
      if (s.xi[k + l] != expected) return false;
    }
  }
  return true;
}

Rational rational_pow(const Rational& q, long long e) {
  if (e < 0) {
    if (sgn(q) == 0) throw InvalidArgument("rational_pow: zero to a negative power");
    return rational_pow(1 / q, -e);
  }
  BigInt num, den;
  mpz_pow_ui(num.get_mpz_t(), q.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(den.get_mpz_t(), q.get_den_mpz_t(), static_cast<unsigned long>(e));
  Rational r(num, den);
  r.canonicalize();
  return r;
}

namespace {

long long to_ll(const BigInt& v) {
  if (!v.fits_slong_p()) throw UnsupportedInput("exponent " + v.get_str() + " is too large");
  return v.get_si();
}

void require_isolated(const ChainTuple& a) {
  if (a.empty()) throw InvalidArgument("critical values need a nonempty tuple");
  if (!a.has_isolated_singularity()) throw InvalidArgument("tuple " + a.to_string() + " needs a_n >= 2");
}

// c_{k+2} = sign * c_k^{A_k} / (A_{k+1} c_{k+1}^{A_{k+1}-1}) for k = 0..A.size()-2.
std::vector<Rational> constants(std::span<const long> coeffs, const Rational& c0, const Rational& c1, int sign) {
  std::vector<Rational> c{c0, c1};
  for (std::size_t k = 0; k + 1 < coeffs.size(); ++k) {
    Rational next = rational_pow(c[k], coeffs[k]) / (coeffs[k + 1] * rational_pow(c[k + 1], coeffs[k + 1] - 1));
    if (sign < 0) next = -next;
    next.canonicalize();
    c.push_back(next);
  }
  return c;
}

CriticalData make_data(std::size_t count, ExactForm form) {
  if (sgn(form.constant) == 0 || sgn(form.exponent) <= 0 || sgn(form.scale) <= 0) {
    throw InternalInconsistency("degenerate critical value description");
  }
  CriticalData out;
  out.count = count;
  const double e = form.exponent.get_d();
  out.radius = std::exp(log_abs(form.scale) + log_abs(form.constant) / e);
  out.base_angle = sgn(form.constant) < 0 ? std::numbers::pi / e : 0.0;
  out.exact = std::move(form);
  return out;
}

struct FibreExponents {
  BigInt alpha;  // alpha_{n+1}
  BigInt beta;   // beta_{n+1}
  BigInt e;      // alpha_{n+1} - a_1 beta_{n+1}
};

FibreExponents fibre_exponents(const ChainTuple& a) {
  const XiSequence al = xi_sequence(1, 0, a.entries());
  const XiSequence be = xi_sequence(0, 1, a.entries());
  FibreExponents f{al.xi.back(), be.xi.back(), 0};
  f.e = f.alpha - a.entry(1) * f.beta;
  if (abs(f.e) != degree_d(a)) throw InternalInconsistency("fibre exponent differs from d(a) for " + a.to_string());
  return f;
}

// Solves 1 = q z^{e} for z^{|e|}.
Rational normalize(const Rational& q, const BigInt& e) { return sgn(e) > 0 ? Rational(1 / q) : q; }

}  // namespace

std::vector<Complex> CriticalData::values() const {
  std::vector<Complex> v(count);
  for (std::size_t k = 0; k < count; ++k) {
    v[k] = std::polar(radius, base_angle + 2 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(count));
  }
  return v;
}

MorsificationConstants rational_constants(const ChainTuple& a) {
  require_isolated(a);
  std::vector<long> coeffs{0};
  coeffs.insert(coeffs.end(), a.entries().begin(), a.entries().end());
  MorsificationConstants m;
  if (coeffs.size() >= 2) m.xi = xi_sequence(0, 1, coeffs).xi;
  m.c = constants(coeffs, Rational(1), Rational(1), -1);
  m.exponent = m.xi.back();
  const BigInt mu = milnor_number(a);
  if (abs(m.exponent) != mu) throw InternalInconsistency("xi_{n+1} differs from +-mu for " + a.to_string());
  m.z1_power = normalize(m.c.back(), m.exponent);
  return m;
}

CriticalData morsification_critical_values(const ChainTuple& a) {
  const MorsificationConstants m = rational_constants(a);
  const BigInt mu = milnor_number(a);
  Rational scale(mu, degree_d(a));
  scale.canonicalize();
  return make_data(to_size(mu, kMaxMilnorNumber), {m.z1_power, mu, scale});
}

CriticalData fa_critical_values(const ChainTuple& a) {
  require_isolated(a);
  const BigInt d = degree_d(a);
  if (a.size() == 1) return make_data(to_size(d, kMaxMilnorNumber), {Rational(1), d, Rational(1)});

  const FibreExponents f = fibre_exponents(a);
  const std::vector<Rational> c = constants(a.entries(), Rational(1), Rational(1), -1);
  const ChainTuple rest = a.tail();
  Rational k2(degree_d(rest), milnor_number(rest));
  k2.canonicalize();
  const Rational q = c.back() * rational_pow(k2, to_ll(f.beta));
  return make_data(to_size(d, kMaxMilnorNumber), {normalize(q, f.e), d, Rational(1)});
}

CurveCoeffs critv_curve(const ChainTuple& a_tilde) {
  if (a_tilde.size() < 2) throw InvalidArgument("critv_curve needs (a_0, a_1, ...)");
  const ChainTuple a = a_tilde.tail();
  if (a.entry(1) < 2) throw UnsupportedInput("critv_curve needs a_1 > 1, got " + a_tilde.to_string());
  require_isolated(a);

  CurveCoeffs out;
  out.a0 = a_tilde.entry(1);
  out.d = degree_d(a);
  const ChainTuple rest = a.tail();
  out.mu = milnor_number(rest);
  if (a.size() == 1) {
    out.c = 1;
    return out;
  }
  const FibreExponents f = fibre_exponents(a);
  const std::vector<Rational> c = constants(a.entries(), Rational(1), Rational(1), +1);
  Rational k2(degree_d(rest), out.mu);
  k2.canonicalize();
  out.c = normalize(c.back() * rational_pow(k2, to_ll(f.beta)), f.e);
  if (sgn(out.c) <= 0) throw InternalInconsistency("critical value curve constant is not positive");
  return out;
}

CriticalData branch_points(const ChainTuple& a_tilde) {
  const CurveCoeffs cc = critv_curve(a_tilde);
  const long long d = to_ll(cc.d);
  const long long mu = to_ll(cc.mu);
  Rational c_prime(cc.d, cc.d - cc.mu);
  c_prime.canonicalize();
  Rational ratio(cc.mu, cc.d - cc.mu);
  ratio.canonicalize();
  const Rational c_second = rational_pow(c_prime, d) / (cc.c * rational_pow(ratio, mu));
  const BigInt count = cc.d * cc.a0;
  return make_data(to_size(count, kMaxMilnorNumber), {c_second, count, Rational(1)});
}

}  // namespace chainseif
