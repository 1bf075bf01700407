#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace chainseif::testing {

namespace {

// coef * z^e, with the convention that a zero coefficient kills negative powers.
Complex term(double coef, Complex z, int e) { return coef == 0 ? Complex(0) : coef * std::pow(z, e); }

template <class System>
void newton2(System sys, Complex& x, Complex& y) {
  for (int it = 0; it < 30; ++it) {
    Complex f, g, fx, fy, gx, gy;
    sys(x, y, f, g, fx, fy, gx, gy);
    const Complex det = fx * gy - fy * gx;
    if (std::abs(det) == 0) break;
    const Complex dx = (f * gy - fy * g) / det;
    const Complex dy = (fx * g - f * gx) / det;
    x -= dx;
    y -= dy;
    if (std::abs(dx) + std::abs(dy) < 1e-16 * (1 + std::abs(x) + std::abs(y))) break;
  }
}

std::vector<Complex> monomial_poly(std::size_t degree, Complex lead, Complex constant) {
  std::vector<Complex> p(degree + 1, Complex(0));
  p[0] = constant;
  p[degree] = lead;
  return p;
}

}  // namespace

std::vector<Complex> numeric_morsification_values(const ChainTuple& a) {
  std::vector<Complex> values;
  if (a.size() == 1) {
    // d/dz (z^a + z) = a z^{a-1} + 1.
    const int a1 = static_cast<int>(a.entry(1));
    if (a1 < 2) throw std::invalid_argument("oracle needs a_1 >= 2 for n = 1");
    const auto p = monomial_poly(static_cast<std::size_t>(a1 - 1), Complex(a1), Complex(1));
    for (Complex z : poly_roots(p)) {
      for (int it = 0; it < 5; ++it) z -= (1.0 + term(a1, z, a1 - 1)) / term(a1 * (a1 - 1.0), z, a1 - 2);
      values.push_back(std::pow(z, a1) + z);
    }
    return values;
  }
  if (a.size() != 2) throw std::invalid_argument("oracle handles n <= 2");
  const int a1 = static_cast<int>(a.entry(1));
  const int a2 = static_cast<int>(a.entry(2));
  // From a1 z1^{a1-1} z2 + 1 = 0 and z1^{a1} + a2 z2^{a2-1} = 0:
  // a1^{a2-1} z1^{a1 + (a1-1)(a2-1)} + a2 (-1)^{a2-1} = 0.
  const std::size_t degree = static_cast<std::size_t>(a1 + (a1 - 1) * (a2 - 1));
  const double sign = (a2 - 1) % 2 == 0 ? 1.0 : -1.0;
  const auto p = monomial_poly(degree, Complex(std::pow(a1, a2 - 1)), Complex(a2 * sign));
  auto sys = [&](Complex x, Complex y, Complex& f, Complex& g, Complex& fx, Complex& fy, Complex& gx, Complex& gy) {
    f = term(a1, x, a1 - 1) * y + 1.0;
    g = std::pow(x, a1) + term(a2, y, a2 - 1);
    fx = term(a1 * (a1 - 1.0), x, a1 - 2) * y;
    fy = term(a1, x, a1 - 1);
    gx = term(a1, x, a1 - 1);
    gy = term(a2 * (a2 - 1.0), y, a2 - 2);
  };
  for (Complex z1 : poly_roots(p)) {
    Complex z2 = -1.0 / (static_cast<double>(a1) * std::pow(z1, a1 - 1));
    newton2(sys, z1, z2);
    values.push_back(std::pow(z1, a1) * z2 + std::pow(z2, a2) + z1);
  }
  return values;
}

std::vector<Complex> numeric_fa_values(const ChainTuple& a) {
  std::vector<Complex> values;
  if (a.size() == 1) {
    const int a1 = static_cast<int>(a.entry(1));
    return poly_roots(monomial_poly(static_cast<std::size_t>(a1), Complex(1), Complex(-1)));
  }
  if (a.size() != 2) throw std::invalid_argument("oracle handles n <= 2");
  const int a1 = static_cast<int>(a.entry(1));
  const int a2 = static_cast<int>(a.entry(2));
  // On z1^{a1} z2 + z2^{a2} = 1 with z1^{a1} + a2 z2^{a2-1} = 0: (1 - a2) z2^{a2} = 1.
  const auto p = monomial_poly(static_cast<std::size_t>(a2), Complex(1.0 - a2), Complex(-1));
  auto sys = [&](Complex x, Complex y, Complex& f, Complex& g, Complex& fx, Complex& fy, Complex& gx, Complex& gy) {
    f = std::pow(x, a1) * y + std::pow(y, a2) - 1.0;
    g = std::pow(x, a1) + term(a2, y, a2 - 1);
    fx = term(a1, x, a1 - 1) * y;
    fy = std::pow(x, a1) + term(a2, y, a2 - 1);
    gx = term(a1, x, a1 - 1);
    gy = term(a2 * (a2 - 1.0), y, a2 - 2);
  };
  for (Complex z2 : poly_roots(p)) {
    const Complex rhs = -static_cast<double>(a2) * std::pow(z2, a2 - 1);
    for (Complex z1 : poly_roots(monomial_poly(static_cast<std::size_t>(a1), Complex(1), -rhs))) {
      Complex y = z2;
      newton2(sys, z1, y);
      values.push_back(z1);
    }
  }
  return values;
}

Agreement compare_with_closed_form(const CriticalData& closed, const std::vector<Complex>& numeric) {
  Agreement out;
  const std::vector<Complex> expected = closed.values();
  out.count_ok = numeric.size() == closed.count;
  for (Complex v : numeric) {
    out.radius_rel_err = std::max(out.radius_rel_err, std::abs(std::abs(v) - closed.radius) / closed.radius);
    double best = std::numeric_limits<double>::infinity();
    for (Complex e : expected) best = std::min(best, std::abs(std::arg(v / e)));
    out.angle_err = std::max(out.angle_err, best);
  }
  // Distinctness: every closed-form value must be hit by exactly one numeric value.
  if (out.count_ok) {
    std::vector<int> hits(expected.size(), 0);
    for (Complex v : numeric) {
      std::size_t best = 0;
      for (std::size_t k = 1; k < expected.size(); ++k)
        if (std::abs(v - expected[k]) < std::abs(v - expected[best])) best = k;
      ++hits[best];
    }
    out.count_ok = std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; });
  }
  return out;
}

}  // namespace chainseif::testing
