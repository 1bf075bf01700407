#include "chainseif/roots.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "chainseif/errors.hpp"

namespace chainseif {

Complex poly_eval(std::span<const Complex> coeffs, Complex z) {
  Complex p = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) p = p * z + coeffs[i];
  return p;
}

void poly_eval_with_derivative(std::span<const Complex> coeffs, Complex z, Complex& p, Complex& dp) {
  p = 0;
  dp = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    dp = dp * z + p;
    p = p * z + coeffs[i];
  }
}

double poly_norm(std::span<const Complex> coeffs) {
  double s = 0;
  for (const Complex& c : coeffs) s += std::abs(c);
  return s;
}

namespace {

bool within_bound(std::span<const Complex> coeffs, Complex z, double tol) {
  const double deg = static_cast<double>(coeffs.size() - 1);
  const double bound = tol * poly_norm(coeffs) * std::pow(std::max(1.0, std::abs(z)), deg);
  return std::abs(poly_eval(coeffs, z)) <= bound;
}

}  // namespace

std::vector<Complex> poly_roots(std::span<const Complex> coeffs, double tol) {
  if (coeffs.empty() || coeffs.back() == Complex(0)) throw InvalidArgument("poly_roots: leading coefficient is zero");
  for (const Complex& c : coeffs)
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) throw InvalidArgument("poly_roots: non-finite coefficient");

  // Exact zero roots first, then work on the deflated polynomial.
  std::size_t zeros = 0;
  while (coeffs[zeros] == Complex(0)) ++zeros;
  std::vector<Complex> p(coeffs.begin() + static_cast<std::ptrdiff_t>(zeros), coeffs.end());
  const std::size_t deg = p.size() - 1;
  std::vector<Complex> roots(zeros, Complex(0));
  if (deg == 0) return roots;
  if (deg == 1) {
    roots.push_back(-p[0] / p[1]);
    return roots;
  }

  const double radius = std::pow(std::abs(p[0]) / std::abs(p[deg]), 1.0 / static_cast<double>(deg));
  std::vector<Complex> z(deg);
  for (std::size_t k = 0; k < deg; ++k) {
    const double angle = 2 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(deg) + 0.4;
    z[k] = std::polar(radius, angle);
  }

  constexpr int kMaxIterations = 1000;
  for (int it = 0; it < kMaxIterations; ++it) {
    double worst = 0;
    for (std::size_t k = 0; k < deg; ++k) {
      Complex v, dv;
      poly_eval_with_derivative(p, z[k], v, dv);
      if (v == Complex(0)) continue;
      const Complex ratio = v / dv;
      Complex repulsion = 0;
      for (std::size_t j = 0; j < deg; ++j)
        if (j != k) repulsion += 1.0 / (z[k] - z[j]);
      const Complex step = ratio / (1.0 - ratio * repulsion);
      if (std::isfinite(step.real()) && std::isfinite(step.imag())) {
        z[k] -= step;
        worst = std::max(worst, std::abs(step) / std::max(1.0, std::abs(z[k])));
      }
    }
    if (worst < 1e-15) break;
  }

  for (Complex& r : z) {
    for (int it = 0; it < 3; ++it) {
      Complex v, dv;
      poly_eval_with_derivative(p, r, v, dv);
      if (dv == Complex(0)) break;
      const Complex next = r - v / dv;
      if (std::abs(poly_eval(p, next)) < std::abs(v)) r = next;
    }
    if (!within_bound(coeffs, r, tol)) {
      throw NumericalFailure("poly_roots: residual bound not met at degree " + std::to_string(coeffs.size() - 1));
    }
    roots.push_back(r);
  }
  return roots;
}

}  // namespace chainseif
