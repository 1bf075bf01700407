#pragma once

#include <complex>
#include <span>
#include <vector>

namespace chainseif {

using Complex = std::complex<double>;

/// Horner evaluation; coefficients lowest degree first.
Complex poly_eval(std::span<const Complex> coeffs, Complex z);
/// Value and first derivative in one pass.
void poly_eval_with_derivative(std::span<const Complex> coeffs, Complex z, Complex& p, Complex& dp);

/// Sum of |coefficients|.
double poly_norm(std::span<const Complex> coeffs);

/// All roots, with multiplicity, of the polynomial with the given coefficients (lowest degree
/// first). Aberth-Ehrlich iteration followed by Newton polishing. Each returned root satisfies
/// |p(z)| <= tol * poly_norm(p) * max(1, |z|)^deg, otherwise NumericalFailure is thrown.
/// The leading coefficient must be nonzero.
std::vector<Complex> poly_roots(std::span<const Complex> coeffs, double tol = 1e-12);

}  // namespace chainseif
