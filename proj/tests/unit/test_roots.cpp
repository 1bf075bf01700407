#include <gtest/gtest.h>

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <random>

#include "chainseif/errors.hpp"
#include "chainseif/roots.hpp"

using namespace chainseif;

namespace {

// Eigenvalues of the companion matrix, computed by an independent library.
std::vector<Complex> eigen_roots(const std::vector<Complex>& p) {
  const int n = static_cast<int>(p.size()) - 1;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
  for (int i = 1; i < n; ++i) m(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) m(i, n - 1) = -p[i] / p[n];
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(m, false);
  const auto& ev = solver.eigenvalues();
  return {ev.data(), ev.data() + n};
}

// Greedy matching distance: every root in `a` claims its nearest unclaimed root in `b`.
double match_distance(std::vector<Complex> a, std::vector<Complex> b) {
  double worst = 0;
  for (Complex z : a) {
    auto it = std::min_element(b.begin(), b.end(), [&](Complex x, Complex y) { return std::abs(x - z) < std::abs(y - z); });
    worst = std::max(worst, std::abs(*it - z));
    b.erase(it);
  }
  return worst;
}

}  // namespace

TEST(PolyEval, Horner) {
  const std::vector<Complex> p{1.0, -3.0, 0.0, 2.0};
  EXPECT_EQ(poly_eval(p, 2.0), Complex(11.0));
  Complex v, dv;
  poly_eval_with_derivative(p, Complex(0, 1), v, dv);
  EXPECT_NEAR(std::abs(v - Complex(1, -5)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(dv - Complex(-9, 0)), 0.0, 1e-15);
  EXPECT_DOUBLE_EQ(poly_norm(p), 6.0);
}

TEST(PolyRoots, RootsOfUnity) {
  std::vector<Complex> p(7, 0.0);
  p[0] = -1.0;
  p[6] = 1.0;
  const auto roots = poly_roots(p);
  ASSERT_EQ(roots.size(), 6u);
  for (Complex z : roots) {
    EXPECT_NEAR(std::abs(z), 1.0, 1e-13);
    EXPECT_NEAR(std::abs(std::pow(z, 6) - 1.0), 0.0, 1e-12);
  }
}

TEST(PolyRoots, KnownFactors) {
  // (z - 1)(z + 2)(z - i) = z^3 + (1 - i) z^2 + (-2 - i) z + 2i
  const std::vector<Complex> p{Complex(0, 2), Complex(-2, -1), Complex(1, -1), 1.0};
  EXPECT_LT(match_distance(poly_roots(p), {1.0, -2.0, Complex(0, 1)}), 1e-12);
}

TEST(PolyRoots, AgreesWithEigenOnRandomPolynomials) {
  std::mt19937_64 rng(17);
  std::normal_distribution<double> g;
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t deg = 1 + rng() % 20;
    std::vector<Complex> p(deg + 1);
    for (auto& c : p) c = Complex(g(rng), g(rng));
    const auto roots = poly_roots(p);
    ASSERT_EQ(roots.size(), deg);
    EXPECT_LT(match_distance(roots, eigen_roots(p)), 1e-7) << "degree " << deg;
  }
}

TEST(PolyRoots, MoviePolynomialAtStart) {
  // z^6 - (0 z - 1)^2 = z^6 - 1
  const std::vector<Complex> p{-1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0};
  for (Complex z : poly_roots(p)) EXPECT_NEAR(std::abs(z), 1.0, 1e-13);
}

TEST(PolyRoots, RejectsZeroLeadingCoefficient) {
  const std::vector<Complex> p{1.0, 2.0, 0.0};
  EXPECT_THROW(poly_roots(p), InvalidArgument);
  EXPECT_THROW(poly_roots(std::vector<Complex>{}), InvalidArgument);
}
