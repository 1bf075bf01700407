#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "chainseif/roots.hpp"

namespace chainseif {

/// Tracks the roots of F(z; eps) = z^d - c (eps z - 1)^mu along eps = path(T), T in [0, 1].
struct MovieConfig {
  std::size_t d = 0;
  std::size_t mu = 0;
  double c = 1;
  std::function<Complex(double)> path;
  double max_step = 1e-2;           // in T
  double min_step = 1e-13;          // in T; below this tracking gives up
  double min_separation = 1e-10;    // roots closer than this are treated as merged
  double tolerance = 1e-10;         // relative residual accepted by the corrector
  std::size_t samples_out = 500;    // frames at T = j / (samples_out - 1)
};

/// Double root of F on the positive real axis: eps z = d/(d-mu), z = (c (mu/(d-mu))^mu)^{1/d}.
struct AlphaPoint {
  double eps;
  double z;
};

AlphaPoint find_alpha(std::size_t d, std::size_t mu, double c);

/// eps(T) = T (1 - delta) alpha e^{i theta}.
std::function<Complex(double)> radial_path(double alpha, double theta = 0, double delta = 1e-6);

/// Rejects d == 0, mu == 0, mu >= d, c <= 0, missing path, non-positive step or tolerance
/// parameters and samples_out < 2.
void validate(const MovieConfig& config);

/// F(z; eps).
Complex movie_polynomial(const MovieConfig& config, Complex z, Complex eps);

/// Roots of z^d = c (-1)^mu ordered by argument in [0, 2 pi); the index is the label.
std::vector<Complex> start_roots(std::size_t d, std::size_t mu, double c);

struct Trajectory {
  std::size_t label = 0;
  std::vector<double> t;
  std::vector<Complex> z;
};

enum class PetalDirection { ccw, cw, mixed };
std::string to_string(PetalDirection d);

struct PetalReport {
  std::size_t first = 0;   // labels ordered so the ccw arc from first to second
  std::size_t second = 0;  // has length arc_separation <= d/2
  std::size_t arc_separation = 0;
  PetalDirection direction = PetalDirection::ccw;
  double collision_t = 0;
  Complex collision_eps;
};

struct MovieResult {
  std::size_t d = 0;
  std::size_t mu = 0;
  double c = 0;
  std::vector<Trajectory> trajectories;  // indexed by label
  std::optional<PetalReport> petal;      // empty when no pair collides at the end of the path
  std::size_t accepted_steps = 0;
  std::size_t rejected_steps = 0;
  double max_residual = 0;  // largest relative residual over accepted steps
};

/// Predictor-corrector continuation from eps(0); throws TrackingFailure when no step above
/// min_step keeps every root separated and unambiguously matched.
MovieResult track(const MovieConfig& config);

struct RootGroups {
  std::vector<std::size_t> small;   // mu - 1 labels
  std::vector<std::size_t> medium;  // 2 labels
  std::vector<std::size_t> large;   // d - mu - 1 labels
};

/// Partition by modulus into groups of sizes (mu-1, 2, d-mu-1). Requires T > 0; throws
/// NumericalFailure when a group boundary falls within tol of a tie.
RootGroups classify_roots(std::span<const Complex> roots, std::size_t mu, double t, double tol = 1e-12);

struct EgervaryReport {
  bool holds = false;
  std::size_t samples_checked = 0;
  std::optional<std::size_t> offending_sample;
  RootGroups groups;
};

/// Groups are fixed by label from the final sample (medium = colliding pair); at every sample
/// with T > 0, max|small| <= min|medium| + tol and max|medium| <= min|large| + tol.
EgervaryReport verify_egervary_ordering(const MovieResult& result, double tol = 1e-9);

struct EquivarianceReport {
  bool holds = false;
  long k = 0;
  PetalReport base;
  PetalReport rotated;
};

/// Rotating z_0 by 2 pi k / (a0 d) rotates eps by 2 pi k / d; the colliding labels must shift by -k.
EquivarianceReport rotation_equivariance(const MovieConfig& config, long k, long a0);

}  // namespace chainseif
