#include "chainseif/movie.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>

#include "chainseif/errors.hpp"

namespace chainseif {

namespace {

constexpr double kTwoPi = 2 * std::numbers::pi;

struct Evaluation {
  Complex f;
  Complex f_z;
  Complex f_eps;
  double scale;  // |z|^d + c |eps z - 1|^mu, the size of the two terms of F
};

Evaluation evaluate(const MovieConfig& cfg, Complex z, Complex eps) {
  const double d = static_cast<double>(cfg.d);
  const double mu = static_cast<double>(cfg.mu);
  const Complex w = eps * z - 1.0;
  const Complex w_mu1 = std::pow(w, static_cast<int>(cfg.mu) - 1);
  const Complex w_mu = w_mu1 * w;
  const Complex z_d1 = std::pow(z, static_cast<int>(cfg.d) - 1);
  const Complex z_d = z_d1 * z;
  Evaluation e;
  e.f = z_d - cfg.c * w_mu;
  e.f_z = d * z_d1 - cfg.c * mu * eps * w_mu1;
  e.f_eps = -cfg.c * mu * z * w_mu1;
  e.scale = std::abs(z_d) + cfg.c * std::abs(w_mu);
  return e;
}

double relative_residual(const Evaluation& e) { return e.scale > 0 ? std::abs(e.f) / e.scale : std::abs(e.f); }

std::vector<double> nearest_distances(const std::vector<Complex>& z) {
  std::vector<double> nn(z.size(), std::numeric_limits<double>::infinity());
  for (std::size_t i = 0; i < z.size(); ++i)
    for (std::size_t j = i + 1; j < z.size(); ++j) {
      const double dist = std::abs(z[i] - z[j]);
      nn[i] = std::min(nn[i], dist);
      nn[j] = std::min(nn[j], dist);
    }
  return nn;
}

struct State {
  double t;
  Complex eps;
  std::vector<Complex> z;
};

// Newton from `guess` at fixed eps; returns false when the residual target is not met.
bool correct(const MovieConfig& cfg, Complex eps, Complex& z, double limit, double& residual) {
  for (int it = 0; it < 12; ++it) {
    const Evaluation e = evaluate(cfg, z, eps);
    residual = relative_residual(e);
    if (e.f_z == Complex(0)) return false;
    const Complex step = e.f / e.f_z;
    if (!std::isfinite(step.real()) || !std::isfinite(step.imag()) || std::abs(step) > limit) return false;
    z -= step;
    if (std::abs(step) <= 1e-15 * std::max(1.0, std::abs(z))) break;
  }
  residual = relative_residual(evaluate(cfg, z, eps));
  return residual <= cfg.tolerance;
}

// Neville evaluation at u = 0 of the interpolant through (u_i, y_i).
template <class Y>
Y extrapolate_to_zero(const std::vector<Complex>& u, std::vector<Y> y) {
  const std::size_t m = u.size();
  for (std::size_t level = 1; level < m; ++level)
    for (std::size_t i = 0; i + level < m; ++i) {
      const Complex denom = u[i] - u[i + level];
      y[i] = ((0.0 - u[i + level]) * y[i] - (0.0 - u[i]) * y[i + 1]) / denom;
    }
  return y[0];
}

std::optional<PetalReport> detect_collision(const std::vector<State>& tail_states) {
  const State& last = tail_states.back();
  const std::size_t d = last.z.size();
  if (d < 2) return std::nullopt;
  double best = std::numeric_limits<double>::infinity();
  double runner_up = std::numeric_limits<double>::infinity();
  std::size_t p = 0, q = 1;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      const double dist = std::abs(last.z[i] - last.z[j]);
      if (dist < best) {
        runner_up = best;
        best = dist;
        p = i;
        q = j;
      } else if (dist < runner_up) {
        runner_up = dist;
      }
    }
  if (!(best < 0.1 * runner_up)) return std::nullopt;

  PetalReport r;
  std::size_t ccw = (q + d - p) % d;
  r.first = p;
  r.second = q;
  if (2 * ccw > d) {
    std::swap(r.first, r.second);
    ccw = d - ccw;
  }
  r.arc_separation = ccw;

  // s^2 = (z_p - z_q)^2 vanishes linearly at the double root, so eps and T are analytic in s^2.
  std::vector<Complex> u;
  std::vector<Complex> eps;
  std::vector<Complex> ts;
  for (const State& s : tail_states) {
    const Complex diff = s.z[p] - s.z[q];
    u.push_back(diff * diff);
    eps.push_back(s.eps);
    ts.push_back(Complex(s.t));
  }
  bool distinct = true;
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = i + 1; j < u.size(); ++j)
      if (std::abs(u[i] - u[j]) <= 1e-300) distinct = false;
  if (distinct && u.size() >= 2) {
    r.collision_eps = extrapolate_to_zero(u, eps);
    r.collision_t = extrapolate_to_zero(u, ts).real();
  } else {
    r.collision_eps = last.eps;
    r.collision_t = last.t;
  }
  return r;
}

PetalDirection petal_direction(const PetalReport& r, const std::vector<std::size_t>& small, std::size_t d) {
  if (small.empty()) return PetalDirection::ccw;
  bool all_inside = true;
  bool all_outside = true;
  for (std::size_t label : small) {
    const std::size_t offset = (label + d - r.first) % d;
    const bool inside = offset > 0 && offset < r.arc_separation;
    all_inside = all_inside && inside;
    all_outside = all_outside && !inside;
  }
  if (all_inside) return PetalDirection::ccw;
  if (all_outside) return PetalDirection::cw;
  return PetalDirection::mixed;
}

std::vector<std::size_t> order_by_modulus(std::span<const Complex> roots) {
  std::vector<std::size_t> idx(roots.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return std::abs(roots[a]) < std::abs(roots[b]); });
  return idx;
}

RootGroups groups_from_final(const MovieResult& result) {
  RootGroups g;
  if (!result.petal) return g;
  const std::size_t d = result.d;
  std::vector<Complex> final_roots(d);
  for (std::size_t l = 0; l < d; ++l) final_roots[l] = result.trajectories[l].z.back();
  g.medium = {result.petal->first, result.petal->second};
  for (std::size_t label : order_by_modulus(final_roots)) {
    if (label == result.petal->first || label == result.petal->second) continue;
    if (g.small.size() + 1 < result.mu) {
      g.small.push_back(label);
    } else {
      g.large.push_back(label);
    }
  }
  return g;
}

}  // namespace

std::string to_string(PetalDirection d) {
  switch (d) {
    case PetalDirection::ccw:
      return "ccw";
    case PetalDirection::cw:
      return "cw";
    case PetalDirection::mixed:
      return "mixed";
  }
  return "mixed";
}

AlphaPoint find_alpha(std::size_t d, std::size_t mu, double c) {
  if (mu == 0 || mu >= d || !(c > 0)) throw InvalidArgument("find_alpha needs 0 < mu < d and c > 0");
  const double dd = static_cast<double>(d);
  const double mm = static_cast<double>(mu);
  const double ez = dd / (dd - mm);
  const double z = std::exp((std::log(c) + mm * std::log(mm / (dd - mm))) / dd);
  return {ez / z, z};
}

std::function<Complex(double)> radial_path(double alpha, double theta, double delta) {
  const Complex end = (1.0 - delta) * alpha * std::polar(1.0, theta);
  return [end](double t) { return t * end; };
}

void validate(const MovieConfig& cfg) {
  if (cfg.d == 0 || cfg.mu == 0 || cfg.mu >= cfg.d) throw InvalidArgument("movie needs 0 < mu < d");
  if (!(cfg.c > 0) || !std::isfinite(cfg.c)) throw InvalidArgument("movie needs c > 0");
  if (!cfg.path) throw InvalidArgument("movie needs a path");
  if (!(cfg.max_step > 0) || !(cfg.min_step > 0) || cfg.min_step > cfg.max_step) throw InvalidArgument("bad step bounds");
  if (!(cfg.tolerance > 0) || !(cfg.min_separation > 0)) throw InvalidArgument("bad tolerances");
  if (cfg.samples_out < 2) throw InvalidArgument("samples_out must be at least 2");
}

Complex movie_polynomial(const MovieConfig& cfg, Complex z, Complex eps) { return evaluate(cfg, z, eps).f; }

std::vector<Complex> start_roots(std::size_t d, std::size_t mu, double c) {
  if (d == 0 || !(c > 0)) throw InvalidArgument("start_roots needs d > 0 and c > 0");
  const double radius = std::pow(c, 1.0 / static_cast<double>(d));
  const double offset = mu % 2 == 0 ? 0.0 : std::numbers::pi;  // arg of c (-1)^mu
  std::vector<Complex> z(d);
  for (std::size_t k = 0; k < d; ++k) {
    z[k] = std::polar(radius, (offset + kTwoPi * static_cast<double>(k)) / static_cast<double>(d));
  }
  return z;
}

MovieResult track(const MovieConfig& cfg) {
  validate(cfg);
  const std::size_t d = cfg.d;
  MovieResult result;
  result.d = d;
  result.mu = cfg.mu;
  result.c = cfg.c;
  result.trajectories.resize(d);

  State cur{0.0, cfg.path(0.0), start_roots(d, cfg.mu, cfg.c)};
  for (std::size_t l = 0; l < d; ++l) {
    double res = 0;
    if (!correct(cfg, cur.eps, cur.z[l], 1e-3, res)) throw TrackingFailure("start roots do not solve F at T = 0");
    result.max_residual = std::max(result.max_residual, res);
  }
  auto record = [&](const State& s) {
    for (std::size_t l = 0; l < d; ++l) {
      result.trajectories[l].label = l;
      result.trajectories[l].t.push_back(s.t);
      result.trajectories[l].z.push_back(s.z[l]);
    }
  };
  record(cur);

  std::vector<State> recent{cur};
  const std::size_t frames = cfg.samples_out;
  std::size_t next_frame = 1;
  double h = cfg.max_step;
  std::vector<Complex> trial(d);

  while (next_frame < frames) {
    const double frame_t = static_cast<double>(next_frame) / static_cast<double>(frames - 1);
    const bool clipped = cur.t + h >= frame_t;
    const double target = clipped ? frame_t : cur.t + h;
    const Complex eps1 = cfg.path(target);
    const Complex deps = eps1 - cur.eps;
    const std::vector<double> nn = nearest_distances(cur.z);

    bool ok = true;
    double worst_res = 0;
    for (std::size_t l = 0; l < d && ok; ++l) {
      const Evaluation e = evaluate(cfg, cur.z[l], cur.eps);
      const Complex pred = cur.z[l] - e.f_eps / e.f_z * deps;
      Complex z = pred;
      double res = 0;
      ok = correct(cfg, eps1, z, 0.25 * nn[l], res) && std::abs(z - cur.z[l]) <= 0.5 * nn[l] &&
           std::abs(z - pred) <= 0.25 * nn[l];
      trial[l] = z;
      worst_res = std::max(worst_res, res);
    }
    if (ok) {
      const std::vector<double> nn_new = nearest_distances(trial);
      for (double v : nn_new) ok = ok && v > cfg.min_separation;
    }
    if (!ok) {
      ++result.rejected_steps;
      h = 0.5 * (target - cur.t);
      if (h < cfg.min_step) {
        throw TrackingFailure("step size fell below " + std::to_string(cfg.min_step) + " at T = " + std::to_string(cur.t));
      }
      continue;
    }

    ++result.accepted_steps;
    result.max_residual = std::max(result.max_residual, worst_res);
    cur = State{target, eps1, trial};
    recent.push_back(cur);
    if (recent.size() > 3) recent.erase(recent.begin());
    if (clipped) {
      record(cur);
      ++next_frame;
    }
    if (!clipped) h = std::min(2 * h, cfg.max_step);
  }

  result.petal = detect_collision(recent);
  if (result.petal) {
    const RootGroups g = groups_from_final(result);
    result.petal->direction = petal_direction(*result.petal, g.small, d);
  }
  return result;
}

RootGroups classify_roots(std::span<const Complex> roots, std::size_t mu, double t, double tol) {
  if (!(t > 0)) throw InvalidArgument("classify_roots needs T > 0");
  const std::size_t d = roots.size();
  if (mu == 0 || mu + 1 > d) throw InvalidArgument("classify_roots needs 1 <= mu <= d - 1");
  const std::vector<std::size_t> idx = order_by_modulus(roots);
  auto gap = [&](std::size_t i) { return std::abs(roots[idx[i]]) - std::abs(roots[idx[i - 1]]); };
  const std::size_t small_end = mu - 1;
  const std::size_t medium_end = mu + 1;
  if ((small_end > 0 && gap(small_end) <= tol) || (medium_end < d && gap(medium_end) <= tol)) {
    throw NumericalFailure("classify_roots: moduli tie at a group boundary");
  }
  RootGroups g;
  for (std::size_t i = 0; i < d; ++i) {
    if (i < small_end) {
      g.small.push_back(idx[i]);
    } else if (i < medium_end) {
      g.medium.push_back(idx[i]);
    } else {
      g.large.push_back(idx[i]);
    }
  }
  return g;
}

EgervaryReport verify_egervary_ordering(const MovieResult& result, double tol) {
  EgervaryReport rep;
  if (!result.petal || result.trajectories.empty()) {
    rep.holds = true;
    return rep;
  }
  rep.groups = groups_from_final(result);
  const std::size_t samples = result.trajectories.front().t.size();
  auto modulus = [&](std::size_t label, std::size_t s) { return std::abs(result.trajectories[label].z[s]); };
  for (std::size_t s = 0; s < samples; ++s) {
    if (!(result.trajectories.front().t[s] > 0)) continue;
    ++rep.samples_checked;
    double small_max = 0, medium_min = std::numeric_limits<double>::infinity(), medium_max = 0;
    double large_min = std::numeric_limits<double>::infinity();
    for (std::size_t l : rep.groups.small) small_max = std::max(small_max, modulus(l, s));
    for (std::size_t l : rep.groups.medium) {
      medium_min = std::min(medium_min, modulus(l, s));
      medium_max = std::max(medium_max, modulus(l, s));
    }
    for (std::size_t l : rep.groups.large) large_min = std::min(large_min, modulus(l, s));
    const bool ok1 = rep.groups.small.empty() || small_max <= medium_min + tol;
    const bool ok2 = rep.groups.large.empty() || medium_max <= large_min + tol;
    if (!(ok1 && ok2)) {
      rep.offending_sample = s;
      rep.holds = false;
      return rep;
    }
  }
  rep.holds = true;
  return rep;
}

EquivarianceReport rotation_equivariance(const MovieConfig& cfg, long k, long a0) {
  if (a0 < 1) throw InvalidArgument("rotation_equivariance needs a0 >= 1");
  EquivarianceReport rep;
  rep.k = k;
  const MovieResult base = track(cfg);
  if (!base.petal) throw NumericalFailure("base movie has no collision");
  rep.base = *base.petal;

  // z_0 -> exp(2 pi i k / (a0 d)) z_0 sends eps = z_0^{a0} to exp(2 pi i k / d) eps.
  const long dd = static_cast<long>(cfg.d);
  const Complex omega = std::polar(1.0, kTwoPi * static_cast<double>(((k % dd) + dd) % dd) / static_cast<double>(dd));
  MovieConfig rotated = cfg;
  const auto path = cfg.path;
  rotated.path = [path, omega](double t) { return omega * path(t); };
  const MovieResult moved = track(rotated);
  if (!moved.petal) throw NumericalFailure("rotated movie has no collision");
  rep.rotated = *moved.petal;

  auto shift = [&](std::size_t label) { return static_cast<std::size_t>((((static_cast<long>(label) - k) % dd) + dd) % dd); };
  const bool same_order = rep.rotated.first == shift(rep.base.first) && rep.rotated.second == shift(rep.base.second);
  const bool swapped = rep.rotated.first == shift(rep.base.second) && rep.rotated.second == shift(rep.base.first) &&
                       2 * rep.base.arc_separation == cfg.d;
  rep.holds = (same_order || swapped) && rep.rotated.arc_separation == rep.base.arc_separation &&
              rep.rotated.direction == rep.base.direction;
  return rep;
}

}  // namespace chainseif
