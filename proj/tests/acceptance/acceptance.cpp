// One PASS/FAIL line per acceptance criterion; exit status is the number of failures.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <json.hpp>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "chainseif/critical.hpp"
#include "chainseif/identities.hpp"
#include "chainseif/lattice.hpp"
#include "chainseif/movie.hpp"
#include "cli.hpp"
#include "oracles.hpp"

using namespace chainseif;
using Json = nlohmann::json;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

void all_tuples(long lo, long hi, std::size_t max_len, std::vector<ChainTuple>& out) {
  std::vector<long> cur;
  std::function<void()> rec = [&] {
    if (!cur.empty()) out.push_back(ChainTuple(cur));
    if (cur.size() == max_len) return;
    for (long e = lo; e <= hi; ++e) {
      cur.push_back(e);
      rec();
      cur.pop_back();
    }
  };
  rec();
}

std::vector<ChainTuple> sweep_tuples() {
  std::vector<ChainTuple> t;
  all_tuples(2, 4, 4, t);
  all_tuples(2, 6, 3, t);
  return t;
}

struct Outcome {
  bool pass = true;
  std::string detail;
  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

// ---------------------------------------------------------------------------------------------

Outcome criterion1() {
  Outcome o;
  const auto t0 = Clock::now();
  const std::vector<std::pair<std::string, Json>> cases{
      {"3", Json::parse("[[1,-1],[0,1]]")},
      {"2,3", Json::parse("[[1,1,1,0],[0,1,1,1],[0,0,1,1],[0,0,0,1]]")}};
  for (const auto& [tuple, expected] : cases) {
    std::ostringstream out, err;
    const int code = cli::run({"seifert", tuple, "--method", "all"}, out, err);
    if (code != 0) {
      o.fail("seifert " + tuple + " exited " + std::to_string(code));
      continue;
    }
    const Json j = Json::parse(out.str());
    if (j["matrix"] != expected) o.fail("seifert " + tuple + " matrix " + j["matrix"].dump());
    for (const char* r : {"series", "inductive", "lattice"})
      if (j["routes"][r]["status"] != "agree") o.fail(std::string("route ") + r + " disagrees on " + tuple);
  }
  const double s = seconds_since(t0);
  if (s >= 1.0) o.fail("took " + std::to_string(s) + " s");
  if (o.pass) o.detail = "S(3), S(2,3) exact, " + std::to_string(s) + " s";
  return o;
}

Outcome criterion2(const std::vector<ChainTuple>& tuples) {
  Outcome o;
  const auto t0 = Clock::now();
  for (const ChainTuple& a : tuples) {
    const RainbowMatrix s = seifert_series(a);
    if (seifert_inductive(a) != s) o.fail("inductive route differs on " + a.to_string());
    if (seifert_lattice_route(a) != s) o.fail("lattice route differs on " + a.to_string());
  }
  const double s = seconds_since(t0);
  if (s >= 60.0) o.fail("took " + std::to_string(s) + " s");
  if (o.pass) o.detail = std::to_string(tuples.size()) + " tuples, " + std::to_string(s) + " s";
  return o;
}

Outcome criterion3(const std::vector<ChainTuple>& tuples) {
  Outcome o;
  const auto t0 = Clock::now();
  for (const ChainTuple& a : tuples) {
    if (!verify_monodromy_identity(a).holds) o.fail("M^mu identity fails on " + a.to_string());
    for (const CheckReport& r : {verify_periodicity(a), verify_alpha_prime_symmetry(a), verify_inverse_coefficients(a),
                                 verify_transport_congruence(a)})
      if (!r.passed) o.fail(r.name + " fails on " + a.to_string() + ": " + r.detail);
  }
  const double s = seconds_since(t0);
  if (s >= 60.0) o.fail("took " + std::to_string(s) + " s");
  if (o.pass) o.detail = std::to_string(tuples.size()) + " tuples x 5 identities, " + std::to_string(s) + " s";
  return o;
}

Outcome criterion4(const std::vector<ChainTuple>& tuples) {
  Outcome o;
  const auto conventions = calibrate_twist_convention();
  if (conventions.size() != 1 || conventions.front() != kTwistConvention) o.fail("A_2 calibration is not unique");
  std::size_t lattices = 0;
  for (const ChainTuple& a : tuples) {
    const RainbowMatrix s = seifert_series(a);
    for (int n : {static_cast<int>(a.size()), static_cast<int>(a.size()) + 1}) {
      const SeifertLattice l = SeifertLattice::from_rainbow(s, n);
      const IntMatrix h = monodromy_matrix(l);
      if (monodromy_as_twists(l) != h) o.fail("twist composition differs on " + a.to_string() + " n=" + std::to_string(n));
      const IntMatrix form = intersection_form(l);
      if (mat_mul(mat_transpose(h), mat_mul(form, h)) != form)
        o.fail("form not preserved on " + a.to_string() + " n=" + std::to_string(n));
      ++lattices;
    }
  }
  if (o.pass) o.detail = std::to_string(lattices) + " lattices";
  return o;
}

Outcome criterion5() {
  Outcome o;
  const auto t0 = Clock::now();
  std::vector<ChainTuple> tuples;
  all_tuples(1, 5, 2, tuples);
  std::size_t checked = 0;
  double worst_r = 0, worst_a = 0;
  for (const ChainTuple& a : tuples) {
    if (!a.has_isolated_singularity()) continue;
    const CriticalData m = morsification_critical_values(a);
    const CriticalData f = fa_critical_values(a);
    if (BigInt(static_cast<unsigned long>(m.count)) != milnor_number(a)) o.fail("morsification count on " + a.to_string());
    if (BigInt(static_cast<unsigned long>(f.count)) != degree_d(a)) o.fail("fibre count on " + a.to_string());
    const auto am = testing::compare_with_closed_form(m, testing::numeric_morsification_values(a));
    const auto af = testing::compare_with_closed_form(f, testing::numeric_fa_values(a));
    for (const auto& ag : {am, af}) {
      if (!ag.count_ok) o.fail("numeric count differs on " + a.to_string());
      worst_r = std::max(worst_r, ag.radius_rel_err);
      worst_a = std::max(worst_a, ag.angle_err);
      if (ag.radius_rel_err > 1e-9 || ag.angle_err > 1e-9) o.fail("closed form off on " + a.to_string());
    }
    ++checked;
  }
  const double s = seconds_since(t0);
  if (s >= 10.0) o.fail("took " + std::to_string(s) + " s");
  char buf[160];
  std::snprintf(buf, sizeof buf, "%zu tuples, worst radius err %.1e, worst angle err %.1e, %.2f s", checked, worst_r,
                worst_a, s);
  if (o.pass) o.detail = buf;
  return o;
}

Outcome criterion6() {
  Outcome o;
  for (const char* text : {"1,2,3", "1,3,2", "1,2,2,2", "1,3,3", "2,2,3"}) {
    const ChainTuple a = ChainTuple::parse(text);
    const CurveCoeffs k = critv_curve(a);
    MovieConfig cfg;
    cfg.d = k.d.get_ui();
    cfg.mu = k.mu.get_ui();
    cfg.c = k.c.get_d();
    cfg.samples_out = 500;
    const AlphaPoint alpha = find_alpha(cfg.d, cfg.mu, cfg.c);
    cfg.path = radial_path(alpha.eps);
    const std::string tag = std::string(text) + ": ";

    const auto t0 = Clock::now();
    const MovieResult r = track(cfg);
    const double s = seconds_since(t0);
    if (s >= 10.0) o.fail(tag + "movie took " + std::to_string(s) + " s");
    if (!r.petal) {
      o.fail(tag + "no collision");
      continue;
    }
    if (r.petal->arc_separation != cfg.mu) o.fail(tag + "arc separation " + std::to_string(r.petal->arc_separation));
    if (std::abs(r.petal->collision_eps - Complex(alpha.eps)) > 1e-8 * alpha.eps) o.fail(tag + "collision eps off");
    if (!verify_egervary_ordering(r).holds) o.fail(tag + "Egervary ordering fails");
    for (long rot : {0L, 1L, 2L}) {
      const EquivarianceReport e = rotation_equivariance(cfg, rot, k.a0);
      const std::size_t expect = (e.base.first + cfg.d - static_cast<std::size_t>(rot) % cfg.d) % cfg.d;
      if (!e.holds || e.rotated.first != expect) o.fail(tag + "rotation by " + std::to_string(rot) + " fails");
      const Complex target = std::polar(alpha.eps, 2 * std::numbers::pi * static_cast<double>(rot) / cfg.d);
      if (std::abs(e.rotated.collision_eps - target) > 1e-8 * alpha.eps) o.fail(tag + "rotated collision eps off");
    }
  }
  if (o.pass) o.detail = "5 movies";
  return o;
}

// Independent statement of the closed form: xi_{k+l} = (-1)^{l-1} xi_{k+1} mu(A_{k+1}, ..., A_{k+l-1}).
bool xi_closed_form_direct(const XiSequence& s) {
  for (std::size_t k = 0; k < s.xi.size(); ++k) {
    if (s.xi[k] != 0 || k + 1 >= s.xi.size()) continue;
    for (std::size_t l = 2; k + l < s.xi.size(); ++l) {
      const std::vector<long> sub(s.coeffs.begin() + static_cast<long>(k) + 1, s.coeffs.begin() + static_cast<long>(k + l));
      const BigInt expect = (l % 2 == 0 ? -1 : 1) * s.xi[k + 1] * milnor_polynomial(sub);
      if (s.xi[k + l] != expect) return false;
    }
  }
  return true;
}

IntMatrix random_unitriangular(std::mt19937_64& rng, std::size_t r) {
  std::uniform_int_distribution<long> coef(-5, 5);
  IntMatrix m = IntMatrix::identity(r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i + 1; j < r; ++j) m(i, j) = coef(rng);
  return m;
}

RainbowMatrix random_rainbow(std::mt19937_64& rng, std::size_t k) {
  std::uniform_int_distribution<long> coef(-6, 6);
  std::vector<BigInt> c(k - 1);
  for (auto& x : c) x = coef(rng);
  return RainbowMatrix(k, c);
}

Outcome criterion7() {
  Outcome o;
  std::mt19937_64 rng(20240607);
  std::vector<std::string> parts;

  std::size_t with_zero = 0;
  std::uniform_int_distribution<long> coef(0, 5);
  std::uniform_int_distribution<long> start(-9, 9);
  for (int i = 0; i < 1000; ++i) {
    std::vector<long> c(2 + rng() % 12);
    for (auto& x : c) x = coef(rng);
    const BigInt xi0 = (i % 2 == 0) ? BigInt(0) : BigInt(start(rng));
    const XiSequence s = xi_sequence(xi0, start(rng), c);
    for (const BigInt& x : s.xi) with_zero += (x == 0);
    if (!xi_closed_form_direct(s) || !xi_closed_form_holds(s)) o.fail("xi closed form fails on sample " + std::to_string(i));
  }
  parts.push_back("1000 xi sequences (" + std::to_string(with_zero) + " zeros)");

  for (int i = 0; i < 200; ++i) {
    const std::size_t k = 1 + rng() % 12;
    const RainbowMatrix a = random_rainbow(rng, k);
    const RainbowMatrix b = random_rainbow(rng, k);
    const IntMatrix prod = mat_mul(a.dense(), b.dense());
    const IntMatrix inv = mat_inverse_unimodular(a.dense());
    if (!is_rainbow(prod) || rainbow_from_dense(prod) != rainbow_mul(a, b)) o.fail("rainbow product not closed");
    if (!is_rainbow(inv) || rainbow_from_dense(inv) != rainbow_invert(a)) o.fail("rainbow inverse not closed");
  }
  parts.push_back("200 rainbow pairs");

  for (int i = 0; i < 200; ++i) {
    const std::size_t k = 1 + rng() % 12;
    const RainbowMatrix a = random_rainbow(rng, k);
    const IntMatrix s = a.dense();
    if (duality_transform(duality_transform(s, k), k) != s) o.fail("duality is not an involution");
    // On a rainbow block the transform is the inverse block.
    const std::size_t sub = 1 + rng() % k;
    const RainbowMatrix lead(sub, {a.colors().begin(), a.colors().begin() + static_cast<long>(sub - 1)});
    if (duality_transform(s, sub) != rainbow_invert(lead).dense()) o.fail("duality differs from the inverse block");
  }
  parts.push_back("200 duality cases");

  for (int i = 0; i < 200; ++i) {
    const std::size_t r = 2 + rng() % 7;
    const SeifertLattice l(random_unitriangular(rng, r), static_cast<int>(rng() % 2));
    const BasisState s0 = initial_basis(l);
    BasisState s = s0;
    for (int step = 0; step < 4; ++step) {
      const std::size_t j = rng() % (r - 1);
      if (mutate_left(mutate_right(s, j), j) != s || mutate_right(mutate_left(s, j), j) != s)
        o.fail("left and right mutations are not inverse");
      s = (rng() & 1) ? mutate_left(s, j) : mutate_right(s, j);
      if (gram_matrix(l, s.basis) != s.seif) o.fail("mutation does not preserve the pairing");
    }
  }
  parts.push_back("200 mutation lattices");

  const CurveCoeffs k = critv_curve(ChainTuple::parse("1,2,3"));
  MovieConfig cfg;
  cfg.d = k.d.get_ui();
  cfg.mu = k.mu.get_ui();
  cfg.c = k.c.get_d();
  cfg.path = radial_path(find_alpha(cfg.d, cfg.mu, cfg.c).eps);
  cfg.max_step = 1e-3;
  const MovieResult coarse = track(cfg);
  cfg.max_step = 5e-4;
  const MovieResult fine = track(cfg);
  if (!coarse.petal || !fine.petal) {
    o.fail("step-halving movie has no collision");
  } else {
    const PetalReport& x = *coarse.petal;
    const PetalReport& y = *fine.petal;
    const bool same = x.first == y.first && x.second == y.second && x.arc_separation == y.arc_separation &&
                      x.direction == y.direction && std::abs(x.collision_t - y.collision_t) <= 1e-8 &&
                      std::abs(x.collision_eps - y.collision_eps) <= 1e-8 * std::abs(y.collision_eps);
    if (!same) o.fail("step halving changed the petal report");
    if (fine.accepted_steps <= coarse.accepted_steps) o.fail("halved max step did not refine the path");
  }
  parts.push_back("step halving");

  if (o.pass) {
    for (std::size_t i = 0; i < parts.size(); ++i) o.detail += (i ? ", " : "") + parts[i];
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<ChainTuple> tuples = sweep_tuples();
  const std::vector<std::function<Outcome()>> criteria{
      criterion1,
      [&] { return criterion2(tuples); },
      [&] { return criterion3(tuples); },
      [&] { return criterion4(tuples); },
      criterion5,
      criterion6,
      criterion7,
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i]();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    std::printf("criterion %zu: %s (%s)\n", i + 1, o.pass ? "PASS" : "FAIL", o.detail.c_str());
    failures += !o.pass;
  }
  return failures;
}
