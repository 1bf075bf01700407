#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <numbers>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "chainseif/chain.hpp"
#include "chainseif/critical.hpp"
#include "chainseif/errors.hpp"
#include "chainseif/frames.hpp"
#include "chainseif/identities.hpp"
#include "chainseif/lattice.hpp"
#include "chainseif/movie.hpp"

namespace chainseif::cli {

namespace {

using Json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

// Defaults for every numerical knob exposed on the command line.
struct Defaults {
  static constexpr std::size_t frames = 120;
  static constexpr double tolerance = 1e-10;
  static constexpr double max_step = 1e-2;
  static constexpr double delta = 1e-6;
  static constexpr double egervary_tol = 1e-9;
  static constexpr int precision = 17;
  static constexpr std::size_t max_movie_degree = 4096;
};

int output_precision() {
  const char* env = std::getenv("CHAINSEIF_PRECISION");
  if (env == nullptr || *env == '\0') return Defaults::precision;
  char* end = nullptr;
  const long p = std::strtol(env, &end, 10);
  if (*end != '\0' || p < 1 || p > 17) throw InvalidArgument("CHAINSEIF_PRECISION must be an integer in [1, 17]");
  return static_cast<int>(p);
}

struct Context {
  std::ostream& out;
  std::ostream& err;
  int precision;
  Clock::time_point start;
};

Json big(const BigInt& v) {
  if (v.fits_slong_p()) return Json(static_cast<std::int64_t>(v.get_si()));
  return Json(v.get_str());
}

Json big_list(std::span<const BigInt> v) {
  Json a = Json::array();
  for (const BigInt& x : v) a.push_back(big(x));
  return a;
}

Json matrix_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(big_list(m.row(i)));
  return rows;
}

Json real(double v, int precision) {
  if (!std::isfinite(v)) return Json(nullptr);
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", precision, v);
  return Json(std::strtod(buf, nullptr));
}

Json complex_json(Complex z, int precision) { return Json::array({real(z.real(), precision), real(z.imag(), precision)}); }

Json tuple_json(const ChainTuple& a) {
  Json t = Json::array();
  for (long e : a.entries()) t.push_back(e);
  return t;
}

Json header(const std::string& command, const ChainTuple& a) {
  Json j;
  j["schema"] = 1;
  j["command"] = command;
  j["tuple"] = tuple_json(a);
  return j;
}

void emit(Context& ctx, Json j) {
  const double ms = std::chrono::duration<double, std::milli>(Clock::now() - ctx.start).count();
  j["meta"] = {{"elapsed_ms", std::round(ms * 1000) / 1000}};
  ctx.out << j.dump(2) << '\n';
}

const char* status(bool ok) { return ok ? "pass" : "fail"; }

void require_positive_mu(const ChainTuple& a) {
  if (sgn(milnor_number(a)) <= 0) throw InvalidArgument("Milnor number of " + a.to_string() + " is not positive");
}

// ---------------------------------------------------------------------------------------------

int cmd_invariants(Context& ctx, const std::string& text) {
  const ChainTuple a = ChainTuple::parse(text);
  const InvariantBundle b = invariants(a);
  Json j = header("invariants", a);
  j["mu"] = big(b.mu);
  j["d"] = big(b.d);
  j["r"] = big_list(b.r);
  j["alpha"] = big_list(b.alpha);
  j["alpha_prime"] = big_list(b.alpha_prime);
  j["q"] = big_list(b.q);
  j["quasi_homogeneous"] = is_quasi_homogeneous(a, b.q);
  j["isolated_singularity"] = a.has_isolated_singularity();
  emit(ctx, std::move(j));
  return kPass;
}

struct RouteResult {
  std::string name;
  std::optional<RainbowMatrix> matrix;
  std::string skipped;
};

RouteResult run_route(const std::string& name, const ChainTuple& a, bool tolerate_unsupported) {
  RouteResult r{name, std::nullopt, {}};
  try {
    if (name == "series") r.matrix = seifert_series(a);
    if (name == "inductive") r.matrix = seifert_inductive(a);
    if (name == "lattice") r.matrix = seifert_lattice_route(a);
  } catch (const UnsupportedInput& e) {
    if (!tolerate_unsupported) throw;
    r.skipped = e.what();
  }
  return r;
}

std::string color_diff(const RainbowMatrix& x, const RainbowMatrix& y) {
  if (x.size() != y.size()) return "sizes " + std::to_string(x.size()) + " and " + std::to_string(y.size());
  for (std::size_t i = 1; i < x.size(); ++i)
    if (x.color(i) != y.color(i)) return "color " + std::to_string(i) + ": " + x.color(i).get_str() + " vs " + y.color(i).get_str();
  return {};
}

int cmd_seifert(Context& ctx, const std::string& text, const std::string& method) {
  const ChainTuple a = ChainTuple::parse(text);
  require_positive_mu(a);
  if (method != "series" && method != "inductive" && method != "lattice" && method != "all") {
    throw InvalidArgument("unknown method " + method);
  }
  if ((method == "lattice" || method == "all") && !a.has_isolated_singularity()) {
    throw InvalidArgument("the lattice route needs a_n >= 2");
  }
  std::vector<RouteResult> routes;
  if (method == "all") {
    for (const char* name : {"series", "inductive", "lattice"}) routes.push_back(run_route(name, a, true));
  } else {
    routes.push_back(run_route(method, a, false));
  }

  const RainbowMatrix& ref = *routes.front().matrix;
  Json j = header("seifert", a);
  j["method"] = method;
  j["mu"] = static_cast<std::uint64_t>(ref.size());
  j["colors"] = big_list(ref.colors());
  j["matrix"] = matrix_json(ref.dense());
  bool ok = true;
  Json rj = Json::object();
  for (const RouteResult& r : routes) {
    Json entry;
    if (!r.matrix) {
      entry["status"] = "skip";
      entry["reason"] = r.skipped;
    } else {
      const std::string diff = color_diff(ref, *r.matrix);
      entry["status"] = diff.empty() ? "agree" : "differs";
      entry["colors"] = big_list(r.matrix->colors());
      if (!diff.empty()) {
        entry["diff"] = diff;
        ok = false;
      }
    }
    rj[r.name] = std::move(entry);
  }
  j["routes"] = std::move(rj);
  j["status"] = status(ok);
  emit(ctx, std::move(j));
  return ok ? kPass : kMismatch;
}

// ---------------------------------------------------------------------------------------------

Json check(const std::string& name, bool ok, const std::string& detail = {}) {
  Json c;
  c["name"] = name;
  c["status"] = detail == "skipped" ? "skip" : status(ok);
  if (!detail.empty() && detail != "skipped") c["detail"] = detail;
  return c;
}

Json verify_checks(const ChainTuple& a, bool& all_pass) {
  require_positive_mu(a);
  if (!a.has_isolated_singularity()) throw InvalidArgument("verify needs a_n >= 2, got " + a.to_string());
  Json checks = Json::array();
  auto add = [&](Json c) {
    if (c["status"] == "fail") all_pass = false;
    checks.push_back(std::move(c));
  };

  for (const CheckReport& r : run_identity_suite(a)) add(check(r.name, r.passed, r.detail));
  add(check("quasi_homogeneity", is_quasi_homogeneous(a, quasi_weights(a))));

  const RainbowMatrix series = seifert_series(a);
  const RainbowMatrix lattice = seifert_lattice_route(a);
  std::string diff = color_diff(series, lattice);
  if (diff.empty() && a.all_entries_at_least(2)) diff = color_diff(series, seifert_inductive(a));
  add(check("seifert_routes", diff.empty(), diff));

  const auto conventions = calibrate_twist_convention();
  add(check("twist_calibration", conventions.size() == 1 && conventions.front() == kTwistConvention));

  bool twists = true;
  bool preserved = true;
  for (int parity : {static_cast<int>(a.size()), static_cast<int>(a.size()) + 1}) {
    const SeifertLattice l = SeifertLattice::from_rainbow(series, parity);
    const IntMatrix h = monodromy_matrix(l);
    twists = twists && monodromy_as_twists(l) == h;
    const IntMatrix form = intersection_form(l);
    preserved = preserved && mat_mul(mat_transpose(h), mat_mul(form, h)) == form;
  }
  add(check("twist_monodromy", twists));
  add(check("intersection_form_preserved", preserved));
  return checks;
}

std::map<std::string, long> parse_sweep(const std::string& text) {
  std::map<std::string, long> kv{{"min_entry", 2}, {"max_entry", 4}, {"max_len", 4}};
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw InvalidArgument("sweep items look like key=value, got " + item);
    const std::string key = item.substr(0, eq);
    if (!kv.count(key)) throw InvalidArgument("unknown sweep key " + key);
    try {
      kv[key] = std::stol(item.substr(eq + 1));
    } catch (const std::exception&) {
      throw InvalidArgument("bad sweep value in " + item);
    }
  }
  if (kv["min_entry"] < 2 || kv["max_entry"] < kv["min_entry"] || kv["max_len"] < 1 || kv["max_len"] > 8 ||
      kv["max_entry"] > 12) {
    throw InvalidArgument("sweep needs 2 <= min_entry <= max_entry <= 12 and 1 <= max_len <= 8");
  }
  return kv;
}

std::vector<ChainTuple> enumerate_tuples(long lo, long hi, long max_len) {
  std::vector<ChainTuple> out;
  for (long len = 1; len <= max_len; ++len) {
    std::vector<long> e(static_cast<std::size_t>(len), lo);
    while (true) {
      out.emplace_back(e);
      std::size_t i = e.size();
      while (i > 0 && e[i - 1] == hi) e[--i] = lo;
      if (i == 0) break;
      ++e[i - 1];
    }
  }
  return out;
}

int cmd_verify(Context& ctx, const std::string& text, const std::string& sweep, unsigned jobs) {
  if (sweep.empty()) {
    const ChainTuple a = ChainTuple::parse(text);
    bool ok = true;
    Json j = header("verify", a);
    j["checks"] = verify_checks(a, ok);
    j["status"] = status(ok);
    emit(ctx, std::move(j));
    return ok ? kPass : kMismatch;
  }
  if (!text.empty()) throw InvalidArgument("give either a tuple or --sweep, not both");
  const auto kv = parse_sweep(sweep);
  const std::vector<ChainTuple> tuples = enumerate_tuples(kv.at("min_entry"), kv.at("max_entry"), kv.at("max_len"));
  std::vector<std::vector<std::string>> failures(tuples.size());
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(tuples.size())));
  auto worker = [&](unsigned id) {
    for (std::size_t i = id; i < tuples.size(); i += jobs) {
      bool ok = true;
      const Json checks = verify_checks(tuples[i], ok);
      for (const Json& c : checks)
        if (c["status"] == "fail") failures[i].push_back(c["name"].get<std::string>());
    }
  };
  if (jobs == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned id = 0; id < jobs; ++id) pool.emplace_back(worker, id);
    for (std::thread& t : pool) t.join();
  }

  Json j;
  j["schema"] = 1;
  j["command"] = "verify";
  j["sweep"] = {{"min_entry", kv.at("min_entry")}, {"max_entry", kv.at("max_entry")}, {"max_len", kv.at("max_len")}};
  j["count"] = tuples.size();
  Json results = Json::array();
  std::size_t failed = 0;
  for (std::size_t i = 0; i < tuples.size(); ++i) {
    Json r;
    r["tuple"] = tuple_json(tuples[i]);
    r["status"] = status(failures[i].empty());
    if (!failures[i].empty()) {
      r["failed"] = failures[i];
      ++failed;
    }
    results.push_back(std::move(r));
  }
  j["failed"] = failed;
  j["results"] = std::move(results);
  j["status"] = status(failed == 0);
  emit(ctx, std::move(j));
  return failed == 0 ? kPass : kMismatch;
}

// ---------------------------------------------------------------------------------------------

Json critical_json(const CriticalData& c, int precision) {
  Json j;
  j["count"] = c.count;
  j["radius"] = real(c.radius, precision);
  j["base_angle"] = real(c.base_angle, precision);
  if (c.exact) {
    j["exact"] = {{"constant", c.exact->constant.get_str()}, {"exponent", big(c.exact->exponent)},
                  {"scale", c.exact->scale.get_str()}};
  }
  Json values = Json::array();
  for (Complex z : c.values()) values.push_back(complex_json(z, precision));
  j["values"] = std::move(values);
  return j;
}

int cmd_critvals(Context& ctx, const std::string& text, const std::string& which) {
  const ChainTuple a = ChainTuple::parse(text);
  CriticalData data;
  Json j = header("critvals", a);
  j["which"] = which;
  if (which == "morsification") {
    data = morsification_critical_values(a);
  } else if (which == "fiber") {
    data = fa_critical_values(a);
  } else if (which == "branch") {
    data = branch_points(a);
    const CurveCoeffs cc = critv_curve(a);
    j["curve"] = {{"a0", cc.a0}, {"d", big(cc.d)}, {"mu", big(cc.mu)}, {"c", cc.c.get_str()}};
  } else {
    throw InvalidArgument("unknown --which " + which);
  }
  const Json body = critical_json(data, ctx.precision);
  for (const auto& item : body.items()) j[item.key()] = item.value();
  emit(ctx, std::move(j));
  return kPass;
}

// ---------------------------------------------------------------------------------------------

struct MovieOptions {
  std::string out_dir;
  std::size_t frames = Defaults::frames;
  long rotate = 0;
  double tolerance = Defaults::tolerance;
  double max_step = Defaults::max_step;
  std::string format = "both";
};

int cmd_movie(Context& ctx, const std::string& text, const MovieOptions& opt) {
  const ChainTuple at = ChainTuple::parse(text);
  const CurveCoeffs cc = critv_curve(at);
  MovieConfig cfg;
  cfg.d = to_size(cc.d, Defaults::max_movie_degree);
  cfg.mu = to_size(cc.mu, Defaults::max_movie_degree);
  cfg.c = cc.c.get_d();
  cfg.samples_out = opt.frames;
  cfg.tolerance = opt.tolerance;
  cfg.max_step = opt.max_step;
  const AlphaPoint alpha = find_alpha(cfg.d, cfg.mu, cfg.c);
  const long dd = static_cast<long>(cfg.d);
  const double theta = 2 * std::numbers::pi * static_cast<double>(((opt.rotate % dd) + dd) % dd) / static_cast<double>(dd);
  cfg.path = radial_path(alpha.eps, theta, Defaults::delta);
  validate(cfg);

  FrameFormat format = FrameFormat::both;
  if (opt.format == "csv") {
    format = FrameFormat::csv;
  } else if (opt.format == "svg") {
    format = FrameFormat::svg;
  } else if (opt.format != "both") {
    throw InvalidArgument("--format must be csv, svg or both");
  }

  const MovieResult result = track(cfg);
  const EgervaryReport eg = verify_egervary_ordering(result, Defaults::egervary_tol);

  const int p = ctx.precision;
  Json j = header("movie", at);
  j["a0"] = cc.a0;
  j["curve"] = {{"d", big(cc.d)}, {"mu", big(cc.mu)}, {"c", cc.c.get_str()}};
  j["alpha"] = {{"eps", real(alpha.eps, p)}, {"z", real(alpha.z, p)}};
  j["rotate"] = opt.rotate;
  j["frames"] = opt.frames;
  j["expected_arc_separation"] = big(cc.mu);
  bool ok = false;
  if (result.petal) {
    const PetalReport& pr = *result.petal;
    const Complex target = std::polar(alpha.eps, theta);
    j["petal"] = {{"first", pr.first},
                  {"second", pr.second},
                  {"arc_separation", pr.arc_separation},
                  {"direction", to_string(pr.direction)},
                  {"collision_T", real(pr.collision_t, p)},
                  {"collision_eps", complex_json(pr.collision_eps, p)},
                  {"eps_relative_error", real(std::abs(pr.collision_eps - target) / alpha.eps, 3)}};
    ok = BigInt(static_cast<unsigned long>(pr.arc_separation)) == cc.mu;
  } else {
    j["petal"] = nullptr;
  }
  Json egj = {{"holds", eg.holds}, {"samples_checked", eg.samples_checked}};
  if (eg.offending_sample) egj["offending_sample"] = *eg.offending_sample;
  j["egervary"] = std::move(egj);
  j["tracking"] = {{"accepted_steps", result.accepted_steps},
                   {"rejected_steps", result.rejected_steps},
                   {"max_residual", real(result.max_residual, 3)}};
  if (!opt.out_dir.empty()) {
    const auto files = emit_frames(opt.out_dir, result, format, p);
    j["output"] = {{"dir", opt.out_dir}, {"files_written", files.size()}};
  }
  j["status"] = status(ok && eg.holds);
  emit(ctx, std::move(j));
  if (!eg.holds) {
    ctx.err << "error: magnitude ordering violated at sample " << eg.offending_sample.value_or(0) << '\n';
    return kNumerical;
  }
  return ok ? kPass : kMismatch;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Seifert matrices, monodromy identities, critical values and root movies of chain polynomials",
               "chainseif"};
  app.require_subcommand(1);

  std::string tuple_text;
  std::string method = "series";
  std::string sweep;
  unsigned jobs = 1;
  std::string which = "morsification";
  MovieOptions movie;

  auto* inv = app.add_subcommand("invariants", "mu, d, r_i, alpha, alpha' and weights of a tuple");
  inv->add_option("tuple", tuple_text, "comma separated exponents, e.g. 2,3")->required();

  auto* seif = app.add_subcommand("seifert", "Seifert matrix by one or all construction routes");
  seif->add_option("tuple", tuple_text, "comma separated exponents")->required();
  seif->add_option("--method", method, "series | inductive | lattice | all")
      ->check(CLI::IsMember({"series", "inductive", "lattice", "all"}));

  auto* ver = app.add_subcommand("verify", "identity suite for one tuple or a sweep");
  ver->add_option("tuple", tuple_text, "comma separated exponents");
  ver->add_option("--sweep", sweep, "e.g. max_entry=4,max_len=4 (entries from min_entry, default 2)");
  ver->add_option("--jobs", jobs, "worker threads for --sweep")->check(CLI::Range(1u, 256u));

  auto* crit = app.add_subcommand("critvals", "closed-form critical values");
  crit->add_option("tuple", tuple_text, "exponents; for --which branch the first entry is a_0")->required();
  crit->add_option("--which", which, "morsification | fiber | branch")
      ->check(CLI::IsMember({"morsification", "fiber", "branch"}));

  auto* mov = app.add_subcommand("movie", "track the roots of z^d - c(eps z - 1)^mu along the radial path");
  mov->add_option("tuple", tuple_text, "a_0,a_1,...,a_n with a_1 > 1")->required();
  mov->add_option("--out", movie.out_dir, "directory for roots.csv and SVG frames");
  mov->add_option("--frames", movie.frames, "number of samples")->check(CLI::Range(std::size_t{2}, std::size_t{100000}));
  mov->add_option("--rotate", movie.rotate, "rotate the path by 2 pi k / d");
  mov->add_option("--tol", movie.tolerance, "relative residual tolerance")->check(CLI::PositiveNumber);
  mov->add_option("--max-step", movie.max_step, "largest step in T")->check(CLI::PositiveNumber);
  mov->add_option("--format", movie.format, "csv | svg | both")->check(CLI::IsMember({"csv", "svg", "both"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kUsage;
  }

  try {
    Context ctx{out, err, output_precision(), Clock::now()};
    if (*inv) return cmd_invariants(ctx, tuple_text);
    if (*seif) return cmd_seifert(ctx, tuple_text, method);
    if (*ver) {
      if (tuple_text.empty() && sweep.empty()) throw InvalidArgument("verify needs a tuple or --sweep");
      return cmd_verify(ctx, tuple_text, sweep, jobs);
    }
    if (*crit) return cmd_critvals(ctx, tuple_text, which);
    if (*mov) return cmd_movie(ctx, tuple_text, movie);
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const NumericalFailure& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kNumerical;
  } catch (const InternalInconsistency& e) {
    err << "inconsistency: " << e.what() << '\n';
    return kMismatch;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace chainseif::cli
