#include "rmspace/cli.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "rmspace/corpus.hpp"
#include "rmspace/extremal.hpp"
#include "rmspace/json_writer.hpp"
#include "rmspace/littlewood_paley.hpp"
#include "rmspace/luecking.hpp"
#include "rmspace/operators.hpp"

namespace rmspace {

namespace {

constexpr const char* kTool = "rmspace";
constexpr const char* kVersion = "0.1.0";

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitCheckFailed = 2;

struct CommonOpts {
  std::string p = "2";
  std::string q = "2";
  int grid_angles = 256;
  int grid_depth = 16;
  int grid_order = 8;
  double tolerance = 1e-6;
  std::string seed = "5EED";
  bool experimental = false;
  std::string spec_path;
  std::string out_path;
  std::string csv_path;

  PQPair pq() const { return {Exponent::parse(p), Exponent::parse(q)}; }
  DiscGrid grid() const { return DiscGrid::build(grid_angles, grid_depth, grid_order); }
  std::uint64_t seed_value() const {
    std::string s = seed;
    if (s.rfind("0x", 0) == 0 || s.rfind("0X", 0) == 0) s = s.substr(2);
    std::size_t pos = 0;
    const std::uint64_t v = std::stoull(s, &pos, 16);
    if (pos != s.size()) throw std::invalid_argument("--seed expects a hex value");
    return v;
  }
};

void add_common(CLI::App* cmd, CommonOpts& o, bool wants_spec) {
  cmd->add_option("--p", o.p, "Radial integrability exponent p in [1, inf]; accepts \"inf\"");
  cmd->add_option("--q", o.q, "Angular integrability exponent q in [1, inf]; accepts \"inf\"");
  cmd->add_option("--grid-angles", o.grid_angles, "Angular node count (power of two >= 8)");
  cmd->add_option("--grid-depth", o.grid_depth, "Dyadic radial shell depth L; r_max = 1-2^-L");
  cmd->add_option("--grid-order", o.grid_order, "Gauss-Legendre nodes per radial panel");
  cmd->add_option("--tolerance", o.tolerance, "Base tolerance for inequality checks");
  cmd->add_option("--seed", o.seed, "Corpus seed (hex)");
  cmd->add_flag("--experimental", o.experimental, "Allow ranges the theory leaves open");
  if (wants_spec) cmd->add_option("--spec", o.spec_path, "Path to a function-spec JSON file");
  cmd->add_option("--out", o.out_path, "Write the JSON report here instead of stdout");
  cmd->add_option("--csv", o.csv_path, "Also write CSV data here (profile/geometry commands)");
}

FunctionSpec load_spec(const std::string& path) {
  if (path.empty()) throw std::invalid_argument("--spec FILE is required");
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open spec file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_spec(ss.str());
}

void emit(const CommonOpts& o, const std::string& text) {
  if (o.out_path.empty()) {
    std::cout << text << '\n';
  } else {
    std::ofstream out(o.out_path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open output file: " + o.out_path);
    out << text << '\n';
  }
}

void write_csv(const std::string& path, const std::string& text) {
  if (path.empty()) return;
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot open csv file: " + path);
  out << text;
}

// Opens the standard envelope and leaves the writer inside "result".
void open_envelope(JsonWriter& w, const CommonOpts& o, const std::string& subcommand) {
  w.begin_object();
  w.kv("tool", kTool);
  w.kv("version", kVersion);
  w.key("config").begin_object();
  w.kv("subcommand", subcommand);
  w.kv("p", o.p);
  w.kv("q", o.q);
  w.key("grid").begin_object();
  w.kv("angles", o.grid_angles);
  w.kv("depth", o.grid_depth);
  w.kv("order", o.grid_order);
  w.end_object();
  w.kv("tolerance", o.tolerance);
  w.kv("seed", o.seed);
  w.kv("experimental", o.experimental);
  w.end_object();
  w.key("result");
}

void close_envelope(JsonWriter& w) { w.end_object(); }

void write_norm_report(JsonWriter& w, const NormReport& rep) {
  w.begin_object();
  w.kv("value", rep.value);
  w.kv("error_estimate", rep.error_estimate);
  w.key("grid").begin_object();
  w.kv("angles", rep.grid.angular);
  w.kv("depth", rep.grid.depth);
  w.kv("order", rep.grid.order);
  w.end_object();
  w.kv("truncation_note", rep.truncation_note);
  w.end_object();
}

void write_lp_report(JsonWriter& w, const LPReport& rep) {
  w.begin_object();
  w.kv("lhs", rep.lhs);
  w.kv("rhs", rep.rhs);
  w.kv("constant_used", rep.constant_used);
  w.kv("slack", rep.slack);
  w.kv("tolerance", rep.tolerance);
  w.kv("holds", rep.holds);
  w.end_object();
}

int cmd_norm(const CommonOpts& o) {
  const NormReport rep = rho_pq(load_spec(o.spec_path), o.pq(), o.grid());
  JsonWriter w;
  open_envelope(w, o, "norm");
  write_norm_report(w, rep);
  close_envelope(w);
  emit(o, w.str());
  return kExitOk;
}

int cmd_tg(const CommonOpts& o, const std::string& symbol_path, int degree) {
  const FunctionSpec f = load_spec(o.spec_path);
  const FunctionSpec g = load_spec(symbol_path);
  const Eigen::VectorXcd d = tg_apply(f, g, degree);
  JsonWriter w;
  open_envelope(w, o, "tg");
  w.begin_object();
  w.key("coeffs").begin_array();
  for (Eigen::Index k = 0; k < d.size(); ++k) {
    w.begin_array().value(d[k].real()).value(d[k].imag()).end_array();
  }
  w.end_array();
  w.end_object();
  close_envelope(w);
  emit(o, w.str());
  return kExitOk;
}

int cmd_bloch(const CommonOpts& o, double bound) {
  const FunctionSpec g = load_spec(o.spec_path);
  const DiscGrid grid = o.grid();
  const NormReport semi = bloch_seminorm(g, grid);
  const double B = (bound > 0.0) ? bound : semi.value;
  const SecondDerivativeCheck sd = second_derivative_bound_check(g, B, grid);
  JsonWriter w;
  open_envelope(w, o, "bloch");
  w.begin_object();
  w.kv("seminorm", semi.value);
  w.kv("error_estimate", semi.error_estimate);
  w.kv("bloch_norm", std::abs(evaluate(g, 0.0)) + semi.value);
  w.key("second_derivative").begin_object();
  w.kv("bound_used", B);
  w.kv("max_ratio", sd.max_ratio);
  w.kv("holds", sd.holds);
  w.end_object();
  w.end_object();
  close_envelope(w);
  emit(o, w.str());
  return sd.holds ? kExitOk : kExitCheckFailed;
}

int cmd_diagnose(const CommonOpts& o, const DiagnoseThresholds& thresholds) {
  const FunctionSpec g = load_spec(o.spec_path);
  const DiscGrid grid = o.grid();
  const SymbolDiagnostics diag = diagnose_symbol(g, grid, thresholds);
  JsonWriter w;
  open_envelope(w, o, "diagnose");
  w.begin_object();
  w.kv("bloch_seminorm", diag.bloch_seminorm);
  w.kv("bloch_seminorm_error", diag.bloch_seminorm_error);
  w.kv("bloch_norm", diag.bloch_norm);
  w.kv("horizon", diag.horizon);
  w.kv("in_bloch", verdict_name(diag.in_bloch));
  w.kv("in_little_bloch", verdict_name(diag.in_little_bloch));
  w.kv("in_weakly_little_bloch", verdict_name(diag.in_weakly_little_bloch));
  w.key("little_bloch_profile").begin_array();
  for (Eigen::Index i = 0; i < diag.little_bloch_profile.abscissae.size(); ++i) {
    w.begin_array()
        .value(diag.little_bloch_profile.abscissae[i])
        .value(diag.little_bloch_profile.values[i])
        .end_array();
  }
  w.end_array();
  w.end_object();
  close_envelope(w);
  emit(o, w.str());
  write_csv(o.csv_path, profile_to_csv(diag.little_bloch_profile));
  return kExitOk;
}

int cmd_lp_check(const CommonOpts& o, int corpus_count, double tail_from, bool tail_mode,
                 bool ray_mode, double ray_theta) {
  const DiscGrid grid = o.grid();
  const PQPair pq = o.pq();
  JsonWriter w;
  open_envelope(w, o, "lp-check");
  bool all_hold = true;
  if (corpus_count > 0) {
    const std::vector<FunctionSpec> corpus = polynomial_corpus(corpus_count, o.seed_value());
    double min_slack = std::numeric_limits<double>::infinity();
    for (const FunctionSpec& f : corpus) {
      const LPReport rep = lp_check(f, pq, grid);
      all_hold = all_hold && rep.holds;
      min_slack = std::min(min_slack, rep.slack + rep.tolerance);
    }
    w.begin_object();
    w.kv("count", corpus_count);
    w.kv("all_hold", all_hold);
    w.kv("min_slack_with_tolerance", min_slack);
    w.end_object();
  } else {
    const FunctionSpec f = load_spec(o.spec_path);
    LPReport rep;
    if (tail_mode) {
      rep = lp_tail_check(f, pq.p, tail_from, true, grid);
    } else if (ray_mode) {
      rep = lp_check_1d(f, pq.p, grid, ray_theta);
    } else {
      rep = lp_check(f, pq, grid);
    }
    all_hold = rep.holds;
    write_lp_report(w, rep);
  }
  close_envelope(w);
  emit(o, w.str());
  return all_hold ? kExitOk : kExitCheckFailed;
}

int cmd_converse(const CommonOpts& o, int corpus_count) {
  const DiscGrid grid = o.grid();
  const PQPair pq = o.pq();
  JsonWriter w;
  open_envelope(w, o, "converse");
  if (corpus_count > 0) {
    const std::vector<FunctionSpec> corpus = polynomial_corpus(corpus_count, o.seed_value());
    double sup = 0.0;
    for (const FunctionSpec& f : corpus) sup = std::max(sup, converse_ratio(f, pq, grid, o.experimental));
    w.begin_object();
    w.kv("count", corpus_count);
    w.kv("sup_ratio", sup);
    w.kv("range_covered", converse_range_covered(pq));
    w.end_object();
  } else {
    const double ratio = converse_ratio(load_spec(o.spec_path), pq, grid, o.experimental);
    w.begin_object();
    w.kv("ratio", ratio);
    w.kv("range_covered", converse_range_covered(pq));
    w.end_object();
  }
  close_envelope(w);
  emit(o, w.str());
  return kExitOk;
}

int cmd_lacunary(const CommonOpts& o, int base, int terms, int first_power) {
  const DiscGrid grid = o.grid();
  std::vector<std::int64_t> exps;
  Eigen::VectorXcd coeffs;
  if (!o.spec_path.empty()) {
    const FunctionSpec f = load_spec(o.spec_path);
    const auto* lac = std::get_if<FunctionSpec::Lacunary>(&f.node());
    if (lac == nullptr) throw std::invalid_argument("lacunary: --spec must hold a lacunary kind");
    exps = lac->exponents;
    coeffs = lac->coeffs;
  } else {
    exps.resize(static_cast<std::size_t>(terms));
    coeffs = Eigen::VectorXcd::Ones(terms);
    std::int64_t e = 1;
    for (int i = 0; i < first_power; ++i) e *= base;
    for (int k = 0; k < terms; ++k) {
      exps[static_cast<std::size_t>(k)] = e;
      e *= base;
    }
  }
  const LacunaryEquiv eq = lacunary_equiv(exps, coeffs, o.pq(), grid);
  JsonWriter w;
  open_envelope(w, o, "lacunary");
  w.begin_object();
  w.kv("numeric", eq.numeric);
  w.kv("model", eq.model);
  w.kv("ratio", eq.ratio);
  w.end_object();
  close_envelope(w);
  emit(o, w.str());
  return kExitOk;
}

int cmd_luecking_dump(const CommonOpts& o, int depth) {
  std::ostringstream csv;
  csv.precision(17);
  csv << "n,j,r_lo,r_hi,theta_lo,theta_hi,area,nc_count\n";
  for (int n = 0; n < depth; ++n) {
    const std::int64_t count = std::int64_t{1} << n;
    for (std::int64_t j = 0; j < count; ++j) {
      const LueckingIndex idx{n, j};
      const RegionGeometry geo = region_geometry(idx);
      csv << n << ',' << j << ',' << geo.r_lo << ',' << geo.r_hi << ',' << geo.theta_lo << ','
          << geo.theta_hi << ',' << region_area(idx) << ',' << nc_count(idx) << '\n';
    }
  }
  if (!o.csv_path.empty()) {
    write_csv(o.csv_path, csv.str());
    JsonWriter w;
    open_envelope(w, o, "luecking");
    w.begin_object();
    w.kv("depth", depth);
    w.kv("regions", static_cast<std::int64_t>((std::int64_t{1} << depth) - 1));
    w.kv("csv", o.csv_path);
    w.end_object();
    close_envelope(w);
    emit(o, w.str());
  } else {
    emit(o, csv.str());
  }
  return kExitOk;
}

int cmd_luecking_check(const CommonOpts& o, int depth, int audits) {
  bool ok = true;
  // NC counts
  ok = ok && nc_count({0, 0}) == 3;
  ok = ok && nc_count({1, 0}) == 7 && nc_count({1, 1}) == 7;
  for (int n = 2; n < std::min(depth, 8); ++n) {
    const std::int64_t count = std::int64_t{1} << n;
    for (std::int64_t j = 0; j < count; ++j) ok = ok && nc_count({n, j}) == 9;
  }
  // exact area telescoping
  double total = 0.0;
  for (int n = 0; n < depth; ++n) total += std::ldexp(1.0, n) * region_area({n, 0});
  const double r = 1.0 - std::ldexp(1.0, -depth);
  const double area_err = std::abs(total - std::numbers::pi * r * r);
  ok = ok && area_err <= 1e-12;
  // randomized disc inclusion audit
  std::mt19937_64 rng(o.seed_value());
  const auto u01 = [&rng] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
  int inclusion_failures = 0;
  for (int s = 0; s < audits; ++s) {
    const double rr = u01() * (1.0 - std::ldexp(1.0, -(depth - 1)));
    const double th = u01() * 2.0 * std::numbers::pi;
    if (!disc_inclusion_check(std::polar(rr, th), depth, 64)) ++inclusion_failures;
  }
  ok = ok && inclusion_failures == 0;
  JsonWriter w;
  open_envelope(w, o, "luecking");
  w.begin_object();
  w.kv("depth", depth);
  w.kv("nc_counts_ok", nc_count({0, 0}) == 3 && nc_count({1, 0}) == 7 && nc_count({2, 0}) == 9);
  w.kv("area_identity_error", area_err);
  w.kv("inclusion_failures", inclusion_failures);
  w.kv("ok", ok);
  w.end_object();
  close_envelope(w);
  emit(o, w.str());
  return ok ? kExitOk : kExitCheckFailed;
}

int cmd_maximal(const CommonOpts& o, const std::string& op_name, int corpus_count, int depth) {
  MaximalOperator op = MaximalOperator::R;
  if (op_name == "R") op = MaximalOperator::R;
  else if (op_name == "Rtilde") op = MaximalOperator::Rtilde;
  else if (op_name == "D") op = MaximalOperator::D;
  else throw std::invalid_argument("maximal: --operator must be R, Rtilde or D");
  const DiscGrid grid = o.grid();
  const std::vector<FunctionSpec> corpus = polynomial_corpus(corpus_count, o.seed_value());
  const MaximalExperiment exp = maximal_bound_experiment(corpus, o.pq(), grid, depth, op, o.experimental);
  JsonWriter w;
  open_envelope(w, o, "maximal");
  w.begin_object();
  w.kv("operator", op_name);
  w.kv("count", corpus_count);
  w.kv("depth", depth);
  w.kv("sup_ratio", exp.sup_ratio);
  w.end_object();
  close_envelope(w);
  emit(o, w.str());
  return kExitOk;
}

int cmd_extremal_claim(const CommonOpts& o, int eps_pow_lo, int eps_pow_hi, int angle_count) {
  const DiscGrid grid = o.grid();
  std::vector<double> eps_grid;
  for (int k = eps_pow_lo; k <= eps_pow_hi; ++k) eps_grid.push_back(std::ldexp(1.0, -k));
  std::vector<double> theta_grid;
  for (int i = 1; i <= angle_count; ++i) theta_grid.push_back(std::numbers::pi * i / angle_count);
  const ClaimAudit audit = claim_check(eps_grid, theta_grid, grid);
  JsonWriter w;
  open_envelope(w, o, "extremal");
  w.begin_object();
  w.kv("verb", "claim-check");
  w.kv("max_violation", audit.max_violation);
  w.kv("holds", audit.holds);
  w.end_object();
  close_envelope(w);
  emit(o, w.str());
  return audit.holds ? kExitOk : kExitCheckFailed;
}

int cmd_extremal_l1copy(const CommonOpts& o, int beta, int n, int intervals) {
  const DiscGrid grid = o.grid();
  const L1Copy res = l1_copy_integral({beta, n}, grid);
  JsonWriter w;
  open_envelope(w, o, "extremal");
  w.begin_object();
  w.kv("verb", "l1-copy");
  w.kv("beta", beta);
  w.kv("n", n);
  w.kv("closed_form", res.closed_form);
  w.kv("quadrature", res.quadrature);
  w.kv("abs_difference", std::abs(res.closed_form - res.quadrature));
  bool ok = true;
  if (intervals > 0) {
    const L1CopyIntervals iv = l1_copy_intervals(beta, intervals, grid);
    ok = iv.verified;
    w.kv("delta", iv.delta);
    w.key("indices").begin_array();
    for (int idx : iv.indices) w.value(idx);
    w.end_array();
    w.key("breaks").begin_array();
    for (double b : iv.breaks) w.value(b);
    w.end_array();
    w.kv("intervals_verified", iv.verified);
  }
  w.end_object();
  close_envelope(w);
  emit(o, w.str());
  return ok ? kExitOk : kExitCheckFailed;
}

int cmd_extremal_c0(const CommonOpts& o, int terms, double eps1, double factor) {
  const DiscGrid grid = o.grid();
  std::vector<double> radii;
  double eps = eps1;
  for (int n = 0; n < terms; ++n) {
    radii.push_back(1.0 - eps);
    eps /= factor * static_cast<double>((n + 1) * (n + 1));
  }
  const Exponent p = Exponent::parse(o.p);
  const C0KernelParams params(radii, p, 1.0 / factor);
  const C0Checks checks = c0_constant_checks(params, grid);
  JsonWriter w;
  open_envelope(w, o, "extremal");
  w.begin_object();
  w.kv("verb", "c0");
  w.kv("terms", terms);
  w.kv("c2", checks.c2);
  w.kv("c3", checks.c3);
  w.kv("max_rho", checks.max_rho);
  w.kv("max_offdiag_sum", checks.max_offdiag_sum);
  w.kv("max_diagonal_error", checks.max_diagonal_error);
  w.kv("rho_bound_ok", checks.rho_bound_ok);
  w.kv("diagonal_ok", checks.diagonal_ok);
  w.kv("offdiag_ok", checks.offdiag_ok);
  w.end_object();
  close_envelope(w);
  emit(o, w.str());
  return (checks.rho_bound_ok && checks.diagonal_ok && checks.offdiag_ok) ? kExitOk
                                                                          : kExitCheckFailed;
}

int cmd_corpus(const CommonOpts& o, int count, bool sweep) {
  const DiscGrid grid = o.grid();
  const std::vector<FunctionSpec> corpus = polynomial_corpus(count, o.seed_value());
  std::vector<PQPair> pairs;
  if (sweep) {
    for (double p : {1.0, 2.0, 3.0}) {
      pairs.push_back({Exponent(p), Exponent(1.0)});
      pairs.push_back({Exponent(p), Exponent(2.0)});
      pairs.push_back({Exponent(p), Exponent::infinity()});
    }
  } else {
    pairs.push_back(o.pq());
  }
  JsonWriter w;
  open_envelope(w, o, "corpus");
  w.begin_object();
  bool all_hold = true;
  int checked = 0;
  double min_slack = std::numeric_limits<double>::infinity();
  w.key("reports").begin_array();
  for (const PQPair& pq : pairs) {
    for (const FunctionSpec& f : corpus) {
      const LPReport rep = lp_check(f, pq, grid);
      ++checked;
      all_hold = all_hold && rep.holds;
      min_slack = std::min(min_slack, rep.slack + rep.tolerance);
      w.begin_object();
      w.kv("p", pq.p.str());
      w.kv("q", pq.q.str());
      w.kv("lhs", rep.lhs);
      w.kv("rhs", rep.rhs);
      w.kv("slack", rep.slack);
      w.kv("holds", rep.holds);
      w.end_object();
    }
  }
  w.end_array();
  w.key("summary").begin_object();
  w.kv("count", count);
  w.kv("cases", checked);
  w.kv("all_hold", all_hold);
  w.kv("min_slack_with_tolerance", min_slack);
  w.end_object();
  w.end_object();
  close_envelope(w);
  emit(o, w.str());
  return all_hold ? kExitOk : kExitCheckFailed;
}

}  // namespace

int run(int argc, const char* const* argv) {
  CLI::App app{"Average radial integrability norms, the integration operator, and their diagnostics"};
  app.require_subcommand(1);

  CommonOpts norm_o, tg_o, bloch_o, diag_o, lp_o, conv_o, lac_o, lue_o, max_o, ext_o, corp_o;

  auto* norm = app.add_subcommand("norm", "Mixed norm rho_{p,q}: radial L^p along rays, angular L^q average");
  add_common(norm, norm_o, true);

  auto* tg = app.add_subcommand("tg", "Taylor coefficients of the integration operator T_g f = int_0^z f g'");
  add_common(tg, tg_o, true);
  std::string tg_symbol;
  int tg_degree = 16;
  tg->add_option("--symbol", tg_symbol, "Function-spec JSON for the symbol g")->required();
  tg->add_option("--degree", tg_degree, "Output degree N");

  auto* bloch = app.add_subcommand("bloch", "Bloch seminorm sup (1-|z|^2)|g'(z)| and the second-derivative bound");
  add_common(bloch, bloch_o, true);
  double bloch_bound = 0.0;
  bloch->add_option("--bound", bloch_bound, "Bloch-type bound B (default: the measured seminorm)");

  auto* diag = app.add_subcommand("diagnose", "Bloch / little Bloch / weakly little Bloch classification of a symbol");
  add_common(diag, diag_o, true);
  DiagnoseThresholds thresholds;
  diag->add_option("--b0-eps", thresholds.b0_eps, "Little Bloch horizon threshold");
  diag->add_option("--b0w-eps", thresholds.b0w_eps, "Weak little Bloch per-direction threshold");
  diag->add_option("--measure-threshold", thresholds.measure_threshold, "Angular measure allowed to misbehave");

  auto* lp = app.add_subcommand("lp-check", "Littlewood-Paley inequality rho(f) <= p rho(f'(z)(1-|z|)) + |f(0)|");
  add_common(lp, lp_o, true);
  int lp_corpus = 0;
  double lp_tail_from = 0.0, lp_ray_theta = 0.0;
  bool lp_tail = false, lp_ray = false;
  lp->add_option("--corpus", lp_corpus, "Run over a seeded polynomial corpus of this size");
  lp->add_option("--tail-from", lp_tail_from, "Tail variant from this radius (sup over rays)");
  lp->add_flag("--tail", lp_tail, "Use the tail variant");
  lp->add_flag("--ray", lp_ray, "One-dimensional variant along a single ray");
  lp->add_option("--theta", lp_ray_theta, "Ray angle for --ray");

  auto* conv = app.add_subcommand("converse", "Converse inequality ratio rho(f'(z)(1-|z|)) / rho(f)");
  add_common(conv, conv_o, true);
  int conv_corpus = 0;
  conv->add_option("--corpus", conv_corpus, "Record the ratio maximum over a seeded corpus");

  auto* lac = app.add_subcommand("lacunary", "Lacunary series norm against the coefficient model (sum |a_k|^p/n_k)^{1/p}");
  add_common(lac, lac_o, true);
  int lac_base = 2, lac_terms = 10, lac_first = 1;
  lac->add_option("--base", lac_base, "Exponent base for the default geometric series");
  lac->add_option("--terms", lac_terms, "Number of terms");
  lac->add_option("--first-power", lac_first, "First exponent is base^this");

  auto* lue = app.add_subcommand("luecking", "Dyadic annulus-sector decomposition of the disc");
  auto* lue_dump = lue->add_subcommand("dump", "CSV of region geometry, areas, and contiguity counts");
  add_common(lue_dump, lue_o, false);
  int lue_depth = 8, lue_audits = 200;
  lue_dump->add_option("--depth", lue_depth, "Decomposition depth");
  auto* lue_check = lue->add_subcommand("check", "Contiguity counts, exact area identity, disc-inclusion audit");
  CommonOpts lue_check_o;
  add_common(lue_check, lue_check_o, false);
  lue_check->add_option("--depth", lue_depth, "Decomposition depth");
  lue_check->add_option("--audits", lue_audits, "Random inclusion audits");

  auto* maxc = app.add_subcommand("maximal", "Region/expanded/disc maximal operator norm-ratio experiment");
  add_common(maxc, max_o, false);
  std::string max_op = "R";
  int max_corpus = 50, max_depth = 0;
  maxc->add_option("--operator", max_op, "R, Rtilde, or D");
  maxc->add_option("--corpus", max_corpus, "Corpus size");
  maxc->add_option("--depth", max_depth, "Decomposition depth (default: grid depth)");

  auto* ext = app.add_subcommand("extremal", "Explicit constructions with checkable constants");
  auto* ext_claim = ext->add_subcommand("claim-check", "Audit phi(eps,theta) <= min{1, 8 eps^2/theta^2} for the cubic boundary kernels");
  CommonOpts ext_claim_o;
  add_common(ext_claim, ext_claim_o, false);
  int claim_lo = 3, claim_hi = 10, claim_angles = 64;
  ext_claim->add_option("--eps-pow-lo", claim_lo, "Smallest dyadic width exponent");
  ext_claim->add_option("--eps-pow-hi", claim_hi, "Largest dyadic width exponent");
  ext_claim->add_option("--angles", claim_angles, "Angle count in (0, pi]");
  auto* ext_l1 = ext->add_subcommand("l1-copy", "Integral identity int_0^1 |T_g(b^n z^{b^n})| dr = b^n/(1+b^n), g = -log(1-z)");
  add_common(ext_l1, ext_o, false);
  int l1_beta = 2, l1_n = 1, l1_intervals = 0;
  ext_l1->add_option("--beta", l1_beta, "Base beta >= 2");
  ext_l1->add_option("--n", l1_n, "Power index n >= 1");
  ext_l1->add_option("--intervals", l1_intervals, "Also extract this many concentration intervals");
  auto* ext_c0 = ext->add_subcommand("c0", "Boundary kernel family (1-r_n)(1 - r_n z)^{-(2+1/p)} constant checks");
  CommonOpts ext_c0_o;
  add_common(ext_c0, ext_c0_o, false);
  int c0_terms = 4;
  double c0_eps1 = 0.1, c0_factor = 50.0;
  ext_c0->add_option("--terms", c0_terms, "Number of kernels");
  ext_c0->add_option("--eps1", c0_eps1, "First boundary distance 1-r_1");
  ext_c0->add_option("--factor", c0_factor, "Shrink factor: 1-r_{n+1} = (1-r_n)/(factor n^2)");

  auto* corp = app.add_subcommand("corpus", "Littlewood-Paley inequality over a seeded corpus; JSON report array plus summary");
  add_common(corp, corp_o, false);
  int corp_count = 200;
  bool corp_sweep = true;
  corp->add_option("--count", corp_count, "Corpus size");
  corp->add_flag("!--single", corp_sweep, "Sweep (p,q) over {1,2,3} x {1,2,inf} (default); --single uses --p/--q only");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (norm->parsed()) return cmd_norm(norm_o);
    if (tg->parsed()) return cmd_tg(tg_o, tg_symbol, tg_degree);
    if (bloch->parsed()) return cmd_bloch(bloch_o, bloch_bound);
    if (diag->parsed()) return cmd_diagnose(diag_o, thresholds);
    if (lp->parsed()) {
      const bool tail_mode = lp_tail || lp->count("--tail-from") > 0;
      return cmd_lp_check(lp_o, lp_corpus, lp_tail_from, tail_mode, lp_ray, lp_ray_theta);
    }
    if (conv->parsed()) return cmd_converse(conv_o, conv_corpus);
    if (lac->parsed()) return cmd_lacunary(lac_o, lac_base, lac_terms, lac_first);
    if (lue->parsed()) {
      if (lue_dump->parsed()) return cmd_luecking_dump(lue_o, lue_depth);
      if (lue_check->parsed()) return cmd_luecking_check(lue_check_o, lue_depth, lue_audits);
      throw std::invalid_argument("luecking: expected a dump or check verb");
    }
    if (maxc->parsed()) {
      const int depth = (max_depth > 0) ? max_depth : max_o.grid_depth;
      return cmd_maximal(max_o, max_op, max_corpus, depth);
    }
    if (ext->parsed()) {
      if (ext_claim->parsed()) return cmd_extremal_claim(ext_claim_o, claim_lo, claim_hi, claim_angles);
      if (ext_l1->parsed()) return cmd_extremal_l1copy(ext_o, l1_beta, l1_n, l1_intervals);
      if (ext_c0->parsed()) return cmd_extremal_c0(ext_c0_o, c0_terms, c0_eps1, c0_factor);
      throw std::invalid_argument("extremal: expected claim-check, l1-copy, or c0");
    }
    if (corp->parsed()) return cmd_corpus(corp_o, corp_count, corp_sweep);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace rmspace
