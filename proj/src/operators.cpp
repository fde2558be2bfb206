#include "rmspace/operators.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace rmspace {

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Yes: return "YES";
    case Verdict::No: return "NO";
    case Verdict::Undecided: return "UNDECIDED";
  }
  return "?";
}

namespace {

double bloch_field_max(const FunctionSpec& dg, const DiscGrid& g) {
  double best = 0.0;
  for (Eigen::Index j = 0; j < g.angles().size(); ++j) {
    for (Eigen::Index i = 0; i < g.radial_nodes().size(); ++i) {
      const double r = g.radial_nodes()[i];
      const double v = (1.0 - r * r) * std::abs(evaluate(dg, std::polar(r, g.angles()[j])));
      best = std::max(best, v);
    }
  }
  // the center is not a radial node but often carries the max for polynomials
  best = std::max(best, std::abs(evaluate(dg, 0.0)));
  return best;
}

bool trend_decreasing(const ArrayXd& v, Eigen::Index window, double slack) {
  const Eigen::Index n = v.size();
  if (n < 2) return true;
  const Eigen::Index begin = std::max<Eigen::Index>(0, n - window);
  for (Eigen::Index i = begin; i + 1 < n; ++i) {
    if (v[i + 1] > v[i] * (1.0 + slack)) return false;
  }
  return true;
}

bool trend_nondecreasing(const ArrayXd& v, Eigen::Index window, double slack) {
  const Eigen::Index n = v.size();
  if (n < 2) return true;
  const Eigen::Index begin = std::max<Eigen::Index>(0, n - window);
  for (Eigen::Index i = begin; i + 1 < n; ++i) {
    if (v[i + 1] < v[i] * (1.0 - slack)) return false;
  }
  return true;
}

Verdict limit_verdict(const ArrayXd& profile, double eps) {
  const double at_horizon = profile[profile.size() - 1];
  if (at_horizon < eps && trend_decreasing(profile, 4, 1e-9)) return Verdict::Yes;
  if (at_horizon > 10.0 * eps && trend_nondecreasing(profile, 4, 1e-3)) return Verdict::No;
  return Verdict::Undecided;
}

// Boundedness is judged from the growth of the profile across the last
// dyadic abscissae: ratios near 1 (or below) mean the sup is not escaping;
// sustained geometric growth means it is.
Verdict bounded_verdict(const ArrayXd& profile) {
  const Eigen::Index n = profile.size();
  if (n < 4) return Verdict::Undecided;
  bool all_tame = true, all_growing = true;
  for (Eigen::Index i = n - 4; i + 1 < n; ++i) {
    if (profile[i] == 0.0 && profile[i + 1] == 0.0) continue;
    const double ratio = (profile[i] == 0.0) ? 2.0 : profile[i + 1] / profile[i];
    if (ratio > 1.25) all_tame = false;
    if (ratio < 1.6) all_growing = false;
  }
  if (all_tame) return Verdict::Yes;
  if (all_growing) return Verdict::No;
  return Verdict::Undecided;
}

}  // namespace

NormReport bloch_seminorm(const FunctionSpec& g, const DiscGrid& grid) {
  const FunctionSpec dg = derivative(g);
  return refine_and_estimate([&](const DiscGrid& gg) { return bloch_field_max(dg, gg); }, grid);
}

SymbolDiagnostics diagnose_symbol(const FunctionSpec& g, const DiscGrid& grid,
                                  const DiagnoseThresholds& thresholds,
                                  const std::vector<double>& directions) {
  const FunctionSpec dg = derivative(g);
  SymbolDiagnostics diag;

  const NormReport semi = bloch_seminorm(g, grid);
  diag.bloch_seminorm = semi.value;
  diag.bloch_seminorm_error = semi.error_estimate;
  diag.bloch_norm = std::abs(evaluate(g, 0.0)) + semi.value;

  const ArrayXd abscissae = default_abscissae(grid);
  diag.horizon = abscissae[abscissae.size() - 1];

  diag.little_bloch_profile.abscissae = abscissae;
  diag.little_bloch_profile.quantity = ProfileQuantity::BlochRadial;
  diag.little_bloch_profile.values.resize(abscissae.size());
  for (Eigen::Index k = 0; k < abscissae.size(); ++k) {
    const double r = abscissae[k];
    double sup = 0.0;
    for (Eigen::Index j = 0; j < grid.angles().size(); ++j) {
      sup = std::max(sup, std::abs(evaluate(dg, std::polar(r, grid.angles()[j]))));
    }
    diag.little_bloch_profile.values[k] = (1.0 - r * r) * sup;
  }

  std::vector<double> dirs = directions;
  if (dirs.empty()) dirs.assign(grid.angles().begin(), grid.angles().end());
  diag.directional_profiles.reserve(dirs.size());
  int no_count = 0, yes_count = 0;
  for (double th : dirs) {
    ArrayXd prof(abscissae.size());
    for (Eigen::Index k = 0; k < abscissae.size(); ++k) {
      const double r = abscissae[k];
      prof[k] = (1.0 - r) * std::abs(evaluate(dg, std::polar(r, th)));
    }
    switch (limit_verdict(prof, thresholds.b0w_eps)) {
      case Verdict::Yes: ++yes_count; break;
      case Verdict::No: ++no_count; break;
      case Verdict::Undecided: break;
    }
    diag.directional_profiles.emplace_back(th, std::move(prof));
  }

  diag.in_bloch = bounded_verdict(diag.little_bloch_profile.values);
  diag.in_little_bloch = limit_verdict(diag.little_bloch_profile.values, thresholds.b0_eps);

  const double n = static_cast<double>(dirs.size());
  if (no_count / n > thresholds.measure_threshold) {
    diag.in_weakly_little_bloch = Verdict::No;
  } else if ((n - yes_count) / n <= thresholds.measure_threshold) {
    diag.in_weakly_little_bloch = Verdict::Yes;
  } else {
    diag.in_weakly_little_bloch = Verdict::Undecided;
  }
  return diag;
}

SecondDerivativeCheck second_derivative_bound_check(const FunctionSpec& g, double B,
                                                    const DiscGrid& grid) {
  const FunctionSpec dg = derivative(g);
  double sup_weighted = std::abs(evaluate(dg, 0.0));
  for (Eigen::Index j = 0; j < grid.angles().size(); ++j) {
    for (Eigen::Index i = 0; i < grid.radial_nodes().size(); ++i) {
      const double r = grid.radial_nodes()[i];
      sup_weighted = std::max(sup_weighted, (1.0 - r) * std::abs(evaluate(dg, std::polar(r, grid.angles()[j]))));
    }
  }
  if (B < sup_weighted) {
    throw std::invalid_argument("second_derivative_bound_check: B is below the measured (1-|z|)|g'| sup");
  }
  const FunctionSpec ddg = derivative(dg);
  SecondDerivativeCheck out;
  for (Eigen::Index j = 0; j < grid.angles().size(); ++j) {
    for (Eigen::Index i = 0; i < grid.radial_nodes().size(); ++i) {
      const double r = grid.radial_nodes()[i];
      const double v = std::abs(evaluate(ddg, std::polar(r, grid.angles()[j]))) * (1.0 - r) * (1.0 - r) / (4.0 * B);
      out.max_ratio = std::max(out.max_ratio, v);
    }
  }
  out.max_ratio = std::max(out.max_ratio, std::abs(evaluate(ddg, 0.0)) / (4.0 * B));
  out.holds = out.max_ratio <= 1.0 + 1e-9;
  return out;
}

BcdeltaParams::BcdeltaParams(double B_, double c_, double eta_, double a_, double delta_)
    : B(B_), c(c_), eta(eta_), a(a_), delta(delta_) {
  if (!(B > 0.0) || !(c > 0.0)) throw std::invalid_argument("bcdelta: B and c must be positive");
  if (!(eta > 0.0 && eta < 0.5)) throw std::invalid_argument("bcdelta: eta must lie in (0, 1/2)");
  const double sufficient = c / (32.0 * B);
  if (delta == 0.0) delta = sufficient;
  if (delta > sufficient + 1e-15) throw std::invalid_argument("bcdelta: delta must be <= c/(32B)");
  if (!(delta > 0.0 && delta < 0.5)) throw std::invalid_argument("bcdelta: delta must lie in (0, 1/2)");
}

BcdeltaResult bcdelta_verify(const FunctionSpec& g, const BcdeltaParams& params) {
  const FunctionSpec dg = derivative(g);
  const double r0 = 1.0 - params.eta;
  const double hyp = std::abs(evaluate(dg, std::polar(r0, params.a))) * params.eta;
  if (!(hyp > 2.0 * params.c)) {
    throw std::invalid_argument("bcdelta_verify: hypothesis |g'((1-eta)e^{ia})| eta > 2c fails");
  }
  constexpr int kLattice = 33;
  BcdeltaResult out;
  out.min_ratio = std::numeric_limits<double>::infinity();
  const double half = params.delta * params.eta;
  for (int i = 0; i < kLattice; ++i) {
    const double r = r0 + half * (2.0 * i / (kLattice - 1) - 1.0);
    for (int j = 0; j < kLattice; ++j) {
      const double th = params.a + half * (2.0 * j / (kLattice - 1) - 1.0);
      const double ratio = std::abs(evaluate(dg, std::polar(r, th))) * params.eta / params.c;
      out.min_ratio = std::min(out.min_ratio, ratio);
    }
  }
  out.verified = out.min_ratio > 1.0;
  return out;
}

}  // namespace rmspace
