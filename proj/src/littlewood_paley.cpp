#include "rmspace/littlewood_paley.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace rmspace {

namespace {

constexpr double kBaseTol = 1e-6;

// Barycentric weights for the panel-local Gauss-Legendre nodes.
ArrayXd barycentric_weights(const ArrayXd& xs) {
  ArrayXd w(xs.size());
  for (Eigen::Index i = 0; i < xs.size(); ++i) {
    double prod = 1.0;
    for (Eigen::Index k = 0; k < xs.size(); ++k) {
      if (k != i) prod *= xs[i] - xs[k];
    }
    w[i] = 1.0 / prod;
  }
  return w;
}

double bary_eval(double x, const ArrayXd& xs, const ArrayXd& bw, const ArrayXd& vals) {
  double num = 0.0, den = 0.0;
  for (Eigen::Index i = 0; i < xs.size(); ++i) {
    const double d = x - xs[i];
    if (d == 0.0) return vals[i];
    const double c = bw[i] / d;
    num += c * vals[i];
    den += c;
  }
  return num / den;
}

}  // namespace

HardyRatio hardy_R(const ArrayXd& samples, Exponent p, const DiscGrid& grid) {
  const ArrayXd& rs = grid.radial_nodes();
  if (samples.size() != rs.size()) {
    throw std::invalid_argument("hardy_R: samples must live on the grid's radial nodes");
  }
  const int m = grid.nodes_per_panel();
  ArrayXd gl_x, gl_w;
  gauss_legendre(m, gl_x, gl_w);
  const ArrayXd bw = barycentric_weights(gl_x);

  // Cumulative integral of g(t)/(1-t), panel by panel. Inside a panel the
  // integrand is reconstructed by barycentric interpolation of g from the
  // panel's nodes and integrated with a fresh rule on [a, x].
  ArrayXd cum(rs.size());
  double before = 0.0;  // integral over all earlier panels
  for (int n = 0; n < grid.shell_depth(); ++n) {
    const double a = 1.0 - std::ldexp(1.0, -n);
    const double b = 1.0 - std::ldexp(1.0, -(n + 1));
    const int base = grid.panel_begin(n);
    const ArrayXd vals = samples.segment(base, m);
    auto interp_over_weight = [&](double t) {
      const double s = (2.0 * t - (a + b)) / (b - a);  // map back to [-1, 1]
      return bary_eval(s, gl_x, bw, vals) / (1.0 - t);
    };
    for (int i = 0; i < m; ++i) {
      const double x = rs[base + i];
      const double c = 0.5 * (a + x), h = 0.5 * (x - a);
      double part = 0.0;
      for (int k = 0; k < m; ++k) part += h * gl_w[k] * interp_over_weight(c + h * gl_x[k]);
      cum[base + i] = before + part;
    }
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    for (int k = 0; k < m; ++k) before += h * gl_w[k] * interp_over_weight(c + h * gl_x[k]);
  }

  HardyRatio out;
  out.norm_in = radial_lp(samples.abs(), p, grid);
  out.norm_out = radial_lp(cum.abs(), p, grid);
  out.ratio = (out.norm_in == 0.0) ? 0.0 : out.norm_out / out.norm_in;
  return out;
}

LPReport lp_check_1d(const FunctionSpec& f, Exponent p, const DiscGrid& grid, double theta) {
  if (p.is_inf()) throw std::invalid_argument("lp_check_1d: p must be finite");
  const double pv = p.value();
  const FunctionSpec df = derivative(f);
  ArrayXd nodes, weights;
  grid.ray_rig(nodes, weights);
  double lhs_acc = 0.0, rhs_acc = 0.0;
  for (Eigen::Index i = 0; i < nodes.size(); ++i) {
    const Complex z = std::polar(nodes[i], theta);
    lhs_acc += weights[i] * std::pow(std::abs(evaluate(f, z)), pv);
    rhs_acc += weights[i] * std::pow(std::abs(evaluate(df, z)) * (1.0 - nodes[i]), pv);
  }
  LPReport rep;
  rep.lhs = std::pow(lhs_acc, 1.0 / pv);
  rep.constant_used = pv;
  rep.rhs = pv * std::pow(rhs_acc, 1.0 / pv) + std::abs(evaluate(f, 0.0));
  rep.slack = rep.rhs - rep.lhs;
  rep.tolerance = kBaseTol;
  rep.holds = rep.lhs <= rep.rhs + rep.tolerance;
  return rep;
}

LPReport lp_check(const FunctionSpec& f, PQPair pq, const DiscGrid& grid) {
  if (pq.p.is_inf()) {
    throw std::invalid_argument("lp_check: the inequality does not hold for p = inf");
  }
  const double pv = pq.p.value();
  const NormReport lhs = rho_pq(f, pq, grid);
  const FunctionSpec df = derivative(f);
  const AbsField weighted = [df](double r, double theta) {
    return std::abs(evaluate(df, std::polar(r, theta))) * (1.0 - r);
  };
  const NormReport rhs_norm = rho_pq_field(weighted, pq, grid);
  LPReport rep;
  rep.lhs = lhs.value;
  rep.constant_used = pv;
  rep.rhs = pv * rhs_norm.value + std::abs(evaluate(f, 0.0));
  rep.slack = rep.rhs - rep.lhs;
  rep.tolerance = kBaseTol + 10.0 * (lhs.error_estimate + pv * rhs_norm.error_estimate);
  rep.holds = rep.lhs <= rep.rhs + rep.tolerance;
  return rep;
}

namespace {

LPReport tail_check_one_ray(const FunctionSpec& f, const FunctionSpec& df, double pv, double rho,
                            const DiscGrid& grid, double theta) {
  ArrayXd nodes, weights;
  grid.ray_rig_from(rho, nodes, weights);
  double lhs_acc = 0.0, rhs_acc = 0.0;
  for (Eigen::Index i = 0; i < nodes.size(); ++i) {
    const Complex z = std::polar(nodes[i], theta);
    lhs_acc += weights[i] * std::pow(std::abs(evaluate(f, z)), pv);
    rhs_acc += weights[i] * std::pow(std::abs(evaluate(df, z)) * (1.0 - nodes[i]), pv);
  }
  LPReport rep;
  rep.lhs = std::pow(lhs_acc, 1.0 / pv);
  rep.constant_used = pv;
  rep.rhs = pv * std::pow(rhs_acc, 1.0 / pv) +
            std::pow(1.0 - rho, 1.0 / pv) * std::abs(evaluate(f, std::polar(rho, theta)));
  rep.slack = rep.rhs - rep.lhs;
  rep.tolerance = kBaseTol;
  rep.holds = rep.lhs <= rep.rhs + rep.tolerance;
  return rep;
}

}  // namespace

LPReport lp_tail_check(const FunctionSpec& f, Exponent p, double rho, bool sup_over_theta,
                       const DiscGrid& grid, double theta) {
  if (p.is_inf()) throw std::invalid_argument("lp_tail_check: p must be finite");
  if (!(rho >= 0.0 && rho < grid.r_max())) throw std::invalid_argument("lp_tail_check: rho must lie in [0, r_max)");
  const FunctionSpec df = derivative(f);
  if (!sup_over_theta) return tail_check_one_ray(f, df, p.value(), rho, grid, theta);
  LPReport worst;
  double worst_slack = std::numeric_limits<double>::infinity();
  for (Eigen::Index j = 0; j < grid.angles().size(); ++j) {
    LPReport rep = tail_check_one_ray(f, df, p.value(), rho, grid, grid.angles()[j]);
    if (rep.slack < worst_slack) {
      worst_slack = rep.slack;
      worst = rep;
    }
  }
  worst.holds = worst.lhs <= worst.rhs + worst.tolerance;
  return worst;
}

bool converse_range_covered(PQPair pq) {
  const bool p_inf = pq.p.is_inf(), q_inf = pq.q.is_inf();
  if (p_inf) return true;                                          // (inf, q), 1 <= q <= inf
  if (pq.p.value() == 1.0 && !q_inf) return true;                  // (1, q), 1 <= q < inf
  if (pq.p.value() > 1.0 && !q_inf && pq.q.value() > 1.0) return true;  // 1 < p,q < inf
  return false;
}

double converse_ratio(const FunctionSpec& f, PQPair pq, const DiscGrid& grid, bool experimental) {
  if (!converse_range_covered(pq) && !experimental) {
    throw std::invalid_argument(
        "converse_ratio: (p,q) outside the covered ranges; pass --experimental to gather data");
  }
  const double denom = rho_raw(abs_field(f), pq, grid);
  if (denom == 0.0) throw std::invalid_argument("converse_ratio: f vanishes identically");
  const FunctionSpec df = derivative(f);
  const AbsField weighted = [df](double r, double theta) {
    return std::abs(evaluate(df, std::polar(r, theta))) * (1.0 - r);
  };
  return rho_raw(weighted, pq, grid) / denom;
}

}  // namespace rmspace
