#include "rmspace/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace rmspace {

void gauss_legendre(int m, ArrayXd& nodes, ArrayXd& weights) {
  if (m < 1) throw std::invalid_argument("gauss_legendre: order must be >= 1");
  nodes.resize(m);
  weights.resize(m);
  for (int i = 0; i < m; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (m + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      // Legendre recurrence for P_m(x) and P'_m(x)
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= m; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = m * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    nodes[m - 1 - i] = x;
    weights[m - 1 - i] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
}

namespace {

bool is_pow2(int v) { return v > 0 && (v & (v - 1)) == 0; }

// Appends the order-`m` rule mapped to [a, b].
void append_panel(double a, double b, const ArrayXd& xs, const ArrayXd& ws, ArrayXd& nodes,
                  ArrayXd& weights, Eigen::Index& at) {
  const double c = 0.5 * (a + b), h = 0.5 * (b - a);
  for (Eigen::Index i = 0; i < xs.size(); ++i) {
    nodes[at] = c + h * xs[i];
    weights[at] = h * ws[i];
    ++at;
  }
}

void dyadic_rig(int depth_begin, int depth_end, int order, ArrayXd& nodes, ArrayXd& weights) {
  ArrayXd xs, ws;
  gauss_legendre(order, xs, ws);
  nodes.resize(static_cast<Eigen::Index>(depth_end - depth_begin) * order);
  weights.resize(nodes.size());
  Eigen::Index at = 0;
  for (int n = depth_begin; n < depth_end; ++n) {
    append_panel(1.0 - std::ldexp(1.0, -n), 1.0 - std::ldexp(1.0, -(n + 1)), xs, ws, nodes, weights, at);
  }
}

// Rig over [rho, 1-2^-depth): full panels beyond rho plus a clipped rule on
// the remainder of the panel containing rho.
void rig_from(double rho, int depth, int order, ArrayXd& nodes, ArrayXd& weights) {
  if (rho < 0.0 || rho >= 1.0 - std::ldexp(1.0, -depth)) {
    throw std::invalid_argument("radial rig: rho out of range");
  }
  ArrayXd xs, ws;
  gauss_legendre(order, xs, ws);
  int n0 = 0;
  while (n0 + 1 < depth && 1.0 - std::ldexp(1.0, -(n0 + 1)) <= rho) ++n0;
  const Eigen::Index count = static_cast<Eigen::Index>(depth - n0) * order;
  nodes.resize(count);
  weights.resize(count);
  Eigen::Index at = 0;
  append_panel(rho, 1.0 - std::ldexp(1.0, -(n0 + 1)), xs, ws, nodes, weights, at);
  for (int n = n0 + 1; n < depth; ++n) {
    append_panel(1.0 - std::ldexp(1.0, -n), 1.0 - std::ldexp(1.0, -(n + 1)), xs, ws, nodes, weights, at);
  }
}

}  // namespace

DiscGrid DiscGrid::build(int angular_count, int shell_depth, int nodes_per_panel, int cap_depth) {
  if (!is_pow2(angular_count) || angular_count < 8) {
    throw std::invalid_argument("grid: angular count must be a power of two >= 8");
  }
  if (shell_depth < 1) throw std::invalid_argument("grid: shell depth must be >= 1");
  if (nodes_per_panel < 2) throw std::invalid_argument("grid: nodes per panel must be >= 2");
  if (cap_depth < 0) throw std::invalid_argument("grid: cap depth must be >= 0");
  DiscGrid g;
  g.M_ = angular_count;
  g.L_ = shell_depth;
  g.m_ = nodes_per_panel;
  g.cap_ = cap_depth;
  g.r_max_ = 1.0 - std::ldexp(1.0, -shell_depth);
  g.angles_.resize(angular_count);
  for (int j = 0; j < angular_count; ++j) g.angles_[j] = 2.0 * std::numbers::pi * j / angular_count;
  dyadic_rig(0, shell_depth, nodes_per_panel, g.radial_nodes_, g.radial_weights_);
  return g;
}

void DiscGrid::ray_rig(ArrayXd& nodes, ArrayXd& weights) const {
  dyadic_rig(0, L_ + cap_, std::max(m_, 12), nodes, weights);
}

void DiscGrid::ray_rig_from(double rho, ArrayXd& nodes, ArrayXd& weights) const {
  rig_from(rho, L_ + cap_, std::max(m_, 12), nodes, weights);
}

void DiscGrid::radial_rig_from(double rho, ArrayXd& nodes, ArrayXd& weights) const {
  rig_from(rho, L_, m_, nodes, weights);
}

double radial_lp(const ArrayXd& values, Exponent p, const DiscGrid& grid) {
  if (values.size() != grid.radial_nodes().size()) {
    throw std::invalid_argument("radial_lp: values must be sampled at the grid's radial nodes");
  }
  if (p.is_inf()) return values.size() ? values.maxCoeff() : 0.0;
  const double pv = p.value();
  return std::pow((grid.radial_weights() * values.pow(pv)).sum(), 1.0 / pv);
}

double angular_lq(const ArrayXd& values, Exponent q) {
  if (values.size() == 0) return 0.0;
  if (q.is_inf()) return values.maxCoeff();
  const double qv = q.value();
  return std::pow(values.pow(qv).mean(), 1.0 / qv);
}

NormReport refine_and_estimate(const std::function<double(const DiscGrid&)>& computation,
                               const DiscGrid& grid) {
  const double coarse = computation(grid);
  const DiscGrid fine = grid.refined();
  const double refined = computation(fine);
  NormReport rep;
  rep.value = refined;
  rep.error_estimate = std::abs(refined - coarse);
  rep.grid = fine.desc();
  std::ostringstream note;
  note << "radial integrals truncated at r_max = 1 - 2^-" << fine.shell_depth()
       << "; two-grid delta " << rep.error_estimate;
  rep.truncation_note = note.str();
  return rep;
}

}  // namespace rmspace
