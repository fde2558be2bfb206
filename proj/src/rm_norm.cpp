#include "rmspace/rm_norm.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace rmspace {

AbsField abs_field(const FunctionSpec& f) {
  return [f](double r, double theta) { return std::abs(evaluate(f, std::polar(r, theta))); };
}

ArrayXXd sample_field(const AbsField& field, const DiscGrid& grid) {
  const ArrayXd& rs = grid.radial_nodes();
  const ArrayXd& ths = grid.angles();
  ArrayXXd out(ths.size(), rs.size());
  for (Eigen::Index j = 0; j < ths.size(); ++j) {
    for (Eigen::Index i = 0; i < rs.size(); ++i) out(j, i) = field(rs[i], ths[j]);
  }
  return out;
}

namespace {

// sup of the field along one ray: node values plus one bisection pass per
// panel around each panel's maximal node.
double radial_sup_refined(const AbsField& field, double theta, const DiscGrid& grid) {
  const ArrayXd& rs = grid.radial_nodes();
  const int m = grid.nodes_per_panel();
  double best = 0.0;
  for (int n = 0; n < grid.shell_depth(); ++n) {
    const int b = grid.panel_begin(n);
    int arg = b;
    double panel_best = -1.0;
    for (int i = b; i < b + m; ++i) {
      const double v = field(rs[i], theta);
      if (v > panel_best) {
        panel_best = v;
        arg = i;
      }
    }
    const double lo = (arg > b) ? rs[arg - 1] : 1.0 - std::ldexp(1.0, -n);
    const double hi = (arg < b + m - 1) ? rs[arg + 1] : 1.0 - std::ldexp(1.0, -(n + 1));
    panel_best = std::max(panel_best, field(0.5 * (lo + rs[arg]), theta));
    panel_best = std::max(panel_best, field(0.5 * (rs[arg] + hi), theta));
    best = std::max(best, panel_best);
  }
  return best;
}

}  // namespace

double rho_raw(const AbsField& field, PQPair pq, const DiscGrid& grid) {
  const ArrayXd& ths = grid.angles();
  ArrayXd per_angle(ths.size());
  if (pq.p.is_inf()) {
    for (Eigen::Index j = 0; j < ths.size(); ++j) per_angle[j] = radial_sup_refined(field, ths[j], grid);
  } else {
    const double pv = pq.p.value();
    const ArrayXd& rs = grid.radial_nodes();
    const ArrayXd& ws = grid.radial_weights();
    for (Eigen::Index j = 0; j < ths.size(); ++j) {
      double acc = 0.0;
      for (Eigen::Index i = 0; i < rs.size(); ++i) acc += ws[i] * std::pow(field(rs[i], ths[j]), pv);
      per_angle[j] = std::pow(acc, 1.0 / pv);
    }
  }
  return angular_lq(per_angle, pq.q);
}

double rho_from_samples(const ArrayXXd& samples, PQPair pq, const DiscGrid& grid) {
  if (samples.rows() != grid.angles().size() || samples.cols() != grid.radial_nodes().size()) {
    throw std::invalid_argument("rho_from_samples: sample shape does not match the grid");
  }
  ArrayXd per_angle(samples.rows());
  if (pq.p.is_inf()) {
    per_angle = samples.rowwise().maxCoeff();
  } else {
    const double pv = pq.p.value();
    for (Eigen::Index j = 0; j < samples.rows(); ++j) {
      per_angle[j] = std::pow((grid.radial_weights() * samples.row(j).transpose().array().pow(pv)).sum(), 1.0 / pv);
    }
  }
  return angular_lq(per_angle, pq.q);
}

NormReport rho_pq_field(const AbsField& field, PQPair pq, const DiscGrid& grid) {
  return refine_and_estimate([&](const DiscGrid& g) { return rho_raw(field, pq, g); }, grid);
}

NormReport rho_pq(const FunctionSpec& f, PQPair pq, const DiscGrid& grid) {
  return rho_pq_field(abs_field(f), pq, grid);
}

const char* profile_quantity_name(ProfileQuantity q) {
  switch (q) {
    case ProfileQuantity::TailNorm: return "tail_norm";
    case ProfileQuantity::BoundaryDecay: return "boundary_decay";
    case ProfileQuantity::BlochRadial: return "bloch_radial";
  }
  return "?";
}

std::string profile_to_csv(const RadialProfile& p) {
  std::ostringstream os;
  os.precision(17);
  os << "rho,value,quantity\n";
  for (Eigen::Index i = 0; i < p.abscissae.size(); ++i) {
    os << p.abscissae[i] << ',' << p.values[i] << ',' << profile_quantity_name(p.quantity) << '\n';
  }
  return os.str();
}

ArrayXd default_abscissae(const DiscGrid& grid) {
  const int count = std::max(1, grid.shell_depth() - 2);
  ArrayXd a(count);
  for (int j = 1; j <= count; ++j) a[j - 1] = 1.0 - std::ldexp(1.0, -j);
  return a;
}

RadialProfile tail_profile(const FunctionSpec& f, Exponent p, const DiscGrid& grid,
                           const ArrayXd& abscissae) {
  if (p.is_inf()) throw std::invalid_argument("tail_profile: p must be finite");
  const double pv = p.value();
  RadialProfile prof;
  prof.abscissae = abscissae;
  prof.values.resize(abscissae.size());
  prof.quantity = ProfileQuantity::TailNorm;
  const AbsField field = abs_field(f);
  ArrayXd nodes, weights;
  for (Eigen::Index k = 0; k < abscissae.size(); ++k) {
    if (!(abscissae[k] >= 0.0 && abscissae[k] < grid.r_max())) {
      throw std::invalid_argument("tail_profile: abscissa outside [0, r_max)");
    }
    grid.radial_rig_from(abscissae[k], nodes, weights);
    double sup = 0.0;
    for (Eigen::Index j = 0; j < grid.angles().size(); ++j) {
      const double th = grid.angles()[j];
      double acc = 0.0;
      for (Eigen::Index i = 0; i < nodes.size(); ++i) acc += weights[i] * std::pow(field(nodes[i], th), pv);
      sup = std::max(sup, std::pow(acc, 1.0 / pv));
    }
    prof.values[k] = sup;
  }
  return prof;
}

RadialProfile boundary_decay_profile(const FunctionSpec& f, Exponent p, const DiscGrid& grid) {
  if (p.is_inf()) throw std::invalid_argument("boundary_decay_profile: p must be finite");
  const double pv = p.value();
  RadialProfile prof;
  prof.abscissae = default_abscissae(grid);
  prof.values.resize(prof.abscissae.size());
  prof.quantity = ProfileQuantity::BoundaryDecay;
  for (Eigen::Index k = 0; k < prof.abscissae.size(); ++k) {
    const double rho = prof.abscissae[k];
    double sup = 0.0;
    for (Eigen::Index j = 0; j < grid.angles().size(); ++j) {
      sup = std::max(sup, std::abs(evaluate(f, std::polar(rho, grid.angles()[j]))));
    }
    prof.values[k] = std::pow(1.0 - rho, 1.0 / pv) * sup;
  }
  return prof;
}

namespace {

int next_pow2_at_least(double x) {
  int p = 8;
  while (static_cast<double>(p) < x && p < (1 << 24)) p *= 2;
  return p;
}

// Kernel peaks have angular width ~ (1-|z|); give the trapezoid rule at
// least ~12 samples across that width (and never less than the caller's M).
DiscGrid kernel_matched_grid(const DiscGrid& grid, double zmod) {
  const double need = 12.0 * std::numbers::pi / std::max(1.0 - zmod, 1e-6);
  const int M = std::max(grid.angular_count(), next_pow2_at_least(need));
  return DiscGrid::build(M, grid.shell_depth(), grid.nodes_per_panel(), grid.cap_depth());
}

}  // namespace

const std::vector<double>& default_delta_powers() {
  static const std::vector<double> powers{1.25, 1.5, 2.0, 2.5, 3.0, 4.0};
  return powers;
}

double delta_norm_lower(PQPair pq, Complex z, const std::vector<double>& powers,
                        const DiscGrid& grid) {
  if (std::abs(z) > grid.r_max()) throw std::invalid_argument("delta_norm_lower: |z| must be <= r_max");
  double best = 0.0;
  const DiscGrid g = kernel_matched_grid(grid, std::abs(z));
  if (std::abs(z) == 0.0) {
    const FunctionSpec one = FunctionSpec::polynomial(Eigen::VectorXcd::Ones(1));
    return 1.0 / rho_raw(abs_field(one), pq, g);
  }
  for (double t : powers) {
    if (!(t > 1.0)) throw std::invalid_argument("delta_norm_lower: powers must exceed 1");
    const FunctionSpec ft = FunctionSpec::rational_power_recip(std::conj(z), t, 1.0);
    const double norm = rho_raw(abs_field(ft), pq, g);
    best = std::max(best, std::abs(evaluate(ft, z)) / norm);
  }
  return best;
}

double delta_prime_norm_lower(PQPair pq, Complex z, const std::vector<double>& powers,
                              const DiscGrid& grid) {
  if (std::abs(z) > grid.r_max()) throw std::invalid_argument("delta_prime_norm_lower: |z| must be <= r_max");
  const DiscGrid g = kernel_matched_grid(grid, std::abs(z));
  Eigen::VectorXcd id(2);
  id << 0.0, 1.0;
  const FunctionSpec ident = FunctionSpec::polynomial(id);
  double best = 1.0 / rho_raw(abs_field(ident), pq, g);
  if (std::abs(z) == 0.0) return best;
  for (double t : powers) {
    if (!(t > 1.0)) throw std::invalid_argument("delta_prime_norm_lower: powers must exceed 1");
    const FunctionSpec ft = FunctionSpec::rational_power_recip(std::conj(z), t, 1.0);
    const double norm = rho_raw(abs_field(ft), pq, g);
    best = std::max(best, std::abs(evaluate(derivative(ft), z)) / norm);
  }
  return best;
}

}  // namespace rmspace
