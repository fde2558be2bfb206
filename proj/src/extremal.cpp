#include "rmspace/extremal.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace rmspace {

LacunaryEquiv lacunary_equiv(const std::vector<std::int64_t>& exponents,
                             const Eigen::VectorXcd& coeffs, PQPair pq, const DiscGrid& grid) {
  if (pq.p.is_inf()) throw std::invalid_argument("lacunary_equiv: p must be finite");
  const FunctionSpec f = FunctionSpec::lacunary(exponents, coeffs);
  if (exponents.back() > grid.angular_count() / 4) {
    throw std::invalid_argument("lacunary_equiv: series degree exceeds the angular resolution M/4");
  }
  const double pv = pq.p.value();
  double model_acc = 0.0;
  for (std::size_t k = 0; k < exponents.size(); ++k) {
    model_acc += std::pow(std::abs(coeffs[static_cast<Eigen::Index>(k)]), pv) /
                 static_cast<double>(exponents[k]);
  }
  LacunaryEquiv out;
  out.model = std::pow(model_acc, 1.0 / pv);
  out.numeric = rho_raw(abs_field(f), pq, grid);
  out.ratio = out.numeric / out.model;
  return out;
}

namespace {

// T_g(beta^n z^{beta^n}) with g = -log(1-z) has the radial restriction
//   F(r) = beta^n ( -log(1-r) - sum_{k<=beta^n} r^k / k ),
// the tail of the log series starting at degree beta^n + 1.
double log_tail(double r, std::int64_t K) {
  double partial = 0.0, rk = 1.0;
  for (std::int64_t k = 1; k <= K; ++k) {
    rk *= r;
    partial += rk / static_cast<double>(k);
  }
  return -std::log1p(-r) - partial;
}

}  // namespace

L1Copy l1_copy_integral(const L1CopyParams& params, const DiscGrid& grid) {
  if (params.beta < 2) throw std::invalid_argument("l1_copy_integral: beta must be >= 2");
  if (params.n < 1) throw std::invalid_argument("l1_copy_integral: n must be >= 1");
  const double bn = std::pow(static_cast<double>(params.beta), params.n);
  const auto K = static_cast<std::int64_t>(std::llround(bn));
  L1Copy out;
  out.closed_form = bn / (1.0 + bn);
  ArrayXd nodes, weights;
  grid.ray_rig(nodes, weights);
  double acc = 0.0;
  for (Eigen::Index i = 0; i < nodes.size(); ++i) acc += weights[i] * log_tail(nodes[i], K);
  out.quadrature = bn * acc;
  return out;
}

L1CopyIntervals l1_copy_intervals(int beta, int terms, const DiscGrid& grid) {
  if (beta < 2 || terms < 1) throw std::invalid_argument("l1_copy_intervals: beta >= 2 and terms >= 1");
  L1CopyIntervals out;
  out.delta = (2.0 / 3.0) * beta / (1.0 + beta);

  ArrayXd nodes, weights;
  grid.ray_rig(nodes, weights);
  const auto mass_of = [&](int n) {
    const auto K = static_cast<std::int64_t>(std::llround(std::pow(double(beta), n)));
    ArrayXd f(nodes.size());
    for (Eigen::Index i = 0; i < nodes.size(); ++i) f[i] = K * log_tail(nodes[i], K);
    return f;
  };
  const auto integral_up_to = [&](const ArrayXd& f, double r) {
    double acc = 0.0;
    for (Eigen::Index i = 0; i < nodes.size(); ++i) {
      if (nodes[i] <= r) acc += weights[i] * f[i];
    }
    return acc;
  };

  std::vector<ArrayXd> masses;
  std::vector<int> chosen;
  std::vector<double> breaks{0.0};
  int n = 1;
  chosen.push_back(n);
  masses.push_back(mass_of(n));
  for (int k = 1; k < terms; ++k) {
    const ArrayXd& cur = masses.back();
    const double total = integral_up_to(cur, 1.0);
    // First break with the current term's tail mass below delta/2 (first
    // term) or delta/4 (later terms, whose own share must also leave room
    // for the head bound).
    const double threshold = ((k == 1) ? out.delta / 2.0 : out.delta / 4.0) * 0.9;
    double r_k = breaks.back();
    for (Eigen::Index i = 0; i < nodes.size(); ++i) {
      if (total - integral_up_to(cur, nodes[i]) < threshold) {
        r_k = nodes[i];
        break;
      }
    }
    breaks.push_back(r_k);
    // next index whose head mass over [0, r_k] is below delta/4
    int next = chosen.back() + 1;
    while (true) {
      const ArrayXd cand = mass_of(next);
      if (integral_up_to(cand, r_k) < out.delta / 4.0 * 0.9) {
        masses.push_back(cand);
        break;
      }
      ++next;
      if (next > chosen.back() + 64) throw std::runtime_error("l1_copy_intervals: no admissible index found");
    }
    chosen.push_back(next);
  }
  breaks.push_back(1.0);

  out.indices = chosen;
  out.breaks = breaks;
  out.verified = true;
  for (int k = 0; k < terms; ++k) {
    const double own = integral_up_to(masses[k], breaks[k + 1]) - integral_up_to(masses[k], breaks[k]);
    const double total = integral_up_to(masses[k], 1.0);
    const double others = total - own;
    if (!(own > out.delta) || !(others < out.delta / 2.0)) out.verified = false;
  }
  return out;
}

FunctionSpec uk_kernel(const UkParams& params) {
  if (!(params.eps > 0.0 && params.eps < 0.5)) throw std::invalid_argument("uk_kernel: eps must lie in (0, 1/2)");
  // eps^2 / (z - w0)^3 = -eps^2 / (w0 - z)^3 with w0 = (1+eps) e^{ia}
  const Complex pole = std::polar(1.0 + params.eps, params.a);
  return FunctionSpec::rational_power(pole, 3.0, -params.eps * params.eps);
}

double uk_phi(const UkParams& params, double theta, const DiscGrid& grid) {
  const FunctionSpec u = uk_kernel(params);
  ArrayXd nodes, weights;
  grid.ray_rig(nodes, weights);
  double acc = 0.0;
  for (Eigen::Index i = 0; i < nodes.size(); ++i) {
    acc += weights[i] * std::abs(evaluate(u, std::polar(nodes[i], theta)));
  }
  return acc;
}

ClaimAudit claim_check(const std::vector<double>& eps_grid, const std::vector<double>& theta_grid,
                       const DiscGrid& grid) {
  ClaimAudit out;
  out.max_violation = -std::numeric_limits<double>::infinity();
  for (double eps : eps_grid) {
    for (double th : theta_grid) {
      if (std::abs(th) > std::numbers::pi + 1e-12) {
        throw std::invalid_argument("claim_check: angles must satisfy |theta - a| <= pi");
      }
      const double phi = uk_phi({eps, 0.0}, th, grid);
      const double bound = (th == 0.0) ? 1.0 : std::min(1.0, 8.0 * eps * eps / (th * th));
      out.max_violation = std::max(out.max_violation, phi - bound);
    }
  }
  out.holds = out.max_violation <= 1e-9;
  return out;
}

C0KernelParams::C0KernelParams(std::vector<double> radii_, Exponent p_, double beta_)
    : radii(std::move(radii_)), p(p_), beta(beta_) {
  if (p.is_inf()) throw std::invalid_argument("c0 kernels: p must be finite");
  const double cap = 1.0 / (1.0 + std::pow(2.0, 4.0 + 1.0 / p.value()));
  if (!(beta > 0.0 && beta < cap)) {
    throw std::invalid_argument("c0 kernels: beta must lie in (0, 1/(1+2^{4+1/p}))");
  }
  if (radii.size() < 1) throw std::invalid_argument("c0 kernels: need at least one radius");
  for (std::size_t k = 0; k < radii.size(); ++k) {
    if (!(radii[k] >= 0.5 && radii[k] < 1.0)) throw std::invalid_argument("c0 kernels: radii must lie in [1/2, 1)");
    if (k > 0) {
      const double ratio = (1.0 - radii[k]) / (1.0 - radii[k - 1]);
      const double bound = beta / static_cast<double>(k * k);
      if (ratio > bound + 1e-15) {
        throw std::invalid_argument("c0 kernels: separation (1-r_{n+1})/(1-r_n) <= beta/n^2 violated");
      }
    }
  }
}

FunctionSpec c0_kernel(int n, const C0KernelParams& params, double a_n) {
  if (n < 0 || n >= static_cast<int>(params.radii.size())) {
    throw std::invalid_argument("c0_kernel: index out of range");
  }
  const double r = params.radii[static_cast<std::size_t>(n)];
  const Complex zbar = std::polar(r, -a_n);
  return FunctionSpec::rational_power_recip(zbar, 2.0 + 1.0 / params.p.value(), 1.0 - r);
}

C0Checks c0_constant_checks(const C0KernelParams& params, const DiscGrid& grid) {
  if (params.radii.size() < 3) throw std::invalid_argument("c0_constant_checks: need at least 3 radii");
  const double pv = params.p.value();
  C0Checks out;
  out.c2 = 64.0 * (std::pow(2.0 * pv + 1.0, 1.0 / pv) + 1.0) / std::pow(pv, 1.0 / pv);
  out.c3 = std::pow(2.0, 2.0 + 1.0 / pv);
  const PQPair pq{params.p, Exponent(1.0)};
  const int count = static_cast<int>(params.radii.size());

  out.rho_bound_ok = true;
  for (int n = 0; n < count; ++n) {
    const NormReport rep = rho_pq(c0_kernel(n, params), pq, grid);
    out.max_rho = std::max(out.max_rho, rep.value);
    if (rep.value > out.c2) out.rho_bound_ok = false;
  }

  out.diagonal_ok = true;
  for (int n = 0; n < count; ++n) {
    const double r = params.radii[static_cast<std::size_t>(n)];
    const double diag = std::abs(evaluate(c0_kernel(n, params), Complex(r, 0.0))) *
                        std::pow(1.0 - r, 1.0 + 1.0 / pv);
    const double formula = 1.0 / std::pow(1.0 + r, 2.0 + 1.0 / pv);
    out.max_diagonal_error = std::max(out.max_diagonal_error, std::abs(diag - formula));
    if (std::abs(diag - formula) > 1e-9 || !(diag >= 1.0 / out.c3 - 1e-9)) out.diagonal_ok = false;
  }

  out.offdiag_ok = true;
  for (int m = 0; m < count; ++m) {
    double sum = 0.0;
    for (int n = 0; n < count; ++n) {
      if (n == m) continue;
      const double r = params.radii[static_cast<std::size_t>(n)];
      sum += std::abs(evaluate(c0_kernel(m, params), Complex(r, 0.0))) *
             std::pow(1.0 - r, 1.0 + 1.0 / pv);
    }
    out.max_offdiag_sum = std::max(out.max_offdiag_sum, sum);
    if (sum > 1.0 / (2.0 * out.c3) + 1e-9) out.offdiag_ok = false;
  }
  return out;
}

}  // namespace rmspace
