#ifndef RMSPACE_EXTREMAL_HPP
#define RMSPACE_EXTREMAL_HPP

#include <vector>

#include "rmspace/rm_norm.hpp"

namespace rmspace {

struct LacunaryEquiv {
  double numeric = 0.0;  // rho_pq of the series
  double model = 0.0;    // (sum |alpha_k|^p / n_k)^{1/p}
  double ratio = 0.0;
};

/// Compares rho_pq of a lacunary series against its coefficient model. The
/// top exponent must stay below M/4 so the angular grid resolves it.
LacunaryEquiv lacunary_equiv(const std::vector<std::int64_t>& exponents,
                             const Eigen::VectorXcd& coeffs, PQPair pq, const DiscGrid& grid);

struct L1CopyParams {
  int beta;  // natural number >= 2
  int n;     // >= 1
};

struct L1Copy {
  double closed_form = 0.0;  // beta^n / (1 + beta^n)
  double quadrature = 0.0;   // radial L^1 norm of T_g(beta^n z^{beta^n}) along theta = 0
};

/// The integral identity behind the l^1-copy construction with symbol
/// g(z) = -log(1-z).
L1Copy l1_copy_integral(const L1CopyParams& params, const DiscGrid& grid);

struct L1CopyIntervals {
  std::vector<int> indices;       // chosen subsequence n_1 < n_2 < ...
  std::vector<double> breaks;     // 0 = r_0 < r_1 < ... < r_K (last = 1)
  double delta = 0.0;             // (2/3) beta/(1+beta)
  bool verified = false;          // every interval carries > delta of its own
                                  // mass and < delta/2 of everyone else's
};

/// Greedy extraction of the disjoint intervals I_k = (r_{k-1}, r_k) on which
/// |T_g(beta^{n_k} z^{beta^{n_k}})| concentrates.
L1CopyIntervals l1_copy_intervals(int beta, int terms, const DiscGrid& grid);

struct UkParams {
  double eps;  // in (0, 1/2)
  double a;    // direction angle
};

/// phi(theta) = integral_0^1 |u(r e^{i theta})| dr for the cubic boundary
/// kernel u(z) = eps^2 / (z - (1+eps) e^{ia})^3.
double uk_phi(const UkParams& params, double theta, const DiscGrid& grid);

/// The kernel itself, as a function spec.
FunctionSpec uk_kernel(const UkParams& params);

struct ClaimAudit {
  double max_violation = 0.0;  // max of phi - min{1, 8 eps^2/|theta-a|^2}
  bool holds = false;
};

/// Audits phi(eps, theta) <= min{1, 8 eps^2 / |theta - a|^2} over a grid of
/// kernel widths and angles.
ClaimAudit claim_check(const std::vector<double>& eps_grid, const std::vector<double>& theta_grid,
                       const DiscGrid& grid);

struct C0KernelParams {
  std::vector<double> radii;  // increasing, in [1/2, 1)
  Exponent p;                 // finite
  double beta;                // in (0, 1/(1+2^{4+1/p}))

  C0KernelParams(std::vector<double> radii_, Exponent p_, double beta_);
};

/// f_n(z) = (1-r_n) (1 - conj(z_n) z)^{-(2+1/p)} with z_n = r_n e^{i a_n}.
FunctionSpec c0_kernel(int n, const C0KernelParams& params, double a_n = 0.0);

struct C0Checks {
  bool rho_bound_ok = false;   // rho_{p,1}(f_n) <= C2 for all n
  bool diagonal_ok = false;    // f_n(z_n)(1-r_n)^{1+1/p} = 1/(1+r_n)^{2+1/p}
  bool offdiag_ok = false;     // off-diagonal sums <= 1/(2 C3)
  double c2 = 0.0;             // 4^3 ((2p+1)^{1/p}+1) / p^{1/p}
  double c3 = 0.0;             // 2^{2+1/p}
  double max_rho = 0.0;
  double max_offdiag_sum = 0.0;
  double max_diagonal_error = 0.0;
};

/// The three computable constants of the c_0-basis kernel family, with
/// directions fixed at angle 0.
C0Checks c0_constant_checks(const C0KernelParams& params, const DiscGrid& grid);

}  // namespace rmspace

#endif
