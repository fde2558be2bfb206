#ifndef RMSPACE_LITTLEWOOD_PALEY_HPP
#define RMSPACE_LITTLEWOOD_PALEY_HPP

#include <vector>

#include "rmspace/rm_norm.hpp"

namespace rmspace {

struct LPReport {
  double lhs = 0.0;
  double rhs = 0.0;
  double constant_used = 0.0;  // the factor p in front of the derivative term
  double slack = 0.0;          // rhs - lhs
  double tolerance = 0.0;
  bool holds = false;          // lhs <= rhs + tolerance
};

struct HardyRatio {
  double norm_in = 0.0;
  double norm_out = 0.0;
  double ratio = 0.0;  // 0/0 reported as 0
};

/// Hardy-type averaging operator Rg(x) = integral_0^x g(t)/(1-t) dt computed
/// by cumulative panel quadrature from samples of g at the grid's radial
/// nodes; returns the L^p([0, r_max]) norms of g and Rg and their ratio
/// (bounded by p).
HardyRatio hardy_R(const ArrayXd& samples, Exponent p, const DiscGrid& grid);

/// One-dimensional inequality along the ray at angle theta:
/// ||f||_p <= p ||f'(x)(1-x)||_p + |f(0)| on [0, 1), by deep-rig quadrature.
LPReport lp_check_1d(const FunctionSpec& f, Exponent p, const DiscGrid& grid, double theta = 0.0);

/// Mixed-norm inequality rho_pq(f) <= p rho_pq(f'(z)(1-|z|)) + |f(0)|.
/// Rejects p = inf (the inequality fails for sup-norm radial integrability).
LPReport lp_check(const FunctionSpec& f, PQPair pq, const DiscGrid& grid);

/// Tail version from level rho along one ray (or the sup over all grid rays):
/// (int_rho^1 |f|^p)^{1/p} <= p (int_rho^1 |f'|^p (1-r)^p)^{1/p}
///                            + (1-rho)^{1/p} |f(rho e^{i theta})|.
LPReport lp_tail_check(const FunctionSpec& f, Exponent p, double rho, bool sup_over_theta,
                       const DiscGrid& grid, double theta = 0.0);

/// Ratio rho_pq(f'(z)(1-|z|)) / rho_pq(f) for the converse inequality. The
/// covered ranges are 1 < p,q < inf; p = 1 with q < inf; and p = inf. The
/// remaining ranges are open and run only with `experimental` set.
double converse_ratio(const FunctionSpec& f, PQPair pq, const DiscGrid& grid,
                      bool experimental = false);

bool converse_range_covered(PQPair pq);

}  // namespace rmspace

#endif
