#ifndef RMSPACE_QUADRATURE_HPP
#define RMSPACE_QUADRATURE_HPP

#include <Eigen/Dense>
#include <functional>
#include <string>

#include "rmspace/exponent.hpp"

namespace rmspace {

using Eigen::ArrayXd;
using Eigen::ArrayXXd;

/// Gauss-Legendre nodes and weights on [-1, 1], computed by Newton iteration.
void gauss_legendre(int m, ArrayXd& nodes, ArrayXd& weights);

struct GridDesc {
  int angular = 0;
  int depth = 0;
  int order = 0;
};

/// Quadrature description for the unit disc: uniform angles theta_j = 2 pi j/M
/// and dyadic radial panels [1-2^-n, 1-2^-(n+1)], n = 0..L-1, carrying
/// Gauss-Legendre nodes of order m. Norm integrals truncate at
/// r_max = 1-2^-L; the residual shell is reported, never extrapolated.
/// One-dimensional boundary-ray integrals additionally use the closing cap
/// [1-2^-L, 1-2^-(L+cap_depth)], realized as cap_depth further dyadic panels,
/// so that ray integrals of integrable singularities reach the boundary to
/// ~1e-12 while disc norms keep the declared truncation radius.
class DiscGrid {
 public:
  static DiscGrid build(int angular_count, int shell_depth, int nodes_per_panel,
                        int cap_depth = kDefaultCapDepth);

  int angular_count() const { return M_; }
  int shell_depth() const { return L_; }
  int nodes_per_panel() const { return m_; }
  int cap_depth() const { return cap_; }
  double r_max() const { return r_max_; }
  GridDesc desc() const { return {M_, L_, m_}; }

  const ArrayXd& angles() const { return angles_; }
  const ArrayXd& radial_nodes() const { return radial_nodes_; }
  const ArrayXd& radial_weights() const { return radial_weights_; }

  /// Index of the first node of panel n (panels are contiguous blocks of m).
  int panel_begin(int n) const { return n * m_; }

  /// The (2M, L+2, m) refinement used for two-grid error estimates.
  DiscGrid refined() const { return build(2 * M_, L_ + 2, m_, cap_); }

  /// Deep rig for one-dimensional ray integrals on [0, 1-2^-(L+cap)].
  /// Order max(m, 12) per panel.
  void ray_rig(ArrayXd& nodes, ArrayXd& weights) const;

  /// Same rig restricted to [rho, 1-2^-(L+cap)); the panel containing rho is
  /// clipped with a fresh Gauss-Legendre rule.
  void ray_rig_from(double rho, ArrayXd& nodes, ArrayXd& weights) const;

  /// Truncated norm rig restricted to [rho, r_max], clipping like above.
  void radial_rig_from(double rho, ArrayXd& nodes, ArrayXd& weights) const;

  static constexpr int kDefaultCapDepth = 32;

 private:
  int M_ = 0, L_ = 0, m_ = 0, cap_ = 0;
  double r_max_ = 0.0;
  ArrayXd angles_, radial_nodes_, radial_weights_;
};

struct NormReport {
  double value = 0.0;
  double error_estimate = 0.0;
  GridDesc grid;
  std::string truncation_note;
};

/// (integral_0^{r_max} v^p dr)^{1/p} from samples at the grid's radial nodes;
/// p = inf takes the max over nodes.
double radial_lp(const ArrayXd& values, Exponent p, const DiscGrid& grid);

/// ((1/2pi) integral v^q dt)^{1/q} by the periodic trapezoid rule from one
/// value per angular node; q = inf takes the max.
double angular_lq(const ArrayXd& values, Exponent q);

/// Evaluates `computation` on `grid` and on its refinement; the report holds
/// the refined value and the absolute two-grid difference.
NormReport refine_and_estimate(const std::function<double(const DiscGrid&)>& computation,
                               const DiscGrid& grid);

/// Weighted 1-D integral of `f` over the rig given by nodes/weights.
template <class F>
double integrate_rig(F&& f, const ArrayXd& nodes, const ArrayXd& weights) {
  double acc = 0.0;
  for (Eigen::Index i = 0; i < nodes.size(); ++i) acc += weights[i] * f(nodes[i]);
  return acc;
}

}  // namespace rmspace

#endif
