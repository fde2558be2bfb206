#ifndef RMSPACE_LUECKING_HPP
#define RMSPACE_LUECKING_HPP

#include <cstdint>
#include <vector>

#include "rmspace/rm_norm.hpp"

namespace rmspace {

/// Index (n, j) of the dyadic annulus-sector region
///   R_{n,j} = { 1-2^-n <= |z| < 1-2^-(n+1),
///               arg z in [2 pi j / 2^n, 2 pi (j+1) / 2^n) }.
struct LueckingIndex {
  int n = 0;
  std::int64_t j = 0;
  bool operator==(const LueckingIndex& o) const { return n == o.n && j == o.j; }
  bool operator<(const LueckingIndex& o) const { return n != o.n ? n < o.n : j < o.j; }
};

struct RegionGeometry {
  double r_lo, r_hi, theta_lo, theta_hi;
};

RegionGeometry region_geometry(LueckingIndex idx);

/// The unique region containing z; requires |z| < 1-2^-L.
LueckingIndex region_of(Complex z, int L);

/// Exact area (pi/2^n)((1-2^-(n+1))^2 - (1-2^-n)^2) = pi 4^-n (1 - 3 2^-(n+2)).
double region_area(LueckingIndex idx);

/// Regions whose closed boundary meets the closed boundary of idx (self
/// included); corner contact counts, which yields the counts 3, 7, 9 for
/// n = 0, 1, >= 2. Requires idx.n < L-1 so the outer ring exists.
std::vector<LueckingIndex> neighbors(LueckingIndex idx, int L);

/// Number of contiguous regions (neighbors including self).
int nc_count(LueckingIndex idx);

/// Samples `samples` points of the circle |w - z| = (1-|z|)/2 and checks each
/// lands in a region contiguous with the one containing z.
bool disc_inclusion_check(Complex z, int L, int samples);

/// Piecewise-constant field over the decomposition, zero beyond its depth.
class RegionField {
 public:
  explicit RegionField(int depth);
  int depth() const { return depth_; }
  double& at(LueckingIndex idx);
  double at(LueckingIndex idx) const;
  /// Value at a point; zero outside the covered discs.
  double operator()(Complex z) const;

 private:
  int depth_;
  std::vector<std::vector<double>> rings_;
};

/// Mean of |f| over every region with n < L (area measure, order-m tensor
/// Gauss-Legendre per region).
RegionField maximal_R(const AbsField& f, const DiscGrid& grid, int L);

/// Mean of |f| over the expanded region (union of contiguous regions),
/// attached to each base region with n < L-1.
RegionField maximal_Rtilde(const AbsField& f, const DiscGrid& grid, int L);

/// Mean of |f| over D(z, (1-|z|)/2) by 16x16 polar quadrature.
double maximal_D_at(const AbsField& f, Complex z);

/// Region integrals of |f| (not divided by area) for every n < L; the shared
/// ingredient behind both maximal fields.
std::vector<std::vector<double>> region_integrals(const AbsField& f, const DiscGrid& grid, int L);

/// Exact area of the expanded region.
double expanded_area(LueckingIndex idx, int L);

enum class MaximalOperator { R, Rtilde, D };

bool maximal_range_covered(MaximalOperator op, PQPair pq);

struct MaximalExperiment {
  double sup_ratio = 0.0;
  std::vector<double> ratios;
};

/// sup over the corpus of rho_pq(M f) / rho_pq(f), the field extended as a
/// piecewise-constant function (zero beyond depth). Uncovered (p,q) ranges
/// require `experimental`.
MaximalExperiment maximal_bound_experiment(const std::vector<FunctionSpec>& corpus, PQPair pq,
                                           const DiscGrid& grid, int L, MaximalOperator op,
                                           bool experimental = false);

/// Checks D(z, lambda c (1-|z|)) stays inside the box
/// [r - c(1-r), r + c(1-r)] x [theta - c(1-r), theta + c(1-r)] by boundary
/// sampling. Requires c in (0, 1/2), |z| >= 1/2 and lambda < 1/sqrt(4+c^2).
bool mean_value_box_check(double c, Complex z, double lambda, int samples = 256);

}  // namespace rmspace

#endif
