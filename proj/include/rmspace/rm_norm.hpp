#ifndef RMSPACE_RM_NORM_HPP
#define RMSPACE_RM_NORM_HPP

#include <functional>
#include <vector>

#include "rmspace/exponent.hpp"
#include "rmspace/function_spec.hpp"
#include "rmspace/quadrature.hpp"

namespace rmspace {

/// Nonnegative field on the disc in polar coordinates, |value|(r, theta).
using AbsField = std::function<double(double r, double theta)>;

AbsField abs_field(const FunctionSpec& f);

/// Samples `field` at every (angle, radial node) of the grid; rows follow the
/// angular index, columns the radial node index.
ArrayXXd sample_field(const AbsField& field, const DiscGrid& grid);

/// One-grid mixed norm: radial L^p per angle composed with the angular L^q.
/// For p = inf the radial supremum over nodes is sharpened by one bisection
/// pass per panel around the maximal node (the field is re-evaluated there).
double rho_raw(const AbsField& field, PQPair pq, const DiscGrid& grid);

/// Same reduction from a precomputed sample matrix (p = inf falls back to the
/// plain max over nodes). Lets callers amortize sampling across many (p,q).
double rho_from_samples(const ArrayXXd& samples, PQPair pq, const DiscGrid& grid);

/// Two-grid mixed-norm report for a function spec.
NormReport rho_pq(const FunctionSpec& f, PQPair pq, const DiscGrid& grid);
/// Two-grid mixed-norm report for a general nonnegative field.
NormReport rho_pq_field(const AbsField& field, PQPair pq, const DiscGrid& grid);

enum class ProfileQuantity { TailNorm, BoundaryDecay, BlochRadial };

struct RadialProfile {
  ArrayXd abscissae;
  ArrayXd values;
  ProfileQuantity quantity;
};

const char* profile_quantity_name(ProfileQuantity q);
std::string profile_to_csv(const RadialProfile& p);

/// Dyadic abscissae 1 - 2^-j, j = 1..L-2.
ArrayXd default_abscissae(const DiscGrid& grid);

/// value(rho) = sup over angles of (integral_rho^{r_max} |f|^p dr)^{1/p}.
RadialProfile tail_profile(const FunctionSpec& f, Exponent p, const DiscGrid& grid,
                           const ArrayXd& abscissae);

/// value(rho) = sup over angles of (1-rho)^{1/p} |f(rho e^{i theta})|.
RadialProfile boundary_decay_profile(const FunctionSpec& f, Exponent p, const DiscGrid& grid);

/// Lower bound for the point-evaluation functional norm at z: the maximum of
/// |f_t(z)| / rho_pq(f_t) over the kernel family f_t(w) = (1 - conj(z) w)^{-t}.
/// The kernels concentrate at angular scale 1-|z|, so their norms are
/// computed on a grid whose angular count is enlarged to resolve that scale.
double delta_norm_lower(PQPair pq, Complex z, const std::vector<double>& powers,
                        const DiscGrid& grid);

/// Companion lower bound for the derivative functional, using |f_t'(z)| and
/// supplementing the family with the identity w -> w.
double delta_prime_norm_lower(PQPair pq, Complex z, const std::vector<double>& powers,
                              const DiscGrid& grid);

/// Default kernel powers for the delta lower bounds.
const std::vector<double>& default_delta_powers();

}  // namespace rmspace

#endif
