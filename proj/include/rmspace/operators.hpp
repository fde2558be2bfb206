#ifndef RMSPACE_OPERATORS_HPP
#define RMSPACE_OPERATORS_HPP

#include <utility>
#include <vector>

#include "rmspace/rm_norm.hpp"

namespace rmspace {

enum class Verdict { Yes, No, Undecided };
const char* verdict_name(Verdict v);

struct DiagnoseThresholds {
  double b0_eps = 1e-2;
  double b0w_eps = 1e-2;
  double measure_threshold = 0.1;  // angular fraction allowed to misbehave
};

struct SymbolDiagnostics {
  double bloch_seminorm = 0.0;          // sup over grid of (1-|z|^2)|g'(z)|
  double bloch_seminorm_error = 0.0;    // two-grid estimate
  double bloch_norm = 0.0;              // |g(0)| + seminorm
  RadialProfile little_bloch_profile;   // sup_theta (1-r^2)|g'(r e^{i theta})|
  std::vector<std::pair<double, ArrayXd>> directional_profiles;  // theta -> (1-r)|g'|
  Verdict in_bloch = Verdict::Undecided;
  Verdict in_little_bloch = Verdict::Undecided;
  Verdict in_weakly_little_bloch = Verdict::Undecided;
  double horizon = 0.0;  // largest profile abscissa
};

/// Two-grid maximum of (1-|z|^2)|g'(z)| over the grid nodes; a lower bound
/// for the true seminorm.
NormReport bloch_seminorm(const FunctionSpec& g, const DiscGrid& grid);

/// Fills every diagnostic and classifies membership in the Bloch space, the
/// little Bloch space and its weak (almost-every-direction) variant as
/// YES/NO/UNDECIDED over the declared horizon. An empty `directions` list
/// defaults to the grid's angular nodes.
SymbolDiagnostics diagnose_symbol(const FunctionSpec& g, const DiscGrid& grid,
                                  const DiagnoseThresholds& thresholds = {},
                                  const std::vector<double>& directions = {});

struct SecondDerivativeCheck {
  bool holds = false;
  double max_ratio = 0.0;  // max over grid of |g''(z)|(1-|z|)^2 / (4B)
};

/// Checks |g''(z)| <= 4B/(1-|z|)^2 over the grid. Requires B to dominate the
/// measured sup of (1-|z|)|g'(z)| at grid resolution.
SecondDerivativeCheck second_derivative_bound_check(const FunctionSpec& g, double B,
                                                    const DiscGrid& grid);

struct BcdeltaParams {
  double B;      // Bloch-type bound: (1-|z|)|g'(z)| <= B
  double c;      // target level
  double eta;    // in (0, 1/2)
  double a;      // direction angle
  double delta;  // box half-size factor; must satisfy delta <= c/(32 B)

  BcdeltaParams(double B_, double c_, double eta_, double a_, double delta_ = 0.0);
};

struct BcdeltaResult {
  bool verified = false;
  double min_ratio = 0.0;  // min over the box of |g'| * eta / c
};

/// Samples the box |r-(1-eta)| < delta*eta, |theta-a| < delta*eta on a 33x33
/// lattice; verified when |g'| stays above c/eta throughout. Throws when the
/// hypothesis |g'((1-eta)e^{ia})| eta > 2c fails.
BcdeltaResult bcdelta_verify(const FunctionSpec& g, const BcdeltaParams& params);

}  // namespace rmspace

#endif
