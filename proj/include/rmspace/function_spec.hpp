#ifndef RMSPACE_FUNCTION_SPEC_HPP
#define RMSPACE_FUNCTION_SPEC_HPP

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

namespace rmspace {

using Complex = std::complex<double>;

/// Symbolic description of an analytic function on the unit disc.
///
/// Every spec is evaluable in closed form at any |z| < 1, differentiable
/// within the kind set, and has exact Taylor coefficients. Values are
/// immutable after construction; copies share the underlying node.
class FunctionSpec {
 public:
  struct Polynomial {
    Eigen::VectorXcd coeffs;  // coeffs[k] multiplies z^k
  };

  /// Sparse power series sum alpha_k z^{n_k} with strictly increasing
  /// exponents. `declared_ratio` > 1 claims lacunarity: n_{k+1}/n_k >= ratio
  /// for all k (checked at construction). 0 means no claim.
  struct Lacunary {
    std::vector<std::int64_t> exponents;
    Eigen::VectorXcd coeffs;
    double declared_ratio = 0.0;
  };

  /// z -> -log(1 - lambda z), principal branch; requires |lambda| <= 1.
  struct LogKernel {
    Complex lambda;
  };

  /// z -> scale / (pole - z)^power, with the branch fixed by the principal
  /// value at z = 0 continued analytically through the disc. Internally the
  /// function is evaluated as front * (1 - recip*z)^{-power} with
  /// recip = 1/pole, which stays branch-safe for |recip*z| < 1.
  struct RationalPower {
    Complex pole;
    double power;
    Complex scale;
    Complex recip;  // 1/pole (exact when built from the reciprocal form)
    Complex front;  // scale * pole^{-power} = value at z = 0
  };

  struct Sum {
    std::vector<FunctionSpec> parts;
  };

  using Node = std::variant<Polynomial, Lacunary, LogKernel, RationalPower, Sum>;

  static FunctionSpec polynomial(Eigen::VectorXcd coeffs);
  static FunctionSpec lacunary(std::vector<std::int64_t> exponents, Eigen::VectorXcd coeffs,
                               double declared_ratio = 0.0);
  static FunctionSpec log_kernel(Complex lambda);
  /// scale/(pole - z)^power; requires |pole| >= 1 and power > 0.
  static FunctionSpec rational_power(Complex pole, double power, Complex scale = 1.0);
  /// front * (1 - recip*z)^{-power}; `recip` is kept exactly as given,
  /// which matters when the kernel is nearly singular on the disc edge.
  static FunctionSpec rational_power_recip(Complex recip, double power, Complex front);
  static FunctionSpec sum(std::vector<FunctionSpec> parts);

  const Node& node() const { return *node_; }

 private:
  explicit FunctionSpec(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

/// Closed-form evaluation; throws std::domain_error when |z| >= 1.
Complex evaluate(const FunctionSpec& f, Complex z);

/// Exact symbolic derivative, closed under the kind set.
FunctionSpec derivative(const FunctionSpec& f);

/// Exact Taylor coefficients a_0..a_N.
Eigen::VectorXcd coefficients(const FunctionSpec& f, int N);

/// Coefficients d_0..d_N of the integration operator applied to f with
/// symbol g:  d_0 = 0,  d_{k+1} = (1/(k+1)) sum_{m<=k} a_m b_{k-m},
/// where a = coefficients(f) and b = coefficients(g').
Eigen::VectorXcd tg_apply(const FunctionSpec& f, const FunctionSpec& g, int N);

/// JSON round-trip (schema documented in docs/function-spec.md).
FunctionSpec parse_spec(const std::string& json_text);
std::string serialize_spec(const FunctionSpec& f);

}  // namespace rmspace

#endif
