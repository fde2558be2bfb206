#ifndef RMSPACE_EXPONENT_HPP
#define RMSPACE_EXPONENT_HPP

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace rmspace {

/// An integrability exponent in [1, inf], with exact conjugation (inf <-> 1).
class Exponent {
 public:
  explicit Exponent(double v) : v_(v) {
    if (std::isnan(v) || v < 1.0) {
      throw std::invalid_argument("exponent must lie in [1, inf]");
    }
  }

  static Exponent infinity() { return Exponent(std::numeric_limits<double>::infinity()); }

  bool is_inf() const { return std::isinf(v_); }
  double value() const { return v_; }

  Exponent conjugate() const {
    if (is_inf()) return Exponent(1.0);
    if (v_ == 1.0) return infinity();
    return Exponent(v_ / (v_ - 1.0));
  }

  bool operator==(const Exponent& o) const { return v_ == o.v_; }

  std::string str() const { return is_inf() ? "inf" : format(v_); }

  /// Parses "inf" (any case) or a decimal value >= 1.
  static Exponent parse(const std::string& s);

 private:
  static std::string format(double v);
  double v_;
};

struct PQPair {
  Exponent p;
  Exponent q;
  Exponent p_conj() const { return p.conjugate(); }
  Exponent q_conj() const { return q.conjugate(); }
};

}  // namespace rmspace

#endif
