#include "rmspace/function_spec.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace rmspace {

namespace {

using Poly = FunctionSpec::Polynomial;
using Lac = FunctionSpec::Lacunary;
using Log = FunctionSpec::LogKernel;
using Rat = FunctionSpec::RationalPower;
using SumNode = FunctionSpec::Sum;

Complex ipow(Complex z, std::int64_t n) {
  Complex r = 1.0;
  while (n > 0) {
    if (n & 1) r *= z;
    z *= z;
    n >>= 1;
  }
  return r;
}

// 1 - c*z with the product rounding compensated (fma), so the result keeps
// full relative accuracy even when c*z is within an ulp of 1.
Complex one_minus_prod(Complex c, Complex z) {
  const double a = c.real(), b = c.imag(), x = z.real(), y = z.imag();
  const double p1 = a * x, e1 = std::fma(a, x, -p1);
  const double p2 = b * y, e2 = std::fma(b, y, -p2);
  const double p3 = a * y, e3 = std::fma(a, y, -p3);
  const double p4 = b * x, e4 = std::fma(b, x, -p4);
  const double re = ((1.0 - p1) + p2) + (e2 - e1);
  const double im = (-(p3 + p4)) - (e3 + e4);
  return {re, im};
}

}  // namespace

FunctionSpec FunctionSpec::polynomial(Eigen::VectorXcd coeffs) {
  if (coeffs.size() == 0) coeffs = Eigen::VectorXcd::Zero(1);
  return FunctionSpec(std::make_shared<const Node>(Poly{std::move(coeffs)}));
}

FunctionSpec FunctionSpec::lacunary(std::vector<std::int64_t> exponents, Eigen::VectorXcd coeffs,
                                    double declared_ratio) {
  if (exponents.empty() || static_cast<std::int64_t>(exponents.size()) != coeffs.size()) {
    throw std::invalid_argument("lacunary: exponents/coeffs size mismatch or empty");
  }
  for (std::size_t k = 0; k < exponents.size(); ++k) {
    if (exponents[k] < 0) throw std::invalid_argument("lacunary: negative exponent");
    if (k > 0 && exponents[k] <= exponents[k - 1]) {
      throw std::invalid_argument("lacunary: exponents must be strictly increasing");
    }
  }
  if (declared_ratio != 0.0) {
    if (declared_ratio <= 1.0) throw std::invalid_argument("lacunary: declared ratio must exceed 1");
    if (exponents.front() < 1) throw std::invalid_argument("lacunary: flagged series needs exponents >= 1");
    for (std::size_t k = 0; k + 1 < exponents.size(); ++k) {
      if (static_cast<double>(exponents[k + 1]) < declared_ratio * static_cast<double>(exponents[k])) {
        throw std::invalid_argument("lacunary: exponent ratio falls below the declared ratio");
      }
    }
  }
  return FunctionSpec(std::make_shared<const Node>(Lac{std::move(exponents), std::move(coeffs), declared_ratio}));
}

FunctionSpec FunctionSpec::log_kernel(Complex lambda) {
  if (std::abs(lambda) > 1.0 + 1e-15) throw std::invalid_argument("log_kernel: |lambda| must be <= 1");
  return FunctionSpec(std::make_shared<const Node>(Log{lambda}));
}

FunctionSpec FunctionSpec::rational_power(Complex pole, double power, Complex scale) {
  if (!(power > 0.0)) throw std::invalid_argument("rational_power: power must be positive");
  if (std::abs(pole) < 1.0 - 1e-15) throw std::invalid_argument("rational_power: pole inside the open disc");
  Rat r;
  r.pole = pole;
  r.power = power;
  r.scale = scale;
  r.recip = 1.0 / pole;
  r.front = scale * std::exp(-power * std::log(pole));
  return FunctionSpec(std::make_shared<const Node>(r));
}

FunctionSpec FunctionSpec::rational_power_recip(Complex recip, double power, Complex front) {
  if (!(power > 0.0)) throw std::invalid_argument("rational_power: power must be positive");
  if (std::abs(recip) > 1.0 + 1e-15) throw std::invalid_argument("rational_power: pole inside the open disc");
  if (recip == Complex(0.0, 0.0)) throw std::invalid_argument("rational_power: reciprocal pole must be nonzero");
  Rat r;
  r.power = power;
  r.recip = recip;
  r.front = front;
  r.pole = 1.0 / recip;
  r.scale = front * std::exp(power * std::log(r.pole));
  return FunctionSpec(std::make_shared<const Node>(r));
}

FunctionSpec FunctionSpec::sum(std::vector<FunctionSpec> parts) {
  if (parts.empty()) throw std::invalid_argument("sum: needs at least one part");
  return FunctionSpec(std::make_shared<const Node>(SumNode{std::move(parts)}));
}

Complex evaluate(const FunctionSpec& f, Complex z) {
  if (std::abs(z) >= 1.0) throw std::domain_error("evaluate: |z| must be < 1");
  struct Visitor {
    Complex z;
    Complex operator()(const Poly& p) const {
      Complex acc = 0.0;
      for (Eigen::Index k = p.coeffs.size() - 1; k >= 0; --k) acc = acc * z + p.coeffs[k];
      return acc;
    }
    Complex operator()(const Lac& l) const {
      Complex acc = 0.0;
      for (std::size_t k = 0; k < l.exponents.size(); ++k) acc += l.coeffs[static_cast<Eigen::Index>(k)] * ipow(z, l.exponents[k]);
      return acc;
    }
    Complex operator()(const Log& g) const {
      if (g.lambda == Complex(0.0, 0.0)) return 0.0;
      return -std::log(one_minus_prod(g.lambda, z));
    }
    Complex operator()(const Rat& r) const {
      const Complex q = one_minus_prod(r.recip, z);
      return r.front * std::exp(-r.power * std::log(q));
    }
    Complex operator()(const SumNode& s) const {
      Complex acc = 0.0;
      for (const auto& part : s.parts) acc += evaluate(part, z);
      return acc;
    }
  };
  return std::visit(Visitor{z}, f.node());
}

FunctionSpec derivative(const FunctionSpec& f) {
  struct Visitor {
    FunctionSpec operator()(const Poly& p) const {
      if (p.coeffs.size() <= 1) return FunctionSpec::polynomial(Eigen::VectorXcd::Zero(1));
      Eigen::VectorXcd d(p.coeffs.size() - 1);
      for (Eigen::Index k = 1; k < p.coeffs.size(); ++k) d[k - 1] = static_cast<double>(k) * p.coeffs[k];
      return FunctionSpec::polynomial(std::move(d));
    }
    FunctionSpec operator()(const Lac& l) const {
      std::vector<std::int64_t> exps;
      std::vector<Complex> cs;
      for (std::size_t k = 0; k < l.exponents.size(); ++k) {
        if (l.exponents[k] == 0) continue;
        exps.push_back(l.exponents[k] - 1);
        cs.push_back(static_cast<double>(l.exponents[k]) * l.coeffs[static_cast<Eigen::Index>(k)]);
      }
      if (exps.empty()) return FunctionSpec::polynomial(Eigen::VectorXcd::Zero(1));
      Eigen::VectorXcd cv(static_cast<Eigen::Index>(cs.size()));
      for (std::size_t k = 0; k < cs.size(); ++k) cv[static_cast<Eigen::Index>(k)] = cs[k];
      return FunctionSpec::lacunary(std::move(exps), std::move(cv));
    }
    FunctionSpec operator()(const Log& g) const {
      // d/dz [-log(1 - lambda z)] = lambda/(1 - lambda z) = (1/lambda - z)^{-1}
      if (g.lambda == Complex(0.0, 0.0)) return FunctionSpec::polynomial(Eigen::VectorXcd::Zero(1));
      return FunctionSpec::rational_power_recip(g.lambda, 1.0, g.lambda);
    }
    FunctionSpec operator()(const Rat& r) const {
      // d/dz [front (1 - c z)^{-t}] = front * t * c * (1 - c z)^{-(t+1)}
      return FunctionSpec::rational_power_recip(r.recip, r.power + 1.0, r.front * r.power * r.recip);
    }
    FunctionSpec operator()(const SumNode& s) const {
      std::vector<FunctionSpec> parts;
      parts.reserve(s.parts.size());
      for (const auto& part : s.parts) parts.push_back(derivative(part));
      return FunctionSpec::sum(std::move(parts));
    }
  };
  return std::visit(Visitor{}, f.node());
}

Eigen::VectorXcd coefficients(const FunctionSpec& f, int N) {
  if (N < 0) throw std::invalid_argument("coefficients: N must be >= 0");
  struct Visitor {
    int N;
    Eigen::VectorXcd operator()(const Poly& p) const {
      Eigen::VectorXcd a = Eigen::VectorXcd::Zero(N + 1);
      const Eigen::Index n = std::min<Eigen::Index>(N + 1, p.coeffs.size());
      a.head(n) = p.coeffs.head(n);
      return a;
    }
    Eigen::VectorXcd operator()(const Lac& l) const {
      Eigen::VectorXcd a = Eigen::VectorXcd::Zero(N + 1);
      for (std::size_t k = 0; k < l.exponents.size(); ++k) {
        if (l.exponents[k] <= N) a[static_cast<Eigen::Index>(l.exponents[k])] += l.coeffs[static_cast<Eigen::Index>(k)];
      }
      return a;
    }
    Eigen::VectorXcd operator()(const Log& g) const {
      // -log(1 - lambda z) = sum_{k>=1} lambda^k z^k / k
      Eigen::VectorXcd a = Eigen::VectorXcd::Zero(N + 1);
      Complex lk = 1.0;
      for (int k = 1; k <= N; ++k) {
        lk *= g.lambda;
        a[k] = lk / static_cast<double>(k);
      }
      return a;
    }
    Eigen::VectorXcd operator()(const Rat& r) const {
      // front (1 - c z)^{-t} = front sum_k binom(t+k-1, k) (c z)^k
      Eigen::VectorXcd a(N + 1);
      Complex cur = r.front;
      a[0] = cur;
      for (int k = 1; k <= N; ++k) {
        cur *= r.recip * ((r.power + k - 1.0) / static_cast<double>(k));
        a[k] = cur;
      }
      return a;
    }
    Eigen::VectorXcd operator()(const SumNode& s) const {
      Eigen::VectorXcd a = Eigen::VectorXcd::Zero(N + 1);
      for (const auto& part : s.parts) a += coefficients(part, N);
      return a;
    }
  };
  return std::visit(Visitor{N}, f.node());
}

Eigen::VectorXcd tg_apply(const FunctionSpec& f, const FunctionSpec& g, int N) {
  if (N < 1) throw std::invalid_argument("tg_apply: N must be >= 1");
  const Eigen::VectorXcd a = coefficients(f, N - 1);
  const Eigen::VectorXcd b = coefficients(derivative(g), N - 1);
  Eigen::VectorXcd d = Eigen::VectorXcd::Zero(N + 1);
  for (int k = 0; k < N; ++k) {
    Complex conv = 0.0;
    for (int m = 0; m <= k; ++m) conv += a[m] * b[k - m];
    d[k + 1] = conv / static_cast<double>(k + 1);
  }
  return d;
}

// ---------------------------------------------------------------------------
// JSON schema: {"kind": "polynomial"|"lacunary"|"log_kernel"|"rational_power"
//               |"sum", ...} with complex numbers as [re, im] pairs.
// ---------------------------------------------------------------------------

namespace {

using nlohmann::json;

Complex parse_complex(const json& j, const char* what) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw std::invalid_argument(std::string("spec: ") + what + " must be a [re, im] pair");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

json dump_complex(Complex c) { return json::array({c.real(), c.imag()}); }

FunctionSpec parse_json(const json& j) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) {
    throw std::invalid_argument("spec: missing \"kind\"");
  }
  const std::string kind = j["kind"].get<std::string>();
  if (kind == "polynomial") {
    if (!j.contains("coeffs") || !j["coeffs"].is_array()) throw std::invalid_argument("spec: polynomial needs \"coeffs\"");
    Eigen::VectorXcd c(static_cast<Eigen::Index>(j["coeffs"].size()));
    for (std::size_t k = 0; k < j["coeffs"].size(); ++k) c[static_cast<Eigen::Index>(k)] = parse_complex(j["coeffs"][k], "coeff");
    return FunctionSpec::polynomial(std::move(c));
  }
  if (kind == "lacunary") {
    if (!j.contains("exponents") || !j["exponents"].is_array() || !j.contains("coeffs") || !j["coeffs"].is_array()) {
      throw std::invalid_argument("spec: lacunary needs \"exponents\" and \"coeffs\"");
    }
    std::vector<std::int64_t> exps;
    for (const auto& e : j["exponents"]) {
      if (!e.is_number_integer() || e.get<std::int64_t>() < 1) {
        throw std::invalid_argument("spec: lacunary exponents must be positive integers");
      }
      exps.push_back(e.get<std::int64_t>());
    }
    Eigen::VectorXcd c(static_cast<Eigen::Index>(j["coeffs"].size()));
    for (std::size_t k = 0; k < j["coeffs"].size(); ++k) c[static_cast<Eigen::Index>(k)] = parse_complex(j["coeffs"][k], "coeff");
    double ratio = 0.0;
    if (j.contains("ratio")) {
      if (!j["ratio"].is_number()) throw std::invalid_argument("spec: lacunary \"ratio\" must be a number");
      ratio = j["ratio"].get<double>();
    }
    return FunctionSpec::lacunary(std::move(exps), std::move(c), ratio);
  }
  if (kind == "log_kernel") {
    if (!j.contains("lambda")) throw std::invalid_argument("spec: log_kernel needs \"lambda\"");
    return FunctionSpec::log_kernel(parse_complex(j["lambda"], "lambda"));
  }
  if (kind == "rational_power") {
    if (!j.contains("pole") || !j.contains("power")) throw std::invalid_argument("spec: rational_power needs \"pole\" and \"power\"");
    const Complex pole = parse_complex(j["pole"], "pole");
    if (std::abs(pole) <= 1.0) throw std::invalid_argument("spec: rational_power pole inside the closed disc");
    if (!j["power"].is_number()) throw std::invalid_argument("spec: rational_power \"power\" must be a number");
    Complex scale = 1.0;
    if (j.contains("scale")) scale = parse_complex(j["scale"], "scale");
    return FunctionSpec::rational_power(pole, j["power"].get<double>(), scale);
  }
  if (kind == "sum") {
    if (!j.contains("parts") || !j["parts"].is_array() || j["parts"].empty()) {
      throw std::invalid_argument("spec: sum needs a non-empty \"parts\" array");
    }
    std::vector<FunctionSpec> parts;
    for (const auto& part : j["parts"]) parts.push_back(parse_json(part));
    return FunctionSpec::sum(std::move(parts));
  }
  throw std::invalid_argument("spec: unknown kind \"" + kind + "\"");
}

json dump_json(const FunctionSpec& f) {
  struct Visitor {
    json operator()(const Poly& p) const {
      json c = json::array();
      for (Eigen::Index k = 0; k < p.coeffs.size(); ++k) c.push_back(dump_complex(p.coeffs[k]));
      return json{{"kind", "polynomial"}, {"coeffs", c}};
    }
    json operator()(const Lac& l) const {
      json c = json::array();
      for (Eigen::Index k = 0; k < l.coeffs.size(); ++k) c.push_back(dump_complex(l.coeffs[k]));
      json out{{"kind", "lacunary"}, {"exponents", l.exponents}, {"coeffs", c}};
      if (l.declared_ratio != 0.0) out["ratio"] = l.declared_ratio;
      return out;
    }
    json operator()(const Log& g) const { return json{{"kind", "log_kernel"}, {"lambda", dump_complex(g.lambda)}}; }
    json operator()(const Rat& r) const {
      return json{{"kind", "rational_power"}, {"pole", dump_complex(r.pole)}, {"power", r.power}, {"scale", dump_complex(r.scale)}};
    }
    json operator()(const SumNode& s) const {
      json parts = json::array();
      for (const auto& part : s.parts) parts.push_back(dump_json(part));
      return json{{"kind", "sum"}, {"parts", parts}};
    }
  };
  return std::visit(Visitor{}, f.node());
}

}  // namespace

FunctionSpec parse_spec(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("spec: invalid JSON: ") + e.what());
  }
  return parse_json(j);
}

std::string serialize_spec(const FunctionSpec& f) { return dump_json(f).dump(); }

}  // namespace rmspace
