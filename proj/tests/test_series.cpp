#include <complex>
#include <random>

#include "doctest.h"
#include "rmspace/function_spec.hpp"

using namespace rmspace;
using Cx = std::complex<double>;

namespace {

FunctionSpec poly(std::initializer_list<Cx> cs) {
  Eigen::VectorXcd v(static_cast<Eigen::Index>(cs.size()));
  Eigen::Index i = 0;
  for (Cx c : cs) v[i++] = c;
  return FunctionSpec::polynomial(v);
}

// brute-force convolution oracle for the coefficients of f*g'
Eigen::VectorXcd convolve(const Eigen::VectorXcd& a, const Eigen::VectorXcd& b) {
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(a.size() + b.size() - 1);
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    for (Eigen::Index j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

}  // namespace

TEST_CASE("evaluate: closed forms") {
  CHECK(std::abs(evaluate(FunctionSpec::log_kernel(1.0), 0.0)) == 0.0);
  CHECK(evaluate(poly({1.0, 1.0}), 0.5) == Cx(1.5, 0.0));
  // scale/(pole - z)^t at z = 0 with pole = 1+eps, t = 3, scale = eps^2
  const double eps = 0.25;
  const FunctionSpec u = FunctionSpec::rational_power(1.0 + eps, 3.0, eps * eps);
  CHECK(std::abs(evaluate(u, 0.0) - Cx(0.032, 0.0)) < 1e-15);
  // log kernel against the library log
  const FunctionSpec lk = FunctionSpec::log_kernel(1.0);
  const Cx z(0.3, -0.4);
  CHECK(std::abs(evaluate(lk, z) - (-std::log(1.0 - z))) < 1e-15);
  CHECK_THROWS_AS((void)evaluate(lk, Cx(1.0, 0.0)), std::domain_error);
}

TEST_CASE("evaluate: rational power matches the direct formula away from the cut") {
  const Cx pole(1.5, 0.25);
  const double t = 2.5;
  const Cx scale(0.7, -0.3);
  const FunctionSpec f = FunctionSpec::rational_power(pole, t, scale);
  for (Cx z : {Cx(0.0, 0.0), Cx(0.5, 0.1), Cx(-0.3, 0.6), Cx(0.1, -0.8)}) {
    const Cx direct = scale * std::exp(-t * std::log(pole - z));
    CHECK(std::abs(evaluate(f, z) - direct) < 1e-13 * std::abs(direct));
  }
}

TEST_CASE("derivative: calculus identities") {
  // d/dz -log(1-z) = 1/(1-z)
  const FunctionSpec d = derivative(FunctionSpec::log_kernel(1.0));
  const Cx z(0.25, 0.4);
  CHECK(std::abs(evaluate(d, z) - 1.0 / (1.0 - z)) < 1e-14);
  // d/dz z^3 = 3 z^2
  const FunctionSpec d3 = derivative(poly({0.0, 0.0, 0.0, 1.0}));
  CHECK(std::abs(evaluate(d3, z) - 3.0 * z * z) < 1e-15);
  // second derivative of -log(1-z) at real r is 1/(1-r)^2
  const FunctionSpec dd = derivative(d);
  const double r = 0.625;
  CHECK(std::abs(evaluate(dd, r) - 1.0 / ((1.0 - r) * (1.0 - r))) < 1e-13);
}

TEST_CASE("derivative: finite differences across all kinds") {
  std::vector<FunctionSpec> specs;
  specs.push_back(poly({Cx(0.5, 0.1), Cx(0, 1), Cx(2, 0), Cx(0, -0.25)}));
  specs.push_back(FunctionSpec::lacunary({1, 2, 4, 8, 16}, Eigen::VectorXcd::Ones(5), 2.0));
  specs.push_back(FunctionSpec::log_kernel(Cx(0.6, 0.35)));
  specs.push_back(FunctionSpec::rational_power(Cx(1.25, -0.5), 1.75, Cx(0.4, 0.2)));
  specs.push_back(FunctionSpec::sum({specs[0], specs[2]}));
  const double h = 1e-5;
  for (const auto& f : specs) {
    const FunctionSpec df = derivative(f);
    for (Cx z : {Cx(0.1, 0.2), Cx(-0.35, 0.05), Cx(0.0, -0.5)}) {
      const Cx fd = (evaluate(f, z + h) - evaluate(f, z - h)) / (2.0 * h);
      CHECK(std::abs(evaluate(df, z) - fd) < 1e-7 * (1.0 + std::abs(fd)));
    }
  }
}

TEST_CASE("coefficients: closed forms") {
  const Eigen::VectorXcd lk = coefficients(FunctionSpec::log_kernel(1.0), 3);
  CHECK(lk[0] == Cx(0.0));
  CHECK(lk[1] == Cx(1.0));
  CHECK(lk[2] == Cx(0.5));
  CHECK(std::abs(lk[3] - Cx(1.0 / 3.0)) < 1e-17);

  const Eigen::VectorXcd lac =
      coefficients(FunctionSpec::lacunary({1, 2, 4}, Eigen::VectorXcd::Ones(3), 2.0), 5);
  CHECK(lac[0] == Cx(0.0));
  CHECK(lac[1] == Cx(1.0));
  CHECK(lac[2] == Cx(1.0));
  CHECK(lac[3] == Cx(0.0));
  CHECK(lac[4] == Cx(1.0));
  CHECK(lac[5] == Cx(0.0));

  // geometric series 1/(2-z): a_k = 2^{-(k+1)}
  const Eigen::VectorXcd geo = coefficients(FunctionSpec::rational_power(2.0, 1.0, 1.0), 2);
  CHECK(std::abs(geo[0] - Cx(0.5)) < 1e-16);
  CHECK(std::abs(geo[1] - Cx(0.25)) < 1e-16);
  CHECK(std::abs(geo[2] - Cx(0.125)) < 1e-16);
}

TEST_CASE("coefficients: evaluation consistency with tail bound") {
  // |f(z) - sum_{k<=N} a_k z^k| <= M |z|^{N+1}/(1-|z|) when |a_k| <= M
  std::vector<FunctionSpec> specs;
  specs.push_back(FunctionSpec::log_kernel(Cx(0.8, 0.2)));
  specs.push_back(FunctionSpec::rational_power(Cx(1.1, 0.0), 2.0, 1.0));
  specs.push_back(FunctionSpec::sum({poly({1.0, Cx(0, 2)}), FunctionSpec::log_kernel(-1.0)}));
  const int N = 64;
  for (const auto& f : specs) {
    const Eigen::VectorXcd a = coefficients(f, N + 40);
    double M = 0.0;
    for (Eigen::Index k = 0; k < a.size(); ++k) M = std::max(M, std::abs(a[k]) / std::pow(1.05, k));
    M *= 32.0;  // crude coefficient envelope; enough for |z| <= 0.5
    for (double r : {0.1, 0.3, 0.5}) {
      for (double th : {0.0, 1.1, 2.7, 4.4}) {
        const Cx z = std::polar(r, th);
        Cx partial = 0.0;
        for (int k = N; k >= 0; --k) partial = partial * z + a[k];
        const double tail = M * std::pow(r, N + 1) / (1.0 - r);
        CHECK(std::abs(evaluate(f, z) - partial) <= tail + 1e-12);
      }
    }
  }
}

TEST_CASE("tg_apply: hand-computed convolution") {
  // f = 2z^2, g = -log(1-z): f g' = 2z^2 (1+z+z^2+...), integrate
  const FunctionSpec f = poly({0.0, 0.0, 2.0});
  const FunctionSpec g = FunctionSpec::log_kernel(1.0);
  const Eigen::VectorXcd d = tg_apply(f, g, 4);
  CHECK(d[0] == Cx(0.0));
  CHECK(d[1] == Cx(0.0));
  CHECK(d[2] == Cx(0.0));
  CHECK(std::abs(d[3] - Cx(2.0 / 3.0)) < 1e-16);
  CHECK(std::abs(d[4] - Cx(0.5)) < 1e-16);
}

TEST_CASE("tg_apply: T_g(1) recovers g - g(0)") {
  const FunctionSpec one = poly({1.0});
  const FunctionSpec g = FunctionSpec::sum(
      {FunctionSpec::log_kernel(Cx(0.5, 0.5)), poly({Cx(2, 1), 0.0, Cx(0, 3)})});
  const int N = 12;
  const Eigen::VectorXcd d = tg_apply(one, g, N);
  const Eigen::VectorXcd gc = coefficients(g, N);
  CHECK(d[0] == Cx(0.0));
  for (int k = 1; k <= N; ++k) CHECK(std::abs(d[k] - gc[k]) < 1e-15);

  const FunctionSpec idg = poly({0.0, 1.0});
  const Eigen::VectorXcd dz = tg_apply(one, idg, 3);
  CHECK(dz[1] == Cx(1.0));
  CHECK(dz[2] == Cx(0.0));
}

TEST_CASE("tg_apply: exact linearity and the derivative identity") {
  std::mt19937_64 rng(7);
  const auto u = [&rng] { return static_cast<double>(rng() >> 11) * 0x1.0p-53 - 0.5; };
  Eigen::VectorXcd fc(5), hc(7);
  for (Eigen::Index k = 0; k < fc.size(); ++k) fc[k] = Cx(u(), u());
  for (Eigen::Index k = 0; k < hc.size(); ++k) hc[k] = Cx(u(), u());
  const FunctionSpec f = FunctionSpec::polynomial(fc), hs = FunctionSpec::polynomial(hc);
  const FunctionSpec g = FunctionSpec::sum({FunctionSpec::log_kernel(1.0), poly({0.0, Cx(0, 1)})});
  const int N = 14;
  const double alpha = 0.5, beta = -2.25;  // exact binary rationals

  Eigen::VectorXcd mix = alpha * fc;
  mix.conservativeResize(7);
  mix[5] = Cx(0, 0);
  mix[6] = Cx(0, 0);
  mix += beta * hc;
  const Eigen::VectorXcd lhs = tg_apply(FunctionSpec::polynomial(mix), g, N);
  const Eigen::VectorXcd rhs = alpha * tg_apply(f, g, N) + beta * tg_apply(hs, g, N);
  for (int k = 0; k <= N; ++k) CHECK(std::abs(lhs[k] - rhs[k]) < 1e-15);

  // derivative of T_g(f) has the coefficients of f * g'
  const Eigen::VectorXcd d = tg_apply(f, g, N);
  const Eigen::VectorXcd prod = convolve(fc, coefficients(derivative(g), N));
  for (int k = 0; k + 1 <= N; ++k) {
    const Cx deriv_k = static_cast<double>(k + 1) * d[k + 1];
    CHECK(std::abs(deriv_k - prod[k]) < 1e-13);
  }
}

TEST_CASE("parse_spec: examples and error paths") {
  const FunctionSpec ident = parse_spec(R"({"kind":"polynomial","coeffs":[[0,0],[1,0]]})");
  CHECK(evaluate(ident, Cx(0.25, 0.5)) == Cx(0.25, 0.5));

  const FunctionSpec lk = parse_spec(R"({"kind":"log_kernel","lambda":[1,0]})");
  CHECK(std::abs(evaluate(lk, 0.5) + std::log(0.5)) < 1e-15);

  // undeclared ratio: only monotonicity is enforced
  CHECK_NOTHROW(parse_spec(R"({"kind":"lacunary","exponents":[1,2,3],"coeffs":[[1,0],[1,0],[1,0]]})"));
  // declared ratio is enforced
  CHECK_THROWS_AS(parse_spec(R"({"kind":"lacunary","exponents":[1,2,3],"coeffs":[[1,0],[1,0],[1,0]],"ratio":2.0})"),
                  std::invalid_argument);
  CHECK_NOTHROW(parse_spec(R"({"kind":"lacunary","exponents":[1,2,4],"coeffs":[[1,0],[1,0],[1,0]],"ratio":2.0})"));
  CHECK_THROWS_AS(parse_spec(R"({"kind":"lacunary","exponents":[2,2],"coeffs":[[1,0],[1,0]]})"),
                  std::invalid_argument);
  // pole inside the closed disc
  CHECK_THROWS_AS(parse_spec(R"({"kind":"rational_power","pole":[0.5,0],"power":1})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(parse_spec(R"({"kind":"rational_power","pole":[1,0],"power":1})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(parse_spec(R"({"kind":"wavelet"})"), std::invalid_argument);
  CHECK_THROWS_AS(parse_spec("not json"), std::invalid_argument);
}

TEST_CASE("parse_spec round-trips serialize_spec on every kind") {
  std::vector<std::string> docs = {
      R"({"kind":"polynomial","coeffs":[[1,0],[0,2],[3,-1]]})",
      R"({"kind":"lacunary","exponents":[1,2,4,8],"coeffs":[[1,0],[1,0],[1,0],[1,0]],"ratio":2.0})",
      R"({"kind":"log_kernel","lambda":[0.5,-0.5]})",
      R"({"kind":"rational_power","pole":[1.25,0],"power":3,"scale":[0.0625,0]})",
      R"({"kind":"sum","parts":[{"kind":"polynomial","coeffs":[[1,0]]},{"kind":"log_kernel","lambda":[1,0]}]})",
  };
  for (const auto& doc : docs) {
    const FunctionSpec f = parse_spec(doc);
    const FunctionSpec g = parse_spec(serialize_spec(f));
    CHECK(serialize_spec(f) == serialize_spec(g));
    for (Cx z : {Cx(0.2, 0.3), Cx(-0.4, 0.1)}) CHECK(std::abs(evaluate(f, z) - evaluate(g, z)) < 1e-14);
  }
}
