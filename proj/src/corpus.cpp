#include "rmspace/corpus.hpp"

#include <random>
#include <stdexcept>

namespace rmspace {

std::vector<FunctionSpec> polynomial_corpus(int count, std::uint64_t seed, int max_degree) {
  if (count < 0 || max_degree < 0) throw std::invalid_argument("polynomial_corpus: bad parameters");
  std::mt19937_64 rng(seed);
  const auto u01 = [&rng] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
  std::vector<FunctionSpec> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int s = 0; s < count; ++s) {
    const auto degree = static_cast<Eigen::Index>(rng() % static_cast<std::uint64_t>(max_degree + 1));
    Eigen::VectorXcd coeffs(degree + 1);
    for (Eigen::Index k = 0; k <= degree; ++k) {
      const double re = u01();
      const double im = u01();
      coeffs[k] = Complex(re, im) / static_cast<double>(k + 1);
    }
    out.push_back(FunctionSpec::polynomial(std::move(coeffs)));
  }
  return out;
}

}  // namespace rmspace
