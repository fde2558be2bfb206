#ifndef RMSPACE_CORPUS_HPP
#define RMSPACE_CORPUS_HPP

#include <cstdint>
#include <vector>

#include "rmspace/function_spec.hpp"

namespace rmspace {

constexpr std::uint64_t kDefaultSeed = 0x5EED;

/// Seeded random polynomials of degree <= 60 with coefficient k drawn
/// uniformly from the unit square and scaled by 1/(k+1). mt19937_64 with a
/// fixed draw order keeps the corpus bit-reproducible everywhere.
std::vector<FunctionSpec> polynomial_corpus(int count, std::uint64_t seed = kDefaultSeed,
                                            int max_degree = 60);

}  // namespace rmspace

#endif
