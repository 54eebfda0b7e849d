#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "cwire/bigint.hpp"

namespace cwire {

/// Finite samples of two functions plus a candidate constant, for checking
/// the asymptotic-order relation f(n) <= C*g(C*n)+C pointwise.
struct RelationSample {
    std::vector<std::pair<std::uint64_t, BigInt>> f_points; // n strictly increasing
    std::vector<std::pair<std::uint64_t, BigInt>> g_points;
    std::uint64_t C = 1;
};

/// True iff f(n) <= C*g(C*n)+C at every sampled n of f. g must be sampled at
/// exactly C*n (interpolation forbidden); a missing point, non-increasing
/// indices, or negative values throw RelationError.
bool check_precedes(const RelationSample& sample);

} // namespace cwire
