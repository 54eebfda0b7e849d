#pragma once

#include <cstdint>
#include <string>

#include "cwire/graph.hpp"

namespace cwire {

/// Generator shape shared by the X and Y families: `columns` vertical paths
/// of length spacing*segments, with horizontal rung edges at every row
/// divisible by `spacing`.
struct LadderSpec {
    std::uint64_t columns = 1;
    std::uint64_t spacing = 1;
    std::uint64_t segments = 1;
};

/// Guard against accidentally instantiating tower-schedule graphs.
inline constexpr std::uint64_t kDefaultMaterializationCap = 10'000'000;

/// Deterministic id for a generated grid vertex. Packs (family, col, row)
/// into 16+16+32 bits; ranges checked.
VertexId grid_vertex_id(std::uint64_t family, std::uint64_t col, std::uint64_t row);

/// Labeled ladder graph per LadderSpec. Vertex count c*(H*s+1); vertical
/// edges (i,j)-(i,j+1) for 0 <= j < H*s; horizontal edges (i,j)-(i+1,j)
/// exactly when j % H == 0. Throws GraphError("instance too large ...")
/// when the vertex count exceeds `cap`.
Graph build_ladder(const LadderSpec& spec,
                   std::uint32_t family,
                   std::uint64_t cap = kDefaultMaterializationCap,
                   std::string name = "");

} // namespace cwire
