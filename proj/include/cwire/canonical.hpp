#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cwire/families.hpp"
#include "cwire/wiring.hpp"

namespace cwire {

/// Throws CanonicalError unless every vertex of gamma carries a label that
/// names a valid family-n grid vertex and every edge is a legal family-n
/// edge (vertical, or horizontal on a rung row).
void check_subgraph_of_x(const Graph& gamma, std::uint64_t n, const FamilyConfig& cfg);

/// 1-wiring of gamma (a subgraph of the n-th guest member) into the n-th
/// host member, exploiting that the host is a subdivision of the guest:
/// (i, q*hx+s) -> (i, q*hy+s); the vertical edge closing a segment maps to
/// the host path filling the subdivision gap.
Wiring subdivision_wiring(const Graph& gamma, std::uint64_t n, const FamilyConfig& cfg,
                          std::uint64_t cap = kDefaultMaterializationCap);

/// Column-collapse f(n)-wiring: (i,j) -> (0,j); horizontal edges map to a
/// single vertex, vertical edges to one host edge. Requires f(n) >= 2.
Wiring collapse_wiring(const Graph& gamma, std::uint64_t n, const FamilyConfig& cfg,
                       std::uint64_t cap = kDefaultMaterializationCap);

/// Volume of the collapse wiring on the full n-th guest member,
/// formula-level: hx(n)*f(n)+1.
BigInt collapse_volume_on_full_x(std::uint64_t n, const FamilyConfig& cfg);

/// Volume-preserving 1-wiring for small pieces living above the budget
/// index: each connected component is re-embedded around its anchor rung
/// (or inside its open segment) with signed row offsets, so every vertex
/// maps injectively and every edge to a single host edge.
/// Precondition (checked): 2*|V gamma| < hx(n_prime).
Wiring compact_reembedding_wiring(const Graph& gamma, std::uint64_t n_prime,
                                  const FamilyConfig& cfg,
                                  std::uint64_t cap = kDefaultMaterializationCap);

struct CompositeResult {
    Wiring wiring;
    std::uint64_t budget_n = 0;
    /// (family index, method) per piece, ordered by family index.
    std::vector<std::pair<std::uint64_t, std::string>> piece_methods;
};

/// Dispatcher over the pieces of a labeled guest living in several family
/// members: pieces below the budget index get the subdivision 1-wiring,
/// the piece at the budget index gets the collapse wiring, pieces above it
/// get the compact re-embedding. Guarantees, on supported schedules,
/// wiring_k <= f(budget) and volume <= 2*vol_x(budget).
CompositeResult composite_wiring(const Graph& gamma, const FamilyConfig& cfg,
                                 std::uint64_t cap = kDefaultMaterializationCap,
                                 std::uint64_t horizon = 64);

} // namespace cwire
