#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "cwire/wiring.hpp"

namespace cwire {

/// Limits and reproducibility controls for the exact search.
struct SearchBudget {
    std::uint64_t k = 1;
    std::optional<std::uint64_t> volume_cap; // certify "no k-wiring of volume <= cap"
    std::optional<std::uint64_t> node_limit; // abort after this many search nodes
    /// false would permit order-dependent aggregation; this implementation
    /// replays identically either way, so the flag only documents intent.
    bool deterministic = true;
};

enum class SearchStatus {
    Exact,              // min_volume and witness are the certified optimum
    InfeasibleWithinCap,// no coarse k-wiring with volume <= cap_used exists
    BudgetExhausted,    // node limit hit before a certified answer
};

struct SearchResult {
    SearchStatus status = SearchStatus::BudgetExhausted;
    /// Present exactly when status == Exact. An InfeasibleWithinCap result
    /// with cap_used == |V host| certifies that no coarse k-wiring exists at
    /// all (minimum = +infinity).
    std::optional<std::uint64_t> min_volume;
    std::optional<Wiring> witness;
    std::uint64_t explored = 0;
    std::uint64_t cap_used = 0;
    /// Volumes strictly below this are certified impossible.
    std::uint64_t certified_lower_bound = 1;

    bool proves_global_infeasibility(const Graph& host) const {
        return status == SearchStatus::InfeasibleWithinCap &&
               cap_used >= host.vertex_count();
    }
};

/// Exact mode is enumeration-heavy; these bounds trigger an explicit refusal
/// rather than a silent approximation. The multiplicity lower-bound
/// certificate (cap below ceil(|V guest| / k)) needs no enumeration and is
/// answered at any size.
struct SearchLimits {
    std::size_t max_guest_vertices = 12;
    std::size_t max_host_vertices = 70;
};

/// Minimal volume of a coarse k-wiring of gamma into host, by exhausting
/// candidate image sets in increasing size: unions of pairwise non-adjacent
/// connected host subsets (at most one per guest component), each decided by
/// backtracking over vertex assignments and congestion-constrained simple-
/// path routing. Deterministic; `jobs > 1` parallelizes candidate testing
/// with canonical-order aggregation (ignored when node_limit is set).
SearchResult min_wiring_volume(const Graph& gamma, const Graph& host,
                               const SearchBudget& budget,
                               const SearchLimits& limits = {},
                               unsigned jobs = 1);

struct ProfilePoint {
    /// nullopt = +infinity (some candidate admits no coarse k-wiring).
    std::optional<std::uint64_t> volume;
    std::size_t witness_index = 0;
    std::vector<SearchResult> results;
};

/// max over candidates of min_wiring_volume(candidate, host, k), with the
/// attaining guest. Every candidate must have at most size_bound vertices;
/// any refused search refuses the whole profile.
ProfilePoint wiring_profile_point(std::uint64_t k, std::uint64_t size_bound,
                                  const std::vector<Graph>& candidates,
                                  const Graph& host,
                                  const SearchLimits& limits = {},
                                  unsigned jobs = 1);

/// All subgraphs of g (vertex subset plus any subset of the induced edges)
/// with at most max_vertices vertices, deduplicated by identity. Emission
/// order is deterministic; emit returning false stops early. Returns the
/// number emitted; throws SearchRefusedError when guard_limit candidate
/// combinations are exceeded.
std::uint64_t enumerate_subgraphs(const Graph& g, std::size_t max_vertices,
                                  bool connected_only,
                                  const std::function<bool(Graph&&)>& emit,
                                  std::uint64_t guard_limit = 10'000'000);

std::vector<Graph> all_subgraphs(const Graph& g, std::size_t max_vertices,
                                 bool connected_only,
                                 std::uint64_t guard_limit = 1'000'000);

/// Number of candidate image sets the search would test at one size: host
/// vertex subsets of the given size whose induced subgraph has at most
/// max_parts connected components, each counted exactly once.
std::uint64_t count_image_sets(const Graph& host, std::size_t size,
                               std::size_t max_parts);

} // namespace cwire
