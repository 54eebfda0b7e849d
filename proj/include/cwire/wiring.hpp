#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "cwire/graph.hpp"

namespace cwire {

enum class ViolationKind {
    MissingVertexImage, // guest vertex without a vmap entry
    MissingEdgeWalk,    // guest edge without a walk
    EndpointMismatch,   // walk endpoints disagree with the vertex images
    NonAdjacentStep,    // consecutive walk vertices not adjacent in host
    DegenerateWalk,     // single-vertex walk while endpoint images differ
};

struct WiringViolation {
    ViolationKind kind;
    std::string detail;
};

std::string to_string(ViolationKind kind);

/// Map of a guest graph into a host graph: vertices to vertices, each guest
/// edge to a host walk joining the endpoint images. A walk is a host vertex
/// sequence; a single-vertex walk is legal only when both endpoint images
/// coincide. Immutable once built.
class Wiring {
public:
    Wiring(std::shared_ptr<const Graph> guest,
           std::shared_ptr<const Graph> host,
           std::map<VertexId, VertexId> vertex_map,
           std::map<Edge, std::vector<VertexId>> walks);

    const Graph& guest() const noexcept { return *guest_; }
    const Graph& host() const noexcept { return *host_; }
    std::shared_ptr<const Graph> guest_ptr() const noexcept { return guest_; }
    std::shared_ptr<const Graph> host_ptr() const noexcept { return host_; }

    const std::map<VertexId, VertexId>& vertex_map() const noexcept { return vmap_; }
    const std::map<Edge, std::vector<VertexId>>& walks() const noexcept { return walks_; }

    bool operator==(const Wiring& other) const;

private:
    std::shared_ptr<const Graph> guest_;
    std::shared_ptr<const Graph> host_;
    std::map<VertexId, VertexId> vmap_;
    std::map<Edge, std::vector<VertexId>> walks_;
};

/// Convenience: wrap a graph for wiring construction.
std::shared_ptr<const Graph> share(Graph g);

/// Empty list means the wiring is valid. Unknown vertex/edge ids throw
/// WiringStructureError; contract violations come back as data.
std::vector<WiringViolation> validate(const Wiring& w);

bool is_valid(const Wiring& w);

/// Max over host vertices of the vertex-map preimage size.
std::uint64_t vertex_multiplicity(const Wiring& w);

/// Max over host edges of the number of distinct guest edges whose walk
/// traverses it (a guest edge counts once per host edge).
std::uint64_t edge_congestion(const Wiring& w);

/// Least k such that w is a coarse k-wiring:
/// max(vertex_multiplicity, edge_congestion, 1).
std::uint64_t wiring_k(const Wiring& w);

/// Host subgraph of all walk vertices/edges plus all vertex-map targets.
Graph image(const Wiring& w);

/// Vertex count of image(w).
std::uint64_t volume(const Wiring& w);

/// Loop-erase every walk to a simple path over a subset of its own edges.
/// Never increases multiplicity, congestion, or volume; idempotent.
Wiring normalize_to_simple_paths(const Wiring& w);

/// Identity wiring of g into itself (each edge to its own 1-edge walk).
Wiring identity_wiring(std::shared_ptr<const Graph> g);

} // namespace cwire
