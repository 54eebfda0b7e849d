#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "cwire/errors.hpp"

namespace cwire {

using VertexId = std::uint64_t;

/// Grid coordinates of a generated ladder vertex: which family the component
/// belongs to, its column, and its row.
struct GridLabel {
    std::uint32_t family = 0;
    std::uint32_t col = 0;
    std::uint64_t row = 0;

    friend bool operator==(const GridLabel&, const GridLabel&) = default;
};

/// Unordered vertex pair stored canonically with a < b.
struct Edge {
    VertexId a = 0;
    VertexId b = 0;

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline Edge make_edge(VertexId u, VertexId v) {
    return u < v ? Edge{u, v} : Edge{v, u};
}

/// Finite simple undirected graph, immutable after construction.
/// Vertices keep their ids when subgraphs are taken, so wirings and search
/// results can refer to parent coordinates without translation.
class Graph {
public:
    Graph() = default;

    /// Throws GraphError on duplicate vertex ids, self-loops, duplicate
    /// edges, dangling endpoints, or labels for undeclared vertices.
    Graph(std::string name,
          std::vector<VertexId> vertices,
          std::vector<Edge> edges,
          std::unordered_map<VertexId, GridLabel> labels = {});

    const std::string& name() const noexcept { return name_; }
    std::size_t vertex_count() const noexcept { return vertices_.size(); }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    bool empty() const noexcept { return vertices_.empty(); }

    /// Sorted ascending.
    const std::vector<VertexId>& vertices() const noexcept { return vertices_; }
    /// Canonical (a < b), sorted ascending.
    const std::vector<Edge>& edges() const noexcept { return edges_; }

    bool has_vertex(VertexId v) const;
    bool has_edge(VertexId u, VertexId v) const;

    /// Sorted neighbor list; throws GraphError for unknown ids.
    const std::vector<VertexId>& neighbors(VertexId v) const;
    std::size_t degree(VertexId v) const { return neighbors(v).size(); }

    std::optional<GridLabel> label(VertexId v) const;
    const std::unordered_map<VertexId, GridLabel>& labels() const noexcept { return labels_; }

    bool operator==(const Graph& other) const;

private:
    std::string name_;
    std::vector<VertexId> vertices_;
    std::vector<Edge> edges_;
    std::unordered_map<VertexId, GridLabel> labels_;
    std::unordered_map<VertexId, std::size_t> index_;
    std::vector<std::vector<VertexId>> adjacency_;
};

/// Connected components as subgraphs, ordered by smallest vertex id.
std::vector<Graph> components(const Graph& g);

bool is_connected(const Graph& g);

/// True iff g contains no cycle.
bool is_acyclic(const Graph& g);

/// Vertex count of a minimum-length cycle; nullopt when acyclic.
/// BFS from each edge, exact on unweighted graphs.
std::optional<std::uint64_t> girth_volume(const Graph& g);

/// Subgraph with an explicit edge subset. Edges must exist in the parent and
/// join kept vertices; labels are inherited.
Graph subgraph(const Graph& parent,
               const std::vector<VertexId>& vertices,
               const std::vector<Edge>& edges,
               std::string name);

/// Subgraph keeping every parent edge between kept vertices.
Graph induced_subgraph(const Graph& parent,
                       const std::vector<VertexId>& vertices,
                       std::string name);

/// Disjoint union; vertex sets must not intersect.
Graph disjoint_union(const Graph& a, const Graph& b, std::string name);

} // namespace cwire
