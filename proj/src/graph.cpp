#include "cwire/graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>

namespace cwire {

Graph::Graph(std::string name,
             std::vector<VertexId> vertices,
             std::vector<Edge> edges,
             std::unordered_map<VertexId, GridLabel> labels)
    : name_(std::move(name)),
      vertices_(std::move(vertices)),
      edges_(std::move(edges)),
      labels_(std::move(labels)) {
    std::sort(vertices_.begin(), vertices_.end());
    for (std::size_t i = 1; i < vertices_.size(); ++i) {
        if (vertices_[i] == vertices_[i - 1]) {
            throw GraphError("duplicate vertex id " + std::to_string(vertices_[i]) +
                             " in graph '" + name_ + "'");
        }
    }
    index_.reserve(vertices_.size());
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        index_.emplace(vertices_[i], i);
    }

    for (auto& e : edges_) {
        if (e.a == e.b) {
            throw GraphError("self-loop on vertex " + std::to_string(e.a) +
                             " in graph '" + name_ + "'");
        }
        if (e.a > e.b) std::swap(e.a, e.b);
        if (!index_.count(e.a) || !index_.count(e.b)) {
            throw GraphError("edge (" + std::to_string(e.a) + "," + std::to_string(e.b) +
                             ") references an undeclared vertex in graph '" + name_ + "'");
        }
    }
    std::sort(edges_.begin(), edges_.end());
    for (std::size_t i = 1; i < edges_.size(); ++i) {
        if (edges_[i] == edges_[i - 1]) {
            throw GraphError("duplicate edge (" + std::to_string(edges_[i].a) + "," +
                             std::to_string(edges_[i].b) + ") in graph '" + name_ + "'");
        }
    }

    for (const auto& [v, label] : labels_) {
        (void)label;
        if (!index_.count(v)) {
            throw GraphError("label for undeclared vertex " + std::to_string(v) +
                             " in graph '" + name_ + "'");
        }
    }

    adjacency_.assign(vertices_.size(), {});
    for (const auto& e : edges_) {
        adjacency_[index_.at(e.a)].push_back(e.b);
        adjacency_[index_.at(e.b)].push_back(e.a);
    }
    for (auto& nbrs : adjacency_) {
        std::sort(nbrs.begin(), nbrs.end());
    }
}

bool Graph::has_vertex(VertexId v) const {
    return index_.count(v) != 0;
}

bool Graph::has_edge(VertexId u, VertexId v) const {
    const Edge e = make_edge(u, v);
    return std::binary_search(edges_.begin(), edges_.end(), e);
}

const std::vector<VertexId>& Graph::neighbors(VertexId v) const {
    auto it = index_.find(v);
    if (it == index_.end()) {
        throw GraphError("unknown vertex " + std::to_string(v) + " in graph '" + name_ + "'");
    }
    return adjacency_[it->second];
}

std::optional<GridLabel> Graph::label(VertexId v) const {
    auto it = labels_.find(v);
    if (it == labels_.end()) return std::nullopt;
    return it->second;
}

bool Graph::operator==(const Graph& other) const {
    return name_ == other.name_ && vertices_ == other.vertices_ &&
           edges_ == other.edges_ && labels_ == other.labels_;
}

std::vector<Graph> components(const Graph& g) {
    std::vector<Graph> result;
    std::unordered_map<VertexId, bool> seen;
    seen.reserve(g.vertex_count());

    std::size_t part = 0;
    for (VertexId start : g.vertices()) {
        if (seen[start]) continue;
        std::vector<VertexId> verts;
        std::vector<VertexId> stack{start};
        seen[start] = true;
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            verts.push_back(v);
            for (VertexId w : g.neighbors(v)) {
                if (!seen[w]) {
                    seen[w] = true;
                    stack.push_back(w);
                }
            }
        }
        result.push_back(induced_subgraph(
            g, verts, g.name() + "#" + std::to_string(part++)));
    }
    return result;
}

bool is_connected(const Graph& g) {
    if (g.vertex_count() <= 1) return true;
    std::unordered_map<VertexId, bool> seen;
    std::vector<VertexId> stack{g.vertices().front()};
    seen[stack.front()] = true;
    std::size_t reached = 0;
    while (!stack.empty()) {
        VertexId v = stack.back();
        stack.pop_back();
        ++reached;
        for (VertexId w : g.neighbors(v)) {
            if (!seen[w]) {
                seen[w] = true;
                stack.push_back(w);
            }
        }
    }
    return reached == g.vertex_count();
}

namespace {

// Union-find over vertex positions.
struct DisjointSet {
    std::vector<std::size_t> parent;
    explicit DisjointSet(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), std::size_t{0});
    }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    bool unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[a] = b;
        return true;
    }
};

} // namespace

bool is_acyclic(const Graph& g) {
    std::unordered_map<VertexId, std::size_t> pos;
    pos.reserve(g.vertex_count());
    for (std::size_t i = 0; i < g.vertex_count(); ++i) pos.emplace(g.vertices()[i], i);
    DisjointSet ds(g.vertex_count());
    for (const Edge& e : g.edges()) {
        if (!ds.unite(pos.at(e.a), pos.at(e.b))) return false;
    }
    return true;
}

std::optional<std::uint64_t> girth_volume(const Graph& g) {
    // Shortest cycle through edge (a,b) = 1 + shortest a-b path avoiding that
    // edge; minimizing over edges is exact for unweighted graphs.
    constexpr std::uint64_t kInf = std::numeric_limits<std::uint64_t>::max();
    std::unordered_map<VertexId, std::size_t> pos;
    pos.reserve(g.vertex_count());
    for (std::size_t i = 0; i < g.vertex_count(); ++i) pos.emplace(g.vertices()[i], i);

    std::uint64_t best = kInf;
    std::vector<std::uint64_t> dist(g.vertex_count());
    for (const Edge& skip : g.edges()) {
        std::fill(dist.begin(), dist.end(), kInf);
        const std::size_t src = pos.at(skip.a);
        const std::size_t dst = pos.at(skip.b);
        dist[src] = 0;
        std::deque<std::size_t> queue{src};
        while (!queue.empty()) {
            std::size_t v = queue.front();
            queue.pop_front();
            if (v == dst) break;
            if (dist[v] + 1 >= best) continue; // cannot improve
            for (VertexId wid : g.neighbors(g.vertices()[v])) {
                const VertexId vid = g.vertices()[v];
                if ((vid == skip.a && wid == skip.b) || (vid == skip.b && wid == skip.a)) {
                    continue;
                }
                std::size_t w = pos.at(wid);
                if (dist[w] == kInf) {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
            }
        }
        if (dist[dst] != kInf) {
            best = std::min(best, dist[dst] + 1);
        }
    }
    if (best == kInf) return std::nullopt;
    return best;
}

Graph subgraph(const Graph& parent,
               const std::vector<VertexId>& vertices,
               const std::vector<Edge>& edges,
               std::string name) {
    std::unordered_map<VertexId, GridLabel> labels;
    for (VertexId v : vertices) {
        if (!parent.has_vertex(v)) {
            throw GraphError("subgraph vertex " + std::to_string(v) +
                             " not present in parent '" + parent.name() + "'");
        }
        if (auto l = parent.label(v)) labels.emplace(v, *l);
    }
    for (const Edge& e : edges) {
        if (!parent.has_edge(e.a, e.b)) {
            throw GraphError("subgraph edge (" + std::to_string(e.a) + "," +
                             std::to_string(e.b) + ") not present in parent '" +
                             parent.name() + "'");
        }
    }
    return Graph(std::move(name), vertices, edges, std::move(labels));
}

Graph induced_subgraph(const Graph& parent,
                       const std::vector<VertexId>& vertices,
                       std::string name) {
    std::unordered_map<VertexId, bool> keep;
    keep.reserve(vertices.size());
    for (VertexId v : vertices) keep[v] = true;
    std::vector<Edge> edges;
    for (const Edge& e : parent.edges()) {
        if (keep.count(e.a) && keep.count(e.b)) edges.push_back(e);
    }
    return subgraph(parent, vertices, edges, std::move(name));
}

Graph disjoint_union(const Graph& a, const Graph& b, std::string name) {
    std::vector<VertexId> verts = a.vertices();
    for (VertexId v : b.vertices()) {
        if (a.has_vertex(v)) {
            throw GraphError("disjoint_union: vertex " + std::to_string(v) +
                             " appears in both graphs");
        }
        verts.push_back(v);
    }
    std::vector<Edge> edges = a.edges();
    edges.insert(edges.end(), b.edges().begin(), b.edges().end());
    std::unordered_map<VertexId, GridLabel> labels = a.labels();
    for (const auto& [v, l] : b.labels()) labels.emplace(v, l);
    return Graph(std::move(name), std::move(verts), std::move(edges), std::move(labels));
}

} // namespace cwire
