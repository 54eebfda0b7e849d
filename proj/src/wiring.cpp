#include "cwire/wiring.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace cwire {

std::string to_string(ViolationKind kind) {
    switch (kind) {
        case ViolationKind::MissingVertexImage: return "missing-vertex-image";
        case ViolationKind::MissingEdgeWalk: return "missing-edge-walk";
        case ViolationKind::EndpointMismatch: return "endpoint-mismatch";
        case ViolationKind::NonAdjacentStep: return "non-adjacent-step";
        case ViolationKind::DegenerateWalk: return "degenerate-walk";
    }
    return "unknown";
}

std::shared_ptr<const Graph> share(Graph g) {
    return std::make_shared<const Graph>(std::move(g));
}

Wiring::Wiring(std::shared_ptr<const Graph> guest,
               std::shared_ptr<const Graph> host,
               std::map<VertexId, VertexId> vertex_map,
               std::map<Edge, std::vector<VertexId>> walks)
    : guest_(std::move(guest)),
      host_(std::move(host)),
      vmap_(std::move(vertex_map)),
      walks_(std::move(walks)) {
    if (!guest_ || !host_) {
        throw WiringStructureError("wiring requires both guest and host graphs");
    }
    // Canonical orientation: the walk of edge {u,v} with u < v runs from
    // vmap(u) to vmap(v) whenever that is determined.
    for (auto& [edge, walk] : walks_) {
        auto u = vmap_.find(edge.a);
        auto v = vmap_.find(edge.b);
        if (u == vmap_.end() || v == vmap_.end() || walk.size() < 2) continue;
        if (walk.front() == v->second && walk.back() == u->second &&
            !(walk.front() == u->second && walk.back() == v->second)) {
            std::reverse(walk.begin(), walk.end());
        }
    }
}

bool Wiring::operator==(const Wiring& other) const {
    return guest_->name() == other.guest_->name() &&
           host_->name() == other.host_->name() &&
           vmap_ == other.vmap_ && walks_ == other.walks_;
}

namespace {

std::string edge_str(const Edge& e) {
    return "(" + std::to_string(e.a) + "," + std::to_string(e.b) + ")";
}

} // namespace

std::vector<WiringViolation> validate(const Wiring& w) {
    const Graph& guest = w.guest();
    const Graph& host = w.host();

    // Structural layer: every id mentioned must exist in its graph.
    for (const auto& [gv, hv] : w.vertex_map()) {
        if (!guest.has_vertex(gv)) {
            throw WiringStructureError("vertex map references unknown guest vertex " +
                                       std::to_string(gv));
        }
        if (!host.has_vertex(hv)) {
            throw WiringStructureError("vertex map sends " + std::to_string(gv) +
                                       " to unknown host vertex " + std::to_string(hv));
        }
    }
    for (const auto& [edge, walk] : w.walks()) {
        if (!guest.has_edge(edge.a, edge.b)) {
            throw WiringStructureError("walk for unknown guest edge " + edge_str(edge));
        }
        for (VertexId hv : walk) {
            if (!host.has_vertex(hv)) {
                throw WiringStructureError("walk of edge " + edge_str(edge) +
                                           " visits unknown host vertex " + std::to_string(hv));
            }
        }
        if (walk.empty()) {
            throw WiringStructureError("walk of edge " + edge_str(edge) +
                                       " has no vertices at all");
        }
    }

    std::vector<WiringViolation> out;
    for (VertexId gv : guest.vertices()) {
        if (!w.vertex_map().count(gv)) {
            out.push_back({ViolationKind::MissingVertexImage,
                           "guest vertex " + std::to_string(gv) + " has no image"});
        }
    }
    for (const Edge& edge : guest.edges()) {
        auto it = w.walks().find(edge);
        if (it == w.walks().end()) {
            out.push_back({ViolationKind::MissingEdgeWalk,
                           "guest edge " + edge_str(edge) + " has no walk"});
            continue;
        }
        auto mu = w.vertex_map().find(edge.a);
        auto mv = w.vertex_map().find(edge.b);
        if (mu == w.vertex_map().end() || mv == w.vertex_map().end()) {
            continue; // already reported above
        }
        const std::vector<VertexId>& walk = it->second;
        if (walk.size() == 1) {
            if (mu->second != mv->second || walk.front() != mu->second) {
                out.push_back({ViolationKind::DegenerateWalk,
                               "edge " + edge_str(edge) +
                               " has a single-vertex walk but its endpoint images differ"});
            }
        } else {
            const bool forward = walk.front() == mu->second && walk.back() == mv->second;
            const bool backward = walk.front() == mv->second && walk.back() == mu->second;
            if (!forward && !backward) {
                out.push_back({ViolationKind::EndpointMismatch,
                               "walk of edge " + edge_str(edge) +
                               " does not join the images of its endpoints"});
            }
        }
        for (std::size_t i = 0; i + 1 < walk.size(); ++i) {
            if (!host.has_edge(walk[i], walk[i + 1])) {
                out.push_back({ViolationKind::NonAdjacentStep,
                               "walk of edge " + edge_str(edge) + " steps from " +
                               std::to_string(walk[i]) + " to " + std::to_string(walk[i + 1]) +
                               " which is not a host edge"});
            }
        }
    }
    return out;
}

bool is_valid(const Wiring& w) {
    return validate(w).empty();
}

namespace {

void ensure_valid(const Wiring& w) {
    auto violations = validate(w);
    if (violations.empty()) return;
    std::string msg = "wiring is not valid:";
    std::size_t shown = 0;
    for (const auto& v : violations) {
        msg += " [" + to_string(v.kind) + "] " + v.detail + ";";
        if (++shown == 4) break;
    }
    if (violations.size() > shown) {
        msg += " (+" + std::to_string(violations.size() - shown) + " more)";
    }
    throw InvalidWiringError(msg);
}

} // namespace

std::uint64_t vertex_multiplicity(const Wiring& w) {
    ensure_valid(w);
    std::unordered_map<VertexId, std::uint64_t> count;
    for (const auto& [gv, hv] : w.vertex_map()) {
        (void)gv;
        ++count[hv];
    }
    std::uint64_t best = 0;
    for (const auto& [hv, c] : count) {
        (void)hv;
        best = std::max(best, c);
    }
    return best;
}

std::uint64_t edge_congestion(const Wiring& w) {
    ensure_valid(w);
    std::map<Edge, std::uint64_t> load;
    for (const auto& [edge, walk] : w.walks()) {
        (void)edge;
        std::set<Edge> used; // a guest edge counts once per host edge
        for (std::size_t i = 0; i + 1 < walk.size(); ++i) {
            used.insert(make_edge(walk[i], walk[i + 1]));
        }
        for (const Edge& he : used) ++load[he];
    }
    std::uint64_t best = 0;
    for (const auto& [he, c] : load) {
        (void)he;
        best = std::max(best, c);
    }
    return best;
}

std::uint64_t wiring_k(const Wiring& w) {
    return std::max<std::uint64_t>({vertex_multiplicity(w), edge_congestion(w), 1});
}

Graph image(const Wiring& w) {
    ensure_valid(w);
    std::set<VertexId> verts;
    std::set<Edge> edges;
    for (const auto& [gv, hv] : w.vertex_map()) {
        (void)gv;
        verts.insert(hv);
    }
    for (const auto& [ge, walk] : w.walks()) {
        (void)ge;
        for (std::size_t i = 0; i < walk.size(); ++i) {
            verts.insert(walk[i]);
            if (i + 1 < walk.size()) edges.insert(make_edge(walk[i], walk[i + 1]));
        }
    }
    return subgraph(w.host(),
                    std::vector<VertexId>(verts.begin(), verts.end()),
                    std::vector<Edge>(edges.begin(), edges.end()),
                    "im_" + w.guest().name() + "_in_" + w.host().name());
}

std::uint64_t volume(const Wiring& w) {
    return image(w).vertex_count();
}

Wiring normalize_to_simple_paths(const Wiring& w) {
    ensure_valid(w);
    std::map<Edge, std::vector<VertexId>> simple;
    for (const auto& [edge, walk] : w.walks()) {
        // Loop erasure: revisiting a vertex truncates back to its first
        // occurrence, so the result uses a subset of the walk's own steps.
        std::vector<VertexId> path;
        std::unordered_map<VertexId, std::size_t> where;
        for (VertexId v : walk) {
            auto it = where.find(v);
            if (it != where.end()) {
                while (path.size() > it->second + 1) {
                    where.erase(path.back());
                    path.pop_back();
                }
            } else {
                where.emplace(v, path.size());
                path.push_back(v);
            }
        }
        simple.emplace(edge, std::move(path));
    }
    return Wiring(w.guest_ptr(), w.host_ptr(), w.vertex_map(), std::move(simple));
}

Wiring identity_wiring(std::shared_ptr<const Graph> g) {
    std::map<VertexId, VertexId> vmap;
    for (VertexId v : g->vertices()) vmap[v] = v;
    std::map<Edge, std::vector<VertexId>> walks;
    for (const Edge& e : g->edges()) walks[e] = {e.a, e.b};
    return Wiring(g, g, std::move(vmap), std::move(walks));
}

} // namespace cwire
