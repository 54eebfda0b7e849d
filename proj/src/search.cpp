#include "cwire/search.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>
#include <thread>
#include <unordered_map>

namespace cwire {

namespace {

constexpr int kUnreached = std::numeric_limits<int>::max();

struct ExhaustedSignal {};

// Host graph re-indexed to dense local ids.
struct LocalHost {
    std::vector<VertexId> ids; // sorted; local id = position
    std::vector<std::vector<int>> adj;
    int n = 0;

    explicit LocalHost(const Graph& g) {
        ids = g.vertices();
        n = static_cast<int>(ids.size());
        std::unordered_map<VertexId, int> index;
        index.reserve(ids.size());
        for (int i = 0; i < n; ++i) index.emplace(ids[i], i);
        adj.assign(n, {});
        for (const Edge& e : g.edges()) {
            adj[index.at(e.a)].push_back(index.at(e.b));
            adj[index.at(e.b)].push_back(index.at(e.a));
        }
        for (auto& a : adj) std::sort(a.begin(), a.end());
    }
};

// Guest graph prepared for the decision procedure: a fixed assignment order
// (per-component BFS from the smallest id) and, per order position, the
// guest edges whose other endpoint is assigned earlier.
struct GuestPrep {
    std::vector<VertexId> ids;
    int n = 0;
    int component_count = 0;
    std::vector<std::pair<int, int>> edges; // local canonical pairs, sorted
    std::vector<int> order;                 // local guest ids in assignment order
    std::vector<std::vector<std::pair<int, int>>> earlier; // per position: (other local, edge idx)

    explicit GuestPrep(const Graph& g) {
        ids = g.vertices();
        n = static_cast<int>(ids.size());
        std::unordered_map<VertexId, int> index;
        index.reserve(ids.size());
        for (int i = 0; i < n; ++i) index.emplace(ids[i], i);

        std::vector<std::vector<int>> adj(n);
        for (const Edge& e : g.edges()) {
            const int a = index.at(e.a), b = index.at(e.b);
            edges.emplace_back(std::min(a, b), std::max(a, b));
            adj[a].push_back(b);
            adj[b].push_back(a);
        }
        std::sort(edges.begin(), edges.end());
        for (auto& a : adj) std::sort(a.begin(), a.end());

        std::vector<char> seen(n, 0);
        for (int start = 0; start < n; ++start) {
            if (seen[start]) continue;
            ++component_count;
            std::deque<int> queue{start};
            seen[start] = 1;
            while (!queue.empty()) {
                const int v = queue.front();
                queue.pop_front();
                order.push_back(v);
                for (int w : adj[v]) {
                    if (!seen[w]) {
                        seen[w] = 1;
                        queue.push_back(w);
                    }
                }
            }
        }

        std::vector<int> pos(n);
        for (int i = 0; i < n; ++i) pos[order[i]] = i;
        earlier.assign(n, {});
        for (std::size_t ei = 0; ei < edges.size(); ++ei) {
            const auto [a, b] = edges[ei];
            const int late = std::max(pos[a], pos[b]);
            const int other = pos[a] < pos[b] ? a : b;
            earlier[late].emplace_back(other, static_cast<int>(ei));
        }
    }
};

// Candidate image set, with induced adjacency, parts, and all-pairs
// distances (kUnreached across parts).
struct ImageSet {
    std::vector<int> verts; // local host ids, sorted
    int n = 0;
    std::vector<std::vector<int>> adj;  // position-based
    std::vector<std::vector<int>> eidx; // position x position -> edge index or -1
    int edge_count = 0;
    std::vector<std::vector<int>> dist;

    ImageSet(const LocalHost& host, const std::vector<int>& t) : verts(t) {
        n = static_cast<int>(verts.size());
        std::unordered_map<int, int> position;
        position.reserve(verts.size());
        for (int i = 0; i < n; ++i) position.emplace(verts[i], i);
        adj.assign(n, {});
        eidx.assign(n, std::vector<int>(n, -1));
        for (int i = 0; i < n; ++i) {
            for (int hb : host.adj[verts[i]]) {
                auto it = position.find(hb);
                if (it == position.end() || it->second < i) continue;
                const int j = it->second;
                adj[i].push_back(j);
                adj[j].push_back(i);
                eidx[i][j] = eidx[j][i] = edge_count++;
            }
        }
        for (auto& a : adj) std::sort(a.begin(), a.end());
        dist.assign(n, std::vector<int>(n, kUnreached));
        for (int s = 0; s < n; ++s) {
            dist[s][s] = 0;
            std::deque<int> queue{s};
            while (!queue.empty()) {
                const int v = queue.front();
                queue.pop_front();
                for (int w : adj[v]) {
                    if (dist[s][w] == kUnreached) {
                        dist[s][w] = dist[s][v] + 1;
                        queue.push_back(w);
                    }
                }
            }
        }
    }
};

struct DecideOutcome {
    bool feasible = false;
    std::vector<int> assign;              // guest local -> image position
    std::vector<std::vector<int>> walks;  // per guest edge index: image positions
    std::uint64_t nodes = 0;
};

// Backtracking decision: does a coarse k-wiring of the guest into the image
// set exist? Vertex assignment first (multiplicity <= k, same-part and
// walk-budget pruning), then congestion-constrained simple-path routing.
class Decider {
public:
    Decider(const GuestPrep& guest, const ImageSet& image, std::uint64_t k,
            std::uint64_t node_cap)
        : g_(guest), t_(image), k_(k), node_cap_(node_cap) {}

    DecideOutcome run() {
        out_.assign.assign(g_.n, -1);
        out_.walks.assign(g_.edges.size(), {});
        occ_.assign(t_.n, 0);
        load_.assign(t_.edge_count, 0);
        distsum_ = 0;
        if (static_cast<std::uint64_t>(t_.n) * k_ >= static_cast<std::uint64_t>(g_.n)) {
            out_.feasible = assign_rec(0);
        }
        return std::move(out_);
    }

private:
    void count_node() {
        if (++out_.nodes > node_cap_) throw ExhaustedSignal{};
    }

    bool assign_rec(int i) {
        if (i == g_.n) return route(0);
        const int u = g_.order[i];
        const std::uint64_t walk_budget = k_ * static_cast<std::uint64_t>(t_.edge_count);
        for (int h = 0; h < t_.n; ++h) {
            if (occ_[h] >= static_cast<int>(k_)) continue;
            std::uint64_t add = 0;
            bool reachable = true;
            for (const auto& [other, edge] : g_.earlier[i]) {
                (void)edge;
                const int d = t_.dist[out_.assign[other]][h];
                if (d == kUnreached) {
                    reachable = false;
                    break;
                }
                add += static_cast<std::uint64_t>(d);
            }
            // Every guest edge routes as a simple path, so total walk length
            // is at least the sum of endpoint distances and at most k per
            // image edge.
            if (!reachable || distsum_ + add > walk_budget) continue;
            count_node();
            out_.assign[u] = h;
            ++occ_[h];
            distsum_ += add;
            if (assign_rec(i + 1)) return true;
            distsum_ -= add;
            --occ_[h];
            out_.assign[u] = -1;
        }
        return false;
    }

    bool route(std::size_t ei) {
        if (ei == g_.edges.size()) return true;
        const auto [ua, ub] = g_.edges[ei];
        const int a = out_.assign[ua];
        const int b = out_.assign[ub];
        if (a == b) {
            out_.walks[ei] = {a};
            return route(ei + 1);
        }
        // Simplicity is a per-walk constraint: each edge enumerates its own
        // path with its own visited marks, sharing only the load counters.
        std::vector<int> path{a};
        std::vector<char> onpath(t_.n, 0);
        onpath[a] = 1;
        return extend_path(ei, path, onpath, b);
    }

    bool extend_path(std::size_t ei, std::vector<int>& path, std::vector<char>& onpath,
                     int target) {
        const int x = path.back();
        for (int y : t_.adj[x]) {
            const int e = t_.eidx[x][y];
            if (load_[e] >= static_cast<int>(k_) || onpath[y]) continue;
            count_node();
            if (y == target) {
                path.push_back(y);
                for (std::size_t i = 0; i + 1 < path.size(); ++i) {
                    ++load_[t_.eidx[path[i]][path[i + 1]]];
                }
                out_.walks[ei] = path;
                const bool ok = route(ei + 1);
                if (ok) return true;
                for (std::size_t i = 0; i + 1 < path.size(); ++i) {
                    --load_[t_.eidx[path[i]][path[i + 1]]];
                }
                path.pop_back();
                continue;
            }
            path.push_back(y);
            onpath[y] = 1;
            if (extend_path(ei, path, onpath, target)) return true;
            onpath[y] = 0;
            path.pop_back();
        }
        return false;
    }

    const GuestPrep& g_;
    const ImageSet& t_;
    const std::uint64_t k_;
    const std::uint64_t node_cap_;
    DecideOutcome out_;
    std::vector<int> occ_;
    std::vector<int> load_;
    std::uint64_t distsum_ = 0;
};

// Enumerates candidate image sets of a fixed size: unions of at most
// max_parts pairwise non-adjacent connected subsets, each part identified by
// its minimum vertex, parts in increasing root order. This visits every
// vertex set whose induced subgraph has <= max_parts components exactly once.
class ImageSetEnumerator {
public:
    ImageSetEnumerator(const LocalHost& host, int max_parts,
                       std::function<bool(const std::vector<int>&)> cb)
        : host_(host), max_parts_(max_parts), cb_(std::move(cb)) {}

    bool run(int size) {
        current_.clear();
        blocked_.assign(host_.n, 0);
        closure_.assign(host_.n, 0);
        return rec_parts(0, size, max_parts_);
    }

private:
    // Place the next part, whose root (minimum vertex) is >= min_root. The
    // part under construction is level-local: committing a part suspends it
    // while deeper parts are enumerated.
    bool rec_parts(int min_root, int remaining, int parts_left) {
        if (remaining == 0) return cb_(current_);
        if (parts_left == 0) return true;
        for (int root = min_root; root < host_.n; ++root) {
            if (blocked_[root]) continue;
            const int s_min = parts_left == 1 ? remaining : 1;
            for (int s = s_min; s <= remaining; ++s) {
                std::vector<int> part{root};
                closure_[root] = 1;
                std::vector<int> ext;
                for (int u : host_.adj[root]) {
                    if (u > root && !blocked_[u]) {
                        ext.push_back(u);
                        closure_[u] = 1;
                    }
                }
                const bool keep_going =
                    extend_part(part, root, s, remaining, parts_left, ext);
                closure_[root] = 0;
                for (int u : host_.adj[root]) {
                    if (u > root && !blocked_[u]) closure_[u] = 0;
                }
                if (!keep_going) return false;
            }
        }
        return true;
    }

    // ESU extension: each connected subset with the given root enumerated
    // exactly once. closure_ marks N[part] plus current extension members;
    // every mark set on this path lies in N[committed part], so deeper
    // parts see it again through blocked_.
    bool extend_part(std::vector<int>& part, int root, int s, int remaining,
                     int parts_left, std::vector<int> ext) {
        if (static_cast<int>(part.size()) == s) {
            return commit_part(part, root, s, remaining, parts_left);
        }
        while (!ext.empty()) {
            const int w = ext.front();
            ext.erase(ext.begin());
            std::vector<int> grown = ext;
            std::vector<int> marked;
            for (int u : host_.adj[w]) {
                if (u > root && !blocked_[u] && !closure_[u]) {
                    grown.push_back(u);
                    closure_[u] = 1;
                    marked.push_back(u);
                }
            }
            part.push_back(w);
            const bool keep_going =
                extend_part(part, root, s, remaining, parts_left, std::move(grown));
            part.pop_back();
            for (int u : marked) closure_[u] = 0;
            if (!keep_going) return false;
        }
        return true;
    }

    bool commit_part(const std::vector<int>& part, int root, int s, int remaining,
                     int parts_left) {
        const std::size_t base = current_.size();
        current_.insert(current_.end(), part.begin(), part.end());
        std::vector<int> newly_blocked;
        for (int v : part) {
            if (!blocked_[v]) {
                blocked_[v] = 1;
                newly_blocked.push_back(v);
            }
            for (int u : host_.adj[v]) {
                if (!blocked_[u]) { // adjacency would merge parts
                    blocked_[u] = 1;
                    newly_blocked.push_back(u);
                }
            }
        }
        const bool keep_going = rec_parts(root + 1, remaining - s, parts_left - 1);
        for (int v : newly_blocked) blocked_[v] = 0;
        current_.resize(base);
        return keep_going;
    }

    const LocalHost& host_;
    const int max_parts_;
    std::function<bool(const std::vector<int>&)> cb_;
    std::vector<int> current_;
    std::vector<char> blocked_;
    std::vector<char> closure_;
};

Wiring build_witness(const Graph& gamma, const Graph& host, const LocalHost& local_host,
                     const GuestPrep& guest, const ImageSet& image,
                     const DecideOutcome& outcome) {
    std::map<VertexId, VertexId> vmap;
    for (int i = 0; i < guest.n; ++i) {
        vmap[guest.ids[i]] = local_host.ids[image.verts[outcome.assign[i]]];
    }
    std::map<Edge, std::vector<VertexId>> walks;
    for (std::size_t ei = 0; ei < guest.edges.size(); ++ei) {
        const auto [a, b] = guest.edges[ei];
        std::vector<VertexId> walk;
        walk.reserve(outcome.walks[ei].size());
        for (int pos : outcome.walks[ei]) {
            walk.push_back(local_host.ids[image.verts[pos]]);
        }
        walks[make_edge(guest.ids[a], guest.ids[b])] = std::move(walk);
    }
    return Wiring(share(gamma), share(host), std::move(vmap), std::move(walks));
}

} // namespace

SearchResult min_wiring_volume(const Graph& gamma, const Graph& host,
                               const SearchBudget& budget, const SearchLimits& limits,
                               unsigned jobs) {
    if (budget.k < 1) throw SearchRefusedError("search needs k >= 1");
    if (budget.volume_cap && *budget.volume_cap < 1) {
        throw SearchRefusedError("volume cap must be positive");
    }
    if (budget.node_limit && *budget.node_limit < 1) {
        throw SearchRefusedError("node limit must be positive");
    }
    if (budget.node_limit) jobs = 1; // node accounting is sequential

    SearchResult result;
    const std::uint64_t guest_n = gamma.vertex_count();
    const std::uint64_t host_n = host.vertex_count();
    std::uint64_t cap = std::min<std::uint64_t>(
        budget.volume_cap.value_or(host_n), host_n);
    result.cap_used = cap;

    if (guest_n == 0) {
        result.status = SearchStatus::Exact;
        result.min_volume = 0;
        result.certified_lower_bound = 0;
        result.witness = Wiring(share(gamma), share(host), {}, {});
        return result;
    }

    // Multiplicity floor: every host vertex carries at most k guest
    // vertices, so any wiring has volume >= ceil(|V guest| / k). Certifying
    // infeasibility below the floor needs no enumeration and no size limit.
    const std::uint64_t floor = (guest_n + budget.k - 1) / budget.k;
    if (floor > cap) {
        result.status = SearchStatus::InfeasibleWithinCap;
        result.certified_lower_bound = cap + 1;
        return result;
    }

    if (guest_n > limits.max_guest_vertices) {
        throw SearchRefusedError("guest has " + std::to_string(guest_n) +
                                 " vertices; exact search is limited to " +
                                 std::to_string(limits.max_guest_vertices));
    }
    if (host_n > limits.max_host_vertices) {
        throw SearchRefusedError("host has " + std::to_string(host_n) +
                                 " vertices; exact search is limited to " +
                                 std::to_string(limits.max_host_vertices));
    }

    const LocalHost local_host(host);
    const GuestPrep guest(gamma);
    const std::uint64_t node_limit =
        budget.node_limit.value_or(std::numeric_limits<std::uint64_t>::max());

    std::optional<Wiring> witness;
    std::uint64_t found_volume = 0;
    bool exhausted = false;

    for (std::uint64_t v = floor; v <= cap && !witness && !exhausted; ++v) {
        if (jobs <= 1) {
            auto handle = [&](const std::vector<int>& t) -> bool {
                if (result.explored >= node_limit) {
                    exhausted = true;
                    return false;
                }
                ++result.explored;
                ImageSet image(local_host, t);
                Decider decider(guest, image, budget.k, node_limit - result.explored);
                DecideOutcome outcome;
                try {
                    outcome = decider.run();
                } catch (const ExhaustedSignal&) {
                    result.explored = node_limit;
                    exhausted = true;
                    return false;
                }
                result.explored += outcome.nodes;
                if (outcome.feasible) {
                    witness = build_witness(gamma, host, local_host, guest, image, outcome);
                    found_volume = v;
                    return false;
                }
                return true;
            };
            ImageSetEnumerator enumerator(local_host, guest.component_count, handle);
            enumerator.run(static_cast<int>(v));
        } else {
            // Batched canonical aggregation: identical results for any
            // worker count.
            std::vector<std::vector<int>> batch;
            const std::size_t batch_size = 64 * jobs;
            auto flush = [&]() -> bool { // false = stop enumeration
                if (batch.empty()) return true;
                std::vector<DecideOutcome> outcomes(batch.size());
                std::vector<std::thread> workers;
                std::size_t stride = (batch.size() + jobs - 1) / jobs;
                for (unsigned w = 0; w < jobs; ++w) {
                    const std::size_t lo = w * stride;
                    const std::size_t hi = std::min(batch.size(), lo + stride);
                    if (lo >= hi) break;
                    workers.emplace_back([&, lo, hi]() {
                        for (std::size_t i = lo; i < hi; ++i) {
                            ImageSet image(local_host, batch[i]);
                            Decider decider(guest, image, budget.k,
                                            std::numeric_limits<std::uint64_t>::max());
                            outcomes[i] = decider.run();
                        }
                    });
                }
                for (auto& w : workers) w.join();
                for (std::size_t i = 0; i < batch.size(); ++i) {
                    result.explored += 1 + outcomes[i].nodes;
                    if (outcomes[i].feasible) {
                        ImageSet image(local_host, batch[i]);
                        witness = build_witness(gamma, host, local_host, guest, image,
                                                outcomes[i]);
                        found_volume = v;
                        batch.clear();
                        return false;
                    }
                }
                batch.clear();
                return true;
            };
            auto handle = [&](const std::vector<int>& t) -> bool {
                batch.push_back(t);
                if (batch.size() >= batch_size) return flush();
                return true;
            };
            ImageSetEnumerator enumerator(local_host, guest.component_count, handle);
            if (enumerator.run(static_cast<int>(v))) flush();
        }
    }

    if (exhausted) {
        result.status = SearchStatus::BudgetExhausted;
        return result;
    }
    if (witness) {
        result.status = SearchStatus::Exact;
        result.min_volume = found_volume;
        result.certified_lower_bound = found_volume;
        result.witness = std::move(witness);
        return result;
    }
    result.status = SearchStatus::InfeasibleWithinCap;
    result.certified_lower_bound = cap + 1;
    return result;
}

ProfilePoint wiring_profile_point(std::uint64_t k, std::uint64_t size_bound,
                                  const std::vector<Graph>& candidates, const Graph& host,
                                  const SearchLimits& limits, unsigned jobs) {
    ProfilePoint point;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        if (candidates[i].vertex_count() > size_bound) {
            throw SearchRefusedError("profile candidate " + std::to_string(i) + " has " +
                                     std::to_string(candidates[i].vertex_count()) +
                                     " vertices, above the size bound " +
                                     std::to_string(size_bound));
        }
    }
    bool have_infinite = false;
    std::uint64_t best = 0;
    bool have_best = false;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        SearchBudget budget;
        budget.k = k;
        SearchResult r = min_wiring_volume(candidates[i], host, budget, limits, jobs);
        if (r.status == SearchStatus::BudgetExhausted) {
            throw SearchRefusedError("profile candidate " + std::to_string(i) +
                                     " exhausted the search budget");
        }
        const bool infinite = r.status == SearchStatus::InfeasibleWithinCap;
        if (!have_infinite && (infinite || !have_best || (r.min_volume && *r.min_volume > best))) {
            if (infinite) {
                have_infinite = true;
                point.witness_index = i;
            } else {
                best = *r.min_volume;
                have_best = true;
                point.witness_index = i;
            }
        }
        point.results.push_back(std::move(r));
    }
    if (!have_infinite && have_best) point.volume = best;
    return point;
}

std::uint64_t enumerate_subgraphs(const Graph& g, std::size_t max_vertices,
                                  bool connected_only,
                                  const std::function<bool(Graph&&)>& emit,
                                  std::uint64_t guard_limit) {
    std::uint64_t visited = 0;
    std::uint64_t emitted = 0;
    const auto& verts = g.vertices();
    const std::size_t n = verts.size();
    std::vector<VertexId> subset;
    bool stop = false;

    auto guard = [&]() {
        if (++visited > guard_limit) {
            throw SearchRefusedError("subgraph enumeration guard of " +
                                     std::to_string(guard_limit) + " combinations exceeded");
        }
    };

    auto process_subset = [&]() {
        std::vector<Edge> induced;
        for (const Edge& e : g.edges()) {
            if (std::binary_search(subset.begin(), subset.end(), e.a) &&
                std::binary_search(subset.begin(), subset.end(), e.b)) {
                induced.push_back(e);
            }
        }
        if (induced.size() >= 63 ||
            (std::uint64_t{1} << induced.size()) > guard_limit) {
            throw SearchRefusedError("subgraph enumeration guard exceeded: " +
                                     std::to_string(induced.size()) +
                                     " induced edges in one vertex subset");
        }
        std::unordered_map<VertexId, std::size_t> pos;
        for (std::size_t i = 0; i < subset.size(); ++i) pos.emplace(subset[i], i);
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << induced.size()); ++mask) {
            guard();
            std::vector<Edge> chosen;
            for (std::size_t i = 0; i < induced.size(); ++i) {
                if (mask & (std::uint64_t{1} << i)) chosen.push_back(induced[i]);
            }
            if (connected_only && subset.size() > 1) {
                std::vector<std::size_t> parent(subset.size());
                for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = i;
                std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
                    while (parent[x] != x) x = parent[x] = parent[parent[x]];
                    return x;
                };
                std::size_t parts = subset.size();
                for (const Edge& e : chosen) {
                    const std::size_t a = find(pos.at(e.a));
                    const std::size_t b = find(pos.at(e.b));
                    if (a != b) {
                        parent[a] = b;
                        --parts;
                    }
                }
                if (parts != 1) continue;
            }
            Graph sub = subgraph(g, subset, chosen,
                                 g.name() + "[" + std::to_string(emitted) + "]");
            ++emitted;
            if (!emit(std::move(sub))) {
                stop = true;
                return;
            }
        }
    };

    std::function<void(std::size_t, std::size_t)> choose = [&](std::size_t from,
                                                               std::size_t want) {
        if (stop) return;
        if (want == 0) {
            process_subset();
            return;
        }
        for (std::size_t i = from; i + want <= n && !stop; ++i) {
            subset.push_back(verts[i]);
            choose(i + 1, want - 1);
            subset.pop_back();
        }
    };

    for (std::size_t size = 1; size <= max_vertices && size <= n && !stop; ++size) {
        choose(0, size);
    }
    return emitted;
}

std::vector<Graph> all_subgraphs(const Graph& g, std::size_t max_vertices,
                                 bool connected_only, std::uint64_t guard_limit) {
    std::vector<Graph> out;
    enumerate_subgraphs(
        g, max_vertices, connected_only,
        [&](Graph&& sub) {
            out.push_back(std::move(sub));
            return true;
        },
        guard_limit);
    return out;
}

std::uint64_t count_image_sets(const Graph& host, std::size_t size,
                               std::size_t max_parts) {
    const LocalHost local_host(host);
    std::uint64_t count = 0;
    ImageSetEnumerator enumerator(local_host, static_cast<int>(max_parts),
                                  [&](const std::vector<int>&) {
                                      ++count;
                                      return true;
                                  });
    enumerator.run(static_cast<int>(size));
    return count;
}

} // namespace cwire
