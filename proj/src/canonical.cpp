#include "cwire/canonical.hpp"

#include <algorithm>
#include <limits>
#include <map>

namespace cwire {

namespace {

struct XShape {
    std::uint64_t n = 0;
    std::uint64_t f = 0;
    std::uint64_t hx = 0; // rung spacing of the guest member, fits 64 bits when used
};

GridLabel require_label(const Graph& gamma, VertexId v, std::uint64_t n) {
    auto label = gamma.label(v);
    if (!label) {
        throw CanonicalError("vertex " + std::to_string(v) + " of '" + gamma.name() +
                             "' carries no grid label; cannot place it in family " +
                             std::to_string(n));
    }
    return *label;
}

XShape checked_shape(const Graph& gamma, std::uint64_t n, const FamilyConfig& cfg) {
    XShape shape;
    shape.n = n;
    shape.f = cfg.colfn(n);
    const BigInt hx_big = cfg.schedule.hx(n);
    const BigInt top_row = hx_big * shape.f;
    for (VertexId v : gamma.vertices()) {
        const GridLabel label = require_label(gamma, v, n);
        if (label.family != n) {
            throw CanonicalError("vertex " + std::to_string(v) + " is labeled family " +
                                 std::to_string(label.family) + ", expected " + std::to_string(n));
        }
        if (label.col >= shape.f || BigInt(label.row) > top_row) {
            throw CanonicalError("vertex " + std::to_string(v) + " at (col " +
                                 std::to_string(label.col) + ", row " + std::to_string(label.row) +
                                 ") lies outside family " + std::to_string(n));
        }
    }
    for (const Edge& e : gamma.edges()) {
        const GridLabel a = require_label(gamma, e.a, n);
        const GridLabel b = require_label(gamma, e.b, n);
        const bool vertical = a.col == b.col &&
                              (a.row + 1 == b.row || b.row + 1 == a.row);
        const bool horizontal = a.row == b.row &&
                                (a.col + 1 == b.col || b.col + 1 == a.col) &&
                                BigInt(a.row) % hx_big == 0;
        if (!vertical && !horizontal) {
            throw CanonicalError("edge (" + std::to_string(e.a) + "," + std::to_string(e.b) +
                                 ") is not an edge of family " + std::to_string(n));
        }
    }
    shape.hx = to_u64(hx_big, "rung spacing");
    return shape;
}

} // namespace

void check_subgraph_of_x(const Graph& gamma, std::uint64_t n, const FamilyConfig& cfg) {
    checked_shape(gamma, n, cfg);
}

Wiring subdivision_wiring(const Graph& gamma, std::uint64_t n, const FamilyConfig& cfg,
                          std::uint64_t cap) {
    const XShape shape = checked_shape(gamma, n, cfg);
    auto host = share(build_y(n, cfg, cap));
    const std::uint64_t hy = to_u64(cfg.schedule.hy(n), "host rung spacing");
    const std::uint64_t hx = shape.hx;

    auto target_row = [&](std::uint64_t row) {
        return (row / hx) * hy + (row % hx);
    };

    std::map<VertexId, VertexId> vmap;
    for (VertexId v : gamma.vertices()) {
        const GridLabel l = *gamma.label(v);
        vmap[v] = grid_vertex_id(n, l.col, target_row(l.row));
    }

    std::map<Edge, std::vector<VertexId>> walks;
    for (const Edge& e : gamma.edges()) {
        const GridLabel a = *gamma.label(e.a);
        const GridLabel b = *gamma.label(e.b);
        if (a.row == b.row) {
            // Horizontal rung edge: rung rows land on host rung rows.
            walks[e] = {vmap[e.a], vmap[e.b]};
            continue;
        }
        const GridLabel& low = a.row < b.row ? a : b;
        const std::uint64_t q = low.row / hx;
        const std::uint64_t s = low.row % hx;
        if (s + 1 < hx || hy == hx) {
            walks[e] = {vmap[e.a], vmap[e.b]};
        } else {
            // Segment-closing edge: walk the host rows filling the
            // subdivision gap, from q*hy+hx-1 up to (q+1)*hy.
            std::vector<VertexId> walk;
            for (std::uint64_t row = q * hy + hx - 1; row <= (q + 1) * hy; ++row) {
                walk.push_back(grid_vertex_id(n, low.col, row));
            }
            if (a.row > b.row) std::reverse(walk.begin(), walk.end());
            walks[e] = std::move(walk);
        }
    }
    return Wiring(share(gamma), std::move(host), std::move(vmap), std::move(walks));
}

Wiring collapse_wiring(const Graph& gamma, std::uint64_t n, const FamilyConfig& cfg,
                       std::uint64_t cap) {
    const XShape shape = checked_shape(gamma, n, cfg);
    if (shape.f < 2) {
        throw CanonicalError("collapse wiring requires f(n) >= 2; f(" + std::to_string(n) +
                             ") = " + std::to_string(shape.f));
    }
    auto host = share(build_y(n, cfg, cap));

    std::map<VertexId, VertexId> vmap;
    for (VertexId v : gamma.vertices()) {
        const GridLabel l = *gamma.label(v);
        vmap[v] = grid_vertex_id(n, 0, l.row);
    }
    std::map<Edge, std::vector<VertexId>> walks;
    for (const Edge& e : gamma.edges()) {
        const GridLabel a = *gamma.label(e.a);
        const GridLabel b = *gamma.label(e.b);
        if (a.row == b.row) {
            walks[e] = {vmap[e.a]}; // horizontal edges shrink to a point
        } else {
            walks[e] = {vmap[e.a], vmap[e.b]};
        }
    }
    return Wiring(share(gamma), std::move(host), std::move(vmap), std::move(walks));
}

BigInt collapse_volume_on_full_x(std::uint64_t n, const FamilyConfig& cfg) {
    return cfg.schedule.hx(n) * cfg.colfn(n) + 1;
}

Wiring compact_reembedding_wiring(const Graph& gamma, std::uint64_t n_prime,
                                  const FamilyConfig& cfg, std::uint64_t cap) {
    const XShape shape = checked_shape(gamma, n_prime, cfg);
    const BigInt hx_big = cfg.schedule.hx(n_prime);
    if (BigInt(gamma.vertex_count()) * 2 >= hx_big) {
        throw CanonicalError("compact re-embedding precondition violated: 2*|V| = " +
                             std::to_string(2 * gamma.vertex_count()) +
                             " must be below the rung spacing " + brief(hx_big) +
                             "; schedule too small");
    }
    auto host = share(build_y(n_prime, cfg, cap));
    const std::uint64_t hy = to_u64(cfg.schedule.hy(n_prime), "host rung spacing");
    const std::uint64_t hx = shape.hx;

    std::map<VertexId, VertexId> vmap;
    for (const Graph& comp : components(gamma)) {
        // Under the precondition a component spans fewer than hx/2 rows, so
        // it touches at most one rung row; that rung (or the enclosing open
        // segment) anchors the whole component.
        std::uint64_t rmin = std::numeric_limits<std::uint64_t>::max();
        bool anchored = false;
        std::uint64_t anchor_q = 0;
        for (VertexId v : comp.vertices()) {
            const std::uint64_t row = comp.label(v)->row;
            rmin = std::min(rmin, row);
            if (row % hx == 0) {
                anchored = true;
                anchor_q = row / hx;
            }
        }
        const std::uint64_t q = anchored ? anchor_q : rmin / hx;
        for (VertexId v : comp.vertices()) {
            const GridLabel l = *comp.label(v);
            // Signed offset relative to the anchor rung.
            const std::int64_t offset =
                static_cast<std::int64_t>(l.row) - static_cast<std::int64_t>(q * hx);
            const std::uint64_t target = static_cast<std::uint64_t>(
                static_cast<std::int64_t>(q * hy) + offset);
            vmap[v] = grid_vertex_id(n_prime, l.col, target);
        }
    }

    std::map<Edge, std::vector<VertexId>> walks;
    for (const Edge& e : gamma.edges()) {
        walks[e] = {vmap[e.a], vmap[e.b]};
    }
    return Wiring(share(gamma), std::move(host), std::move(vmap), std::move(walks));
}

CompositeResult composite_wiring(const Graph& gamma, const FamilyConfig& cfg,
                                 std::uint64_t cap, std::uint64_t horizon) {
    if (gamma.empty()) {
        Wiring w(share(Graph(gamma.name(), {}, {})), share(Graph("Y_union", {}, {})), {}, {});
        return CompositeResult{std::move(w), 0, {}};
    }

    // Pieces by family label; edges may not cross families.
    std::map<std::uint64_t, std::vector<VertexId>> piece_vertices;
    for (VertexId v : gamma.vertices()) {
        auto label = gamma.label(v);
        if (!label) {
            throw CanonicalError("composite wiring needs grid labels on every vertex; " +
                                 std::to_string(v) + " has none");
        }
        piece_vertices[label->family].push_back(v);
    }
    for (const Edge& e : gamma.edges()) {
        if (gamma.label(e.a)->family != gamma.label(e.b)->family) {
            throw CanonicalError("edge (" + std::to_string(e.a) + "," + std::to_string(e.b) +
                                 ") joins different families; the guest is not a valid piece union");
        }
    }

    // Budget index: least n with f(n) >= 2 whose guest member is at least as
    // big as the whole guest. f(1) = 1 admits no collapse, so n starts at 2.
    const BigInt total = gamma.vertex_count();
    std::uint64_t budget = 0;
    for (std::uint64_t n = 2; n <= horizon; ++n) {
        if (vol_x(n, cfg) >= total) {
            budget = n;
            break;
        }
    }
    if (budget == 0) {
        throw CanonicalError("no budget index with vol_x(n) >= " + total.str() +
                             " within horizon " + std::to_string(horizon));
    }

    CompositeResult result{Wiring(share(gamma), share(Graph("Y_union", {}, {})), {}, {}), budget, {}};
    std::map<VertexId, VertexId> vmap;
    std::map<Edge, std::vector<VertexId>> walks;
    Graph union_host("Y_union", {}, {});

    for (const auto& [family, verts] : piece_vertices) {
        Graph piece = induced_subgraph(gamma, verts,
                                       gamma.name() + "/X_" + std::to_string(family));
        const char* method = nullptr;
        Wiring piece_wiring = [&]() -> Wiring {
            if (family < budget) {
                method = "subdivide";
                return subdivision_wiring(piece, family, cfg, cap);
            }
            if (family == budget) {
                method = "collapse";
                return collapse_wiring(piece, family, cfg, cap);
            }
            method = "compact-reembed";
            return compact_reembedding_wiring(piece, family, cfg, cap);
        }();
        result.piece_methods.emplace_back(family, method);
        union_host = disjoint_union(union_host, piece_wiring.host(), "Y_union");
        for (const auto& [gv, hv] : piece_wiring.vertex_map()) vmap[gv] = hv;
        for (const auto& [ge, walk] : piece_wiring.walks()) walks[ge] = walk;
    }

    result.wiring = Wiring(share(gamma), share(std::move(union_host)),
                           std::move(vmap), std::move(walks));
    return result;
}

} // namespace cwire
