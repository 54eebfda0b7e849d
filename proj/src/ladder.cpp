#include "cwire/ladder.hpp"

#include "cwire/bigint.hpp"

namespace cwire {

namespace {

constexpr std::uint64_t kMaxRow = (std::uint64_t{1} << 32) - 1;
constexpr std::uint32_t kMaxColOrFamily = (1u << 16) - 1;

} // namespace

VertexId grid_vertex_id(std::uint64_t family, std::uint64_t col, std::uint64_t row) {
    if (family > kMaxColOrFamily) {
        throw GraphError("grid family index " + std::to_string(family) + " out of range");
    }
    if (col > kMaxColOrFamily) {
        throw GraphError("grid column " + std::to_string(col) + " out of range");
    }
    if (row > kMaxRow) {
        throw GraphError("grid row " + std::to_string(row) + " out of range");
    }
    return (family << 48) | (col << 32) | row;
}

Graph build_ladder(const LadderSpec& spec,
                   std::uint32_t family,
                   std::uint64_t cap,
                   std::string name) {
    if (spec.columns < 1 || spec.spacing < 1 || spec.segments < 1) {
        throw GraphError("ladder spec fields must be positive");
    }
    const BigInt height = BigInt(spec.spacing) * spec.segments;
    const BigInt count = BigInt(spec.columns) * (height + 1);
    if (count > cap) {
        throw GraphError("instance too large: " + count.str() + " vertices exceeds the materialization cap of " +
                         std::to_string(cap) + " vertices");
    }
    if (spec.columns - 1 > kMaxColOrFamily || height > kMaxRow) {
        throw GraphError("ladder dimensions exceed vertex id ranges");
    }

    if (name.empty()) {
        name = "ladder_" + std::to_string(spec.columns) + "_" +
               std::to_string(spec.spacing) + "_" + std::to_string(spec.segments);
    }

    const std::uint64_t rows = static_cast<std::uint64_t>(height); // top row index
    std::vector<VertexId> verts;
    verts.reserve(static_cast<std::size_t>(spec.columns * (rows + 1)));
    std::unordered_map<VertexId, GridLabel> labels;
    labels.reserve(verts.capacity());
    std::vector<Edge> edges;

    for (std::uint64_t col = 0; col < spec.columns; ++col) {
        for (std::uint64_t row = 0; row <= rows; ++row) {
            const VertexId id = grid_vertex_id(family, static_cast<std::uint32_t>(col), row);
            verts.push_back(id);
            labels.emplace(id, GridLabel{family, static_cast<std::uint32_t>(col), row});
        }
    }
    for (std::uint64_t col = 0; col < spec.columns; ++col) {
        for (std::uint64_t row = 0; row < rows; ++row) {
            edges.push_back(make_edge(grid_vertex_id(family, col, row),
                                      grid_vertex_id(family, col, row + 1)));
        }
    }
    for (std::uint64_t col = 0; col + 1 < spec.columns; ++col) {
        for (std::uint64_t row = 0; row <= rows; row += spec.spacing) {
            edges.push_back(make_edge(grid_vertex_id(family, col, row),
                                      grid_vertex_id(family, col + 1, row)));
        }
    }

    return Graph(std::move(name), std::move(verts), std::move(edges), std::move(labels));
}

} // namespace cwire
