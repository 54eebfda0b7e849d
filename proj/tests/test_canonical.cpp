#include "doctest.h"

#include <random>

#include "cwire/canonical.hpp"
#include "cwire/search.hpp"
#include "testutil.hpp"

using namespace cwire;

TEST_CASE("subdivision of the first paper member covers the host path") {
    auto cfg = FamilyConfig::paper();
    Graph x1 = build_x(1, cfg);
    Wiring w = subdivision_wiring(x1, 1, cfg);
    CHECK(is_valid(w));
    CHECK(wiring_k(w) == 1);
    CHECK(volume(w) == 257);
}

TEST_CASE("subdivision of the toy second member") {
    auto cfg = FamilyConfig::toy(2);
    Graph x2 = build_x(2, cfg);
    Wiring w = subdivision_wiring(x2, 2, cfg);
    CHECK(is_valid(w));
    CHECK(wiring_k(w) == 1);
    CHECK(volume(w) == 66);
    CHECK(BigInt(volume(w)) <= vol_y(2, cfg));
}

TEST_CASE("subdivision of a single vertex has volume 1") {
    auto cfg = FamilyConfig::toy(2);
    Graph x2 = build_x(2, cfg);
    Graph dot = induced_subgraph(x2, {grid_vertex_id(2, 0, 0)}, "dot");
    Wiring w = subdivision_wiring(dot, 2, cfg);
    CHECK(is_valid(w));
    CHECK(volume(w) == 1);
    CHECK(w.vertex_map().at(grid_vertex_id(2, 0, 0)) == grid_vertex_id(2, 0, 0));
}

TEST_CASE("subdivision is injective with k = 1 on random subgraphs") {
    auto cfg = FamilyConfig::toy(2);
    Graph x2 = build_x(2, cfg);
    std::mt19937 rng(42);
    for (int trial = 0; trial < 25; ++trial) {
        Graph sub = testutil::random_connected_subgraph(x2, 1 + rng() % 12, rng, "sub");
        Wiring w = subdivision_wiring(sub, 2, cfg);
        REQUIRE(is_valid(w));
        CHECK(wiring_k(w) == 1);
        CHECK(vertex_multiplicity(w) == 1);
        CHECK(BigInt(volume(w)) <= vol_y(2, cfg));
    }
}

TEST_CASE("collapse of the toy second member measures exactly") {
    auto cfg = FamilyConfig::toy(2);
    Graph x2 = build_x(2, cfg);
    Wiring w = collapse_wiring(x2, 2, cfg);
    CHECK(is_valid(w));
    CHECK(volume(w) == 9);
    CHECK(vertex_multiplicity(w) == 2);
    CHECK(edge_congestion(w) == 2);
    CHECK(wiring_k(w) == 2);
}

TEST_CASE("collapse of one horizontal edge is a point") {
    auto cfg = FamilyConfig::toy(2);
    Graph x2 = build_x(2, cfg);
    const VertexId a = grid_vertex_id(2, 0, 0);
    const VertexId b = grid_vertex_id(2, 1, 0);
    Graph rung = subgraph(x2, {a, b}, {make_edge(a, b)}, "rung");
    Wiring w = collapse_wiring(rung, 2, cfg);
    CHECK(is_valid(w));
    CHECK(volume(w) == 1);
}

TEST_CASE("collapse volume formula at the unmaterializable paper size") {
    CHECK(collapse_volume_on_full_x(2, FamilyConfig::paper()) == 131073);
}

TEST_CASE("collapse requires two columns") {
    auto cfg = FamilyConfig::toy(2);
    Graph x1 = build_x(1, cfg);
    CHECK_THROWS_WITH_AS(collapse_wiring(x1, 1, cfg), doctest::Contains("f(n) >= 2"),
                         CanonicalError);
}

TEST_CASE("collapse contract on random connected subgraphs") {
    auto cfg = FamilyConfig::toy(2);
    Graph x2 = build_x(2, cfg);
    std::mt19937 rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        Graph sub = testutil::random_connected_subgraph(x2, 1 + rng() % 18, rng, "sub");
        Wiring w = collapse_wiring(sub, 2, cfg);
        REQUIRE(is_valid(w));
        CHECK(volume(w) <= sub.vertex_count());
        CHECK(wiring_k(w) <= 2);
    }
}

TEST_CASE("collapse multiplicity is exactly f on the full member") {
    auto cfg = FamilyConfig::toy(3);
    Graph x3 = build_x(3, cfg); // f(3) = 3 columns
    Wiring w = collapse_wiring(x3, 3, cfg);
    CHECK(vertex_multiplicity(w) == 3);
    CHECK(wiring_k(w) == 3);
}

TEST_CASE("label inconsistency is rejected") {
    auto cfg = FamilyConfig::toy(2);
    Graph wrong_family = build_ladder({2, 4, 2}, 9); // labels say family 9
    CHECK_THROWS_AS(collapse_wiring(wrong_family, 2, cfg), CanonicalError);
    Graph unlabeled("u", {1, 2}, {{1, 2}});
    CHECK_THROWS_AS(subdivision_wiring(unlabeled, 2, cfg), CanonicalError);
}

TEST_CASE("compact re-embedding of an unanchored vertical path") {
    auto cfg = FamilyConfig::toy(4); // hx(2) = 16, hy(2) = 256
    Graph x2 = build_x(2, cfg);
    std::vector<VertexId> verts{grid_vertex_id(2, 0, 5), grid_vertex_id(2, 0, 6),
                                grid_vertex_id(2, 0, 7)};
    Graph path = induced_subgraph(x2, verts, "path");
    Wiring w = compact_reembedding_wiring(path, 2, cfg);
    CHECK(is_valid(w));
    CHECK(wiring_k(w) == 1);
    CHECK(volume(w) == 3);
    CHECK(w.vertex_map().at(grid_vertex_id(2, 0, 5)) == grid_vertex_id(2, 0, 5));
    CHECK(w.vertex_map().at(grid_vertex_id(2, 0, 7)) == grid_vertex_id(2, 0, 7));
}

TEST_CASE("compact re-embedding anchored at a rung row") {
    auto cfg = FamilyConfig::toy(4);
    Graph x2 = build_x(2, cfg);
    std::vector<VertexId> verts{grid_vertex_id(2, 0, 16), grid_vertex_id(2, 1, 16),
                                grid_vertex_id(2, 0, 15)};
    Graph gamma = induced_subgraph(x2, verts, "anchored");
    Wiring w = compact_reembedding_wiring(gamma, 2, cfg);
    CHECK(is_valid(w));
    CHECK(wiring_k(w) == 1);
    CHECK(volume(w) == 3);
    CHECK(w.vertex_map().at(grid_vertex_id(2, 0, 16)) == grid_vertex_id(2, 0, 256));
    CHECK(w.vertex_map().at(grid_vertex_id(2, 1, 16)) == grid_vertex_id(2, 1, 256));
    CHECK(w.vertex_map().at(grid_vertex_id(2, 0, 15)) == grid_vertex_id(2, 0, 255));
}

TEST_CASE("compact re-embedding precondition failure is explicit") {
    auto cfg = FamilyConfig::toy(2);
    Graph x2 = build_x(2, cfg); // 18 vertices, hx(2) = 4
    CHECK_THROWS_WITH_AS(compact_reembedding_wiring(x2, 2, cfg),
                         doctest::Contains("precondition violated"), CanonicalError);
}

TEST_CASE("compact re-embedding preserves volume on random small pieces") {
    auto cfg = FamilyConfig::toy(4);
    Graph x2 = build_x(2, cfg);
    std::mt19937 rng(17);
    for (int trial = 0; trial < 25; ++trial) {
        Graph sub = testutil::random_connected_subgraph(x2, 1 + rng() % 7, rng, "piece");
        Wiring w = compact_reembedding_wiring(sub, 2, cfg);
        REQUIRE(is_valid(w));
        CHECK(wiring_k(w) == 1);
        CHECK(volume(w) == sub.vertex_count());
    }
}

TEST_CASE("composite on a single full member reduces to the collapse") {
    auto cfg = FamilyConfig::toy(2);
    Graph x2 = build_x(2, cfg);
    CompositeResult r = composite_wiring(x2, cfg);
    CHECK(r.budget_n == 2);
    REQUIRE(r.piece_methods.size() == 1);
    CHECK(r.piece_methods[0].second == "collapse");
    CHECK(is_valid(r.wiring));
    CHECK(volume(r.wiring) == 9);
    CHECK(BigInt(volume(r.wiring)) <= 2 * vol_x(2, cfg));
}

TEST_CASE("composite of two whole members subdivides both") {
    auto cfg = FamilyConfig::toy(2);
    Graph gamma = disjoint_union(build_x(1, cfg), build_x(2, cfg), "gamma");
    CHECK(gamma.vertex_count() == 21); // 3 + 18; budget lands at 3
    CompositeResult r = composite_wiring(gamma, cfg);
    CHECK(r.budget_n == 3);
    REQUIRE(r.piece_methods.size() == 2);
    CHECK(r.piece_methods[0].second == "subdivide");
    CHECK(r.piece_methods[1].second == "subdivide");
    CHECK(is_valid(r.wiring));
    CHECK(wiring_k(r.wiring) == 1);
    CHECK(volume(r.wiring) == 71); // vol_y(1) + vol_y(2) = 5 + 66
    CHECK(BigInt(volume(r.wiring)) <= 2 * vol_x(3, cfg));
}

TEST_CASE("composite of the empty graph is empty") {
    CompositeResult r = composite_wiring(Graph("empty", {}, {}), FamilyConfig::toy(2));
    CHECK(volume(r.wiring) == 0);
    CHECK(r.piece_methods.empty());
}

TEST_CASE("composite uses the compact re-embedding above the budget") {
    auto cfg = FamilyConfig::toy(2);
    // 19 vertices from member 2 and a tiny 3-vertex piece of member 4:
    // budget 3, piece families {2 -> subdivide, 4 -> compact}.
    Graph x2 = build_x(2, cfg);
    Graph x4 = build_x(4, cfg);
    std::mt19937 rng(5);
    Graph small4 = testutil::random_connected_subgraph(x4, 3, rng, "small4");
    Graph gamma = disjoint_union(x2, small4, "gamma");
    REQUIRE(gamma.vertex_count() == 21);
    CompositeResult r = composite_wiring(gamma, cfg);
    CHECK(r.budget_n == 3);
    REQUIRE(r.piece_methods.size() == 2);
    CHECK(r.piece_methods[0].second == "subdivide");
    CHECK(r.piece_methods[1].second == "compact-reembed");
    CHECK(is_valid(r.wiring));
    CHECK(wiring_k(r.wiring) <= 3);
    CHECK(BigInt(volume(r.wiring)) <= 2 * vol_x(3, cfg));
}

TEST_CASE("composite cross-family edges are rejected") {
    auto cfg = FamilyConfig::toy(2);
    std::unordered_map<VertexId, GridLabel> labels{
        {1, GridLabel{1, 0, 0}}, {2, GridLabel{2, 0, 0}}};
    Graph bad("bad", {1, 2}, {{1, 2}}, labels);
    CHECK_THROWS_AS(composite_wiring(bad, cfg), CanonicalError);
}

TEST_CASE("oracle never beats its own constructions' k at larger volume") {
    auto cfg = FamilyConfig::toy(2);
    Graph x2 = build_x(2, cfg);
    Graph y2 = build_y(2, cfg);
    std::mt19937 rng(3);
    for (int trial = 0; trial < 3; ++trial) {
        Graph sub = testutil::random_connected_subgraph(x2, 1 + rng() % 5, rng, "sub");
        Wiring r = collapse_wiring(sub, 2, cfg);
        SearchBudget budget;
        budget.k = wiring_k(r);
        SearchResult s = min_wiring_volume(sub, y2, budget);
        REQUIRE(s.status == SearchStatus::Exact);
        CHECK(*s.min_volume <= volume(r));

        Wiring h = subdivision_wiring(sub, 2, cfg);
        SearchBudget b1;
        b1.k = 1;
        SearchResult s1 = min_wiring_volume(sub, y2, b1);
        REQUIRE(s1.status == SearchStatus::Exact);
        CHECK(*s1.min_volume <= volume(h));
    }
}
