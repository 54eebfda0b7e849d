#include "doctest.h"

#include <fstream>
#include <sstream>

#include "cwire/canonical.hpp"
#include "cwire/experiment.hpp"
#include "cwire/io.hpp"
#include "cwire/relation.hpp"

using namespace cwire;

TEST_CASE("graph round-trips bit-exactly") {
    Graph g = build_ladder({2, 2, 2}, 3);
    const std::string text = serialize_graph(g);
    Graph parsed = parse_graph(text);
    CHECK(parsed == g);
    CHECK(serialize_graph(parsed) == text);
}

TEST_CASE("unlabeled graphs round-trip too") {
    Graph g("plain", {3, 1, 7}, {{1, 3}, {3, 7}});
    Graph parsed = parse_graph(serialize_graph(g));
    CHECK(parsed == g);
}

TEST_CASE("shipped fixtures round-trip byte-for-byte") {
    auto slurp = [](const std::string& path) {
        std::ifstream in(path);
        REQUIRE(in.good());
        std::ostringstream buf;
        buf << in.rdbuf();
        return buf.str();
    };
    const std::string dir = FIXTURE_DIR;
    for (const char* name :
         {"guest_ladder.graph", "host_ladder.graph", "x2_toy2.graph", "y2_toy2.graph"}) {
        const std::string text = slurp(dir + "/" + name);
        CHECK(serialize_graph(parse_graph(text)) == text);
    }
    auto guest = share(load_graph(dir + "/guest_ladder.graph"));
    auto host = share(load_graph(dir + "/host_ladder.graph"));
    const std::string witness_text = slurp(dir + "/witness.wir");
    Wiring witness = parse_wiring(witness_text, guest, host);
    CHECK(serialize_wiring(witness) == witness_text);
    CHECK(is_valid(witness));
    CHECK(volume(witness) == 5);
    CHECK(wiring_k(witness) == 2);

    auto x2 = share(load_graph(dir + "/x2_toy2.graph"));
    auto y2 = share(load_graph(dir + "/y2_toy2.graph"));
    Wiring collapse = load_wiring(dir + "/collapse_x2_toy2.wir", x2, y2);
    CHECK(serialize_wiring(collapse) == slurp(dir + "/collapse_x2_toy2.wir"));
    CHECK(volume(collapse) == 9);
}

TEST_CASE("parser accepts comments and blank lines") {
    Graph g = parse_graph("# a comment\n\ngraph tiny\nv 1\nv 2 # trailing\ne 1 2\n");
    CHECK(g.name() == "tiny");
    CHECK(g.vertex_count() == 2);
    CHECK(g.edge_count() == 1);
}

TEST_CASE("parser reports offending line numbers") {
    auto expect_line = [](const std::string& text, std::size_t line) {
        try {
            parse_graph(text);
            FAIL("expected a parse error");
        } catch (const ParseError& e) {
            CHECK(e.line() == line);
        }
    };
    expect_line("graph g\nv 1\nv 1\n", 3);          // duplicate id
    expect_line("graph g\nv 1\ne 1 1\n", 3);        // self-loop
    expect_line("graph g\nv 1\nv 2\ne 1 3\n", 4);   // dangling endpoint
    expect_line("graph g\nv 1\nv 2\ne 1 2\ne 2 1\n", 5); // duplicate edge
    expect_line("graph g\nv x\n", 2);               // bad id
    expect_line("v 1\n", 1);                        // vertex before header
    expect_line("graph g\nwat 1\n", 2);             // unknown directive
}

TEST_CASE("wiring round-trips bit-exactly") {
    auto cfg = FamilyConfig::toy(2);
    Graph x2 = build_x(2, cfg);
    Wiring w = collapse_wiring(x2, 2, cfg);
    const std::string text = serialize_wiring(w);
    Wiring parsed = parse_wiring(text, w.guest_ptr(), w.host_ptr());
    CHECK(parsed == w);
    CHECK(serialize_wiring(parsed) == text);
}

TEST_CASE("wiring parser keeps degenerate walks and flags bad steps") {
    auto guest = share(Graph("g", {1, 2}, {{1, 2}}));
    auto host = share(Graph("h", {10, 11, 12}, {{10, 11}, {11, 12}}));
    SUBCASE("k = 0 emap line") {
        Wiring w = parse_wiring("wiring g -> h\nvmap 1 10\nvmap 2 10\nemap 1 2 : 10\n",
                                guest, host);
        CHECK(is_valid(w));
        CHECK(volume(w) == 1);
    }
    SUBCASE("non-adjacent consecutive hosts validate as violations") {
        Wiring w = parse_wiring("wiring g -> h\nvmap 1 10\nvmap 2 12\nemap 1 2 : 10 12\n",
                                guest, host);
        auto violations = validate(w);
        REQUIRE(violations.size() == 1);
        CHECK(violations[0].kind == ViolationKind::NonAdjacentStep);
    }
    SUBCASE("names must match the supplied graphs") {
        CHECK_THROWS_AS(parse_wiring("wiring other -> h\n", guest, host), ParseError);
    }
    SUBCASE("unknown ids are parse errors with line numbers") {
        try {
            parse_wiring("wiring g -> h\nvmap 1 10\nvmap 7 10\n", guest, host);
            FAIL("expected a parse error");
        } catch (const ParseError& e) {
            CHECK(e.line() == 3);
        }
    }
}

TEST_CASE("relation checker basics") {
    SUBCASE("f precedes itself with C = 1") {
        RelationSample s;
        s.f_points = {{1, 3}, {2, 9}, {5, 100}};
        s.g_points = s.f_points;
        s.C = 1;
        CHECK(check_precedes(s));
    }
    SUBCASE("squares do not precede identity with C = 3") {
        RelationSample s;
        s.f_points = {{10, 100}, {100, 10000}};
        s.g_points = {{30, 30}, {300, 300}};
        s.C = 3;
        CHECK_FALSE(check_precedes(s));
    }
    SUBCASE("missing g(C*n) is an error") {
        RelationSample s;
        s.f_points = {{2, 4}};
        s.g_points = {{2, 4}};
        s.C = 2;
        CHECK_THROWS_AS(check_precedes(s), RelationError);
    }
    SUBCASE("non-monotone indices are rejected") {
        RelationSample s;
        s.f_points = {{2, 4}, {2, 5}};
        s.g_points = {{2, 4}};
        s.C = 1;
        CHECK_THROWS_AS(check_precedes(s), RelationError);
    }
}

TEST_CASE("collapse volumes precede the identity baseline") {
    // Sampled at n_arg = vol_x(m): the collapse volume is hx*f+1, far below
    // C*n_arg + C at C = 1; monotone in C afterwards.
    auto cfg = FamilyConfig::toy(2);
    RelationSample s;
    for (std::uint64_t m = 2; m <= 4; ++m) {
        const std::uint64_t n_arg = to_u64(vol_x(m, cfg), "vol");
        s.f_points.emplace_back(n_arg, collapse_volume_on_full_x(m, cfg));
        s.g_points.emplace_back(n_arg, n_arg);
    }
    std::sort(s.f_points.begin(), s.f_points.end());
    std::sort(s.g_points.begin(), s.g_points.end());
    s.C = 1;
    CHECK(check_precedes(s));
}

TEST_CASE("relation check is monotone in C") {
    RelationSample s;
    s.f_points = {{1, 5}, {2, 7}};
    s.g_points = {{1, 2}, {2, 3}, {4, 5}};
    s.C = 1;
    CHECK_FALSE(check_precedes(s)); // 5 > 1*2+1
    s.C = 2;
    CHECK(check_precedes(s)); // 5 <= 2*3+2 and 7 <= 2*5+2
}

TEST_CASE("separation experiment rows, oracle mode") {
    ExperimentOptions options;
    options.cap_horizon = 9;
    auto rows = run_separation_experiment(FamilyConfig::toy(2), {2}, ExperimentMode::Oracle,
                                          options);
    REQUIRE(rows.size() == 1);
    const ExperimentRow& row = rows[0];
    CHECK(row.n == 2);
    CHECK(row.k == 2);
    CHECK(row.vol_x_value == 18);
    CHECK(row.upper_volume == 9);
    CHECK(row.lower_target == 10);
    CHECK(row.evidence_value == 10);
    CHECK(row.evidence_kind == "oracle-infeasible-cap(binding=horizon)");
    CHECK(row.verdict);
}

TEST_CASE("separation experiment rows, certificate mode") {
    auto rows = run_separation_experiment(FamilyConfig::paper(), {2, 3},
                                          ExperimentMode::Certificate, {});
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].lower_target == 2 * (BigInt(1) << 32) + 1);
    CHECK(rows[0].evidence_kind == "arithmetic-certificate");
    CHECK(rows[0].upper_volume == 131073);
    CHECK(rows[0].verdict);
    CHECK(rows[1].verdict);
}

TEST_CASE("empty experiment emits only the header") {
    auto rows = run_separation_experiment(FamilyConfig::toy(2), {}, ExperimentMode::Oracle, {});
    CHECK(experiment_csv(rows) ==
          "n,k,vol_X,lower_target,evidence_kind,evidence_value,"
          "upper_construction,upper_volume,verdict\n");
}

TEST_CASE("experiment refusals are recorded per row") {
    // n = 1 has k = f(1) = 1; there is no k-1 side to certify.
    auto rows = run_separation_experiment(FamilyConfig::toy(2), {1, 2}, ExperimentMode::Oracle,
                                          {});
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].evidence_kind.find("refused") != std::string::npos);
    CHECK_FALSE(rows[0].verdict);
    CHECK(rows[1].verdict);
}
