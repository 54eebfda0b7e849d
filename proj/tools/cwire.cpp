// Command-line front end: family generators, wiring construction and
// validation, the exact search, bound verifiers, and the separation
// experiment.
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "cwire/canonical.hpp"
#include "cwire/experiment.hpp"
#include "cwire/io.hpp"
#include "cwire/relation.hpp"
#include "cwire/search.hpp"

using namespace cwire;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInfeasible = 1; // solve: certified infeasible within cap
constexpr int kExitInvalid = 2;    // validation / verification failure
constexpr int kExitExhausted = 3;  // solver budget exhausted
constexpr int kExitParse = 4;      // malformed input file

void write_text(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw Error("cannot write '" + path + "'");
    out << text;
}

std::vector<std::pair<std::uint64_t, BigInt>> load_points(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open points file '" + path + "'");
    std::vector<std::pair<std::uint64_t, BigInt>> points;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string a, b;
        if (!(ls >> a)) continue;
        if (a[0] == '#') continue;
        if (!(ls >> b)) throw ParseError(lineno, "expected '<n> <value>'");
        try {
            points.emplace_back(std::stoull(a), BigInt(b));
        } catch (const std::exception&) {
            throw ParseError(lineno, "bad point '" + a + " " + b + "'");
        }
    }
    return points;
}

std::uint64_t parse_nat_arg(const std::string& text, const char* what) {
    try {
        std::size_t used = 0;
        const unsigned long long v = std::stoull(text, &used);
        if (used != text.size()) throw std::invalid_argument(text);
        return v;
    } catch (const std::exception&) {
        throw Error(std::string("bad ") + what + " '" + text + "'");
    }
}

std::vector<std::uint64_t> parse_n_list(const std::string& text) {
    std::vector<std::uint64_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(parse_nat_arg(item, "family index"));
    }
    return out;
}

struct ScheduleArgs {
    std::string schedule = "paper";
    std::string colfn = "default";

    FamilyConfig config() const {
        return FamilyConfig{parse_schedule(schedule), parse_column_function(colfn)};
    }

    void attach(CLI::App* cmd) {
        cmd->add_option("--schedule", schedule, "height schedule: paper or toy:<base>");
        cmd->add_option("--colfn", colfn, "column function registry name");
    }
};

int cmd_build(const std::string& what_x, const std::string& what_y,
              const std::vector<std::uint64_t>& ladder, const ScheduleArgs& sched,
              std::uint64_t family, std::uint64_t cap, const std::string& out) {
    Graph g("empty", {}, {});
    if (!what_x.empty()) {
        g = build_x(parse_nat_arg(what_x, "family index"), sched.config(), cap);
    } else if (!what_y.empty()) {
        g = build_y(parse_nat_arg(what_y, "family index"), sched.config(), cap);
    } else if (ladder.size() == 3) {
        g = build_ladder({ladder[0], ladder[1], ladder[2]}, family, cap);
    } else {
        throw Error("build needs exactly one of --xn, --yn, --ladder");
    }
    write_text(out, serialize_graph(g));
    std::cerr << g.name() << ": " << g.vertex_count() << " vertices, " << g.edge_count()
              << " edges\n";
    return kExitOk;
}

int cmd_verify(const std::string& wiring_path, const std::string& guest_path,
               const std::string& host_path) {
    auto guest = share(load_graph(guest_path));
    auto host = share(load_graph(host_path));
    Wiring w = load_wiring(wiring_path, guest, host);
    auto violations = validate(w);
    if (!violations.empty()) {
        std::cout << "invalid: " << violations.size() << " violation(s)\n";
        for (const auto& v : violations) {
            std::cout << "  [" << to_string(v.kind) << "] " << v.detail << "\n";
        }
        return kExitInvalid;
    }
    std::cout << "valid\n"
              << "vertex_multiplicity " << vertex_multiplicity(w) << "\n"
              << "edge_congestion " << edge_congestion(w) << "\n"
              << "wiring_k " << wiring_k(w) << "\n"
              << "volume " << volume(w) << "\n";
    return kExitOk;
}

int cmd_wire(const std::string& method, const std::string& gamma_path, std::uint64_t n,
             const ScheduleArgs& sched, std::uint64_t cap, const std::string& out,
             const std::string& host_out) {
    Graph gamma = load_graph(gamma_path);
    auto cfg = sched.config();
    Wiring w = [&]() {
        if (method == "subdivide") return subdivision_wiring(gamma, n, cfg, cap);
        if (method == "collapse") return collapse_wiring(gamma, n, cfg, cap);
        if (method == "phi") return compact_reembedding_wiring(gamma, n, cfg, cap);
        if (method == "composite") {
            CompositeResult r = composite_wiring(gamma, cfg, cap);
            std::cerr << "budget index " << r.budget_n << "; pieces:";
            for (const auto& [family, how] : r.piece_methods) {
                std::cerr << " " << family << "->" << how;
            }
            std::cerr << "\n";
            return std::move(r.wiring);
        }
        throw Error("unknown method '" + method + "'");
    }();
    write_text(out, serialize_wiring(w));
    if (!host_out.empty()) save_graph(w.host(), host_out);
    std::cerr << "wiring_k " << wiring_k(w) << ", volume " << volume(w) << "\n";
    return kExitOk;
}

int cmd_solve(const std::string& gamma_path, const std::string& host_path, std::uint64_t k,
              std::uint64_t volume_cap, std::uint64_t node_limit, unsigned jobs,
              std::size_t max_guest, std::size_t max_host, const std::string& out) {
    Graph gamma = load_graph(gamma_path);
    Graph host = load_graph(host_path);
    SearchBudget budget;
    budget.k = k;
    if (volume_cap > 0) budget.volume_cap = volume_cap;
    if (node_limit > 0) budget.node_limit = node_limit;
    SearchLimits limits;
    limits.max_guest_vertices = max_guest;
    limits.max_host_vertices = max_host;
    SearchResult r = min_wiring_volume(gamma, host, budget, limits, jobs);
    switch (r.status) {
        case SearchStatus::Exact:
            std::cout << "exact " << *r.min_volume << " (explored " << r.explored << ")\n";
            if (!out.empty() && r.witness) write_text(out, serialize_wiring(*r.witness));
            return kExitOk;
        case SearchStatus::InfeasibleWithinCap:
            std::cout << "infeasible-within-cap " << r.cap_used << " (certified lower bound "
                      << r.certified_lower_bound << ", explored " << r.explored << ")\n";
            return kExitInfeasible;
        case SearchStatus::BudgetExhausted:
            std::cout << "budget-exhausted (explored " << r.explored << ")\n";
            return kExitExhausted;
    }
    return kExitInvalid;
}

int cmd_profile(const std::string& host_path, std::uint64_t k, std::uint64_t size_bound,
                const std::vector<std::string>& candidate_paths, const std::string& from_path,
                std::uint64_t max_vertices, bool all_mode, unsigned jobs,
                const std::string& out) {
    Graph host = load_graph(host_path);
    std::vector<Graph> candidates;
    for (const auto& path : candidate_paths) candidates.push_back(load_graph(path));
    if (!from_path.empty()) {
        Graph base = load_graph(from_path);
        for (Graph& g : all_subgraphs(base, max_vertices, !all_mode)) {
            candidates.push_back(std::move(g));
        }
    }
    if (candidates.empty()) throw Error("profile needs --candidate or --from");
    ProfilePoint p = wiring_profile_point(k, size_bound, candidates, host, SearchLimits{}, jobs);
    if (p.volume) {
        std::cout << "profile " << *p.volume << " attained by candidate " << p.witness_index
                  << " (" << candidates[p.witness_index].name() << ")\n";
    } else {
        std::cout << "profile infinity attained by candidate " << p.witness_index << " ("
                  << candidates[p.witness_index].name() << ")\n";
    }
    if (!out.empty()) write_text(out, serialize_graph(candidates[p.witness_index]));
    return kExitOk;
}

int cmd_check_bounds(const std::string& which, std::uint64_t n, std::int64_t m,
                     const ScheduleArgs& sched) {
    auto cfg = sched.config();
    bool all = true;
    auto show = [&](const VerificationReport& report) {
        std::cout << to_string(report);
        all = all && report.all_hold();
    };
    if (which == "lower" || which == "all") {
        if (m >= 0) {
            show(verify_lower_bound_arithmetic(n, static_cast<std::uint64_t>(m), cfg));
        } else {
            for (std::uint64_t mm = 1; mm < n; ++mm) {
                show(verify_lower_bound_arithmetic(n, mm, cfg));
            }
        }
    }
    if (which == "constants" || which == "all") show(verify_profile_constants(n, cfg));
    if (which == "upper" || which == "all") show(verify_upper_bound_chain(n, cfg));
    std::cout << (all ? "all claims hold\n" : "some claims FAILED\n");
    return all ? kExitOk : kExitInvalid;
}

int cmd_experiment(const std::string& sub, const ScheduleArgs& sched, const std::string& ns,
                   const std::string& mode_text, std::uint64_t cap_horizon, unsigned jobs,
                   const std::string& out) {
    if (sub != "separation") throw Error("unknown experiment '" + sub + "'");
    ExperimentMode mode;
    if (mode_text == "oracle") {
        mode = ExperimentMode::Oracle;
    } else if (mode_text == "certificate") {
        mode = ExperimentMode::Certificate;
    } else {
        throw Error("mode must be oracle or certificate");
    }
    ExperimentOptions options;
    options.cap_horizon = cap_horizon;
    options.jobs = jobs;
    auto rows = run_separation_experiment(sched.config(), parse_n_list(ns), mode, options);
    write_text(out, experiment_csv(rows));
    return kExitOk;
}

int cmd_relation(const std::string& f_path, const std::string& g_path, std::uint64_t C) {
    RelationSample sample;
    sample.f_points = load_points(f_path);
    sample.g_points = load_points(g_path);
    sample.C = C;
    const bool holds = check_precedes(sample);
    std::cout << (holds ? "true" : "false") << "\n";
    return holds ? kExitOk : kExitInvalid;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"coarse wiring toolkit: ladder families, wiring measurement, exact search"};
    app.require_subcommand(1);

    // build
    auto* build = app.add_subcommand("build", "generate a family member or ladder graph");
    std::string xn, yn;
    std::vector<std::uint64_t> ladder;
    std::uint64_t family = 0, cap = kDefaultMaterializationCap;
    std::string build_out;
    ScheduleArgs build_sched;
    build->add_option("--xn", xn, "guest family index n");
    build->add_option("--yn", yn, "host family index n");
    build->add_option("--ladder", ladder, "columns spacing segments")->expected(3);
    build->add_option("--family", family, "family label for --ladder");
    build->add_option("--cap", cap, "materialization cap (vertices)");
    build->add_option("-o,--out", build_out, "output file ('-' for stdout)");
    build_sched.attach(build);

    // verify
    auto* verify = app.add_subcommand("verify", "validate and measure a wiring");
    std::string v_wiring, v_guest, v_host;
    verify->add_option("--wiring", v_wiring)->required();
    verify->add_option("--guest", v_guest)->required();
    verify->add_option("--host", v_host)->required();

    // wire
    auto* wire = app.add_subcommand("wire", "construct a canonical wiring");
    std::string w_method, w_gamma, w_out, w_host_out;
    std::uint64_t w_n = 0, w_cap = kDefaultMaterializationCap;
    ScheduleArgs wire_sched;
    wire->add_option("--method", w_method, "subdivide|collapse|phi|composite")->required();
    wire->add_option("--gamma", w_gamma, "guest graph file")->required();
    wire->add_option("--n", w_n, "family index (unused for composite)");
    wire->add_option("--cap", w_cap, "materialization cap");
    wire->add_option("-o,--out", w_out, "wiring output file");
    wire->add_option("--host-out", w_host_out, "also write the host graph here");
    wire_sched.attach(wire);

    // solve
    auto* solve = app.add_subcommand("solve", "exact minimal-volume search");
    std::string s_gamma, s_host, s_out;
    std::uint64_t s_k = 1, s_cap = 0, s_nodes = 0;
    unsigned s_jobs = 1;
    std::size_t s_max_guest = 12, s_max_host = 70;
    solve->add_option("--gamma", s_gamma)->required();
    solve->add_option("--host", s_host)->required();
    solve->add_option("--k", s_k)->required();
    solve->add_option("--volume-cap", s_cap, "certify infeasibility up to this volume");
    solve->add_option("--node-limit", s_nodes, "abort after this many search nodes");
    solve->add_option("--jobs", s_jobs, "parallel candidate testing");
    solve->add_option("--max-guest", s_max_guest, "guest size refusal limit");
    solve->add_option("--max-host", s_max_host, "host size refusal limit");
    solve->add_option("-o,--out", s_out, "witness wiring output file");

    // profile
    auto* profile = app.add_subcommand("profile", "wiring profile point over candidates");
    std::string p_host, p_from, p_out;
    std::uint64_t p_k = 1, p_bound = 0, p_maxv = 6;
    std::vector<std::string> p_candidates;
    bool p_all = false;
    unsigned p_jobs = 1;
    profile->add_option("--host", p_host)->required();
    profile->add_option("--k", p_k)->required();
    profile->add_option("--size-bound", p_bound)->required();
    profile->add_option("--candidate", p_candidates, "guest graph file (repeatable)");
    profile->add_option("--from", p_from, "enumerate subgraphs of this graph");
    profile->add_option("--max-vertices", p_maxv, "subgraph enumeration size limit");
    profile->add_flag("--all-subgraphs", p_all, "include disconnected subgraphs");
    profile->add_option("--jobs", p_jobs);
    profile->add_option("-o,--out", p_out, "write the attaining guest here");

    // check-bounds
    auto* check = app.add_subcommand("check-bounds", "exact-integer bound verifiers");
    std::string c_which = "all";
    std::uint64_t c_n = 2;
    std::int64_t c_m = -1;
    ScheduleArgs check_sched;
    check->add_option("--which", c_which, "lower|constants|upper|all");
    check->add_option("--n", c_n)->required();
    check->add_option("--m", c_m, "lower-bound m (default: all m < n)");
    check_sched.attach(check);

    // experiment
    auto* experiment = app.add_subcommand("experiment", "reproduction experiments (CSV)");
    std::string e_sub = "separation", e_ns, e_mode = "oracle", e_out;
    std::uint64_t e_horizon = 12;
    unsigned e_jobs = 1;
    ScheduleArgs exp_sched;
    experiment->add_option("kind", e_sub, "experiment kind (separation)");
    experiment->add_option("--n", e_ns, "comma-separated family indices")->required();
    experiment->add_option("--mode", e_mode, "oracle|certificate");
    experiment->add_option("--cap-horizon", e_horizon, "solver feasibility horizon");
    experiment->add_option("--jobs", e_jobs);
    experiment->add_option("-o,--out", e_out, "CSV output file");
    exp_sched.attach(experiment);

    // relation
    auto* relation = app.add_subcommand("relation", "finite-sample order relation check");
    std::string r_f, r_g;
    std::uint64_t r_c = 1;
    relation->add_option("--f", r_f, "points file for f")->required();
    relation->add_option("--g", r_g, "points file for g")->required();
    relation->add_option("--C", r_c, "candidate constant")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*build) return cmd_build(xn, yn, ladder, build_sched, family, cap, build_out);
        if (*verify) return cmd_verify(v_wiring, v_guest, v_host);
        if (*wire) return cmd_wire(w_method, w_gamma, w_n, wire_sched, w_cap, w_out, w_host_out);
        if (*solve) {
            return cmd_solve(s_gamma, s_host, s_k, s_cap, s_nodes, s_jobs, s_max_guest,
                             s_max_host, s_out);
        }
        if (*profile) {
            return cmd_profile(p_host, p_k, p_bound, p_candidates, p_from, p_maxv, p_all,
                               p_jobs, p_out);
        }
        if (*check) return cmd_check_bounds(c_which, c_n, c_m, check_sched);
        if (*experiment) {
            return cmd_experiment(e_sub, exp_sched, e_ns, e_mode, e_horizon, e_jobs, e_out);
        }
        if (*relation) return cmd_relation(r_f, r_g, r_c);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    }
    return kExitOk;
}
