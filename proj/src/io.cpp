#include "cwire/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace cwire {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> tokens;
    std::istringstream in(line);
    std::string tok;
    while (in >> tok) {
        if (tok[0] == '#') break; // trailing comment
        tokens.push_back(tok);
    }
    return tokens;
}

std::uint64_t parse_nat(const std::string& tok, std::size_t line, const char* what) {
    try {
        std::size_t used = 0;
        const unsigned long long v = std::stoull(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw ParseError(line, std::string("bad ") + what + " '" + tok + "'");
    }
}

// "key=value" with a numeric value.
std::uint64_t parse_kv(const std::string& tok, const char* key, std::size_t line) {
    const std::string prefix = std::string(key) + "=";
    if (tok.rfind(prefix, 0) != 0) {
        throw ParseError(line, "expected '" + prefix + "<nat>', got '" + tok + "'");
    }
    return parse_nat(tok.substr(prefix.size()), line, key);
}

} // namespace

std::string serialize_graph(const Graph& g) {
    std::ostringstream out;
    out << "graph " << g.name() << "\n";
    for (VertexId v : g.vertices()) {
        out << "v " << v;
        if (auto label = g.label(v)) {
            out << " n=" << label->family << " col=" << label->col << " row=" << label->row;
        }
        out << "\n";
    }
    for (const Edge& e : g.edges()) {
        out << "e " << e.a << " " << e.b << "\n";
    }
    return out.str();
}

Graph parse_graph(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;

    std::string name;
    bool have_header = false;
    std::vector<VertexId> vertices;
    std::vector<Edge> edges;
    std::set<Edge> edge_set;
    std::unordered_map<VertexId, GridLabel> labels;
    std::unordered_map<VertexId, bool> declared;

    while (std::getline(in, line)) {
        ++lineno;
        const auto tokens = tokenize(line);
        if (tokens.empty()) continue;
        if (tokens[0] == "graph") {
            if (have_header) throw ParseError(lineno, "duplicate graph header");
            if (tokens.size() != 2) throw ParseError(lineno, "expected 'graph <name>'");
            name = tokens[1];
            have_header = true;
        } else if (tokens[0] == "v") {
            if (!have_header) throw ParseError(lineno, "vertex before graph header");
            if (tokens.size() != 2 && tokens.size() != 5) {
                throw ParseError(lineno, "expected 'v <id>' or 'v <id> n=.. col=.. row=..'");
            }
            const VertexId id = parse_nat(tokens[1], lineno, "vertex id");
            if (declared.count(id)) {
                throw ParseError(lineno, "duplicate vertex id " + std::to_string(id));
            }
            declared[id] = true;
            vertices.push_back(id);
            if (tokens.size() == 5) {
                GridLabel label;
                label.family = static_cast<std::uint32_t>(parse_kv(tokens[2], "n", lineno));
                label.col = static_cast<std::uint32_t>(parse_kv(tokens[3], "col", lineno));
                label.row = parse_kv(tokens[4], "row", lineno);
                labels.emplace(id, label);
            }
        } else if (tokens[0] == "e") {
            if (!have_header) throw ParseError(lineno, "edge before graph header");
            if (tokens.size() != 3) throw ParseError(lineno, "expected 'e <id> <id>'");
            const VertexId a = parse_nat(tokens[1], lineno, "vertex id");
            const VertexId b = parse_nat(tokens[2], lineno, "vertex id");
            if (a == b) throw ParseError(lineno, "self-loop on vertex " + std::to_string(a));
            if (!declared.count(a) || !declared.count(b)) {
                throw ParseError(lineno, "edge references undeclared vertex");
            }
            const Edge e = make_edge(a, b);
            if (!edge_set.insert(e).second) {
                throw ParseError(lineno, "duplicate edge (" + std::to_string(e.a) + "," +
                                             std::to_string(e.b) + ")");
            }
            edges.push_back(e);
        } else {
            throw ParseError(lineno, "unknown directive '" + tokens[0] + "'");
        }
    }
    if (!have_header) throw ParseError(lineno == 0 ? 1 : lineno, "missing graph header");
    return Graph(std::move(name), std::move(vertices), std::move(edges), std::move(labels));
}

Graph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open graph file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_graph(buf.str());
}

void save_graph(const Graph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write graph file '" + path + "'");
    out << serialize_graph(g);
}

std::string serialize_wiring(const Wiring& w) {
    std::ostringstream out;
    out << "wiring " << w.guest().name() << " -> " << w.host().name() << "\n";
    for (const auto& [gv, hv] : w.vertex_map()) {
        out << "vmap " << gv << " " << hv << "\n";
    }
    for (const auto& [edge, walk] : w.walks()) {
        out << "emap " << edge.a << " " << edge.b << " :";
        for (VertexId hv : walk) out << " " << hv;
        out << "\n";
    }
    return out.str();
}

Wiring parse_wiring(const std::string& text,
                    std::shared_ptr<const Graph> guest,
                    std::shared_ptr<const Graph> host) {
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;

    bool have_header = false;
    std::map<VertexId, VertexId> vmap;
    std::map<Edge, std::vector<VertexId>> walks;

    while (std::getline(in, line)) {
        ++lineno;
        const auto tokens = tokenize(line);
        if (tokens.empty()) continue;
        if (tokens[0] == "wiring") {
            if (have_header) throw ParseError(lineno, "duplicate wiring header");
            if (tokens.size() != 4 || tokens[2] != "->") {
                throw ParseError(lineno, "expected 'wiring <guest> -> <host>'");
            }
            if (tokens[1] != guest->name()) {
                throw ParseError(lineno, "wiring names guest '" + tokens[1] +
                                             "' but the supplied guest is '" + guest->name() + "'");
            }
            if (tokens[3] != host->name()) {
                throw ParseError(lineno, "wiring names host '" + tokens[3] +
                                             "' but the supplied host is '" + host->name() + "'");
            }
            have_header = true;
        } else if (tokens[0] == "vmap") {
            if (!have_header) throw ParseError(lineno, "vmap before wiring header");
            if (tokens.size() != 3) throw ParseError(lineno, "expected 'vmap <guest-v> <host-v>'");
            const VertexId gv = parse_nat(tokens[1], lineno, "guest vertex");
            const VertexId hv = parse_nat(tokens[2], lineno, "host vertex");
            if (!guest->has_vertex(gv)) {
                throw ParseError(lineno, "unknown guest vertex " + std::to_string(gv));
            }
            if (!host->has_vertex(hv)) {
                throw ParseError(lineno, "unknown host vertex " + std::to_string(hv));
            }
            if (vmap.count(gv)) {
                throw ParseError(lineno, "duplicate vmap entry for " + std::to_string(gv));
            }
            vmap[gv] = hv;
        } else if (tokens[0] == "emap") {
            if (!have_header) throw ParseError(lineno, "emap before wiring header");
            if (tokens.size() < 5 || tokens[3] != ":") {
                throw ParseError(lineno, "expected 'emap <u> <v> : <h0> ...'");
            }
            const VertexId u = parse_nat(tokens[1], lineno, "guest vertex");
            const VertexId v = parse_nat(tokens[2], lineno, "guest vertex");
            if (!guest->has_edge(u, v)) {
                throw ParseError(lineno, "emap names (" + std::to_string(u) + "," +
                                             std::to_string(v) + ") which is not a guest edge");
            }
            const Edge e = make_edge(u, v);
            if (walks.count(e)) {
                throw ParseError(lineno, "duplicate emap entry for (" + std::to_string(e.a) +
                                             "," + std::to_string(e.b) + ")");
            }
            std::vector<VertexId> walk;
            for (std::size_t i = 4; i < tokens.size(); ++i) {
                const VertexId hv = parse_nat(tokens[i], lineno, "host vertex");
                if (!host->has_vertex(hv)) {
                    throw ParseError(lineno, "unknown host vertex " + std::to_string(hv));
                }
                walk.push_back(hv);
            }
            walks[e] = std::move(walk);
        } else {
            throw ParseError(lineno, "unknown directive '" + tokens[0] + "'");
        }
    }
    if (!have_header) throw ParseError(lineno == 0 ? 1 : lineno, "missing wiring header");
    return Wiring(std::move(guest), std::move(host), std::move(vmap), std::move(walks));
}

Wiring load_wiring(const std::string& path,
                   std::shared_ptr<const Graph> guest,
                   std::shared_ptr<const Graph> host) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open wiring file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_wiring(buf.str(), std::move(guest), std::move(host));
}

void save_wiring(const Wiring& w, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write wiring file '" + path + "'");
    out << serialize_wiring(w);
}

} // namespace cwire
