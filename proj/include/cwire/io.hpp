#pragma once

#include <memory>
#include <string>

#include "cwire/graph.hpp"
#include "cwire/wiring.hpp"

namespace cwire {

/// Canonical text form:
///   graph <name>
///   v <id> [n=<nat> col=<nat> row=<nat>]   (vertices ascending)
///   e <a> <b>                              (a < b, edges ascending)
/// Parsing accepts '#' comments and blank lines; serialization emits the
/// canonical form, so serialize(parse(x)) == x on canonical input.
std::string serialize_graph(const Graph& g);
Graph parse_graph(const std::string& text);

Graph load_graph(const std::string& path);
void save_graph(const Graph& g, const std::string& path);

/// Canonical text form:
///   wiring <guest-name> -> <host-name>
///   vmap <guest-v> <host-v>                  (ascending)
///   emap <guest-u> <guest-v> : <h0> ... <hk> (u < v, ascending; k = 0 allowed)
std::string serialize_wiring(const Wiring& w);
Wiring parse_wiring(const std::string& text,
                    std::shared_ptr<const Graph> guest,
                    std::shared_ptr<const Graph> host);

Wiring load_wiring(const std::string& path,
                   std::shared_ptr<const Graph> guest,
                   std::shared_ptr<const Graph> host);
void save_wiring(const Wiring& w, const std::string& path);

} // namespace cwire
