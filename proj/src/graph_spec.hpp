#pragma once

#include <string>
#include <vector>

#include "graph.hpp"

namespace lalpha {

/// Compact graph descriptor used by the verify harness and the CLI verify
/// command. Grammar (parameters separated by '_' or ','):
///   k<n> p<n> c<n> e<n> star<n>      complete / path / cycle / empty / star
///   kpq<p>_<q>                       complete bipartite
///   pine<p>_<q>  h<n>_<l>  kk<n>_<l> theta<c>_<s>_<eta>
///   er<n>_<seed>                     Erdos-Renyi G(n, 1/2), fixed seed
///   cer<n>_<seed>                    as er but reseeded until connected
struct GraphSpec {
    std::string text;
    std::string kind;         // family keyword from the grammar
    std::vector<int> params;
    Graph graph;
};

GraphSpec parse_graph_spec(const std::string& text);

/// G(n, 1/2) from a fixed-seed mt19937; deterministic across runs.
Graph erdos_renyi(int n, unsigned seed);
Graph connected_erdos_renyi(int n, unsigned seed);

} // namespace lalpha
