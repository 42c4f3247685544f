#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "nclkit/graph.hpp"
#include "nclkit/rational.hpp"

namespace nclkit {

enum class GraphFamily {
    half_graph,
    bipartite_half_graph,
    multipartite,
    marking,
    complete,
    edgeless,
    cycle,
    random,
};

// Adjacency among the transversals eta_i of a marking graph.
enum class EtaAdjacency {
    none,  // no eta-eta edges
    all,   // every eta-eta pair adjacent
    path,  // eta_i ~ eta_j iff |i - j| >= 2
};

std::string_view to_string(GraphFamily f);
std::string_view to_string(EtaAdjacency e);
// Accepts both "half_graph" and "half-graph" spellings.
std::optional<GraphFamily> parse_graph_family(std::string_view s);
std::optional<EtaAdjacency> parse_eta_adjacency(std::string_view s);

// Half-graph of height n: a_1..a_n are vertices 0..n-1, b_1..b_n are n..2n-1, and
// a_i ~ b_j iff i >= j. The bipartite form is H_n. The non-bipartite representative
// makes the a-side a clique and leaves the b-side independent.
Graph gen_half_graph(int n, bool bipartite);

// K_r(t): part i holds vertices i*t .. i*t+t-1.
Graph gen_multipartite(int r, int t);

// Abstract marking of a surface: gamma_1..gamma_xi (vertices 0..xi-1) pairwise adjacent,
// eta_1..eta_xi (vertices xi..2xi-1) with gamma_i ~ eta_j iff i != j, xi = 3g-3+p.
Graph gen_marking_graph(int genus, int punctures, EtaAdjacency eta = EtaAdjacency::all);

Graph gen_complete(int n);
Graph gen_edgeless(int n);
Graph gen_cycle(int n);

// Each pair (i, j), i < j, is visited in graph6 order (j ascending, then i ascending)
// and consumes one output x of std::mt19937_64 seeded with `seed`; the edge is kept
// iff x * den < num * 2^64 where edge_probability = num/den. Bit-identical everywhere.
Graph gen_random(int n, const Rational& edge_probability, std::uint64_t seed);

struct GraphFamilySpec {
    GraphFamily family = GraphFamily::edgeless;
    int n = 0;                  // half graphs, complete, edgeless, cycle, random
    int r = 0;                  // multipartite
    int t = 0;                  // multipartite
    int genus = 0;              // marking
    int punctures = 0;          // marking
    EtaAdjacency eta = EtaAdjacency::all;
    Rational edge_probability{0};
    std::uint64_t seed = 0;
};

Graph generate(const GraphFamilySpec& spec);

// One-line human description of the vertex labelling, e.g. for edge-list comments.
std::string describe_labels(const GraphFamilySpec& spec);

}  // namespace nclkit
