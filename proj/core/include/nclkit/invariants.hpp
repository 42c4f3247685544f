#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nclkit/graph.hpp"
#include "nclkit/rational.hpp"

namespace nclkit {

// Default vertex cap for the exponential pattern detectors (half graphs, K_r(t), K_{m,n}).
inline constexpr int kDefaultDetectorCap = 25;

// a_vertices[i] ~ b_vertices[j] iff i >= j; the two lists are disjoint.
struct HalfGraphWitness {
    int height = 0;
    std::vector<Vertex> a_vertices;
    std::vector<Vertex> b_vertices;
};

// Induced K_r(t): parts are independent, every cross pair adjacent.
struct MultipartiteWitness {
    std::vector<std::vector<Vertex>> parts;
};

struct HalfGraphResult {
    int height = 0;
    std::optional<HalfGraphWitness> witness;  // absent iff height == 0
};

// Validation result; `reason` names the first failing clause when !ok.
struct Check {
    bool ok = true;
    std::string reason;

    explicit operator bool() const { return ok; }
    static Check pass() { return {}; }
    static Check fail(std::string why) { return {false, std::move(why)}; }
};

// Maximum clique, vertices ascending. Bron-Kerbosch with Tomita pivoting and a size
// bound. Requires at most 64 vertices.
std::vector<Vertex> maximum_clique(const Graph& g);
int clique_number(const Graph& g);

// Exact chromatic number by DSATUR branch and bound. Requires at most 64 vertices.
int chromatic_number(const Graph& g);

// |E| / C(n, 2). Throws invalid_input when n < 2.
Rational density(const Graph& g);

// Not-necessarily-induced K_{m,n}: disjoint A, B with |A| = m, |B| = n and every
// cross pair adjacent.
bool has_kmn_subgraph(const Graph& g, int m, int n, int cap = kDefaultDetectorCap);

// First induced K_r(t) in canonical search order (parts ordered by least vertex,
// vertices ascending within a part).
std::optional<MultipartiteWitness> induced_multipartite(const Graph& g, int r, int t,
                                                        int cap = kDefaultDetectorCap);

// Largest n such that 2n distinct vertices realise the half-graph cross pattern. In
// general mode within-part edges are ignored; with bipartite_only both parts must
// be independent (induced H_n). With `cap` the search stops at min(height, cap).
HalfGraphResult half_graph_height(const Graph& g, bool bipartite_only, std::optional<int> cap = std::nullopt,
                                  int vertex_cap = kDefaultDetectorCap);

// No induced half graph of height >= k.
bool is_edge_stable(const Graph& g, int k, int vertex_cap = kDefaultDetectorCap);

// Witness validators. They only use Graph::adjacent and share nothing with the searches.
Check validate_clique(const Graph& g, const std::vector<Vertex>& clique);
Check validate_half_graph_witness(const Graph& g, const HalfGraphWitness& w, bool bipartite);
Check validate_multipartite_witness(const Graph& g, const MultipartiteWitness& w);

}  // namespace nclkit
