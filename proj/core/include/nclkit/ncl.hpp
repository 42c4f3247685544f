#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "nclkit/graph.hpp"
#include "nclkit/invariants.hpp"

namespace nclkit {

// Nested complexity sequence b_1..b_n with witnesses a_1..a_{n-1}: for each k,
// b_1..b_k lie in N[a_k] and b_{k+1} does not. Witnesses may repeat and may be b's.
struct NestedComplexitySequence {
    std::vector<Vertex> b;
    std::vector<Vertex> a;

    int length() const { return static_cast<int>(b.size()); }
};

inline constexpr int kDefaultNclCap = 24;
// The memo table has 2^n one-byte entries; beyond this the allocation is refused.
inline constexpr int kHardNclCap = 30;
inline constexpr int kNaiveNclCap = 8;

struct NclOptions {
    int max_vertices = kDefaultNclCap;
    // Receives the memory estimate for graphs above 20 vertices, and similar notes.
    std::function<void(const std::string&)> notice;
};

struct NclResult {
    int value = 0;
    std::optional<NestedComplexitySequence> certificate;
    std::string note;  // set for the empty graph
};

// Exact NCL by memoised search over prefix vertex sets. The set of vertices that
// dominate a prefix S, D(S) = intersection of N[b] over b in S, is carried down the
// recursion; v extends S iff D(S) is not inside N[v]. A repeated vertex can never
// extend (D(S) is inside N[b] for b in S), so sequences stay distinct for free.
// The certificate is the lexicographically least optimal b-sequence with the least
// valid witness at each step.
NclResult ncl_exact(const Graph& g, bool want_certificate = false, const NclOptions& options = {});

// Direct transcription of the definition: depth-first over all sequences of distinct
// vertices, scanning every vertex for a witness. Independent oracle; <= 8 vertices.
int ncl_naive(const Graph& g);

// Throws invalid_input for out-of-range vertices; an invalid certificate is a
// failed Check naming the first failing clause.
Check check_certificate(const Graph& g, const NestedComplexitySequence& cert);
bool verify_certificate(const Graph& g, const NestedComplexitySequence& cert);

struct BipartiteBoundResult {
    int m = 0;
    int n = 0;
    std::int64_t bound = 0;  // 2^(m+n+1) - 2
};

// Smallest bound 2^(m+n+1) - 2 over pairs with m + n <= search_limit such that g has
// no K_{m,n} subgraph; ties go to the smaller m. Absent if every such pair occurs.
std::optional<BipartiteBoundResult> ncl_upper_bound_bipartite(const Graph& g, int search_limit,
                                                              int cap = kDefaultDetectorCap);

// The chain built from a maximal multicurve and its transversals on
// gen_marking_graph(genus, punctures, *): b = gamma_1..gamma_xi, eta_1..eta_xi and
// a = eta_2..eta_xi, gamma_1..gamma_xi. Valid for every eta adjacency.
NestedComplexitySequence marking_chain(int genus, int punctures);

// The sequence for gen_multipartite(r, 2): b = 0..2r-1, a_1 = b_1,
// a_{2k-2} = b_{2k}, a_{2k-1} = b_{2k-1}.
NestedComplexitySequence multipartite_chain(int r);

}  // namespace nclkit
