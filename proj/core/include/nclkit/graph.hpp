#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace nclkit {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

// Vertex set over a graph with at most 64 vertices; bit v is vertex v.
using VertexMask = std::uint64_t;

inline constexpr int kMaskVertices = 64;
inline constexpr int kMaxGraphVertices = 1 << 14;

constexpr VertexMask vertex_bit(Vertex v) { return VertexMask{1} << v; }
constexpr int mask_size(VertexMask m) { return std::popcount(m); }
constexpr VertexMask low_mask(int n) { return n >= 64 ? ~VertexMask{0} : (vertex_bit(n) - 1); }

// Vertices of a mask in ascending order.
std::vector<Vertex> mask_vertices(VertexMask m);
VertexMask to_mask(std::span<const Vertex> vertices);

// Immutable finite simple graph on vertices 0..n-1, stored as an adjacency bit matrix.
class Graph {
public:
    Graph() = default;

    // Throws invalid_input on an out-of-range endpoint or a self-loop. Duplicate
    // edges (in either orientation) collapse.
    Graph(int vertex_count, std::span<const Edge> edges);

    int vertex_count() const { return n_; }
    std::size_t edge_count() const { return edge_count_; }

    bool adjacent(Vertex u, Vertex v) const {
        return (bits_[row_offset(u) + static_cast<std::size_t>(v) / 64] >> (v % 64)) & 1U;
    }
    int degree(Vertex v) const;
    std::vector<Vertex> neighbors(Vertex v) const;
    // Edges (u, v) with u < v, sorted.
    std::vector<Edge> edges() const;

    // True when the graph is small enough for the VertexMask accessors.
    bool fits_mask() const { return n_ <= kMaskVertices; }
    // Open neighbourhood N(v). Requires fits_mask().
    VertexMask neighborhood(Vertex v) const;
    // Closed neighbourhood N[v] = {v} + N(v). Requires fits_mask().
    VertexMask closed_neighborhood(Vertex v) const { return neighborhood(v) | vertex_bit(v); }
    VertexMask all_vertices() const { return low_mask(n_); }

    // Induced subgraph on `vertices`, relabelled 0..k-1 in the given order.
    Graph induced_subgraph(std::span<const Vertex> vertices) const;
    Graph complement() const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.bits_ == b.bits_;
    }

private:
    std::size_t row_offset(Vertex v) const { return static_cast<std::size_t>(v) * words_; }
    void set_edge(Vertex u, Vertex v);

    int n_ = 0;
    std::size_t words_ = 0;
    std::size_t edge_count_ = 0;
    std::vector<std::uint64_t> bits_;
};

inline Graph build_graph(int vertex_count, std::span<const Edge> edges) {
    return Graph(vertex_count, edges);
}

// Throws limit_exceeded unless the graph fits in a VertexMask and has at most `cap` vertices.
void require_vertex_cap(const Graph& g, int cap, const char* what);

}  // namespace nclkit
