#include "nclkit/graph.hpp"

#include <algorithm>
#include <string>

#include "nclkit/error.hpp"

namespace nclkit {

std::vector<Vertex> mask_vertices(VertexMask m) {
    std::vector<Vertex> out;
    out.reserve(static_cast<std::size_t>(mask_size(m)));
    while (m != 0) {
        out.push_back(std::countr_zero(m));
        m &= m - 1;
    }
    return out;
}

VertexMask to_mask(std::span<const Vertex> vertices) {
    VertexMask m = 0;
    for (Vertex v : vertices) m |= vertex_bit(v);
    return m;
}

Graph::Graph(int vertex_count, std::span<const Edge> edges) : n_(vertex_count) {
    if (vertex_count < 0 || vertex_count > kMaxGraphVertices) {
        throw invalid_input("vertex count " + std::to_string(vertex_count) + " outside [0, " +
                            std::to_string(kMaxGraphVertices) + "]");
    }
    words_ = (static_cast<std::size_t>(n_) + 63) / 64;
    bits_.assign(static_cast<std::size_t>(n_) * words_, 0);
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n_ || v >= n_) {
            throw invalid_input("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                                ") has an endpoint outside 0.." + std::to_string(n_ - 1));
        }
        if (u == v) throw invalid_input("self-loop at vertex " + std::to_string(u));
        if (!adjacent(u, v)) {
            set_edge(u, v);
            ++edge_count_;
        }
    }
}

void Graph::set_edge(Vertex u, Vertex v) {
    bits_[row_offset(u) + static_cast<std::size_t>(v) / 64] |= std::uint64_t{1} << (v % 64);
    bits_[row_offset(v) + static_cast<std::size_t>(u) / 64] |= std::uint64_t{1} << (u % 64);
}

int Graph::degree(Vertex v) const {
    int d = 0;
    for (std::size_t w = 0; w < words_; ++w) d += std::popcount(bits_[row_offset(v) + w]);
    return d;
}

std::vector<Vertex> Graph::neighbors(Vertex v) const {
    std::vector<Vertex> out;
    for (Vertex u = 0; u < n_; ++u) {
        if (adjacent(v, u)) out.push_back(u);
    }
    return out;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < n_; ++u) {
        for (Vertex v = u + 1; v < n_; ++v) {
            if (adjacent(u, v)) out.emplace_back(u, v);
        }
    }
    return out;
}

VertexMask Graph::neighborhood(Vertex v) const {
    return n_ == 0 ? 0 : bits_[row_offset(v)];
}

Graph Graph::induced_subgraph(std::span<const Vertex> vertices) const {
    std::vector<Edge> sub;
    const int k = static_cast<int>(vertices.size());
    for (int i = 0; i < k; ++i) {
        if (vertices[i] < 0 || vertices[i] >= n_) {
            throw invalid_input("induced_subgraph: vertex " + std::to_string(vertices[i]) + " out of range");
        }
        for (int j = i + 1; j < k; ++j) {
            if (vertices[i] == vertices[j]) throw invalid_input("induced_subgraph: repeated vertex");
            if (adjacent(vertices[i], vertices[j])) sub.emplace_back(i, j);
        }
    }
    return Graph(k, sub);
}

Graph Graph::complement() const {
    std::vector<Edge> out;
    for (Vertex u = 0; u < n_; ++u) {
        for (Vertex v = u + 1; v < n_; ++v) {
            if (!adjacent(u, v)) out.emplace_back(u, v);
        }
    }
    return Graph(n_, out);
}

void require_vertex_cap(const Graph& g, int cap, const char* what) {
    const int limit = std::min(cap, kMaskVertices);
    if (g.vertex_count() > limit) {
        throw limit_exceeded(std::string(what) + ": graph has " + std::to_string(g.vertex_count()) +
                             " vertices, cap is " + std::to_string(limit));
    }
}

}  // namespace nclkit
