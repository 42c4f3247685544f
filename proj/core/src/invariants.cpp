#include "nclkit/invariants.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <set>

#include "nclkit/error.hpp"

namespace nclkit {

namespace {

std::vector<VertexMask> neighborhoods(const Graph& g) {
    std::vector<VertexMask> adj(static_cast<std::size_t>(g.vertex_count()));
    for (Vertex v = 0; v < g.vertex_count(); ++v) adj[v] = g.neighborhood(v);
    return adj;
}

void require_positive(int value, const char* name) {
    if (value < 1) throw invalid_input(std::string(name) + " must be at least 1");
}

class CliqueSearch {
public:
    explicit CliqueSearch(const Graph& g) : adj_(neighborhoods(g)) {}

    VertexMask run(VertexMask all) {
        expand(0, 0, all, 0);
        return best_;
    }

private:
    void expand(VertexMask clique, int size, VertexMask candidates, VertexMask excluded) {
        if (candidates == 0) {
            if (size > best_size_) {
                best_size_ = size;
                best_ = clique;
            }
            return;
        }
        if (size + mask_size(candidates) <= best_size_) return;

        // Pivot with the most candidate neighbours.
        Vertex pivot = -1;
        int pivot_score = -1;
        for (VertexMask rest = candidates | excluded; rest != 0; rest &= rest - 1) {
            const Vertex u = std::countr_zero(rest);
            const int score = mask_size(candidates & adj_[u]);
            if (score > pivot_score) {
                pivot_score = score;
                pivot = u;
            }
        }
        for (VertexMask branch = candidates & ~adj_[pivot]; branch != 0; branch &= branch - 1) {
            const Vertex v = std::countr_zero(branch);
            expand(clique | vertex_bit(v), size + 1, candidates & adj_[v], excluded & adj_[v]);
            candidates &= ~vertex_bit(v);
            excluded |= vertex_bit(v);
            if (size + mask_size(candidates) <= best_size_) return;
        }
    }

    std::vector<VertexMask> adj_;
    VertexMask best_ = 0;
    int best_size_ = 0;
};

class Colouring {
public:
    Colouring(const Graph& g, int lower_bound) : n_(g.vertex_count()), adj_(neighborhoods(g)), lower_(lower_bound) {}

    int run() {
        colour_.assign(static_cast<std::size_t>(n_), -1);
        best_ = greedy_dsatur();
        if (best_ > lower_) {
            std::vector<VertexMask> forbidden(static_cast<std::size_t>(n_), 0);
            colour_.assign(static_cast<std::size_t>(n_), -1);
            search(forbidden, 0, 0);
        }
        return best_;
    }

private:
    Vertex select(const std::vector<VertexMask>& forbidden) const {
        Vertex best = -1;
        int best_sat = -1;
        int best_deg = -1;
        VertexMask uncoloured = 0;
        for (Vertex v = 0; v < n_; ++v) {
            if (colour_[v] < 0) uncoloured |= vertex_bit(v);
        }
        for (VertexMask rest = uncoloured; rest != 0; rest &= rest - 1) {
            const Vertex v = std::countr_zero(rest);
            const int sat = mask_size(forbidden[v]);
            const int deg = mask_size(adj_[v] & uncoloured);
            if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
                best = v;
                best_sat = sat;
                best_deg = deg;
            }
        }
        return best;
    }

    void assign(std::vector<VertexMask>& forbidden, Vertex v, int c) {
        colour_[v] = c;
        for (VertexMask rest = adj_[v]; rest != 0; rest &= rest - 1) forbidden[std::countr_zero(rest)] |= vertex_bit(c);
    }

    int greedy_dsatur() {
        std::vector<VertexMask> forbidden(static_cast<std::size_t>(n_), 0);
        int used = 0;
        for (int coloured = 0; coloured < n_; ++coloured) {
            const Vertex v = select(forbidden);
            const int c = std::countr_one(forbidden[v]);
            assign(forbidden, v, c);
            used = std::max(used, c + 1);
        }
        return used;
    }

    void search(const std::vector<VertexMask>& forbidden, int coloured, int used) {
        if (best_ == lower_ || used >= best_) return;
        if (coloured == n_) {
            best_ = used;
            return;
        }
        const Vertex v = select(forbidden);
        // c == used opens a fresh colour.
        for (int c = 0; c <= used && std::max(used, c + 1) < best_; ++c) {
            if (forbidden[v] & vertex_bit(c)) continue;
            auto next = forbidden;
            assign(next, v, c);
            search(next, coloured + 1, std::max(used, c + 1));
            colour_[v] = -1;
            if (best_ == lower_) return;
        }
    }

    int n_;
    std::vector<VertexMask> adj_;
    int lower_;
    std::vector<int> colour_;
    int best_ = 0;
};

class HalfGraphSearch {
public:
    HalfGraphSearch(const Graph& g, bool bipartite, int cap)
        : adj_(neighborhoods(g)), all_(g.all_vertices()), bipartite_(bipartite), cap_(cap) {}

    HalfGraphResult run() {
        extend(0, all_, all_);
        HalfGraphResult out;
        out.height = best_height_;
        if (best_height_ > 0) out.witness = HalfGraphWitness{best_height_, best_a_, best_b_};
        return out;
    }

private:
    // a_cands: vertices adjacent to every chosen b (and, bipartite, to no chosen a).
    // b_cands: vertices adjacent to no chosen a (and, bipartite, to no chosen b).
    void extend(VertexMask used, VertexMask a_cands, VertexMask b_cands) {
        const int depth = static_cast<int>(a_.size());
        if (depth > best_height_) {
            best_height_ = depth;
            best_a_ = a_;
            best_b_ = b_;
        }
        if (best_height_ >= cap_) return;
        a_cands &= ~used;
        b_cands &= ~used;
        const int room = std::min({mask_size(a_cands), mask_size(b_cands), mask_size(a_cands | b_cands) / 2});
        if (depth + room <= best_height_) return;

        for (VertexMask ra = a_cands; ra != 0; ra &= ra - 1) {
            const Vertex a = std::countr_zero(ra);
            for (VertexMask b_options = b_cands & adj_[a]; b_options != 0; b_options &= b_options - 1) {
                const Vertex b = std::countr_zero(b_options);
                VertexMask next_a = a_cands & adj_[b];
                VertexMask next_b = b_cands & ~adj_[a];
                if (bipartite_) {
                    next_a &= ~adj_[a];
                    next_b &= ~adj_[b];
                }
                a_.push_back(a);
                b_.push_back(b);
                extend(used | vertex_bit(a) | vertex_bit(b), next_a, next_b);
                a_.pop_back();
                b_.pop_back();
                if (best_height_ >= cap_) return;
            }
        }
    }

    std::vector<VertexMask> adj_;
    VertexMask all_;
    bool bipartite_;
    int cap_;
    std::vector<Vertex> a_, b_;
    int best_height_ = 0;
    std::vector<Vertex> best_a_, best_b_;
};

class MultipartiteSearch {
public:
    MultipartiteSearch(const Graph& g, int r, int t) : adj_(neighborhoods(g)), all_(g.all_vertices()), r_(r), t_(t) {}

    std::optional<MultipartiteWitness> run() {
        parts_.assign(static_cast<std::size_t>(r_), {});
        if (place(0, all_, all_, -1)) return MultipartiteWitness{parts_};
        return std::nullopt;
    }

private:
    // `outside`: vertices adjacent to every vertex of the completed parts.
    // `inside`: candidates for the current part (also non-adjacent to its members).
    bool place(int part, VertexMask outside, VertexMask inside, Vertex last) {
        auto& current = parts_[part];
        if (static_cast<int>(current.size()) == t_) {
            if (part + 1 == r_) return true;
            VertexMask next_outside = outside;
            for (Vertex v : current) next_outside &= adj_[v];
            const Vertex part_min = current.front();
            // Later parts start at a larger least vertex.
            const VertexMask next_inside = next_outside & ~low_mask(part_min + 1);
            const int needed = (r_ - part - 1) * t_;
            if (mask_size(next_outside) < needed) return false;
            return place(part + 1, next_outside, next_inside, -1);
        }
        VertexMask options = inside & ~low_mask(last + 1);
        const int needed_here = t_ - static_cast<int>(current.size());
        if (mask_size(options) < needed_here) return false;
        for (; options != 0; options &= options - 1) {
            const Vertex v = std::countr_zero(options);
            current.push_back(v);
            if (place(part, outside, inside & ~adj_[v] & ~vertex_bit(v), v)) return true;
            current.pop_back();
        }
        return false;
    }

    std::vector<VertexMask> adj_;
    VertexMask all_;
    int r_, t_;
    std::vector<std::vector<Vertex>> parts_;
};

}  // namespace

std::vector<Vertex> maximum_clique(const Graph& g) {
    require_vertex_cap(g, kMaskVertices, "maximum_clique");
    if (g.vertex_count() == 0) return {};
    return mask_vertices(CliqueSearch(g).run(g.all_vertices()));
}

int clique_number(const Graph& g) { return static_cast<int>(maximum_clique(g).size()); }

int chromatic_number(const Graph& g) {
    require_vertex_cap(g, kMaskVertices, "chromatic_number");
    if (g.vertex_count() == 0) return 0;
    return Colouring(g, clique_number(g)).run();
}

Rational density(const Graph& g) {
    const std::int64_t n = g.vertex_count();
    if (n < 2) throw invalid_input("density needs at least 2 vertices");
    return Rational(static_cast<std::int64_t>(g.edge_count()), n * (n - 1) / 2);
}

bool has_kmn_subgraph(const Graph& g, int m, int n, int cap) {
    require_positive(m, "m");
    require_positive(n, "n");
    require_vertex_cap(g, cap, "has_kmn_subgraph");
    if (m > n) std::swap(m, n);  // enumerate the smaller side
    if (m + n > g.vertex_count()) return false;
    const auto adj = neighborhoods(g);
    // Only vertices with degree >= n can sit on the small side.
    VertexMask eligible = 0;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (mask_size(adj[v]) >= n) eligible |= vertex_bit(v);
    }
    // Common open neighbourhood of the chosen side never meets the side itself.
    std::function<bool(int, VertexMask, VertexMask)> choose = [&](int chosen, VertexMask pool, VertexMask common) {
        if (chosen == m) return true;
        for (; pool != 0; pool &= pool - 1) {
            if (mask_size(pool) < m - chosen) return false;
            const Vertex v = std::countr_zero(pool);
            const VertexMask next = common & adj[v];
            if (mask_size(next) < n) continue;
            if (choose(chosen + 1, pool & ~low_mask(v + 1), next)) return true;
        }
        return false;
    };
    return choose(0, eligible, g.all_vertices());
}

std::optional<MultipartiteWitness> induced_multipartite(const Graph& g, int r, int t, int cap) {
    require_positive(r, "r");
    require_positive(t, "t");
    require_vertex_cap(g, cap, "induced_multipartite");
    if (static_cast<long long>(r) * t > g.vertex_count()) return std::nullopt;
    return MultipartiteSearch(g, r, t).run();
}

HalfGraphResult half_graph_height(const Graph& g, bool bipartite_only, std::optional<int> cap, int vertex_cap) {
    require_vertex_cap(g, vertex_cap, "half_graph_height");
    const int limit = cap ? *cap : g.vertex_count();
    if (limit <= 0 || g.edge_count() == 0) return {};
    return HalfGraphSearch(g, bipartite_only, limit).run();
}

bool is_edge_stable(const Graph& g, int k, int vertex_cap) {
    require_positive(k, "k");
    return half_graph_height(g, false, k, vertex_cap).height < k;
}

Check validate_clique(const Graph& g, const std::vector<Vertex>& clique) {
    for (std::size_t i = 0; i < clique.size(); ++i) {
        if (clique[i] < 0 || clique[i] >= g.vertex_count()) return Check::fail("clique vertex out of range");
        for (std::size_t j = i + 1; j < clique.size(); ++j) {
            if (clique[i] == clique[j]) return Check::fail("clique repeats a vertex");
            if (!g.adjacent(clique[i], clique[j])) {
                return Check::fail("clique vertices " + std::to_string(clique[i]) + " and " +
                                   std::to_string(clique[j]) + " are not adjacent");
            }
        }
    }
    return Check::pass();
}

Check validate_half_graph_witness(const Graph& g, const HalfGraphWitness& w, bool bipartite) {
    const auto n = static_cast<std::size_t>(w.height);
    if (w.height < 1 || w.a_vertices.size() != n || w.b_vertices.size() != n) {
        return Check::fail("half graph witness: part sizes do not match height");
    }
    std::set<Vertex> seen;
    for (const auto* part : {&w.a_vertices, &w.b_vertices}) {
        for (Vertex v : *part) {
            if (v < 0 || v >= g.vertex_count()) return Check::fail("half graph witness: vertex out of range");
            if (!seen.insert(v).second) return Check::fail("half graph witness: vertex " + std::to_string(v) + " repeated");
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const bool want = i >= j;
            if (g.adjacent(w.a_vertices[i], w.b_vertices[j]) != want) {
                return Check::fail("half graph witness: a_" + std::to_string(i + 1) + (want ? " !~ " : " ~ ") + "b_" +
                                   std::to_string(j + 1));
            }
        }
    }
    if (bipartite) {
        for (const auto* part : {&w.a_vertices, &w.b_vertices}) {
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t j = i + 1; j < n; ++j) {
                    if (g.adjacent((*part)[i], (*part)[j])) return Check::fail("half graph witness: edge inside a part");
                }
            }
        }
    }
    return Check::pass();
}

Check validate_multipartite_witness(const Graph& g, const MultipartiteWitness& w) {
    if (w.parts.empty()) return Check::fail("multipartite witness: no parts");
    const auto t = w.parts.front().size();
    if (t == 0) return Check::fail("multipartite witness: empty part");
    std::set<Vertex> seen;
    for (const auto& part : w.parts) {
        if (part.size() != t) return Check::fail("multipartite witness: parts differ in size");
        for (Vertex v : part) {
            if (v < 0 || v >= g.vertex_count()) return Check::fail("multipartite witness: vertex out of range");
            if (!seen.insert(v).second) return Check::fail("multipartite witness: vertex " + std::to_string(v) + " repeated");
        }
    }
    for (std::size_t p = 0; p < w.parts.size(); ++p) {
        for (std::size_t q = p; q < w.parts.size(); ++q) {
            for (std::size_t i = 0; i < t; ++i) {
                for (std::size_t j = (p == q ? i + 1 : 0); j < t; ++j) {
                    const Vertex u = w.parts[p][i];
                    const Vertex v = w.parts[q][j];
                    if (g.adjacent(u, v) != (p != q)) {
                        return Check::fail("multipartite witness: pair (" + std::to_string(u) + ", " + std::to_string(v) +
                                           (p == q ? ") inside a part is adjacent" : ") across parts is not adjacent"));
                    }
                }
            }
        }
    }
    return Check::pass();
}

}  // namespace nclkit
