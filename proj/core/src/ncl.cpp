#include "nclkit/ncl.hpp"

#include <algorithm>
#include <limits>

#include "nclkit/error.hpp"

namespace nclkit {

namespace {

constexpr std::uint8_t kUnknown = std::numeric_limits<std::uint8_t>::max();

class NclSearch {
public:
    explicit NclSearch(const Graph& g) : n_(g.vertex_count()), closed_(static_cast<std::size_t>(n_)) {
        for (Vertex v = 0; v < n_; ++v) closed_[v] = g.closed_neighborhood(v);
        memo_.assign(std::size_t{1} << n_, kUnknown);
    }

    int solve() {
        int best = 0;
        for (Vertex v = 0; v < n_ && best < n_; ++v) best = std::max(best, 1 + extensions(vertex_bit(v), closed_[v], 1));
        return best;
    }

    NestedComplexitySequence certificate(int length) {
        NestedComplexitySequence cert;
        Vertex first = 0;
        while (1 + extensions(vertex_bit(first), closed_[first], 1) != length) ++first;
        VertexMask prefix = vertex_bit(first);
        VertexMask dominators = closed_[first];
        cert.b.push_back(first);
        for (int remaining = length - 1; remaining > 0; --remaining) {
            for (Vertex v = 0; v < n_; ++v) {
                const VertexMask escape = dominators & ~closed_[v];
                if (escape == 0) continue;
                const VertexMask next = prefix | vertex_bit(v);
                if (extensions(next, dominators & closed_[v], mask_size(next)) != remaining - 1) continue;
                cert.a.push_back(std::countr_zero(escape));
                cert.b.push_back(v);
                prefix = next;
                dominators &= closed_[v];
                break;
            }
        }
        return cert;
    }

private:
    // Longest continuation of a prefix with vertex set `prefix`.
    int extensions(VertexMask prefix, VertexMask dominators, int size) {
        std::uint8_t& slot = memo_[prefix];
        if (slot != kUnknown) return slot;
        int best = 0;
        const int ceiling = n_ - size;
        if (dominators != 0) {
            for (Vertex v = 0; v < n_ && best < ceiling; ++v) {
                if ((dominators & ~closed_[v]) == 0) continue;
                best = std::max(best, 1 + extensions(prefix | vertex_bit(v), dominators & closed_[v], size + 1));
            }
        }
        slot = static_cast<std::uint8_t>(best);
        return best;
    }

    int n_;
    std::vector<VertexMask> closed_;
    std::vector<std::uint8_t> memo_;
};

}  // namespace

NclResult ncl_exact(const Graph& g, bool want_certificate, const NclOptions& options) {
    const int cap = std::min(options.max_vertices, kHardNclCap);
    require_vertex_cap(g, cap, "ncl_exact");
    NclResult result;
    const int n = g.vertex_count();
    if (n == 0) {
        result.note = "empty graph: no nested complexity sequence exists, NCL reported as 0";
        return result;
    }
    if (n > 20 && options.notice) {
        const auto mib = (std::uint64_t{1} << n) >> 20;
        options.notice("ncl_exact: " + std::to_string(n) + " vertices, memo table of 2^" + std::to_string(n) +
                       " bytes (" + std::to_string(mib) + " MiB)");
    }
    NclSearch search(g);
    result.value = search.solve();
    if (want_certificate) result.certificate = search.certificate(result.value);
    return result;
}

namespace {

// Some a has every prefix vertex in N[a] and next outside N[a].
bool has_witness(const Graph& g, const std::vector<Vertex>& prefix, Vertex next) {
    const auto in_closed = [&](Vertex center, Vertex x) { return center == x || g.adjacent(center, x); };
    for (Vertex a = 0; a < g.vertex_count(); ++a) {
        if (in_closed(a, next)) continue;
        if (std::all_of(prefix.begin(), prefix.end(), [&](Vertex b) { return in_closed(a, b); })) return true;
    }
    return false;
}

int longest_from(const Graph& g, std::vector<Vertex>& sequence, std::vector<bool>& used) {
    int best = static_cast<int>(sequence.size());
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (used[v] || !has_witness(g, sequence, v)) continue;
        used[v] = true;
        sequence.push_back(v);
        best = std::max(best, longest_from(g, sequence, used));
        sequence.pop_back();
        used[v] = false;
    }
    return best;
}

}  // namespace

int ncl_naive(const Graph& g) {
    if (g.vertex_count() > kNaiveNclCap) {
        throw limit_exceeded("ncl_naive: graph has " + std::to_string(g.vertex_count()) + " vertices, cap is " +
                             std::to_string(kNaiveNclCap));
    }
    int best = 0;
    std::vector<bool> used(static_cast<std::size_t>(g.vertex_count()), false);
    std::vector<Vertex> sequence;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        used[v] = true;
        sequence.push_back(v);
        best = std::max(best, longest_from(g, sequence, used));
        sequence.pop_back();
        used[v] = false;
    }
    return best;
}

Check check_certificate(const Graph& g, const NestedComplexitySequence& cert) {
    for (const auto* list : {&cert.b, &cert.a}) {
        for (Vertex v : *list) {
            if (v < 0 || v >= g.vertex_count()) {
                throw invalid_input("certificate vertex " + std::to_string(v) + " outside 0.." +
                                    std::to_string(g.vertex_count() - 1));
            }
        }
    }
    if (cert.b.empty()) return Check::fail("certificate has an empty b sequence");
    if (cert.a.size() + 1 != cert.b.size()) {
        return Check::fail("certificate has " + std::to_string(cert.b.size()) + " b vertices but " +
                           std::to_string(cert.a.size()) + " witnesses (expected " + std::to_string(cert.b.size() - 1) + ")");
    }
    const auto in_closed = [&](Vertex center, Vertex x) { return center == x || g.adjacent(center, x); };
    for (std::size_t k = 1; k < cert.b.size(); ++k) {
        const Vertex a = cert.a[k - 1];
        for (std::size_t i = 0; i < k; ++i) {
            if (!in_closed(a, cert.b[i])) {
                return Check::fail("clause k=" + std::to_string(k) + ": b_" + std::to_string(i + 1) + " = " +
                                   std::to_string(cert.b[i]) + " is not in N[a_" + std::to_string(k) + " = " +
                                   std::to_string(a) + "]");
            }
        }
        if (in_closed(a, cert.b[k])) {
            return Check::fail("clause k=" + std::to_string(k) + ": b_" + std::to_string(k + 1) + " = " +
                               std::to_string(cert.b[k]) + " lies in N[a_" + std::to_string(k) + " = " +
                               std::to_string(a) + "]");
        }
    }
    return Check::pass();
}

bool verify_certificate(const Graph& g, const NestedComplexitySequence& cert) {
    return check_certificate(g, cert).ok;
}

std::optional<BipartiteBoundResult> ncl_upper_bound_bipartite(const Graph& g, int search_limit, int cap) {
    if (search_limit < 2) throw invalid_input("search_limit must be at least 2");
    search_limit = std::min(search_limit, 61);
    for (int total = 2; total <= search_limit; ++total) {
        for (int m = 1; m < total; ++m) {
            const int n = total - m;
            if (!has_kmn_subgraph(g, m, n, cap)) {
                return BipartiteBoundResult{m, n, (std::int64_t{1} << (total + 1)) - 2};
            }
        }
    }
    return std::nullopt;
}

NestedComplexitySequence marking_chain(int genus, int punctures) {
    if (genus < 0 || punctures < 0 || 2 * genus + punctures <= 2 || 3 * genus + punctures < 5) {
        throw invalid_input("marking chain needs 2g+p > 2 and 3g+p >= 5");
    }
    const int xi = 3 * genus - 3 + punctures;
    NestedComplexitySequence chain;
    for (int i = 0; i < 2 * xi; ++i) chain.b.push_back(i);
    for (int i = 1; i <= xi - 1; ++i) chain.a.push_back(xi + i);    // eta_{i+1}
    for (int i = 0; i < xi; ++i) chain.a.push_back(i);              // gamma_1..gamma_xi
    return chain;
}

NestedComplexitySequence multipartite_chain(int r) {
    if (r < 1) throw invalid_input("r must be at least 1");
    NestedComplexitySequence chain;
    for (int i = 0; i < 2 * r; ++i) chain.b.push_back(i);
    chain.a.push_back(0);
    for (int k = 2; k <= r; ++k) {
        chain.a.push_back(2 * k - 1);  // a_{2k-2} = b_{2k}
        chain.a.push_back(2 * k - 2);  // a_{2k-1} = b_{2k-1}
    }
    return chain;
}

}  // namespace nclkit
