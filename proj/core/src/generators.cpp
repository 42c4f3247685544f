#include "nclkit/generators.hpp"

#include <array>
#include <random>
#include <string>
#include <vector>

#include "nclkit/error.hpp"

namespace nclkit {

namespace {

constexpr std::array<std::pair<GraphFamily, std::string_view>, 8> kFamilyNames{{
    {GraphFamily::half_graph, "half_graph"},
    {GraphFamily::bipartite_half_graph, "bipartite_half_graph"},
    {GraphFamily::multipartite, "multipartite"},
    {GraphFamily::marking, "marking"},
    {GraphFamily::complete, "complete"},
    {GraphFamily::edgeless, "edgeless"},
    {GraphFamily::cycle, "cycle"},
    {GraphFamily::random, "random"},
}};

std::string normalize(std::string_view s) {
    std::string out(s);
    for (char& c : out) {
        if (c == '-') c = '_';
    }
    return out;
}

void require(bool ok, const std::string& message) {
    if (!ok) throw invalid_input(message);
}

void require_order(long long vertices) {
    require(vertices <= kMaxGraphVertices,
            "generator would produce " + std::to_string(vertices) + " vertices (limit " +
                std::to_string(kMaxGraphVertices) + ")");
}

}  // namespace

std::string_view to_string(GraphFamily f) {
    for (auto [family, name] : kFamilyNames) {
        if (family == f) return name;
    }
    return "unknown";
}

std::string_view to_string(EtaAdjacency e) {
    switch (e) {
        case EtaAdjacency::none: return "none";
        case EtaAdjacency::all: return "all";
        case EtaAdjacency::path: return "path";
    }
    return "unknown";
}

std::optional<GraphFamily> parse_graph_family(std::string_view s) {
    const auto key = normalize(s);
    for (auto [family, name] : kFamilyNames) {
        if (key == name) return family;
    }
    return std::nullopt;
}

std::optional<EtaAdjacency> parse_eta_adjacency(std::string_view s) {
    if (s == "none") return EtaAdjacency::none;
    if (s == "all") return EtaAdjacency::all;
    if (s == "path") return EtaAdjacency::path;
    return std::nullopt;
}

Graph gen_half_graph(int n, bool bipartite) {
    require(n >= 1, "half graph height must be at least 1");
    require_order(2LL * n);
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j <= i; ++j) edges.emplace_back(i, n + j);
    }
    if (!bipartite) {
        for (int i = 0; i < n; ++i) {
            for (int k = i + 1; k < n; ++k) edges.emplace_back(i, k);
        }
    }
    return Graph(2 * n, edges);
}

Graph gen_multipartite(int r, int t) {
    require(r >= 1 && t >= 1, "multipartite graph needs r >= 1 and t >= 1");
    require_order(static_cast<long long>(r) * t);
    const int n = r * t;
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (u / t != v / t) edges.emplace_back(u, v);
        }
    }
    return Graph(n, edges);
}

Graph gen_marking_graph(int genus, int punctures, EtaAdjacency eta) {
    require(genus >= 0 && punctures >= 0, "genus and punctures must be non-negative");
    require(2LL * genus + punctures > 2 && 3LL * genus + punctures >= 5,
            "marking graph needs 2g+p > 2 and 3g+p >= 5");
    const long long xi_ll = 3LL * genus - 3 + punctures;
    require_order(2 * xi_ll);
    const int xi = static_cast<int>(xi_ll);
    std::vector<Edge> edges;
    const auto gamma = [](int i) { return i; };
    const auto eta_v = [xi](int i) { return xi + i; };
    for (int i = 0; i < xi; ++i) {
        for (int j = 0; j < xi; ++j) {
            if (i < j) edges.emplace_back(gamma(i), gamma(j));
            if (i != j) edges.emplace_back(gamma(i), eta_v(j));
            if (i < j) {
                const bool linked = eta == EtaAdjacency::all || (eta == EtaAdjacency::path && j - i >= 2);
                if (linked) edges.emplace_back(eta_v(i), eta_v(j));
            }
        }
    }
    return Graph(2 * xi, edges);
}

Graph gen_complete(int n) {
    require(n >= 0, "vertex count must be non-negative");
    require_order(n);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    }
    return Graph(n, edges);
}

Graph gen_edgeless(int n) {
    require(n >= 0, "vertex count must be non-negative");
    return Graph(n, {});
}

Graph gen_cycle(int n) {
    require(n >= 3, "cycle needs at least 3 vertices");
    require_order(n);
    std::vector<Edge> edges;
    for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
    return Graph(n, edges);
}

Graph gen_random(int n, const Rational& edge_probability, std::uint64_t seed) {
    require(n >= 0, "vertex count must be non-negative");
    require_order(n);
    require(edge_probability >= Rational(0) && edge_probability <= Rational(1),
            "edge probability " + to_string(edge_probability) + " outside [0, 1]");
    __extension__ using u128 = unsigned __int128;
    const auto num = static_cast<u128>(edge_probability.numerator());
    const auto den = static_cast<u128>(edge_probability.denominator());
    const u128 threshold = num << 64;
    std::mt19937_64 rng(seed);
    std::vector<Edge> edges;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            const u128 x = rng();
            if (x * den < threshold) edges.emplace_back(i, j);
        }
    }
    return Graph(n, edges);
}

Graph generate(const GraphFamilySpec& spec) {
    switch (spec.family) {
        case GraphFamily::half_graph: return gen_half_graph(spec.n, false);
        case GraphFamily::bipartite_half_graph: return gen_half_graph(spec.n, true);
        case GraphFamily::multipartite: return gen_multipartite(spec.r, spec.t);
        case GraphFamily::marking: return gen_marking_graph(spec.genus, spec.punctures, spec.eta);
        case GraphFamily::complete: return gen_complete(spec.n);
        case GraphFamily::edgeless: return gen_edgeless(spec.n);
        case GraphFamily::cycle: return gen_cycle(spec.n);
        case GraphFamily::random: return gen_random(spec.n, spec.edge_probability, spec.seed);
    }
    throw invalid_input("unknown graph family");
}

std::string describe_labels(const GraphFamilySpec& spec) {
    const auto range = [](int lo, int hi) { return std::to_string(lo) + ".." + std::to_string(hi); };
    switch (spec.family) {
        case GraphFamily::half_graph:
        case GraphFamily::bipartite_half_graph:
            return std::string(to_string(spec.family)) + " n=" + std::to_string(spec.n) + ": a_1..a_n = " +
                   range(0, spec.n - 1) + ", b_1..b_n = " + range(spec.n, 2 * spec.n - 1);
        case GraphFamily::multipartite:
            return "multipartite r=" + std::to_string(spec.r) + " t=" + std::to_string(spec.t) +
                   ": part i = i*t .. i*t+t-1";
        case GraphFamily::marking: {
            const int xi = 3 * spec.genus - 3 + spec.punctures;
            return "marking g=" + std::to_string(spec.genus) + " p=" + std::to_string(spec.punctures) +
                   " eta=" + std::string(to_string(spec.eta)) + ": gamma_1..gamma_xi = " + range(0, xi - 1) +
                   ", eta_1..eta_xi = " + range(xi, 2 * xi - 1);
        }
        case GraphFamily::random:
            return "random n=" + std::to_string(spec.n) + " p=" + to_string(spec.edge_probability) +
                   " seed=" + std::to_string(spec.seed);
        case GraphFamily::complete:
        case GraphFamily::edgeless:
        case GraphFamily::cycle:
            return std::string(to_string(spec.family)) + " n=" + std::to_string(spec.n);
    }
    return {};
}

}  // namespace nclkit
