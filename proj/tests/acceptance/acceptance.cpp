// Acceptance checks: one PASS/FAIL line per criterion, nonzero exit if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "nclkit/error.hpp"
#include "nclkit/experiment.hpp"
#include "nclkit/generators.hpp"
#include "nclkit/invariants.hpp"
#include "nclkit/ncl.hpp"
#include "nclkit/obstruction.hpp"
#include "nclkit/serialize.hpp"
#include "nclkit/surface.hpp"
#include "support/oracles.hpp"
#include "support/process.hpp"

using namespace nclkit;
using Clock = std::chrono::steady_clock;

namespace {

// Failures collected while a criterion runs; empty means pass.
class Findings {
public:
    void expect(bool ok, const std::string& what) {
        if (!ok) failures_.push_back(what);
    }
    bool ok() const { return failures_.empty(); }
    std::string summary() const {
        std::string out;
        const std::size_t shown = std::min<std::size_t>(failures_.size(), 4);
        for (std::size_t i = 0; i < shown; ++i) out += (i ? "; " : "") + failures_[i];
        if (failures_.size() > shown) out += "; ... " + std::to_string(failures_.size() - shown) + " more";
        return out;
    }

private:
    std::vector<std::string> failures_;
};

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

template <typename F>
double timed(F&& f) {
    const auto start = Clock::now();
    f();
    return seconds_since(start);
}

const std::vector<std::pair<int, int>> kMarkingGrid{{0, 5}, {1, 2}, {0, 6}, {1, 3}, {2, 0}, {2, 1}, {0, 7}};
const std::vector<EtaAdjacency> kEtaOptions{EtaAdjacency::none, EtaAdjacency::all, EtaAdjacency::path};

std::string label(int g, int p) { return "(" + std::to_string(g) + "," + std::to_string(p) + ")"; }

// Every graph evaluated in criteria 1-3, for the |V| bound in criterion 4.
std::vector<std::pair<Graph, int>> g_evaluated;

int ncl_of(const Graph& g) {
    const int value = ncl_exact(g).value;
    g_evaluated.emplace_back(g, value);
    return value;
}

void criterion_1(Findings& f) {
    for (int r = 1; r <= 5; ++r) {
        int value = 0;
        const double secs = timed([&] { value = ncl_of(gen_multipartite(r, 2)); });
        f.expect(value == 2 * r, "NCL(K_" + std::to_string(r) + "(2)) = " + std::to_string(value));
        f.expect(secs < 1.0, "K_" + std::to_string(r) + "(2) took " + std::to_string(secs) + " s");
    }
}

void criterion_2(Findings& f) {
    const auto start = Clock::now();
    for (auto [g, p] : kMarkingGrid) {
        for (auto eta : kEtaOptions) {
            const int value = ncl_of(gen_marking_graph(g, p, eta));
            f.expect(value == 6 * g - 6 + 2 * p, "marking " + label(g, p) + " eta " + std::string(to_string(eta)) +
                                                     ": NCL " + std::to_string(value));
        }
    }
    const double secs = seconds_since(start);
    f.expect(secs < 30.0, "suite took " + std::to_string(secs) + " s");
}

void criterion_3(Findings& f) {
    const auto start = Clock::now();
    for (std::uint64_t i = 0; i < oracle::labelled_graph_count(5); ++i) {
        const Graph g = oracle::graph_from_index(5, i);
        f.expect(ncl_of(g) == ncl_naive(g), "5-vertex graph #" + std::to_string(i));
    }
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
        const Graph g = gen_random(7, Rational(1, 2), seed);
        f.expect(ncl_of(g) == ncl_naive(g), "7-vertex graph seed " + std::to_string(seed));
    }
    const double secs = seconds_since(start);
    f.expect(secs < 120.0, "took " + std::to_string(secs) + " s");
}

void criterion_4(Findings& f) {
    std::mt19937_64 rng(4);
    for (int pair = 0; pair < 100; ++pair) {
        const int n = 2 + static_cast<int>(rng() % 9);
        const Graph g = gen_random(n, Rational(1 + static_cast<int>(rng() % 4), 5), rng());
        std::vector<Vertex> keep;
        for (Vertex v = 0; v < n; ++v) {
            if (rng() % 2) keep.push_back(v);
        }
        if (keep.empty()) keep.push_back(0);
        const Graph h = g.induced_subgraph(keep);
        const int ng = ncl_exact(g).value;
        const int nh = ncl_exact(h).value;
        f.expect(nh <= ng, "pair " + std::to_string(pair) + ": NCL(H) = " + std::to_string(nh) + " > NCL(G) = " +
                               std::to_string(ng));
    }
    for (const auto& [g, value] : g_evaluated) {
        f.expect(value <= g.vertex_count(), "NCL " + std::to_string(value) + " exceeds |V| = " +
                                                std::to_string(g.vertex_count()));
    }
    f.expect(!g_evaluated.empty(), "criteria 1-3 evaluated no graphs");
    for (int n = 1; n <= 8; ++n) {
        f.expect(ncl_exact(gen_complete(n)).value == 1, "NCL(K_" + std::to_string(n) + ") != 1");
    }
}

void criterion_5(Findings& f) {
    constexpr int kSearchLimit = 10;
    std::mt19937_64 rng(5);
    int with_bound = 0;
    for (int i = 0; i < 100; ++i) {
        const int n = 1 + static_cast<int>(rng() % 10);
        const Graph g = gen_random(n, Rational(1 + static_cast<int>(rng() % 4), 5), rng());
        const auto bound = ncl_upper_bound_bipartite(g, kSearchLimit);
        if (!bound) continue;
        ++with_bound;
        const int value = ncl_exact(g).value;
        f.expect(value <= bound->bound, "graph " + std::to_string(i) + ": NCL " + std::to_string(value) + " > bound " +
                                            std::to_string(bound->bound));
    }
    f.expect(with_bound > 0, "no random graph produced a bound");
    const Graph edgeless = gen_edgeless(4);
    const auto bound = ncl_upper_bound_bipartite(edgeless, kSearchLimit);
    f.expect(bound && bound->m == 1 && bound->n == 1 && bound->bound == 6, "edgeless graph: expected (1,1) with bound 6");
    f.expect(ncl_exact(edgeless).value == 2, "edgeless graph NCL != 2");
}

void criterion_6(Findings& f) {
    for (int n = 1; n <= 4; ++n) {
        const Graph h = gen_half_graph(n, true);
        f.expect(half_graph_height(h, true).height == n, "bipartite height of H_" + std::to_string(n));
        f.expect(half_graph_height(h, false).height == n, "height of H_" + std::to_string(n));
    }
    for (int n = 1; n <= 6; ++n) {
        const int value = ncl_exact(gen_half_graph(n, true)).value;
        f.expect(value >= n, "NCL(H_" + std::to_string(n) + ") = " + std::to_string(value));
    }
    for (auto [g, p] : kMarkingGrid) {
        for (auto eta : kEtaOptions) {
            f.expect(is_edge_stable(gen_marking_graph(g, p, eta), 6 * g - 5 + 2 * p),
                     "marking " + label(g, p) + " eta " + std::string(to_string(eta)) + " not edge-stable");
        }
    }
}

std::int64_t multipartite_bound(int g, int p) { return g + (g + p) / 2 - 1; }

void criterion_7(Findings& f) {
    const auto verdict = [](const Graph& g, int genus, int punctures) {
        return obstruct(g, surface_params(genus, punctures)).verdict;
    };
    f.expect(verdict(gen_complete(7), 2, 0) == Verdict::obstructed, "K_7 vs (2,0)");
    const auto k7 = obstruct(gen_complete(7), surface_params(2, 0));
    f.expect(!k7.fired_tests().empty() && k7.fired_tests()[0].test == kCliqueTest, "K_7 vs (2,0) not via clique");

    ObstructionBudget all;
    all.all_tests = true;
    const Graph h5 = gen_half_graph(5, true);
    const auto r = obstruct(h5, surface_params(0, 5), all);
    bool bipartite_fired = false;
    bool general_fired = false;
    for (const auto& t : r.fired_tests()) {
        bipartite_fired |= t.test == kBipartiteHalfGraphTest && t.threshold == 5;
        general_fired |= t.test == kHalfGraphTest && t.threshold == 4;
        f.expect(static_cast<bool>(validate_outcome(h5, r.surface, t)), "H_5 certificate for " + t.test);
    }
    f.expect(r.verdict == Verdict::obstructed, "H_5 vs (0,5)");
    f.expect(bipartite_fired, "H_5: bipartite half-graph threshold 5 did not fire");
    f.expect(general_fired, "H_5: half-graph threshold 4 did not fire");

    f.expect(verdict(gen_cycle(4), 0, 5) == Verdict::obstructed, "C_4 vs (0,5)");
    f.expect(verdict(gen_cycle(5), 0, 5) == Verdict::no_obstruction_found, "C_5 vs (0,5)");

    const std::vector<std::pair<int, int>> grid{{0, 5}, {1, 2}, {0, 6}, {1, 3}, {2, 0}, {2, 1}, {0, 7},
                                                {3, 0}, {0, 8}, {2, 2}, {1, 5}, {3, 2}};
    for (auto [g, p] : grid) {
        const auto s = surface_params(g, p);
        for (int rr = 1; rr <= 5; ++rr) {
            const bool expected = rr <= multipartite_bound(g, p);
            f.expect(krt_membership(rr, 2, s) == expected, "krt_membership r=" + std::to_string(rr) + " " + label(g, p));
            const bool obstructed = obstruct(gen_multipartite(rr, 2), s).verdict == Verdict::obstructed;
            f.expect(obstructed != expected, "K_" + std::to_string(rr) + "(2) verdict on " + label(g, p));
        }
    }
}

void criterion_8(Findings& f) {
    f.expect(surface_params(0, 5).upper_density == Rational(0), "upper_density(0,5)");
    f.expect(surface_params(1, 2).upper_density == Rational(0), "upper_density(1,2)");
    f.expect(surface_params(2, 0).upper_density == Rational(1, 2), "upper_density(2,0)");
    for (int g = 0; g <= 8; ++g) {
        for (int p = 0; p <= 12; ++p) {
            if (2 * g + p <= 2 || 3 * g + p < 5) continue;
            const auto s = surface_params(g, p);
            const std::int64_t l = multipartite_bound(g, p);
            f.expect(s.xi == 3 * g - 3 + p, "xi " + label(g, p));
            f.expect(s.ncl_bound == 2 * (3 * g - 3 + p), "ncl_bound " + label(g, p));
            f.expect(s.multipartite_bound == l, "multipartite bound " + label(g, p));
            f.expect(s.upper_density == Rational(1) - Rational(1, l), "upper_density " + label(g, p));
        }
    }
    for (auto [g, p] : {std::pair{0, 3}, {0, 4}, {1, 1}}) {
        bool rejected = false;
        try {
            surface_params(g, p);
        } catch (const invalid_input&) {
            rejected = true;
        }
        f.expect(rejected, label(g, p) + " accepted");
    }
}

void criterion_9(Findings& f) {
    for (int l = 2; l <= 4; ++l) {
        const Rational limit = Rational(1) - Rational(1, l);
        Rational previous = density(gen_multipartite(l, 1));
        bool increasing = true;
        for (int t = 2; t <= 16; ++t) {
            const Rational d = density(gen_multipartite(l, t));
            if (!(d > previous)) increasing = false;
            previous = d;
        }
        f.expect(increasing, "density(K_" + std::to_string(l) + "(t)) not strictly increasing in t (K_" +
                                 std::to_string(l) + "(2) " + to_string(density(gen_multipartite(l, 2))) + ", K_" +
                                 std::to_string(l) + "(16) " + to_string(previous) + ")");
        const Rational gap = previous > limit ? previous - limit : limit - previous;
        f.expect(gap <= Rational(1, l * 16), "density(K_" + std::to_string(l) + "(16)) not within 1/(16l) of the limit");
    }
    for (int r = 1; r <= 5; ++r) {
        const Rational bound = density_ncl_lower_bound(Rational(1) - Rational(1, r));
        f.expect(bound == Rational(2 * r), "density_ncl_lower_bound(1-1/" + std::to_string(r) + ")");
        f.expect(bound == Rational(ncl_exact(gen_multipartite(r, 2)).value), "equality case r=" + std::to_string(r));
    }
}

void criterion_10(Findings& f) {
    const auto run = [](const std::string& cmd) { return nclkit::testing::run_shell(cmd, NCLKIT_CLI_PATH); };
    testing::write_file(testing::scratch_dir() / "cert.json", run("NCLKIT gen marking 2 1 | NCLKIT ncl - --certificate").out);
    const std::vector<std::string> commands{
        "NCLKIT gen random 12 1/2 99",
        "NCLKIT gen random 12 1/2 99 --format graph6",
        "NCLKIT gen marking 2 1 --eta path",
        "NCLKIT gen half-graph 6 | NCLKIT ncl -",
        "NCLKIT gen marking 2 1 | NCLKIT ncl - --certificate",
        "NCLKIT gen cycle 6 | NCLKIT ncl - --naive",
        "NCLKIT gen random 10 1/2 3 | NCLKIT invariants -",
        "NCLKIT gen random 10 1/2 3 | NCLKIT invariants - --json",
        "NCLKIT gen random 11 2/5 8 | NCLKIT obstruct - --genus 2 --punctures 1 --all-tests",
        "NCLKIT gen random 11 2/5 8 | NCLKIT obstruct - --genus 2 --punctures 1 --json",
        "NCLKIT surface --genus 3 --punctures 2",
        "NCLKIT surface --genus 3 --punctures 2 --json",
        "NCLKIT gen marking 2 1 | NCLKIT verify - cert.json",
        "NCLKIT experiment enumerate --n 5 --genus 0 --punctures 5 --json",
        "NCLKIT experiment enumerate --n 10 --genus 1 --punctures 3 --samples 400 --seed 11",
    };
    for (const auto& cmd : commands) {
        const auto first = run(cmd);
        const auto second = run(cmd);
        f.expect(first.exit_code == 0 || first.exit_code == 1, "'" + cmd + "' exited " + std::to_string(first.exit_code));
        f.expect(!first.out.empty(), "'" + cmd + "' printed nothing");
        f.expect(first.out == second.out && first.exit_code == second.exit_code, "'" + cmd + "' differs between runs");
    }
    const std::string sampled = "NCLKIT experiment enumerate --n 10 --genus 1 --punctures 3 --samples 400 --seed 11 --json";
    const auto base = run(sampled).out;
    for (int workers : {2, 4, 7}) {
        f.expect(run(sampled + " --workers " + std::to_string(workers)).out == base,
                 "CLI experiment differs with " + std::to_string(workers) + " workers");
    }

    ExperimentConfig cfg;
    cfg.n = 12;
    cfg.surface = surface_params(2, 0);
    cfg.mode = ExperimentMode::sampled;
    cfg.sample_count = 300;
    cfg.seed = 2024;
    const std::string reference = to_json(run_enumeration_experiment(cfg)).dump();
    f.expect(to_json(run_enumeration_experiment(cfg)).dump() == reference, "sampled experiment differs between runs");
    for (int workers : {2, 3, 8}) {
        cfg.workers = workers;
        f.expect(to_json(run_enumeration_experiment(cfg)).dump() == reference,
                 "sampled experiment differs with " + std::to_string(workers) + " workers");
    }
}

struct Criterion {
    int id;
    const char* title;
    std::function<void(Findings&)> check;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "NCL(K_r(2)) = 2r for r = 1..5, each under 1 s", criterion_1},
        {2, "NCL of marking graphs equals 6g-6+2p (21 cases, under 30 s)", criterion_2},
        {3, "ncl_exact matches ncl_naive on all 5-vertex and 200 random 7-vertex graphs", criterion_3},
        {4, "NCL is monotone under induced subgraphs, at most |V|, and 1 on complete graphs", criterion_4},
        {5, "NCL never exceeds the K_{m,n}-free upper bound", criterion_5},
        {6, "half-graph heights, NCL(H_n) >= n, edge stability of marking graphs", criterion_6},
        {7, "obstruction verdicts and K_r(t) membership", criterion_7},
        {8, "surface constants", criterion_8},
        {9, "density of K_l(t) and the density lower bound on NCL", criterion_9},
        {10, "CLI and sampled experiment output is deterministic", criterion_10},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        Findings findings;
        const auto start = Clock::now();
        try {
            c.check(findings);
        } catch (const std::exception& e) {
            findings.expect(false, std::string("exception: ") + e.what());
        }
        char timing[32];
        std::snprintf(timing, sizeof timing, "%.2f s", seconds_since(start));
        std::cout << (findings.ok() ? "PASS" : "FAIL") << "  criterion " << c.id << ": " << c.title << " [" << timing
                  << "]";
        if (!findings.ok()) {
            std::cout << " -- " << findings.summary();
            ++failed;
        }
        std::cout << std::endl;
    }
    std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed" << std::endl;
    return failed == 0 ? 0 : 1;
}
