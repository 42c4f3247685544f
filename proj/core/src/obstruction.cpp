#include "nclkit/obstruction.hpp"

#include <algorithm>
#include <stdexcept>

#include "nclkit/error.hpp"

namespace nclkit {

std::string_view to_string(Verdict v) {
    return v == Verdict::obstructed ? "obstructed" : "no_obstruction_found";
}

std::string_view to_string(TestStatus s) {
    switch (s) {
        case TestStatus::fired: return "fired";
        case TestStatus::passed: return "passed";
        case TestStatus::skipped: return "skipped";
        case TestStatus::not_run: return "not_run";
    }
    return "unknown";
}

std::vector<TestOutcome> ObstructionReport::fired_tests() const {
    std::vector<TestOutcome> out;
    std::copy_if(tests.begin(), tests.end(), std::back_inserter(out),
                 [](const TestOutcome& t) { return t.status == TestStatus::fired; });
    return out;
}

namespace {

std::string over_cap(int n, int cap) {
    return "graph has " + std::to_string(n) + " vertices, above the cap of " + std::to_string(cap);
}

int clamp_int(std::int64_t v) {
    return static_cast<int>(std::clamp<std::int64_t>(v, 0, kMaxGraphVertices + 1));
}

}  // namespace

Check validate_outcome(const Graph& g, const SurfaceParams& s, const TestOutcome& outcome) {
    if (outcome.status != TestStatus::fired) return Check::pass();
    const auto& cert = outcome.certificate;
    if (outcome.test == kCliqueTest) {
        const auto* w = std::get_if<CliqueWitness>(&cert);
        if (w == nullptr) return Check::fail("clique test: missing clique certificate");
        if (static_cast<std::int64_t>(w->vertices.size()) <= s.xi) return Check::fail("clique test: clique not above xi");
        return validate_clique(g, w->vertices);
    }
    if (outcome.test == kMultipartiteTest) {
        const auto* w = std::get_if<MultipartiteWitness>(&cert);
        if (w == nullptr) return Check::fail("multipartite test: missing certificate");
        if (static_cast<std::int64_t>(w->parts.size()) <= s.multipartite_bound || w->parts.front().size() < 2) {
            return Check::fail("multipartite test: witness too small");
        }
        return validate_multipartite_witness(g, *w);
    }
    if (outcome.test == kBipartiteHalfGraphTest || outcome.test == kHalfGraphTest) {
        const bool bipartite = outcome.test == kBipartiteHalfGraphTest;
        const auto* w = std::get_if<HalfGraphWitness>(&cert);
        if (w == nullptr) return Check::fail("half graph test: missing certificate");
        const bool enough = bipartite ? w->height >= s.bipartite_half_graph_bound : w->height > s.ncl_bound;
        if (!enough) return Check::fail("half graph test: witness height below threshold");
        return validate_half_graph_witness(g, *w, bipartite);
    }
    if (outcome.test == kNclTest) {
        const auto* w = std::get_if<NestedComplexitySequence>(&cert);
        if (w == nullptr) return Check::fail("ncl test: missing certificate");
        if (w->length() <= s.ncl_bound) return Check::fail("ncl test: sequence not longer than the bound");
        return check_certificate(g, *w);
    }
    return Check::fail("unknown test '" + outcome.test + "'");
}

ObstructionReport obstruct(const Graph& g, const SurfaceParams& s, const ObstructionBudget& budget) {
    ObstructionReport report;
    report.surface = s;
    const int n = g.vertex_count();
    const int detector_cap = std::min(budget.detector_max_vertices, kMaskVertices);
    const int ncl_cap = std::min(budget.ncl_max_vertices, kHardNclCap);
    bool decided = false;
    std::optional<int> ncl_value;

    const auto run = [&](std::string_view name, std::int64_t threshold, std::string comparison, int cap,
                         auto&& body) {
        TestOutcome outcome;
        outcome.test = std::string(name);
        outcome.threshold = threshold;
        outcome.comparison = std::move(comparison);
        if (decided && !budget.all_tests) {
            outcome.status = TestStatus::not_run;
            outcome.reason = "verdict already decided by an earlier test";
        } else if (n > cap) {
            outcome.status = TestStatus::skipped;
            outcome.reason = over_cap(n, cap);
        } else {
            body(outcome);
            if (outcome.status == TestStatus::fired) {
                decided = true;
                if (auto check = validate_outcome(g, s, outcome); !check) {
                    throw std::logic_error("internal error: " + outcome.test + " certificate failed validation: " + check.reason);
                }
            }
        }
        report.tests.push_back(std::move(outcome));
    };

    run(kCliqueTest, s.xi, ">", kMaskVertices, [&](TestOutcome& out) {
        auto clique = maximum_clique(g);
        out.measured_value = static_cast<std::int64_t>(clique.size());
        out.status = *out.measured_value > s.xi ? TestStatus::fired : TestStatus::passed;
        if (out.status == TestStatus::fired) out.certificate = CliqueWitness{std::move(clique)};
    });

    const std::int64_t parts = s.multipartite_bound + 1;
    run(kMultipartiteTest, parts, ">=", detector_cap, [&](TestOutcome& out) {
        auto witness = induced_multipartite(g, clamp_int(parts), 2, detector_cap);
        if (witness) {
            out.status = TestStatus::fired;
            out.measured_value = static_cast<std::int64_t>(witness->parts.size());
            out.certificate = std::move(*witness);
        } else {
            out.status = TestStatus::passed;
        }
    });

    run(kBipartiteHalfGraphTest, s.bipartite_half_graph_bound, ">=", detector_cap, [&](TestOutcome& out) {
        auto found = half_graph_height(g, true, clamp_int(s.bipartite_half_graph_bound), detector_cap);
        out.measured_value = found.height;
        if (found.height >= s.bipartite_half_graph_bound) {
            out.status = TestStatus::fired;
            out.certificate = std::move(*found.witness);
        } else {
            out.status = TestStatus::passed;
        }
    });

    run(kHalfGraphTest, s.ncl_bound, ">", detector_cap, [&](TestOutcome& out) {
        auto found = half_graph_height(g, false, clamp_int(s.ncl_bound + 1), detector_cap);
        out.measured_value = found.height;
        if (found.height > s.ncl_bound) {
            out.status = TestStatus::fired;
            out.certificate = std::move(*found.witness);
        } else {
            out.status = TestStatus::passed;
        }
    });

    run(kNclTest, s.ncl_bound, ">", ncl_cap, [&](TestOutcome& out) {
        NclOptions options;
        options.max_vertices = ncl_cap;
        auto result = ncl_exact(g, true, options);
        ncl_value = result.value;
        out.measured_value = result.value;
        if (result.value > s.ncl_bound) {
            out.status = TestStatus::fired;
            out.certificate = std::move(*result.certificate);
        } else {
            out.status = TestStatus::passed;
        }
    });

    report.verdict = decided ? Verdict::obstructed : Verdict::no_obstruction_found;

    auto& info = report.informational;
    info.vertex_count = n;
    info.edge_count = g.edge_count();
    if (n >= 2) info.density = density(g);
    if (!budget.informational) {
        info.chromatic_skipped_reason = "informational invariants disabled";
    } else if (n > detector_cap) {
        info.chromatic_skipped_reason = over_cap(n, detector_cap);
    } else {
        info.chromatic_number = chromatic_number(g);
    }
    info.ncl_value = ncl_value;
    if (!ncl_value) {
        const auto& ncl_test = report.tests.back();
        info.ncl_skipped_reason = ncl_test.status == TestStatus::skipped ? ncl_test.reason
                                                                         : "not computed: " + ncl_test.reason;
    }

    report.disclaimers = {
        "'obstructed' proves the graph is not an induced subgraph of the curve graph of this surface; "
        "'no_obstruction_found' does not prove that it is.",
        "The chromatic number is informational only and never fires a verdict: no explicit chromatic "
        "number of the curve graph is known.",
    };
    if (s.exceptional) {
        report.disclaimers.push_back("Exceptional surface (g,p)=(" + std::to_string(s.genus) + "," +
                                     std::to_string(s.punctures) + "): the curve graph has upper density 0.");
    }
    const bool all_skipped = std::all_of(report.tests.begin(), report.tests.end(),
                                         [](const TestOutcome& t) { return t.status == TestStatus::skipped; });
    if (all_skipped) {
        report.warnings.push_back("every test exceeded its size cap and was skipped; the verdict carries no information");
    }
    return report;
}

bool krt_membership(int r, int t, const SurfaceParams& surface) {
    if (r < 1) throw invalid_input("r must be at least 1");
    if (t < 2) throw invalid_input("K_r(t) membership is only decided for t >= 2");
    return r <= surface.multipartite_bound;
}

}  // namespace nclkit
