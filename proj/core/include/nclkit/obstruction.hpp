#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "nclkit/graph.hpp"
#include "nclkit/invariants.hpp"
#include "nclkit/ncl.hpp"
#include "nclkit/rational.hpp"
#include "nclkit/surface.hpp"

namespace nclkit {

struct ObstructionBudget {
    int detector_max_vertices = kDefaultDetectorCap;  // half graphs, K_r(2), chromatic number
    int ncl_max_vertices = kDefaultNclCap;
    bool all_tests = false;      // keep running after the first fired test
    bool informational = true;   // compute chromatic number, density, NCL for the report
};

enum class Verdict { obstructed, no_obstruction_found };
enum class TestStatus { fired, passed, skipped, not_run };

std::string_view to_string(Verdict v);
std::string_view to_string(TestStatus s);

struct CliqueWitness {
    std::vector<Vertex> vertices;
};

using Certificate =
    std::variant<std::monostate, CliqueWitness, MultipartiteWitness, HalfGraphWitness, NestedComplexitySequence>;

// Test names, in the order they run.
inline constexpr std::string_view kCliqueTest = "clique";
inline constexpr std::string_view kMultipartiteTest = "induced_multipartite";
inline constexpr std::string_view kBipartiteHalfGraphTest = "bipartite_half_graph";
inline constexpr std::string_view kHalfGraphTest = "half_graph";
inline constexpr std::string_view kNclTest = "ncl";

struct TestOutcome {
    std::string test;
    TestStatus status = TestStatus::not_run;
    std::int64_t threshold = 0;
    std::string comparison;  // fires when measured_value <comparison> threshold
    std::optional<std::int64_t> measured_value;
    Certificate certificate;  // set iff fired
    std::string reason;       // set for skipped / not_run
};

struct Informational {
    int vertex_count = 0;
    std::size_t edge_count = 0;
    std::optional<int> chromatic_number;
    std::string chromatic_skipped_reason;
    std::optional<Rational> density;
    std::optional<int> ncl_value;
    std::string ncl_skipped_reason;
};

struct ObstructionReport {
    SurfaceParams surface;
    Verdict verdict = Verdict::no_obstruction_found;
    std::vector<TestOutcome> tests;  // every test in run order
    Informational informational;
    std::vector<std::string> disclaimers;
    std::vector<std::string> warnings;

    std::vector<TestOutcome> fired_tests() const;
};

// Runs, cheapest first: clique number > xi; induced K_{l+1}(2); induced H_n with
// n >= 2g+p; half graph of height > 6g-6+2p; NCL > 6g-6+2p. Tests above their size
// cap are recorded as skipped. "obstructed" is a proof that the graph is not an
// induced subgraph of the curve graph; "no_obstruction_found" proves nothing.
ObstructionReport obstruct(const Graph& g, const SurfaceParams& surface, const ObstructionBudget& budget = {});

// Re-checks a fired test's certificate against the graph and surface.
Check validate_outcome(const Graph& g, const SurfaceParams& surface, const TestOutcome& outcome);

// K_r(t), t >= 2, is an induced subgraph of the curve graph iff r <= l. Throws for t < 2.
bool krt_membership(int r, int t, const SurfaceParams& surface);

}  // namespace nclkit
