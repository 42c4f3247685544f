#pragma once

#include <array>
#include <cstdint>
#include <optional>

#include "nclkit/obstruction.hpp"
#include "nclkit/rational.hpp"
#include "nclkit/surface.hpp"

namespace nclkit {

enum class ExperimentMode { exhaustive, sampled };

inline constexpr int kExhaustiveMaxVertices = 6;
inline constexpr int kSampledMaxVertices = 14;

struct ExperimentConfig {
    int n = 0;
    SurfaceParams surface;
    ExperimentMode mode = ExperimentMode::exhaustive;
    int sample_count = 0;      // sampled mode
    std::uint64_t seed = 0;    // sampled mode
    int workers = 1;           // results do not depend on this
};

// Fired counts, among graphs passing the clique test, for the tests after it.
struct PerTestCounts {
    std::int64_t induced_multipartite = 0;
    std::int64_t bipartite_half_graph = 0;
    std::int64_t half_graph = 0;
    std::int64_t ncl = 0;
};

struct ExperimentSummary {
    ExperimentConfig config;
    std::int64_t total = 0;
    std::int64_t passed_clique = 0;           // clique number <= xi
    std::int64_t obstructed_among_passed = 0;
    std::optional<Rational> fraction;         // absent when passed_clique == 0
    PerTestCounts per_test;
};

// Exhaustive mode walks all 2^C(n,2) labelled graphs (bit k of the index is the k-th
// pair in graph6 order). Sampled mode draws one seed per sample from
// std::mt19937_64(config.seed) and evaluates gen_random(n, 1/2, that seed). Every
// graph runs obstruct() with all tests; the reduction is in index order.
ExperimentSummary run_enumeration_experiment(const ExperimentConfig& config);

}  // namespace nclkit
