#include "nclkit/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <random>
#include <thread>
#include <vector>

#include "nclkit/error.hpp"
#include "nclkit/generators.hpp"

namespace nclkit {

namespace {

struct Outcome {
    bool passed_clique = false;
    bool obstructed = false;
    std::array<bool, 4> fired{};  // multipartite, bipartite half graph, half graph, ncl
};

Outcome evaluate(const Graph& g, const SurfaceParams& surface) {
    ObstructionBudget budget;
    budget.all_tests = true;
    budget.informational = false;
    const auto report = obstruct(g, surface, budget);
    Outcome out;
    out.passed_clique = report.tests[0].status == TestStatus::passed;
    if (!out.passed_clique) return out;
    for (std::size_t i = 1; i < report.tests.size(); ++i) {
        const bool fired = report.tests[i].status == TestStatus::fired;
        out.fired[i - 1] = fired;
        out.obstructed = out.obstructed || fired;
    }
    return out;
}

Graph graph_from_index(int n, std::uint64_t index) {
    std::vector<Edge> edges;
    int bit = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i, ++bit) {
            if ((index >> bit) & 1U) edges.emplace_back(i, j);
        }
    }
    return Graph(n, edges);
}

}  // namespace

ExperimentSummary run_enumeration_experiment(const ExperimentConfig& config) {
    const int n = config.n;
    std::uint64_t count = 0;
    std::vector<std::uint64_t> seeds;
    if (config.mode == ExperimentMode::exhaustive) {
        if (n < 1 || n > kExhaustiveMaxVertices) {
            throw limit_exceeded("exhaustive experiment needs 1 <= n <= " + std::to_string(kExhaustiveMaxVertices));
        }
        count = std::uint64_t{1} << (n * (n - 1) / 2);
    } else {
        if (n < 1 || n > kSampledMaxVertices) {
            throw limit_exceeded("sampled experiment needs 1 <= n <= " + std::to_string(kSampledMaxVertices));
        }
        if (config.sample_count < 1) throw invalid_input("sampled experiment needs at least one sample");
        count = static_cast<std::uint64_t>(config.sample_count);
        std::mt19937_64 rng(config.seed);
        seeds.resize(count);
        for (auto& s : seeds) s = rng();
    }

    std::vector<Outcome> outcomes(count);
    std::atomic<std::uint64_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    const auto worker = [&] {
        try {
            for (std::uint64_t i = next++; i < count; i = next++) {
                const Graph g = config.mode == ExperimentMode::exhaustive
                                    ? graph_from_index(n, i)
                                    : gen_random(n, Rational(1, 2), seeds[i]);
                outcomes[i] = evaluate(g, config.surface);
            }
        } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
            next = count;
        }
    };
    const int workers = std::max(1, config.workers);
    if (workers == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
    }
    if (failure) std::rethrow_exception(failure);

    ExperimentSummary summary;
    summary.config = config;
    summary.total = static_cast<std::int64_t>(count);
    for (const auto& o : outcomes) {
        if (!o.passed_clique) continue;
        ++summary.passed_clique;
        if (o.obstructed) ++summary.obstructed_among_passed;
        summary.per_test.induced_multipartite += o.fired[0];
        summary.per_test.bipartite_half_graph += o.fired[1];
        summary.per_test.half_graph += o.fired[2];
        summary.per_test.ncl += o.fired[3];
    }
    if (summary.passed_clique > 0) summary.fraction = Rational(summary.obstructed_among_passed, summary.passed_clique);
    return summary;
}

}  // namespace nclkit
