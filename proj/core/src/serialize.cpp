#include "nclkit/serialize.hpp"

#include "nclkit/error.hpp"

namespace nclkit {

using nlohmann::json;

json to_json(const SurfaceParams& s) {
    return json{
        {"genus", s.genus},
        {"punctures", s.punctures},
        {"xi", s.xi},
        {"ncl_bound", s.ncl_bound},
        {"multipartite_bound", s.multipartite_bound},
        {"stability_k", s.stability_k},
        {"bipartite_half_graph_bound", s.bipartite_half_graph_bound},
        {"upper_density", to_string(s.upper_density)},
        {"exceptional", s.exceptional},
    };
}

json to_json(const HalfGraphWitness& w) {
    return json{{"height", w.height}, {"a", w.a_vertices}, {"b", w.b_vertices}};
}

json to_json(const MultipartiteWitness& w) { return json{{"parts", w.parts}}; }

json to_json(const NestedComplexitySequence& cert) { return json{{"b", cert.b}, {"a", cert.a}}; }

json to_json(const Certificate& cert) {
    struct Visitor {
        json operator()(std::monostate) const { return nullptr; }
        json operator()(const CliqueWitness& w) const { return json{{"clique", w.vertices}}; }
        json operator()(const MultipartiteWitness& w) const { return to_json(w); }
        json operator()(const HalfGraphWitness& w) const { return to_json(w); }
        json operator()(const NestedComplexitySequence& w) const { return to_json(w); }
    };
    return std::visit(Visitor{}, cert);
}

namespace {

json outcome_json(const TestOutcome& t) {
    json out{
        {"test", t.test},
        {"status", std::string(to_string(t.status))},
        {"threshold", t.threshold},
        {"comparison", t.comparison},
        {"measured_value", t.measured_value ? json(*t.measured_value) : json(nullptr)},
    };
    if (t.status == TestStatus::fired) out["certificate"] = to_json(t.certificate);
    if (!t.reason.empty()) out["reason"] = t.reason;
    return out;
}

}  // namespace

json to_json(const ObstructionReport& report) {
    json fired = json::array();
    json tests = json::array();
    for (const auto& t : report.tests) {
        tests.push_back(outcome_json(t));
        if (t.status == TestStatus::fired) fired.push_back(outcome_json(t));
    }
    const auto& info = report.informational;
    json informational{
        {"vertex_count", info.vertex_count},
        {"edge_count", info.edge_count},
        {"chromatic_number", info.chromatic_number ? json(*info.chromatic_number) : json(nullptr)},
        {"density", info.density ? json(to_string(*info.density)) : json(nullptr)},
    };
    if (!info.chromatic_skipped_reason.empty()) informational["chromatic_skipped_reason"] = info.chromatic_skipped_reason;
    if (info.ncl_value) {
        informational["ncl_value"] = *info.ncl_value;
    } else {
        informational["ncl_skipped_reason"] = info.ncl_skipped_reason;
    }
    return json{
        {"schema_version", kSchemaVersion},
        {"surface", to_json(report.surface)},
        {"verdict", std::string(to_string(report.verdict))},
        {"fired_tests", fired},
        {"tests", tests},
        {"informational", informational},
        {"disclaimers", report.disclaimers},
        {"warnings", report.warnings},
    };
}

json to_json(const ExperimentSummary& summary) {
    const auto& cfg = summary.config;
    json out{
        {"schema_version", kSchemaVersion},
        {"mode", cfg.mode == ExperimentMode::exhaustive ? "exhaustive" : "sampled"},
        {"n", cfg.n},
        {"genus", cfg.surface.genus},
        {"punctures", cfg.surface.punctures},
        {"total", summary.total},
        {"passed_clique", summary.passed_clique},
        {"obstructed_among_passed", summary.obstructed_among_passed},
        {"fraction", summary.fraction ? json(to_string(*summary.fraction)) : json(nullptr)},
        {"per_test",
         {{"induced_multipartite", summary.per_test.induced_multipartite},
          {"bipartite_half_graph", summary.per_test.bipartite_half_graph},
          {"half_graph", summary.per_test.half_graph},
          {"ncl", summary.per_test.ncl}}},
    };
    if (cfg.mode == ExperimentMode::sampled) {
        out["samples"] = cfg.sample_count;
        out["seed"] = cfg.seed;
    }
    return out;
}

NestedComplexitySequence certificate_from_json(const json& doc) {
    const auto read = [&](const char* key) {
        if (!doc.is_object() || !doc.contains(key) || !doc[key].is_array()) {
            throw parse_error(std::string("certificate: missing array \"") + key + "\"");
        }
        std::vector<Vertex> out;
        for (const auto& v : doc[key]) {
            if (!v.is_number_integer()) throw parse_error(std::string("certificate: non-integer entry in \"") + key + "\"");
            const auto x = v.get<long long>();
            if (x < 0 || x > kMaxGraphVertices) throw parse_error("certificate: vertex " + std::to_string(x) + " out of range");
            out.push_back(static_cast<Vertex>(x));
        }
        return out;
    };
    return NestedComplexitySequence{read("b"), read("a")};
}

}  // namespace nclkit
