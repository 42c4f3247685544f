// nclkit command-line front end.
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "nclkit/error.hpp"
#include "nclkit/experiment.hpp"
#include "nclkit/generators.hpp"
#include "nclkit/invariants.hpp"
#include "nclkit/io.hpp"
#include "nclkit/ncl.hpp"
#include "nclkit/obstruction.hpp"
#include "nclkit/serialize.hpp"
#include "nclkit/surface.hpp"

using namespace nclkit;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;  // obstructed / invalid certificate
constexpr int kExitError = 2;

constexpr const char* kNclCapVariable = "NCLKIT_NCL_MAX_VERTICES";
constexpr int kDefaultBipartiteSearchLimit = 8;

int ncl_vertex_cap() {
    const char* raw = std::getenv(kNclCapVariable);
    if (raw == nullptr || *raw == '\0') return kDefaultNclCap;
    int value = 0;
    std::size_t used = 0;
    try {
        value = std::stoi(raw, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != std::string_view(raw).size() || value < 1 || value > kHardNclCap) {
        throw invalid_input(std::string(kNclCapVariable) + " must be an integer in 1.." + std::to_string(kHardNclCap));
    }
    return value;
}

NclOptions ncl_options() {
    NclOptions opts;
    opts.max_vertices = ncl_vertex_cap();
    opts.notice = [](const std::string& msg) { std::cerr << "note: " << msg << '\n'; };
    return opts;
}

// Writes to stdout for "-" and to the named file otherwise.
void write_output(const std::string& path, const std::string& text) {
    if (path == "-") {
        std::cout << text;
        std::cout.flush();
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << text;
    if (!out) throw std::runtime_error("error writing " + path);
}

std::string read_text_file(const std::string& path) {
    std::ostringstream buf;
    if (path == "-") {
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    buf << in.rdbuf();
    return buf.str();
}

std::string join(const std::vector<Vertex>& xs) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(xs[i]);
    }
    return out;
}

// Two-column table with the keys padded to a common width.
std::string format_table(const std::vector<std::pair<std::string, std::string>>& rows) {
    std::size_t width = 0;
    for (const auto& [k, v] : rows) width = std::max(width, k.size());
    std::ostringstream out;
    for (const auto& [k, v] : rows) out << std::left << std::setw(static_cast<int>(width + 2)) << k << v << '\n';
    return out.str();
}

std::string json_text(const json& doc) { return doc.dump(2) + "\n"; }

// ---- gen ----

struct GenArgs {
    std::string family;
    std::vector<std::string> params;
    std::string output = "-";
    std::string format = "edgelist";
    std::string eta = "all";
};

int to_int(const std::string& s, const char* what) {
    std::size_t used = 0;
    int value = 0;
    try {
        value = std::stoi(s, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != s.size() || s.empty()) throw invalid_input(std::string(what) + ": expected an integer, got '" + s + "'");
    return value;
}

std::uint64_t to_u64(const std::string& s, const char* what) {
    std::size_t used = 0;
    std::uint64_t value = 0;
    try {
        if (!s.empty() && s[0] != '-') value = std::stoull(s, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != s.size() || s.empty()) throw invalid_input(std::string(what) + ": expected an unsigned integer, got '" + s + "'");
    return value;
}

GraphFamilySpec family_spec(const GenArgs& args) {
    const auto family = parse_graph_family(args.family);
    if (!family) throw invalid_input("unknown graph family '" + args.family + "'");
    const auto eta = parse_eta_adjacency(args.eta);
    if (!eta) throw invalid_input("unknown eta adjacency '" + args.eta + "' (none, all, path)");

    GraphFamilySpec spec;
    spec.family = *family;
    spec.eta = *eta;
    const auto expect = [&](std::size_t count, const char* usage) {
        if (args.params.size() != count) {
            throw invalid_input("gen " + std::string(to_string(*family)) + " expects " + usage);
        }
    };
    const auto& p = args.params;
    switch (*family) {
    case GraphFamily::half_graph:
    case GraphFamily::bipartite_half_graph:
    case GraphFamily::complete:
    case GraphFamily::edgeless:
    case GraphFamily::cycle:
        expect(1, "N");
        spec.n = to_int(p[0], "N");
        break;
    case GraphFamily::multipartite:
        expect(2, "R T");
        spec.r = to_int(p[0], "R");
        spec.t = to_int(p[1], "T");
        break;
    case GraphFamily::marking:
        expect(2, "GENUS PUNCTURES");
        spec.genus = to_int(p[0], "GENUS");
        spec.punctures = to_int(p[1], "PUNCTURES");
        break;
    case GraphFamily::random:
        expect(3, "N PROBABILITY SEED");
        spec.n = to_int(p[0], "N");
        spec.edge_probability = parse_rational(p[1]);
        spec.seed = to_u64(p[2], "SEED");
        break;
    }
    return spec;
}

int run_gen(const GenArgs& args) {
    const GraphFamilySpec spec = family_spec(args);
    const Graph g = generate(spec);
    if (args.format == "graph6") {
        write_output(args.output, encode_graph6(g) + "\n");
    } else {
        write_output(args.output, format_edge_list(g, describe_labels(spec)));
    }
    return kExitOk;
}

// ---- ncl ----

int run_ncl(const std::string& path, bool certificate, bool naive) {
    const Graph g = read_graph_file(path);
    if (naive) {
        std::cout << ncl_naive(g) << '\n';
        return kExitOk;
    }
    const NclResult r = ncl_exact(g, certificate, ncl_options());
    if (!r.note.empty()) std::cerr << "note: " << r.note << '\n';
    if (!certificate) {
        std::cout << r.value << '\n';
        return kExitOk;
    }
    json doc{{"schema_version", kSchemaVersion}, {"ncl", r.value}};
    const auto cert = r.certificate.value_or(NestedComplexitySequence{});
    doc["b"] = cert.b;
    doc["a"] = cert.a;
    std::cout << json_text(doc);
    return kExitOk;
}

// ---- invariants ----

template <typename F>
json guarded(F&& compute, std::string& skipped) {
    try {
        return compute();
    } catch (const limit_exceeded& e) {
        skipped = e.what();
        return nullptr;
    }
}

int run_invariants(const std::string& path, bool as_json) {
    const Graph g = read_graph_file(path);
    const int ncl_cap = ncl_vertex_cap();
    json doc{{"schema_version", kSchemaVersion},
             {"vertex_count", g.vertex_count()},
             {"edge_count", g.edge_count()}};
    json skipped = json::object();
    const auto field = [&](const char* key, auto&& compute) {
        std::string reason;
        doc[key] = guarded(compute, reason);
        if (!reason.empty()) skipped[key] = reason;
    };
    field("clique_number", [&] { return json(clique_number(g)); });
    field("chromatic_number", [&] {
        require_vertex_cap(g, kDefaultDetectorCap, "chromatic_number");
        return json(chromatic_number(g));
    });
    doc["density"] = g.vertex_count() >= 2 ? json(to_string(density(g))) : json(nullptr);
    field("half_graph_height", [&] { return json(half_graph_height(g, false).height); });
    field("bipartite_half_graph_height", [&] { return json(half_graph_height(g, true).height); });
    field("ncl", [&] {
        NclOptions opts = ncl_options();
        opts.max_vertices = ncl_cap;
        return json(ncl_exact(g, false, opts).value);
    });
    field("ncl_upper_bound", [&] {
        const auto b = ncl_upper_bound_bipartite(g, kDefaultBipartiteSearchLimit);
        if (!b) return json(nullptr);
        return json{{"m", b->m}, {"n", b->n}, {"bound", b->bound}};
    });
    if (!skipped.empty()) doc["skipped"] = skipped;

    if (as_json) {
        std::cout << json_text(doc);
        return kExitOk;
    }
    std::vector<std::pair<std::string, std::string>> rows;
    for (const char* key : {"vertex_count", "edge_count", "clique_number", "chromatic_number", "density",
                            "half_graph_height", "bipartite_half_graph_height", "ncl"}) {
        const json& v = doc[key];
        if (skipped.contains(key)) {
            rows.emplace_back(key, "skipped (" + skipped[key].get<std::string>() + ")");
        } else if (v.is_null()) {
            rows.emplace_back(key, "undefined");
        } else {
            rows.emplace_back(key, v.is_string() ? v.get<std::string>() : v.dump());
        }
    }
    const json& bound = doc["ncl_upper_bound"];
    if (skipped.contains("ncl_upper_bound")) {
        rows.emplace_back("ncl_upper_bound", "skipped (" + skipped["ncl_upper_bound"].get<std::string>() + ")");
    } else if (bound.is_null()) {
        rows.emplace_back("ncl_upper_bound", "none with m+n <= " + std::to_string(kDefaultBipartiteSearchLimit));
    } else {
        rows.emplace_back("ncl_upper_bound", bound["bound"].dump() + " (no K_{" + bound["m"].dump() + "," +
                                                 bound["n"].dump() + "})");
    }
    std::cout << format_table(rows);
    return kExitOk;
}

// ---- surface ----

std::string surface_table(const SurfaceParams& s) {
    return format_table({{"genus", std::to_string(s.genus)},
                         {"punctures", std::to_string(s.punctures)},
                         {"xi", std::to_string(s.xi)},
                         {"ncl_bound", std::to_string(s.ncl_bound)},
                         {"multipartite_bound", std::to_string(s.multipartite_bound)},
                         {"stability_k", std::to_string(s.stability_k)},
                         {"bipartite_half_graph_bound", std::to_string(s.bipartite_half_graph_bound)},
                         {"upper_density", to_string(s.upper_density)},
                         {"exceptional", s.exceptional ? "yes" : "no"}});
}

int run_surface(int genus, int punctures, bool as_json) {
    const SurfaceParams s = surface_params(genus, punctures);
    if (as_json) {
        json doc = to_json(s);
        doc["schema_version"] = kSchemaVersion;
        std::cout << json_text(doc);
    } else {
        std::cout << surface_table(s);
    }
    return kExitOk;
}

// ---- obstruct ----

std::string describe_certificate(const Certificate& cert) {
    struct Visitor {
        std::string operator()(const std::monostate&) const { return {}; }
        std::string operator()(const CliqueWitness& w) const { return "clique " + join(w.vertices); }
        std::string operator()(const MultipartiteWitness& w) const {
            std::string out = "parts";
            for (const auto& part : w.parts) out += " {" + join(part) + "}";
            return out;
        }
        std::string operator()(const HalfGraphWitness& w) const {
            return "a = " + join(w.a_vertices) + "; b = " + join(w.b_vertices);
        }
        std::string operator()(const NestedComplexitySequence& w) const {
            return "b = " + join(w.b) + "; a = " + join(w.a);
        }
    };
    return std::visit(Visitor{}, cert);
}

std::string report_text(const ObstructionReport& r) {
    std::ostringstream out;
    out << "surface: genus " << r.surface.genus << ", punctures " << r.surface.punctures << '\n';
    out << "verdict: " << to_string(r.verdict) << "\n\n";

    std::vector<std::pair<std::string, std::string>> rows;
    for (const auto& t : r.tests) {
        std::string line = std::string(to_string(t.status));
        line.resize(10, ' ');
        line += "fires when value " + t.comparison + " " + std::to_string(t.threshold);
        if (t.measured_value) line += ", measured " + std::to_string(*t.measured_value);
        if (!t.reason.empty()) line += " (" + t.reason + ")";
        rows.emplace_back(t.test, line);
    }
    out << format_table(rows);
    for (const auto& t : r.fired_tests()) out << "certificate " << t.test << ": " << describe_certificate(t.certificate) << '\n';

    const auto& info = r.informational;
    std::vector<std::pair<std::string, std::string>> info_rows{
        {"vertex_count", std::to_string(info.vertex_count)}, {"edge_count", std::to_string(info.edge_count)}};
    if (info.chromatic_number) {
        info_rows.emplace_back("chromatic_number", std::to_string(*info.chromatic_number));
    } else if (!info.chromatic_skipped_reason.empty()) {
        info_rows.emplace_back("chromatic_number", "skipped (" + info.chromatic_skipped_reason + ")");
    }
    if (info.density) info_rows.emplace_back("density", to_string(*info.density));
    if (info.ncl_value) {
        info_rows.emplace_back("ncl", std::to_string(*info.ncl_value));
    } else if (!info.ncl_skipped_reason.empty()) {
        info_rows.emplace_back("ncl", "skipped (" + info.ncl_skipped_reason + ")");
    }
    out << '\n' << format_table(info_rows);
    if (!r.disclaimers.empty() || !r.warnings.empty()) out << '\n';
    for (const auto& d : r.disclaimers) out << "note: " << d << '\n';
    for (const auto& w : r.warnings) out << "warning: " << w << '\n';
    return out.str();
}

int run_obstruct(const std::string& path, int genus, int punctures, bool all_tests, bool as_json) {
    const SurfaceParams s = surface_params(genus, punctures);
    const Graph g = read_graph_file(path);
    ObstructionBudget budget;
    budget.ncl_max_vertices = ncl_vertex_cap();
    budget.all_tests = all_tests;
    const ObstructionReport r = obstruct(g, s, budget);
    std::cout << (as_json ? json_text(to_json(r)) : report_text(r));
    return r.verdict == Verdict::obstructed ? kExitNegative : kExitOk;
}

// ---- verify ----

int run_verify(const std::string& graph_path, const std::string& cert_path) {
    const Graph g = read_graph_file(graph_path);
    json doc;
    try {
        doc = json::parse(read_text_file(cert_path));
    } catch (const json::parse_error& e) {
        throw parse_error(cert_path + ": " + e.what());
    }
    const NestedComplexitySequence cert = certificate_from_json(doc);
    const Check check = check_certificate(g, cert);
    if (!check) {
        std::cout << "invalid: " << check.reason << '\n';
        return kExitNegative;
    }
    std::cout << "valid: nested complexity sequence of length " << cert.length() << '\n';
    return kExitOk;
}

// ---- experiment ----

struct ExperimentArgs {
    int n = 0;
    int genus = 0;
    int punctures = 0;
    std::optional<int> samples;
    std::uint64_t seed = 0;
    int workers = 1;
    bool as_json = false;
};

int run_experiment(const ExperimentArgs& args) {
    ExperimentConfig cfg;
    cfg.n = args.n;
    cfg.surface = surface_params(args.genus, args.punctures);
    cfg.workers = args.workers;
    if (args.samples) {
        cfg.mode = ExperimentMode::sampled;
        cfg.sample_count = *args.samples;
        cfg.seed = args.seed;
    }
    const ExperimentSummary s = run_enumeration_experiment(cfg);
    if (args.as_json) {
        std::cout << json_text(to_json(s));
        return kExitOk;
    }
    std::vector<std::pair<std::string, std::string>> rows{
        {"mode", cfg.mode == ExperimentMode::sampled ? "sampled" : "exhaustive"},
        {"n", std::to_string(cfg.n)},
        {"surface", "genus " + std::to_string(args.genus) + ", punctures " + std::to_string(args.punctures)}};
    if (args.samples) rows.emplace_back("seed", std::to_string(cfg.seed));
    rows.emplace_back("total", std::to_string(s.total));
    rows.emplace_back("passed_clique", std::to_string(s.passed_clique));
    rows.emplace_back("obstructed_among_passed", std::to_string(s.obstructed_among_passed));
    rows.emplace_back("fraction", s.fraction ? to_string(*s.fraction) : "undefined");
    rows.emplace_back("fired induced_multipartite", std::to_string(s.per_test.induced_multipartite));
    rows.emplace_back("fired bipartite_half_graph", std::to_string(s.per_test.bipartite_half_graph));
    rows.emplace_back("fired half_graph", std::to_string(s.per_test.half_graph));
    rows.emplace_back("fired ncl", std::to_string(s.per_test.ncl));
    std::cout << format_table(rows);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Nested complexity length and curve-graph obstructions for finite graphs", "nclkit"};
    app.require_subcommand(1);
    app.footer(std::string("Graph files are edge lists (\"n m\" then m pairs) or graph6; - is stdin.\n") +
               kNclCapVariable + " overrides the NCL vertex cap (default " + std::to_string(kDefaultNclCap) +
               ", at most " + std::to_string(kHardNclCap) + ").");

    std::function<int()> action;

    GenArgs gen;
    auto* gen_cmd = app.add_subcommand("gen", "Write a graph from a named family");
    gen_cmd->add_option("family", gen.family,
                        "half-graph N | bipartite-half-graph N | multipartite R T | marking GENUS PUNCTURES | "
                        "complete N | edgeless N | cycle N | random N PROBABILITY SEED")
        ->required();
    gen_cmd->add_option("params", gen.params, "Family parameters");
    gen_cmd->add_option("-o,--output", gen.output, "Output file (- for stdout)");
    gen_cmd->add_option("--format", gen.format, "Output format")->check(CLI::IsMember({"edgelist", "graph6"}));
    gen_cmd->add_option("--eta", gen.eta, "Marking graph eta adjacency")->check(CLI::IsMember({"none", "all", "path"}));
    gen_cmd->callback([&] { action = [&] { return run_gen(gen); }; });

    std::string ncl_file;
    bool want_certificate = false;
    bool naive = false;
    auto* ncl_cmd = app.add_subcommand("ncl", "Exact nested complexity length");
    ncl_cmd->add_option("file", ncl_file, "Graph file (- for stdin)")->required();
    auto* cert_flag = ncl_cmd->add_flag("--certificate", want_certificate, "Print an optimal sequence as JSON");
    ncl_cmd->add_flag("--naive", naive, "Use the definition-level search (at most 8 vertices)")->excludes(cert_flag);
    ncl_cmd->callback([&] { action = [&] { return run_ncl(ncl_file, want_certificate, naive); }; });

    std::string inv_file;
    bool inv_json = false;
    auto* inv_cmd = app.add_subcommand("invariants", "Clique, chromatic number, density, half-graph heights, NCL");
    inv_cmd->add_option("file", inv_file, "Graph file (- for stdin)")->required();
    inv_cmd->add_flag("--json", inv_json, "JSON output");
    inv_cmd->callback([&] { action = [&] { return run_invariants(inv_file, inv_json); }; });

    std::string obs_file;
    int obs_genus = 0;
    int obs_punctures = 0;
    bool obs_all = false;
    bool obs_json = false;
    auto* obs_cmd = app.add_subcommand("obstruct", "Look for obstructions to being an induced subgraph of a curve graph");
    obs_cmd->add_option("file", obs_file, "Graph file (- for stdin)")->required();
    obs_cmd->add_option("--genus", obs_genus, "Surface genus")->required();
    obs_cmd->add_option("--punctures", obs_punctures, "Surface punctures")->required();
    obs_cmd->add_flag("--all-tests", obs_all, "Run every test instead of stopping at the first that fires");
    obs_cmd->add_flag("--json", obs_json, "JSON output");
    obs_cmd->callback([&] { action = [&] { return run_obstruct(obs_file, obs_genus, obs_punctures, obs_all, obs_json); }; });

    int surf_genus = 0;
    int surf_punctures = 0;
    bool surf_json = false;
    auto* surf_cmd = app.add_subcommand("surface", "Print the constants attached to a surface");
    surf_cmd->add_option("--genus", surf_genus, "Surface genus")->required();
    surf_cmd->add_option("--punctures", surf_punctures, "Surface punctures")->required();
    surf_cmd->add_flag("--json", surf_json, "JSON output");
    surf_cmd->callback([&] { action = [&] { return run_surface(surf_genus, surf_punctures, surf_json); }; });

    std::string verify_graph;
    std::string verify_cert;
    auto* verify_cmd = app.add_subcommand("verify", "Check a nested complexity certificate against a graph");
    verify_cmd->add_option("graph", verify_graph, "Graph file (- for stdin)")->required();
    verify_cmd->add_option("certificate", verify_cert, "Certificate JSON file")->required();
    verify_cmd->callback([&] { action = [&] { return run_verify(verify_graph, verify_cert); }; });

    ExperimentArgs exp;
    auto* exp_cmd = app.add_subcommand("experiment", "Batch experiments");
    exp_cmd->require_subcommand(1);
    auto* enum_cmd = exp_cmd->add_subcommand("enumerate", "Obstructed fraction among graphs passing the clique test");
    enum_cmd->add_option("--n", exp.n, "Vertex count")->required();
    enum_cmd->add_option("--genus", exp.genus, "Surface genus")->required();
    enum_cmd->add_option("--punctures", exp.punctures, "Surface punctures")->required();
    enum_cmd->add_option("--samples", exp.samples, "Sample this many random graphs instead of enumerating");
    enum_cmd->add_option("--seed", exp.seed, "Seed for sampled mode");
    enum_cmd->add_option("--workers", exp.workers, "Worker threads")->check(CLI::PositiveNumber);
    enum_cmd->add_flag("--json", exp.as_json, "JSON output");
    enum_cmd->callback([&] { action = [&] { return run_experiment(exp); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "nclkit: " << e.what() << "\n\n" << app.help();
        return kExitError;
    }

    try {
        return action();
    } catch (const std::exception& e) {
        std::cerr << "nclkit: error: " << e.what() << '\n';
        return kExitError;
    }
}
