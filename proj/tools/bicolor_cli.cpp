// bicolor: classify, census, oracle and deform commands with JSON or table reports.

#include <atomic>
#include <iomanip>
#include <iostream>
#include <map>
#include <mutex>
#include <numeric>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "bicolor/canonical.hpp"
#include "bicolor/io.hpp"

using namespace bicolor;
using io::json;

namespace {

struct Globals {
    std::uint64_t seed = kDefaultSeed;
    int jobs = 1;
    std::string format = "json";
};

// Runs f(i) for i in [0, count) on `jobs` threads. Results go to caller-owned slots.
template <class F>
void parallel_for(std::size_t count, int jobs, F f) {
    if (jobs <= 1 || count < 2) {
        for (std::size_t i = 0; i < count; ++i) f(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    std::exception_ptr failure;
    std::mutex failure_mutex;
    for (int w = 0; w < jobs; ++w)
        pool.emplace_back([&] {
            for (std::size_t i; (i = next++) < count;) {
                try {
                    f(i);
                } catch (...) {
                    std::lock_guard lock(failure_mutex);
                    if (!failure) failure = std::current_exception();
                }
            }
        });
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
}

std::string scalar_text(const json& v) {
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

bool scalar_array(const json& v) {
    if (!v.is_array()) return false;
    for (const auto& x : v)
        if (x.is_object()) return false;
    return true;
}

void print_flat(std::ostream& out, const json& v, const std::string& path) {
    if (v.is_object()) {
        for (const auto& [key, val] : v.items()) print_flat(out, val, path.empty() ? key : path + "." + key);
    } else if (v.is_array() && !scalar_array(v)) {
        for (std::size_t i = 0; i < v.size(); ++i) print_flat(out, v[i], path + "[" + std::to_string(i) + "]");
    } else {
        out << path << ": " << scalar_text(v) << "\n";
    }
}

void print_census_table(std::ostream& out, const json& r) {
    const json& res = r.at("result");
    out << "census on " << res.at("vertices") << " vertices";
    for (const auto& [key, val] : res.items())
        if (!val.is_array() && !val.is_object() && key != "vertices") out << "  " << key << "=" << scalar_text(val);
    out << "\n";
    const bool oracle = !res.at("classes").empty() && res.at("classes")[0].contains("oracle");
    out << std::left << std::setw(18) << "key" << std::setw(8) << "count" << std::setw(11) << "eliminable"
        << std::setw(20) << "tilde_degrees";
    if (oracle) out << std::setw(10) << "oracle" << "degrees";
    out << "\n";
    for (const auto& c : res.at("classes")) {
        out << std::setw(18) << scalar_text(c.at("key")) << std::setw(8) << scalar_text(c.at("count"))
            << std::setw(11) << (c.at("eliminable").get<bool>() ? "yes" : "no") << std::setw(20)
            << scalar_text(c.at("tilde_degrees"));
        if (oracle)
            out << std::setw(10) << scalar_text(c.at("oracle").at("status"))
                << scalar_text(c.at("oracle").at("generator_degrees"));
        out << "\n";
    }
}

void emit(const Globals& g, const json& r) {
    if (g.format == "table") {
        if (r.at("command") == "census") print_census_table(std::cout, r);
        else print_flat(std::cout, r, "");
    } else {
        std::cout << r.dump(2) << "\n";
    }
}

json oracle_summary(const FreenessCertificate& c) {
    return {{"status", to_string(c.status)}, {"generator_degrees", c.generator_degrees()}, {"reason", c.reason}};
}

// k = 1, n = 0 spec of a class, checked against the oracle.
json census_oracle(const EdgeBicoloredGraph& graph, std::uint64_t seed) {
    const auto spec = MultiBraidSpec::uniform(1, graph);
    const auto cert = freeness_verdict(to_arrangement(spec), std::nullopt, seed);
    const auto v = classify(spec);
    json j = oracle_summary(cert);
    bool agree = (cert.status == FreenessStatus::Free) == (v.status == BraidStatus::Free) &&
                 cert.status != FreenessStatus::Inconclusive;
    if (agree && v.status == BraidStatus::Free) agree = cert.generator_degrees() == *v.exponents;
    j["matches_classify"] = agree;
    if (!agree && cert.status != FreenessStatus::Inconclusive)
        throw InternalInconsistency("oracle disagrees with classify on census class " +
                                    key_to_string(canonical_key(graph)));
    return j;
}

json class_row(const EdgeBicoloredGraph& g) {
    const auto ev = is_eliminable(g);
    json row;
    row["graph"] = io::graph_json(g);
    row["eliminable"] = ev.eliminable;
    row["tilde_degrees"] = ev.ordering ? json(tilde_degrees(g, *ev.ordering).sorted()) : json(nullptr);
    return row;
}

json run_census(const Globals& g, int n, bool swap, bool oracle, long samples) {
    if (n < 1) throw io::InputError("--vertices must be positive");
    if (n > kMaxExhaustiveCensus + 1)
        throw UnsupportedSize("census refuses " + std::to_string(n) + " vertices: exhaustive mode supports at most " +
                              std::to_string(kMaxExhaustiveCensus) + ", sampling mode at most " +
                              std::to_string(kMaxExhaustiveCensus + 1));
    if (oracle && n > kMaxOracleDimension)
        throw UnsupportedSize("--oracle supports at most " + std::to_string(kMaxOracleDimension) + " vertices");

    json inputs = {{"vertices", n}, {"include_swap", swap}, {"oracle", oracle}};
    json result;
    result["vertices"] = n;
    result["include_swap"] = swap;
    std::vector<json> rows;
    std::vector<EdgeBicoloredGraph> reps;

    if (n <= kMaxExhaustiveCensus) {
        result["mode"] = "exhaustive";
        const auto classes = enumerate_classes(n, swap, g.jobs);
        for (const auto& c : classes) reps.push_back(c.representative);
        rows.resize(classes.size());
        parallel_for(classes.size(), g.jobs, [&](std::size_t i) {
            rows[i] = class_row(classes[i].representative);
            rows[i]["key"] = key_to_string(classes[i].canonical_key);
            rows[i]["count"] = classes[i].labeled_count;
        });
        // Ordering search against the structural test on every labeled graph.
        const std::uint64_t total = labeled_graph_count(n);
        const std::size_t workers = static_cast<std::size_t>(std::max(1, g.jobs));
        std::vector<long> eliminable(workers, 0), agree(workers, 0);
        parallel_for(workers, g.jobs, [&](std::size_t w) {
            for (std::uint64_t code = w; code < total; code += workers) {
                const auto graph = graph_from_code(n, code);
                const bool by_order = has_ordering(graph);
                if (by_order == structural_check(graph).passes()) ++agree[w];
                if (by_order) ++eliminable[w];
            }
        });
        const long agreed = std::accumulate(agree.begin(), agree.end(), 0L);
        if (agreed != static_cast<long>(total))
            throw InternalInconsistency("ordering search and structural test disagree on " +
                                        std::to_string(total - static_cast<std::uint64_t>(agreed)) + " graphs");
        result["labeled_graphs"] = total;
        result["labeled_agreement"] = agreed;
        result["labeled_eliminable"] = std::accumulate(eliminable.begin(), eliminable.end(), 0L);
    } else {
        result["mode"] = "sampling";
        result["samples"] = samples;
        inputs["samples"] = samples;
        if (samples < 1) throw io::InputError("--samples must be positive");
        std::mt19937_64 rng(g.seed);
        std::uniform_int_distribution<std::uint64_t> pick(0, labeled_graph_count(n) - 1);
        std::map<CanonicalKey, long> counts;
        long eliminable = 0;
        for (long s = 0; s < samples; ++s) {
            const auto graph = graph_from_code(n, pick(rng));
            if (is_eliminable(graph).eliminable) ++eliminable;
            ++counts[canonical_key(graph, swap)];
        }
        for (const auto& [key, count] : counts) {
            reps.push_back(deserialize(n, key));
            json row = class_row(reps.back());
            row["key"] = key_to_string(key);
            row["count"] = count;
            rows.push_back(std::move(row));
        }
        result["labeled_eliminable"] = eliminable;
        result["labeled_agreement"] = samples;
    }

    if (oracle) {
        std::vector<json> verdicts(reps.size());
        parallel_for(reps.size(), g.jobs, [&](std::size_t i) { verdicts[i] = census_oracle(reps[i], g.seed); });
        for (std::size_t i = 0; i < rows.size(); ++i) rows[i]["oracle"] = verdicts[i];
    }

    long elim_classes = 0;
    for (const auto& r : rows) elim_classes += r.at("eliminable").get<bool>() ? 1 : 0;
    result["class_count"] = rows.size();
    result["eliminable_classes"] = elim_classes;
    result["non_eliminable_classes"] = static_cast<long>(rows.size()) - elim_classes;
    result["classes"] = rows;
    const bool seeded = oracle || n > kMaxExhaustiveCensus;
    return io::report("census", inputs, result, seeded ? std::optional<std::uint64_t>(g.seed) : std::nullopt);
}

json run_classify(const std::string& path, int k, std::vector<int> n) {
    const auto graph = io::parse_graph(io::load_json(path));
    if (n.empty()) n.assign(static_cast<std::size_t>(graph.vertex_count()), 0);
    MultiBraidSpec spec;
    try {
        spec = MultiBraidSpec(k, n, graph);
    } catch (const std::invalid_argument& e) {
        throw io::InputError(e.what());
    }
    const auto v = classify(spec);
    return io::report("classify", {{"graph", io::graph_json(graph)}, {"k", k}, {"n", n}}, io::multibraid_json(spec, v),
                      std::nullopt);
}

json run_oracle(const Globals& g, const std::string& spec_path, const std::string& arr_path, std::optional<int> budget) {
    json inputs, result;
    std::optional<MultiBraidSpec> spec;
    std::optional<MultiArrangement> arr;
    if (!spec_path.empty()) {
        spec = io::parse_spec(io::load_json(spec_path));
        inputs["spec"] = io::spec_json(*spec);
        try {
            arr = to_arrangement(*spec);
        } catch (const std::invalid_argument& e) {
            throw io::InputError(e.what());
        }
    } else {
        arr = io::parse_arrangement(io::load_json(arr_path));
        inputs["arrangement"] = io::arrangement_json(*arr);
    }
    if (budget) inputs["budget"] = *budget;
    if (arr->ambient_dim() > kMaxOracleDimension)
        throw UnsupportedSize("oracle limits: ambient dimension <= " + std::to_string(kMaxOracleDimension) +
                              ", degree budget <= " + std::to_string(kMaxOracleDegree));
    if (!budget && arr->total_multiplicity() > kMaxOracleDegree)
        throw UnsupportedSize("oracle limits: |m| = " + std::to_string(arr->total_multiplicity()) + " exceeds " +
                              std::to_string(kMaxOracleDegree) + "; pass a smaller --budget");
    const auto cert = freeness_verdict(*arr, budget, g.seed);
    result = io::certificate_json(cert);
    result["hilbert_consistent"] = cert.status == FreenessStatus::Free ? json(hilbert_consistent(cert, arr->ambient_dim()))
                                                                       : json(nullptr);
    if (spec) {
        const auto v = classify(*spec);
        json theorem = {{"status", to_string(v.status)},
                        {"exponents", v.exponents ? json(*v.exponents) : json(nullptr)}};
        if (v.status != BraidStatus::OutOfTheoremScope && cert.status != FreenessStatus::Inconclusive) {
            bool agree = (v.status == BraidStatus::Free) == (cert.status == FreenessStatus::Free);
            if (agree && v.exponents) agree = *v.exponents == cert.generator_degrees();
            if (!agree) throw InternalInconsistency("oracle certificate contradicts the classification theorem");
            theorem["agrees"] = true;
        }
        result["theorem"] = theorem;
    }
    return io::report("oracle", inputs, result, g.seed);
}

json run_deform(const Globals& g, const std::string& path, int k, bool oracle) {
    if (k < 0) throw io::InputError("--k must be non-negative");
    DeformationSpec spec{io::parse_digraph(io::load_json(path)), k};
    if (spec.digraph.vertex_count() < 2) throw io::InputError("deformation needs at least two vertices");
    const auto v = deformation_verdict(spec);
    json result = io::deformation_json(spec, v);
    if (oracle) {
        const auto cone = build_and_cone(spec).second;
        if (cone.ambient_dim() > kMaxOracleDimension)
            throw UnsupportedSize("--oracle supports digraphs on at most " + std::to_string(kMaxOracleDimension - 1) +
                                  " vertices");
        const auto cert = freeness_verdict(cone, std::nullopt, g.seed);
        json o = oracle_summary(cert);
        if (v.status != DeformationStatus::Undetermined && cert.status != FreenessStatus::Inconclusive &&
            (v.status == DeformationStatus::Free) != (cert.status == FreenessStatus::Free))
            throw InternalInconsistency("oracle on the cone contradicts the deformation verdict");
        if (v.status == DeformationStatus::Undetermined) o["role"] = "conjecture data, not a verdict";
        result["oracle"] = o;
    }
    return io::report("deform", {{"digraph", io::digraph_json(spec.digraph)}, {"k", k}}, result,
                      oracle ? std::optional<std::uint64_t>(g.seed) : std::nullopt);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bicolor-eliminability, multi-braid freeness and deformation analysis"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_option("--seed", g.seed, "Seed for the oracle's evaluation points and census sampling");
    app.add_option("--jobs", g.jobs, "Worker threads")->check(CLI::PositiveNumber);
    app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "table"}));

    std::string graph_path, spec_path, arr_path, digraph_path;
    int k = 0;
    std::vector<int> n;
    auto* classify_cmd = app.add_subcommand("classify", "Classify a multi-braid arrangement");
    classify_cmd->add_option("--graph", graph_path, "Graph file")->required();
    classify_cmd->add_option("--k", k, "k >= 0")->required();
    classify_cmd->add_option("--n", n, "Offsets n_1,...,n_{l+1}")->delimiter(',');

    int vertices = 0;
    bool no_swap = false, census_oracle_flag = false;
    long samples = 1000;
    auto* census_cmd = app.add_subcommand("census", "Enumerate bicolored graphs up to isomorphism");
    census_cmd->add_option("--vertices", vertices, "Vertex count (<= 5 exhaustive, 6 sampled)")->required();
    census_cmd->add_flag("--no-swap", no_swap, "Do not identify a graph with its color swap");
    census_cmd->add_flag("--oracle", census_oracle_flag, "Check each class with the derivation oracle at k=1, n=0");
    census_cmd->add_option("--samples", samples, "Sample count for 6 vertices");

    std::optional<int> budget;
    auto* oracle_cmd = app.add_subcommand("oracle", "Freeness certificate from the derivation oracle");
    auto* spec_opt = oracle_cmd->add_option("--spec", spec_path, "Multi-braid spec file");
    auto* arr_opt = oracle_cmd->add_option("--arrangement", arr_path, "Arrangement file");
    spec_opt->excludes(arr_opt);
    oracle_cmd->add_option("--budget", budget, "Largest degree to scan");
    oracle_cmd->require_option(1);

    int deform_k = 0;
    bool deform_oracle = false;
    auto* deform_cmd = app.add_subcommand("deform", "Freeness of a braid deformation given by a digraph");
    deform_cmd->add_option("--digraph", digraph_path, "Directed graph file")->required();
    deform_cmd->add_option("--k", deform_k, "k >= 0")->required();
    deform_cmd->add_flag("--oracle", deform_oracle, "Also run the oracle on the coned arrangement");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        json r;
        if (*classify_cmd) r = run_classify(graph_path, k, n);
        else if (*census_cmd) r = run_census(g, vertices, !no_swap, census_oracle_flag, samples);
        else if (*oracle_cmd) r = run_oracle(g, spec_path, arr_path, budget);
        else r = run_deform(g, digraph_path, deform_k, deform_oracle);
        emit(g, r);
        return 0;
    } catch (const InternalInconsistency& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
