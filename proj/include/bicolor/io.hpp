#pragma once

#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "deformation.hpp"
#include "derivations.hpp"
#include "eliminability.hpp"
#include "graph.hpp"
#include "multibraid.hpp"
#include "structure.hpp"

namespace bicolor::io {

using json = nlohmann::json;

inline constexpr const char* kToolVersion = "0.1.0";

/// Malformed or inconsistent input file.
class InputError : public std::invalid_argument {
public:
    explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

inline json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw InputError(path + ": " + e.what());
    }
}

namespace detail {

inline const json& field(const json& j, const char* name) {
    if (!j.is_object()) throw InputError("expected a JSON object");
    auto it = j.find(name);
    if (it == j.end()) throw InputError(std::string("missing field '") + name + "'");
    return *it;
}

inline int as_int(const json& j, const std::string& what) {
    if (!j.is_number_integer()) throw InputError(what + " must be an integer");
    return j.get<int>();
}

inline std::vector<Edge> pair_list(const json& j, const char* name, int n) {
    std::vector<Edge> out;
    if (!j.contains(name)) return out;
    const json& list = j.at(name);
    if (!list.is_array()) throw InputError(std::string("'") + name + "' must be a list of pairs");
    for (const auto& p : list) {
        if (!p.is_array() || p.size() != 2) throw InputError(std::string("'") + name + "' entries must be [i, j]");
        const int a = as_int(p[0], "vertex");
        const int b = as_int(p[1], "vertex");
        if (a < 1 || a > n || b < 1 || b > n)
            throw InputError("vertex out of range 1.." + std::to_string(n) + " in '" + name + "'");
        if (a == b) throw InputError("self-loop [" + std::to_string(a) + "," + std::to_string(a) + "]");
        out.emplace_back(a, b);
    }
    return out;
}

inline int vertex_field(const json& j) {
    const int n = as_int(field(j, "vertices"), "'vertices'");
    if (n < 1) throw InputError("'vertices' must be positive");
    return n;
}

inline Rational parse_number(const json& v) {
    if (v.is_number_integer()) return Rational(v.get<long long>());
    if (v.is_string()) {
        try {
            return Rational(v.get<std::string>());
        } catch (const std::exception&) {
            throw InputError("not a rational number: " + v.get<std::string>());
        }
    }
    throw InputError("normal entries must be integers or strings like \"1/2\"");
}

}  // namespace detail

/// {vertices, plus: [[i,j],...], minus: [[i,j],...]}
inline EdgeBicoloredGraph parse_graph(const json& j) {
    const int n = detail::vertex_field(j);
    const auto plus = detail::pair_list(j, "plus", n);
    const auto minus = detail::pair_list(j, "minus", n);
    std::set<Edge> seen;
    for (const auto* list : {&plus, &minus})
        for (auto [a, b] : *list) {
            if (!seen.insert({std::min(a, b), std::max(a, b)}).second)
                throw InputError("pair {" + std::to_string(a) + "," + std::to_string(b) + "} listed twice");
        }
    return EdgeBicoloredGraph(n, plus, minus);
}

/// {vertices, arcs: [[i,j],...]}
inline DirectedGraph parse_digraph(const json& j) {
    const int n = detail::vertex_field(j);
    DirectedGraph g(n);
    std::set<Edge> seen;
    for (auto [a, b] : detail::pair_list(j, "arcs", n)) {
        if (!seen.insert({a, b}).second)
            throw InputError("arc (" + std::to_string(a) + "," + std::to_string(b) + ") listed twice");
        g.add_arc(a, b);
    }
    return g;
}

/// {k, n: [...], vertices, plus, minus}; the graph may also sit under "graph". Missing n means zeros.
inline MultiBraidSpec parse_spec(const json& j) {
    const int k = detail::as_int(detail::field(j, "k"), "'k'");
    const EdgeBicoloredGraph g = parse_graph(j.contains("graph") ? j.at("graph") : j);
    std::vector<int> n(static_cast<std::size_t>(g.vertex_count()), 0);
    if (j.contains("n")) {
        const json& list = j.at("n");
        if (!list.is_array()) throw InputError("'n' must be a list of integers");
        n.clear();
        for (const auto& x : list) n.push_back(detail::as_int(x, "'n' entry"));
    }
    try {
        return MultiBraidSpec(k, std::move(n), g);
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
}

/// {dimension, hyperplanes: [{normal: [...], mult}]}
inline MultiArrangement parse_arrangement(const json& j) {
    const int dim = detail::as_int(detail::field(j, "dimension"), "'dimension'");
    const json& list = detail::field(j, "hyperplanes");
    if (!list.is_array()) throw InputError("'hyperplanes' must be a list");
    std::vector<Hyperplane> hs;
    for (const auto& h : list) {
        Hyperplane out;
        const json& normal = detail::field(h, "normal");
        if (!normal.is_array()) throw InputError("'normal' must be a list");
        for (const auto& x : normal) out.normal.push_back(detail::parse_number(x));
        out.mult = h.contains("mult") ? detail::as_int(h.at("mult"), "'mult'") : 1;
        hs.push_back(std::move(out));
    }
    try {
        return MultiArrangement(dim, std::move(hs));
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
}

// ---- reports ----

inline json edge_json(const Edge& e) { return json::array({e.first, e.second}); }

inline json graph_json(const EdgeBicoloredGraph& g) {
    json plus = json::array(), minus = json::array();
    for (const auto& e : g.edges(EdgeColor::Plus)) plus.push_back(edge_json(e));
    for (const auto& e : g.edges(EdgeColor::Minus)) minus.push_back(edge_json(e));
    return {{"vertices", g.vertex_count()}, {"plus", plus}, {"minus", minus}};
}

inline json digraph_json(const DirectedGraph& g) {
    json arcs = json::array();
    for (const auto& a : g.arcs()) arcs.push_back(edge_json(a));
    return {{"vertices", g.vertex_count()}, {"arcs", arcs}};
}

inline json spec_json(const MultiBraidSpec& s) {
    json j = graph_json(s.graph);
    j["k"] = s.k;
    j["n"] = s.n;
    return j;
}

inline json rational_json(const Rational& q) { return q.str(); }

inline json arrangement_json(const MultiArrangement& a) {
    json hs = json::array();
    for (const auto& h : a.hyperplanes()) {
        json normal = json::array();
        for (const auto& q : h.normal) normal.push_back(rational_json(q));
        hs.push_back({{"normal", normal}, {"mult", h.mult}});
    }
    return {{"dimension", a.ambient_dim()}, {"hyperplanes", hs}};
}

inline json structural_json(const StructuralReport& r) {
    json j;
    j["chordal_plus"] = r.chordal_plus;
    j["chordal_minus"] = r.chordal_minus;
    j["quadruples_eliminable"] = !r.bad_quadruple.has_value();
    j["bad_quadruple"] = r.bad_quadruple ? json(*r.bad_quadruple) : json(nullptr);
    j["mountain_free"] = !r.mountain.has_value();
    j["mountain"] = r.mountain ? json{{"path", r.mountain->path},
                                      {"omega", r.mountain->omega},
                                      {"sigma", to_string(r.mountain->sigma)}}
                               : json(nullptr);
    j["hill_free"] = !r.hill.has_value();
    j["hill"] = r.hill ? json{{"path", r.hill->path},
                              {"omega1", r.hill->omega1},
                              {"omega2", r.hill->omega2},
                              {"sigma", to_string(r.hill->sigma)}}
                       : json(nullptr);
    return j;
}

inline json filtration_json(const Filtration& f) {
    json steps = json::array();
    for (std::size_t t = 0; t < f.added_edges.size(); ++t) {
        const auto& [e, c] = f.added_edges[t];
        steps.push_back({{"edge", edge_json(e)}, {"color", to_string(c)}, {"block", f.blocks[t]}});
    }
    return steps;
}

inline json eliminability_json(const EdgeBicoloredGraph& g, const EliminabilityEvidence& ev) {
    json j;
    j["eliminable"] = ev.eliminable;
    j["structural"] = structural_json(ev.structural);
    if (ev.ordering) {
        j["ordering"] = ev.ordering->ranks();
        j["elimination_sequence"] = ev.ordering->vertices_by_rank();
        j["tilde_degrees"] = tilde_degrees(g, *ev.ordering).values;
        j["filtration"] = filtration_json(complete_filtration(g, *ev.ordering));
    } else {
        j["ordering"] = nullptr;
        j["elimination_sequence"] = nullptr;
        j["tilde_degrees"] = nullptr;
        j["filtration"] = nullptr;
    }
    return j;
}

inline json multiplicities_json(const MultiBraidSpec& s) {
    json out = json::array();
    for (int i = 1; i <= s.vertex_count(); ++i)
        for (int j = i + 1; j <= s.vertex_count(); ++j)
            out.push_back({{"pair", json::array({i, j})}, {"m", s.multiplicity(i, j)}});
    return out;
}

inline json multibraid_json(const MultiBraidSpec& s, const Verdict& v) {
    json j = eliminability_json(s.graph, v.evidence);
    j["status"] = to_string(v.status);
    j["condition"] = v.condition ? json(to_string(*v.condition)) : json(nullptr);
    j["N"] = s.big_n();
    j["total_multiplicity"] = s.total_multiplicity();
    j["multiplicities"] = multiplicities_json(s);
    j["lmp2"] = s.has_negative_multiplicity() ? json(nullptr) : json(lmp2(s));
    if (v.status == BraidStatus::Free) {
        const CharPoly chi{*v.exponents};
        j["exponents"] = *v.exponents;
        j["char_poly_roots"] = chi.roots;
        json coeffs = json::array();
        for (const auto& c : chi.coefficients()) coeffs.push_back(c.str());
        j["char_poly_coefficients"] = coeffs;
        j["e2_exponents"] = elementary_symmetric2(*v.exponents);
    } else {
        j["exponents"] = nullptr;
        j["char_poly_roots"] = nullptr;
        j["char_poly_coefficients"] = nullptr;
        j["e2_exponents"] = nullptr;
    }
    return j;
}

inline json certificate_json(const FreenessCertificate& c) {
    json j;
    j["status"] = to_string(c.status);
    j["generator_degrees"] = c.generator_degrees();
    json dims = json::array();
    for (const auto& [d, dim] : c.dimension_table) dims.push_back(json::array({d, dim}));
    j["dimension_table"] = dims;
    json gens = json::array();
    for (const auto& [d, count] : c.generator_degree_table) gens.push_back(json::array({d, count}));
    j["generator_degree_table"] = gens;
    j["seed"] = c.seed;
    j["budget"] = c.budget;
    j["total_multiplicity"] = c.total_multiplicity;
    j["reason"] = c.reason;
    if (c.saito_point) {
        json pt = json::array();
        for (const auto& q : *c.saito_point) pt.push_back(rational_json(q));
        j["saito_point"] = pt;
    } else {
        j["saito_point"] = nullptr;
    }
    return j;
}

inline json deformation_json(const DeformationSpec& spec, const DeformationVerdict& v) {
    json j;
    j["a1"] = v.conditions.a1;
    j["a2"] = v.conditions.a2;
    j["witness_triple"] = v.conditions.witness ? json(*v.conditions.witness) : json(nullptr);
    json z = multibraid_json(v.ziegler, v.ziegler_verdict);
    z["spec"] = spec_json(v.ziegler);
    j["ziegler"] = z;
    j["status"] = to_string(v.status);
    j["note"] = v.note;
    j["affine_hyperplanes"] = build_affine(spec).hyperplanes.size();
    if (spec.digraph.vertex_count() <= 8)
        j["a1_a2_after_relabeling"] = conditions_hold_up_to_relabeling(spec.digraph);
    return j;
}

inline json report(const std::string& command, json inputs, json result, std::optional<std::uint64_t> seed) {
    return {{"command", command},
            {"inputs", std::move(inputs)},
            {"result", std::move(result)},
            {"tool_version", kToolVersion},
            {"seed", seed ? json(*seed) : json(nullptr)}};
}

}  // namespace bicolor::io
