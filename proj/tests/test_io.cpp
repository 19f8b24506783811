#include <catch_amalgamated.hpp>

#include "bicolor/io.hpp"

using namespace bicolor;
using io::json;

TEST_CASE("graph files", "[io]") {
    const auto g = io::parse_graph(json::parse(R"({"vertices": 3, "plus": [[1,2]], "minus": [[3,2]]})"));
    CHECK(g == EdgeBicoloredGraph(3, {{1, 2}}, {{2, 3}}));
    CHECK(io::parse_graph(json::parse(R"({"vertices": 2})")) == EdgeBicoloredGraph(2));

    CHECK_THROWS_AS(io::parse_graph(json::parse(R"({"vertices": 3, "plus": [[1,1]]})")), io::InputError);
    CHECK_THROWS_AS(io::parse_graph(json::parse(R"({"vertices": 3, "plus": [[1,2]], "minus": [[2,1]]})")),
                    io::InputError);
    CHECK_THROWS_AS(io::parse_graph(json::parse(R"({"vertices": 3, "plus": [[1,2],[1,2]]})")), io::InputError);
    CHECK_THROWS_AS(io::parse_graph(json::parse(R"({"vertices": 3, "plus": [[1,4]]})")), io::InputError);
    CHECK_THROWS_AS(io::parse_graph(json::parse(R"({"plus": []})")), io::InputError);
    CHECK_THROWS_AS(io::parse_graph(json::parse(R"({"vertices": "3"})")), io::InputError);
    CHECK_THROWS_AS(io::parse_graph(json::parse(R"({"vertices": 3, "plus": [[1]]})")), io::InputError);
    CHECK_THROWS_AS(io::load_json("/nonexistent/graph.json"), io::InputError);
}

TEST_CASE("digraph, spec and arrangement files", "[io]") {
    const auto d = io::parse_digraph(json::parse(R"({"vertices": 3, "arcs": [[1,2],[2,1]]})"));
    CHECK(d.has_arc(1, 2));
    CHECK(d.has_arc(2, 1));
    CHECK_FALSE(d.has_arc(1, 3));
    CHECK_THROWS_AS(io::parse_digraph(json::parse(R"({"vertices": 3, "arcs": [[1,2],[1,2]]})")), io::InputError);

    const auto s = io::parse_spec(json::parse(R"({"k": 1, "n": [0,1,0], "vertices": 3, "plus": [[1,2]]})"));
    CHECK(s.k == 1);
    CHECK(s.n == std::vector<int>{0, 1, 0});
    const auto nested = io::parse_spec(json::parse(R"({"k": 2, "graph": {"vertices": 2, "minus": [[1,2]]}})"));
    CHECK(nested.n == std::vector<int>{0, 0});
    CHECK(nested.multiplicity(1, 2) == 3);
    CHECK_THROWS_AS(io::parse_spec(json::parse(R"({"k": 1, "n": [0], "vertices": 3})")), io::InputError);

    const auto a = io::parse_arrangement(json::parse(
        R"({"dimension": 2, "hyperplanes": [{"normal": [1, "1/2"], "mult": 2}, {"normal": [0, 1]}]})"));
    CHECK(a.total_multiplicity() == 3);
    CHECK(a.hyperplanes()[0].normal[1] == Rational(1, 2));
    CHECK_THROWS_AS(io::parse_arrangement(json::parse(R"({"dimension": 2, "hyperplanes": [{"normal": [1, "x"]}]})")),
                    io::InputError);
    CHECK_THROWS_AS(
        io::parse_arrangement(json::parse(R"({"dimension": 2, "hyperplanes": [{"normal": [1, 0]}, {"normal": [2, 0]}]})")),
        io::InputError);
}

TEST_CASE("multibraid report fields", "[io]") {
    const MultiBraidSpec spec = MultiBraidSpec::uniform(1, EdgeBicoloredGraph(3, {{1, 2}}, {{2, 3}}));
    const auto j = io::multibraid_json(spec, classify(spec));
    CHECK(j["status"] == "free");
    CHECK(j["condition"] == "a");
    CHECK(j["exponents"] == json::array({0, 3, 3}));
    CHECK(j["char_poly_roots"] == json::array({0, 3, 3}));
    CHECK(j["lmp2"] == 9);
    CHECK(j["eliminable"] == true);
    CHECK(j["ordering"].is_array());
    CHECK(j["filtration"].size() == 2);
    CHECK(j["structural"]["mountain"].is_null());

    const MultiBraidSpec c4 = MultiBraidSpec::uniform(1, EdgeBicoloredGraph(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}}, {}));
    const auto n = io::multibraid_json(c4, classify(c4));
    CHECK(n["status"] == "non-free");
    CHECK(n["exponents"].is_null());
    CHECK(n["ordering"].is_null());
    CHECK(n["structural"]["chordal_plus"] == false);
}

TEST_CASE("certificate and deformation reports", "[io]") {
    const auto cert = freeness_verdict(to_arrangement(MultiBraidSpec::uniform(1, EdgeBicoloredGraph(3))));
    const auto c = io::certificate_json(cert);
    CHECK(c["status"] == "free");
    CHECK(c["generator_degrees"] == json::array({0, 3, 3}));
    CHECK(c["seed"] == kDefaultSeed);
    CHECK(c["dimension_table"][0] == json::array({0, 1}));

    DirectedGraph d(3);
    d.add_arc(1, 2);
    const DeformationSpec spec{d, 0};
    const auto r = io::deformation_json(spec, deformation_verdict(spec));
    CHECK(r["a1"] == false);
    CHECK(r["witness_triple"] == json::array({1, 2, 3}));
    CHECK(r["ziegler"]["spec"]["k"] == 1);
    CHECK(r["affine_hyperplanes"] == 4);
    CHECK(r.contains("note"));

    const auto env = io::report("deform", json::object(), r, std::nullopt);
    CHECK(env["tool_version"] == io::kToolVersion);
    CHECK(env["seed"].is_null());
    CHECK(env.dump() == io::report("deform", json::object(), r, std::nullopt).dump());
}
