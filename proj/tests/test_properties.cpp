#include <catch_amalgamated.hpp>

#include <random>

#include "bicolor/canonical.hpp"
#include "bicolor/derivations.hpp"
#include "bicolor/multibraid.hpp"

using namespace bicolor;
using C = EdgeColor;

namespace {

std::vector<int> offsets(int n, int mask) {
    std::vector<int> out(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = (mask >> i) & 1;
    return out;
}

std::vector<EdgeBicoloredGraph> labeled(int n) {
    std::vector<EdgeBicoloredGraph> out;
    for (std::uint64_t code = 0; code < labeled_graph_count(n); ++code) out.push_back(graph_from_code(n, code));
    return out;
}

}  // namespace

TEST_CASE("swap equivariance of orderings and degrees", "[properties]") {
    for (const auto& g : labeled(4)) {
        const auto s = color_swap(g);
        std::vector<int> seq{1, 2, 3, 4};
        do {
            const auto nu = Ordering::from_sequence(seq);
            const bool valid = is_valid_ordering(g, nu);
            REQUIRE(valid == is_valid_ordering(s, nu));
            if (!valid) continue;
            auto d = tilde_degrees(g, nu).values;
            for (auto& x : d) x = -x;
            REQUIRE(tilde_degrees(s, nu).values == d);
        } while (std::next_permutation(seq.begin(), seq.end()));
    }
}

TEST_CASE("degree sum and degree bounds", "[properties]") {
    for (const auto& g : labeled(5)) {
        const auto o = find_ordering(g);
        if (!o) continue;
        const auto d = tilde_degrees(g, *o).values;
        REQUIRE(d[0] == 0);
        for (std::size_t i = 0; i < d.size(); ++i) REQUIRE(std::abs(d[i]) <= static_cast<int>(i));
        REQUIRE(std::accumulate(d.begin(), d.end(), 0) == g.edge_count(C::Plus) - g.edge_count(C::Minus));
    }
}

TEST_CASE("eliminability is hereditary", "[properties]") {
    std::mt19937_64 rng(5);
    for (const auto& g : labeled(5)) {
        if (!has_ordering(g)) continue;
        const unsigned mask = 1 + static_cast<unsigned>(rng() % 31);
        REQUIRE(has_ordering(induced_subgraph_mask(g, mask)));
    }
    // And every induced subgraph of an eliminable 4-vertex graph.
    for (const auto& g : labeled(4)) {
        if (!has_ordering(g)) continue;
        for (unsigned mask = 1; mask < 16; ++mask) REQUIRE(has_ordering(induced_subgraph_mask(g, mask)));
    }
}

TEST_CASE("exponent sum, duality and localization", "[properties]") {
    for (const auto& g : labeled(4)) {
        for (int k = 0; k <= 2; ++k)
            for (int mask = 0; mask < 16; ++mask) {
                const MultiBraidSpec spec(k, offsets(4, mask), g);
                const auto v = classify(spec);
                if (v.status != BraidStatus::Free) continue;
                const auto& e = *v.exponents;
                REQUIRE(std::accumulate(e.begin(), e.end(), 0) == spec.total_multiplicity());
                REQUIRE(std::count(e.begin(), e.end(), 0) >= 1);
                REQUIRE(lmp2(spec) == elementary_symmetric2(e));
                REQUIRE(char_poly(spec).degree() == 4);
                if (k > 0) {
                    const auto dual = classify(dual_spec(spec));
                    REQUIRE(dual.status == BraidStatus::Free);
                    std::vector<int> expected{0};
                    for (std::size_t r = 1; r < v.tilde_degrees->values.size(); ++r)
                        expected.push_back(spec.big_n() - v.tilde_degrees->values[r]);
                    std::sort(expected.begin(), expected.end());
                    REQUIRE(*dual.exponents == expected);
                    // Localization onto any vertex subset stays free.
                    for (unsigned sub = 1; sub < 16; ++sub) {
                        std::vector<int> keep, n;
                        for (int vtx = 1; vtx <= 4; ++vtx)
                            if (sub & (1u << (vtx - 1))) {
                                keep.push_back(vtx);
                                n.push_back(spec.n[static_cast<std::size_t>(vtx - 1)]);
                            }
                        const MultiBraidSpec local(k, n, induced_subgraph(g, keep));
                        REQUIRE(classify(local).status == BraidStatus::Free);
                    }
                }
            }
        if (has_ordering(g)) continue;
        for (int mask = 0; mask < 16; ++mask) {
            const MultiBraidSpec spec(1, offsets(4, mask), g);
            REQUIRE(classify(dual_spec(spec)).status == BraidStatus::NonFree);
        }
    }
}

TEST_CASE("lmp2 equals e2 of the exponents on five vertices", "[properties]") {
    long checked = 0;
    for (const auto& cls : enumerate_classes(5, false)) {
        if (!has_ordering(cls.representative)) continue;
        for (int k = 0; k <= 2; ++k)
            for (int mask = 0; mask < 32; ++mask) {
                const MultiBraidSpec spec(k, offsets(5, mask), cls.representative);
                const auto v = classify(spec);
                if (v.status != BraidStatus::Free) continue;
                REQUIRE(lmp2(spec) == elementary_symmetric2(*v.exponents));
                ++checked;
            }
    }
    CHECK(checked > 10000);
}

TEST_CASE("exponents change by one entry along filtrations", "[properties]") {
    for (const auto& g : labeled(4)) {
        const auto o = find_ordering(g);
        if (!o) continue;
        const auto f = complete_filtration(g, *o);
        for (int mask = 0; mask < 16; ++mask) {
            const auto n = offsets(4, mask);
            for (std::size_t t = 0; t < f.added_edges.size(); ++t) {
                const auto before = classify(MultiBraidSpec(1, n, f.steps[t]));
                const auto after = classify(MultiBraidSpec(1, n, f.steps[t + 1]));
                REQUIRE(before.status == BraidStatus::Free);
                REQUIRE(after.status == BraidStatus::Free);
                const int step = f.added_edges[t].second == C::Plus ? 1 : -1;
                // Multisets differ in one element, by `step`.
                bool found = false;
                const auto& eb = *before.exponents;
                for (std::size_t i = 0; i < eb.size() && !found; ++i) {
                    auto moved = eb;
                    moved[i] += step;
                    std::sort(moved.begin(), moved.end());
                    found = moved == *after.exponents;
                }
                REQUIRE(found);
            }
        }
    }
}

TEST_CASE("oracle agrees with the theorem on three vertices", "[properties]") {
    int compared = 0;
    for (const auto& g : labeled(3))
        for (int k = 0; k <= 1; ++k)
            for (int mask = 0; mask < 8; ++mask) {
                const MultiBraidSpec spec(k, offsets(3, mask), g);
                const auto v = classify(spec);
                if (v.status == BraidStatus::OutOfTheoremScope) continue;
                const auto cert = freeness_verdict(to_arrangement(spec));
                ++compared;
                REQUIRE((cert.status == FreenessStatus::Free) == (v.status == BraidStatus::Free));
                if (v.exponents) REQUIRE(cert.generator_degrees() == *v.exponents);
            }
    CHECK(compared > 200);
}
