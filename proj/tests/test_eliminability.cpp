#include <catch_amalgamated.hpp>

#include <numeric>
#include <set>

#include "bicolor/eliminability.hpp"
#include "bicolor/structure.hpp"

using namespace bicolor;
using C = EdgeColor;

namespace {

const EdgeBicoloredGraph kPath(3, {{1, 2}}, {{2, 3}});
const EdgeBicoloredGraph kMountain(4, {{2, 4}}, {{1, 2}, {2, 3}});
const EdgeBicoloredGraph kHill(4, {{3, 4}, {1, 3}, {2, 4}}, {{1, 2}});
const EdgeBicoloredGraph kCycle4(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}}, {});

EdgeBicoloredGraph complete_plus(int n) {
    EdgeBicoloredGraph g(n);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) g.set_color(i, j, C::Plus);
    return g;
}

}  // namespace

TEST_CASE("ordering bijections", "[eliminability]") {
    const auto o = Ordering::from_sequence({2, 3, 1});
    CHECK(o.rank(2) == 1);
    CHECK(o.rank(1) == 3);
    CHECK(o.vertex_at(2) == 3);
    CHECK(Ordering::from_ranks(o.ranks()) == o);
    CHECK_THROWS_AS(Ordering::from_sequence({1, 1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Ordering::from_ranks({1, 4, 2}), std::invalid_argument);
}

TEST_CASE("is_valid_ordering examples", "[eliminability]") {
    CHECK(is_valid_ordering(kPath, Ordering::from_sequence({1, 3, 2})));
    CHECK_FALSE(is_valid_ordering(kPath, Ordering::identity(3)));
    std::vector<int> seq{1, 2, 3, 4, 5};
    do {
        REQUIRE(is_valid_ordering(EdgeBicoloredGraph(5), Ordering::from_sequence(seq)));
    } while (std::next_permutation(seq.begin(), seq.end()));
    CHECK_THROWS(is_valid_ordering(kPath, Ordering::identity(4)));
}

TEST_CASE("find_ordering examples", "[eliminability]") {
    CHECK_FALSE(find_ordering(kMountain).has_value());
    CHECK(all_valid_orderings(kMountain).empty());
    CHECK_FALSE(find_ordering(kCycle4).has_value());
    for (int n = 1; n <= 6; ++n) {
        const auto g = complete_plus(n);
        CHECK(is_valid_ordering(g, Ordering::identity(n)));
        REQUIRE(find_ordering(g).has_value());
    }
    const auto o = find_ordering(kPath);
    REQUIRE(o.has_value());
    CHECK(is_valid_ordering(kPath, *o));
}

TEST_CASE("ordering search never backtracks on eliminable five-vertex graphs", "[eliminability]") {
    long backtracks = 0, eliminable = 0;
    for (std::uint64_t code = 0; code < labeled_graph_count(5); ++code) {
        const auto g = graph_from_code(5, code);
        detail::OrderingSearch search(g);
        std::vector<int> tail;
        if (!search.run((1u << 5) - 1, tail)) continue;
        ++eliminable;
        backtracks += search.backtracks();
    }
    CHECK(eliminable == 13403);
    CHECK(backtracks == 0);
}

TEST_CASE("tilde_degrees examples", "[eliminability]") {
    for (int n = 1; n <= 6; ++n) {
        std::vector<int> expected(static_cast<std::size_t>(n));
        std::iota(expected.begin(), expected.end(), 0);
        CHECK(tilde_degrees(complete_plus(n), Ordering::identity(n)).values == expected);
    }
    CHECK(tilde_degrees(kPath, Ordering::from_sequence({1, 3, 2})).values == std::vector<int>{0, 0, 0});
    CHECK(tilde_degrees(EdgeBicoloredGraph(4), Ordering::identity(4)).values == std::vector<int>{0, 0, 0, 0});
    CHECK_THROWS_AS(tilde_degrees(kPath, Ordering::identity(3)), InvalidOrdering);
}

TEST_CASE("complete_filtration examples", "[eliminability]") {
    const auto tri = complete_plus(3);
    const auto f = complete_filtration(tri, Ordering::identity(3));
    REQUIRE(f.added_edges.size() == 3);
    CHECK(f.added_edges[0].first == Edge{1, 2});
    CHECK(f.added_edges[1].first == Edge{1, 3});
    CHECK(f.added_edges[2].first == Edge{2, 3});
    CHECK(f.blocks == std::vector<int>{2, 3, 3});
    CHECK(f.steps.front() == EdgeBicoloredGraph(3));
    CHECK(f.steps.back() == tri);
    CHECK(filtration_defect(tri, f).empty());

    const EdgeBicoloredGraph edge(2, {{1, 2}}, {});
    const auto fe = complete_filtration(edge, Ordering::identity(2));
    CHECK(fe.steps.size() == 2);
    CHECK(fe.steps[0] == EdgeBicoloredGraph(2));
    CHECK(fe.steps[1] == edge);

    // Star into 4: the identity ordering fires pattern (1) on two leaves, so it is refused.
    const EdgeBicoloredGraph star(4, {{1, 4}, {2, 4}, {3, 4}}, {});
    CHECK_FALSE(is_valid_ordering(star, Ordering::identity(4)));
    CHECK_THROWS_AS(complete_filtration(star, Ordering::identity(4)), InvalidOrdering);
    const auto center_first = Ordering::from_sequence({4, 1, 2, 3});
    REQUIRE(is_valid_ordering(star, center_first));
    const auto fs = complete_filtration(star, center_first);
    CHECK(fs.added_edges.size() == 3);
    CHECK(filtration_defect(star, fs).empty());
}

TEST_CASE("filtrations are sound on every eliminable 4-vertex graph", "[eliminability]") {
    for (std::uint64_t code = 0; code < labeled_graph_count(4); ++code) {
        const auto g = graph_from_code(4, code);
        const auto o = find_ordering(g);
        if (!o) continue;
        const auto f = complete_filtration(g, *o);
        REQUIRE(filtration_defect(g, f).empty());
        REQUIRE(static_cast<int>(f.added_edges.size()) == g.edge_count());
        for (std::size_t t = 0; t < f.steps.size(); ++t) {
            REQUIRE(f.steps[t].edge_count() == static_cast<int>(t));
            REQUIRE(is_valid_ordering(f.steps[t], *o));
        }
        for (std::size_t t = 1; t < f.blocks.size(); ++t) REQUIRE(f.blocks[t - 1] <= f.blocks[t]);
    }
}

TEST_CASE("structural_check examples", "[eliminability]") {
    const auto c4 = structural_check(kCycle4);
    CHECK_FALSE(c4.chordal_plus);
    CHECK(c4.chordal_minus);
    CHECK_FALSE(c4.passes());

    const auto m = structural_check(kMountain);
    REQUIRE(m.mountain.has_value());
    CHECK(m.mountain->sigma == C::Plus);
    CHECK(m.mountain->omega == 4);
    CHECK(is_mountain(kMountain, *m.mountain));
    CHECK(is_mountain(kMountain, MountainWitness{{1, 2, 3}, 4, C::Plus}));

    const auto h = structural_check(kHill);
    REQUIRE(h.hill.has_value());
    CHECK(is_hill(kHill, *h.hill));
    CHECK(is_hill(kHill, HillWitness{{1, 2}, 3, 4, C::Plus}));
    CHECK_FALSE(h.passes());

    CHECK(structural_check(complete_plus(5)).passes());
    CHECK(is_chordal(complete_plus(5), C::Plus));
}

TEST_CASE("is_eliminable examples", "[eliminability]") {
    for (std::uint64_t code = 0; code < labeled_graph_count(3); ++code)
        REQUIRE(is_eliminable(graph_from_code(3, code)).eliminable);
    CHECK_FALSE(is_eliminable(kMountain).eliminable);
    CHECK_FALSE(is_eliminable(kHill).eliminable);
    CHECK_FALSE(is_eliminable(kCycle4).eliminable);
    const auto ev = is_eliminable(kPath);
    CHECK(ev.eliminable);
    CHECK(ev.ordering.has_value());
}

TEST_CASE("forbidden 4-vertex classes are not eliminable", "[eliminability]") {
    // Slots in row-major pair order 12,13,14,23,24,34.
    const char* forbidden[] = {"..++.-", "++-...", "+.++.+", "+.++.-", "..+++-", "..--++",
                               "-.++.-", "+-++.+", "+--+.+", "-+++.-", "--+++-", "++--++"};
    for (const char* s : forbidden) {
        EdgeBicoloredGraph g(4);
        int p = 0;
        for (int i = 1; i <= 4; ++i)
            for (int j = i + 1; j <= 4; ++j, ++p)
                g.set_color(i, j, s[p] == '+' ? C::Plus : (s[p] == '-' ? C::Minus : C::Absent));
        INFO(s);
        CHECK_FALSE(is_eliminable(g).eliminable);
    }
}
