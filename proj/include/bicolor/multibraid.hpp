#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "derivations.hpp"
#include "eliminability.hpp"
#include "graph.hpp"
#include "structure.hpp"

namespace bicolor {

/**
 * Multiplicity m(H_ij) = 2k + n_i + n_j + s(i,j) on the braid arrangement in
 * vertex_count coordinates, where s is +1 / -1 / 0 for Plus / Minus / Absent pairs.
 */
struct MultiBraidSpec {
    int k = 0;
    std::vector<int> n;
    EdgeBicoloredGraph graph;

    MultiBraidSpec() = default;
    MultiBraidSpec(int k_, std::vector<int> n_, EdgeBicoloredGraph g) : k(k_), n(std::move(n_)), graph(std::move(g)) {
        if (k < 0) throw std::invalid_argument("k must be non-negative");
        if (static_cast<int>(n.size()) != graph.vertex_count())
            throw std::invalid_argument("n has " + std::to_string(n.size()) + " entries but the graph has " +
                                        std::to_string(graph.vertex_count()) + " vertices");
        if (std::any_of(n.begin(), n.end(), [](int x) { return x < 0; }))
            throw std::invalid_argument("n entries must be non-negative");
    }

    /// Zero offsets n.
    static MultiBraidSpec uniform(int k, EdgeBicoloredGraph g) {
        std::vector<int> n(static_cast<std::size_t>(g.vertex_count()), 0);
        return MultiBraidSpec(k, std::move(n), std::move(g));
    }

    int vertex_count() const { return graph.vertex_count(); }

    int multiplicity(int i, int j) const {
        return 2 * k + n[static_cast<std::size_t>(i - 1)] + n[static_cast<std::size_t>(j - 1)] +
               sign_of(graph.color(i, j));
    }

    /// (l+1)k + sum n_i.
    int big_n() const { return vertex_count() * k + std::accumulate(n.begin(), n.end(), 0); }

    /// Sum of the positive multiplicities.
    int total_multiplicity() const {
        int s = 0;
        for (int i = 1; i <= vertex_count(); ++i)
            for (int j = i + 1; j <= vertex_count(); ++j) s += std::max(0, multiplicity(i, j));
        return s;
    }

    bool has_negative_multiplicity() const {
        for (int i = 1; i <= vertex_count(); ++i)
            for (int j = i + 1; j <= vertex_count(); ++j)
                if (multiplicity(i, j) < 0) return true;
        return false;
    }
};

enum class ScopeCondition { A, B, C };

inline const char* to_string(ScopeCondition c) {
    switch (c) {
        case ScopeCondition::A: return "a";
        case ScopeCondition::B: return "b";
        default: return "c";
    }
}

/// (a) k > 0; (b) no Minus pairs; (c) no Plus pairs and every multiplicity positive.
inline std::optional<ScopeCondition> theorem_scope(const MultiBraidSpec& spec) {
    if (spec.k > 0) return ScopeCondition::A;
    if (spec.graph.edge_count(EdgeColor::Minus) == 0) return ScopeCondition::B;
    if (spec.graph.edge_count(EdgeColor::Plus) == 0) {
        for (int i = 1; i <= spec.vertex_count(); ++i)
            for (int j = i + 1; j <= spec.vertex_count(); ++j)
                if (spec.multiplicity(i, j) <= 0) return std::nullopt;
        return ScopeCondition::C;
    }
    return std::nullopt;
}

enum class BraidStatus { Free, NonFree, OutOfTheoremScope };

inline const char* to_string(BraidStatus s) {
    switch (s) {
        case BraidStatus::Free: return "free";
        case BraidStatus::NonFree: return "non-free";
        default: return "out-of-theorem-scope";
    }
}

struct Verdict {
    BraidStatus status = BraidStatus::OutOfTheoremScope;
    std::optional<ScopeCondition> condition;
    /// Sorted; present when Free.
    std::optional<std::vector<int>> exponents;
    std::optional<DegreeVector> tilde_degrees;
    EliminabilityEvidence evidence;

    /// Non-eliminability evidence; meaningful when NonFree.
    const StructuralReport& witness() const { return evidence.structural; }
};

/// {0} together with N + d_r for ranks r = 2..l+1, sorted.
inline std::vector<int> exponents_from_degrees(int big_n, const DegreeVector& d) {
    std::vector<int> e{0};
    for (std::size_t r = 1; r < d.values.size(); ++r) e.push_back(big_n + d.values[r]);
    std::sort(e.begin(), e.end());
    return e;
}

inline Verdict classify(const MultiBraidSpec& spec) {
    Verdict v;
    v.condition = theorem_scope(spec);
    v.evidence = is_eliminable(spec.graph);
    if (!v.condition) {
        v.status = BraidStatus::OutOfTheoremScope;
        return v;
    }
    if (v.evidence.eliminable) {
        v.status = BraidStatus::Free;
        v.tilde_degrees = tilde_degrees(spec.graph, *v.evidence.ordering);
        v.exponents = exponents_from_degrees(spec.big_n(), *v.tilde_degrees);
    } else {
        v.status = BraidStatus::NonFree;
    }
    return v;
}

/// Same k and n, colors swapped: realizes 2k + n_i + n_j - s(i,j).
inline MultiBraidSpec dual_spec(const MultiBraidSpec& spec) {
    return MultiBraidSpec(spec.k, spec.n, color_swap(spec.graph));
}

/// Characteristic polynomial t * prod_{r>=2} (t - N - d_r), stored by its roots.
struct CharPoly {
    std::vector<int> roots;  // sorted, one per linear factor

    int degree() const { return static_cast<int>(roots.size()); }

    /// Coefficients, highest degree first, of prod (t - r).
    std::vector<Integer> coefficients() const {
        std::vector<Integer> c{1};
        for (int r : roots) {
            std::vector<Integer> next(c.size() + 1, 0);
            for (std::size_t i = 0; i < c.size(); ++i) {
                next[i] += c[i];
                next[i + 1] -= c[i] * r;
            }
            c = std::move(next);
        }
        return c;
    }
};

/// Refuses specs that are out of scope or have a non-eliminable graph.
inline CharPoly char_poly(const MultiBraidSpec& spec) {
    const Verdict v = classify(spec);
    if (v.status != BraidStatus::Free)
        throw std::invalid_argument(std::string("char_poly needs a free in-scope spec; status is ") +
                                    to_string(v.status));
    return CharPoly{*v.exponents};
}

/**
 * Restriction onto H_{s j}: vertex s is removed (vertices above it shift down by one),
 * n_j becomes n_j + n_s + k, and the graph is the induced subgraph on the remaining
 * vertices. Along a filtration step this is the Euler restriction.
 */
inline MultiBraidSpec euler_restrict_spec(const MultiBraidSpec& spec, int s, int j) {
    const int n = spec.vertex_count();
    if (s < 1 || s > n || j < 1 || j > n || s == j)
        throw std::invalid_argument("euler_restrict_spec: {" + std::to_string(s) + "," + std::to_string(j) +
                                    "} is not a pair of distinct vertices");
    if (n < 2) throw std::invalid_argument("euler_restrict_spec: need at least two vertices");
    std::vector<int> keep;
    std::vector<int> new_n;
    for (int v = 1; v <= n; ++v) {
        if (v == s) continue;
        keep.push_back(v);
        int nv = spec.n[static_cast<std::size_t>(v - 1)];
        if (v == j) nv += spec.n[static_cast<std::size_t>(s - 1)] + spec.k;
        new_n.push_back(nv);
    }
    return MultiBraidSpec(spec.k, std::move(new_n), induced_subgraph(spec.graph, keep));
}

/// Exponents (d1 >= d2) of the rank-2 multiarrangement of up to three lines.
inline std::pair<int, int> rank2_exponents(std::span<const int> mults) {
    std::vector<int> m;
    for (int x : mults) {
        if (x < 0) throw std::invalid_argument("rank2_exponents: negative multiplicity");
        if (x > 0) m.push_back(x);
    }
    if (m.size() > 3) throw UnsupportedSize("rank2_exponents handles at most three lines");
    std::sort(m.rbegin(), m.rend());
    if (m.empty()) return {0, 0};
    if (m.size() == 1) return {m[0], 0};
    if (m.size() == 2) return {m[0], m[1]};
    const int total = m[0] + m[1] + m[2];
    const int d1 = std::max(m[0], (total + 1) / 2);
    return {d1, total - d1};
}

inline std::pair<int, int> rank2_exponents(std::initializer_list<int> mults) {
    return rank2_exponents(std::span<const int>(mults.begin(), mults.size()));
}

/// Generic lines used for rank-2 oracle runs: (1,0), (0,1), (1,-1), (1,-2), ...
inline MultiArrangement rank2_arrangement(std::span<const int> mults) {
    std::vector<Hyperplane> hs;
    for (std::size_t i = 0; i < mults.size(); ++i) {
        Hyperplane h;
        if (i == 0) h.normal = {1, 0};
        else if (i == 1) h.normal = {0, 1};
        else h.normal = {1, -static_cast<int>(i - 1)};
        h.mult = mults[i];
        hs.push_back(std::move(h));
    }
    return MultiArrangement(2, std::move(hs));
}

/// Rank-2 exponents from the graded-kernel oracle (two-dimensional, always free).
inline std::pair<int, int> rank2_exponents_by_oracle(std::span<const int> mults) {
    const auto cert = freeness_verdict(rank2_arrangement(mults));
    if (cert.status != FreenessStatus::Free)
        throw InternalInconsistency("rank-2 multiarrangement reported as not free");
    const auto d = cert.generator_degrees();
    return {d[1], d[0]};
}

/**
 * Euler multiplicity m*(X) on a rank-2 flat X with |A_X| = mults.size(), m0 = m(H_0).
 * The first applicable combinatorial case is used; with four or more lines and no case
 * applying, m* is read off the rank-2 addition-deletion step computed by the oracle on
 * the fixed lines of rank2_arrangement (H_0 first). That value can depend on the lines.
 */
inline int euler_multiplicity(std::vector<int> mults, int m0) {
    auto it = std::find(mults.begin(), mults.end(), m0);
    if (it == mults.end()) throw std::invalid_argument("euler_multiplicity: m0 is not one of the multiplicities");
    const int lines = static_cast<int>(mults.size());
    if (lines < 2) throw std::invalid_argument("euler_multiplicity: a rank-2 flat has at least two lines");
    if (std::any_of(mults.begin(), mults.end(), [](int x) { return x < 1; }))
        throw std::invalid_argument("euler_multiplicity: multiplicities must be positive");
    const int total = std::accumulate(mults.begin(), mults.end(), 0);
    std::vector<int> others(mults.begin(), it);
    others.insert(others.end(), it + 1, mults.end());
    const int m1 = *std::max_element(others.begin(), others.end());
    const bool all_two = std::all_of(mults.begin(), mults.end(), [](int x) { return x == 2; });

    if (lines == 2) return m1;
    if (2 * m0 >= total) return total - m0;
    if (2 * m1 >= total - 1) return m1;
    if (total <= 2 * lines - 1 && m0 > 1) return lines - 1;
    if (total <= 2 * lines - 2 && m0 == 1) return total - lines + 1;
    if (all_two) return lines;
    if (lines == 3 && 2 * m0 <= total && 2 * m1 <= total) return total / 2;

    // H_0 is placed first; compare exponents before and after lowering m(H_0) by one.
    std::vector<int> ordered{m0};
    ordered.insert(ordered.end(), others.begin(), others.end());
    const auto full = freeness_verdict(rank2_arrangement(ordered)).generator_degrees();
    ordered[0] -= 1;
    const auto deleted = freeness_verdict(rank2_arrangement(ordered)).generator_degrees();
    for (int pick = 0; pick < 2; ++pick) {
        std::vector<int> cand{full[static_cast<std::size_t>(pick)], full[static_cast<std::size_t>(1 - pick)] - 1};
        std::sort(cand.begin(), cand.end());
        if (cand == deleted) return full[static_cast<std::size_t>(pick)];
    }
    throw InternalInconsistency("rank-2 deletion did not lower exactly one exponent");
}

/**
 * Second local mixed product: sum over rank-2 flats of d1*d2. Triple flats {i,j,h} use
 * rank2_exponents on their three multiplicities; flats H_ij cap H_hq of disjoint pairs
 * contribute m_ij * m_hq.
 */
inline long lmp2(const MultiBraidSpec& spec) {
    if (spec.has_negative_multiplicity()) throw std::invalid_argument("lmp2: negative multiplicity");
    const int n = spec.vertex_count();
    long total = 0;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int h = j + 1; h <= n; ++h) {
                const auto [d1, d2] =
                    rank2_exponents({spec.multiplicity(i, j), spec.multiplicity(i, h), spec.multiplicity(j, h)});
                total += static_cast<long>(d1) * d2;
            }
    // Unordered pairs of disjoint pairs, each counted once.
    std::vector<Edge> pairs;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) pairs.emplace_back(i, j);
    for (std::size_t a = 0; a < pairs.size(); ++a)
        for (std::size_t b = a + 1; b < pairs.size(); ++b) {
            const auto [i, j] = pairs[a];
            const auto [h, q] = pairs[b];
            if (i == h || i == q || j == h || j == q) continue;
            total += static_cast<long>(spec.multiplicity(i, j)) * spec.multiplicity(h, q);
        }
    return total;
}

/// Second elementary symmetric polynomial.
inline long elementary_symmetric2(std::span<const int> values) {
    long s = 0;
    for (std::size_t a = 0; a < values.size(); ++a)
        for (std::size_t b = a + 1; b < values.size(); ++b) s += static_cast<long>(values[a]) * values[b];
    return s;
}

/// The braid multiarrangement in vertex_count coordinates; zero multiplicities dropped.
inline MultiArrangement to_arrangement(const MultiBraidSpec& spec) {
    if (spec.has_negative_multiplicity())
        throw std::invalid_argument("spec has a negative multiplicity; no arrangement exists");
    const int n = spec.vertex_count();
    std::vector<Hyperplane> hs;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (spec.multiplicity(i, j) > 0) hs.push_back(braid_hyperplane(n, i, j, spec.multiplicity(i, j)));
    return MultiArrangement(n, std::move(hs));
}

}  // namespace bicolor
