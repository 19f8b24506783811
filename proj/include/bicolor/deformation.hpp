#pragma once

#include <algorithm>
#include <array>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "derivations.hpp"
#include "graph.hpp"
#include "multibraid.hpp"

namespace bicolor {

/// x_i - x_j = -k - e(i,j), -k, ..., k, k + e(j,i) for i < j, with e read off the digraph.
struct DeformationSpec {
    DirectedGraph digraph;
    int k = 0;
};

/// normal . x = constant
struct AffineHyperplane {
    std::vector<Rational> normal;
    Rational constant;
};

struct AffineArrangement {
    int dim = 0;
    std::vector<AffineHyperplane> hyperplanes;
};

struct ConditionCheck {
    bool a1 = true;
    bool a2 = true;
    /// First triple (i, j, h), i,j < h, violating A1 (preferred) or A2.
    std::optional<std::array<int, 3>> witness;
};

/**
 * A1: (i,j) arc implies (i,h) or (h,j) arc.  A2: (i,h) and (h,j) arcs imply (i,j) arc.
 * Both over all ordered i != j with i, j < h.
 */
inline ConditionCheck check_a1_a2(const DirectedGraph& g) {
    ConditionCheck out;
    std::optional<std::array<int, 3>> a1_witness, a2_witness;
    const int n = g.vertex_count();
    for (int h = 1; h <= n; ++h)
        for (int i = 1; i < h; ++i)
            for (int j = 1; j < h; ++j) {
                if (i == j) continue;
                if (g.has_arc(i, j) && !g.has_arc(i, h) && !g.has_arc(h, j)) {
                    out.a1 = false;
                    if (!a1_witness) a1_witness = std::array<int, 3>{i, j, h};
                }
                if (g.has_arc(i, h) && g.has_arc(h, j) && !g.has_arc(i, j)) {
                    out.a2 = false;
                    if (!a2_witness) a2_witness = std::array<int, 3>{i, j, h};
                }
            }
    out.witness = a1_witness ? a1_witness : a2_witness;
    return out;
}

/// Whether some relabeling of the vertices makes A1 and A2 hold. Small digraphs only.
inline bool conditions_hold_up_to_relabeling(const DirectedGraph& g) {
    const int n = g.vertex_count();
    if (n > 8) throw UnsupportedSize("relabeling search supports at most 8 vertices");
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 1);
    do {
        DirectedGraph relabeled(n);
        for (const auto& [i, j] : g.arcs())
            relabeled.add_arc(perm[static_cast<std::size_t>(i - 1)], perm[static_cast<std::size_t>(j - 1)]);
        const auto c = check_a1_a2(relabeled);
        if (c.a1 && c.a2) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

/// Distinct constants c with x_i - x_j = c in the deformation, ascending.
inline std::vector<int> deformation_constants(const DeformationSpec& spec, int i, int j) {
    std::set<int> c;
    c.insert(-spec.k - spec.digraph.epsilon(i, j));
    for (int t = -spec.k; t <= spec.k; ++t) c.insert(t);
    c.insert(spec.k + spec.digraph.epsilon(j, i));
    return {c.begin(), c.end()};
}

inline AffineArrangement build_affine(const DeformationSpec& spec) {
    const int n = spec.digraph.vertex_count();
    if (n < 2) throw std::invalid_argument("deformation needs at least two vertices");
    if (spec.k < 0) throw std::invalid_argument("k must be non-negative");
    AffineArrangement a;
    a.dim = n;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int c : deformation_constants(spec, i, j)) {
                AffineHyperplane h;
                h.normal.assign(static_cast<std::size_t>(n), Rational(0));
                h.normal[static_cast<std::size_t>(i - 1)] = 1;
                h.normal[static_cast<std::size_t>(j - 1)] = -1;
                h.constant = c;
                a.hyperplanes.push_back(std::move(h));
            }
    return a;
}

/// Homogenize with an extra last coordinate z: normal.x - c z = 0, plus z = 0.
inline MultiArrangement cone(const AffineArrangement& a) {
    const std::size_t dim = static_cast<std::size_t>(a.dim) + 1;
    std::vector<Hyperplane> hs;
    for (const auto& h : a.hyperplanes) {
        Hyperplane ch;
        ch.normal = h.normal;
        ch.normal.push_back(-h.constant);
        ch.mult = 1;
        hs.push_back(std::move(ch));
    }
    Hyperplane infinity;
    infinity.normal.assign(dim, Rational(0));
    infinity.normal.back() = 1;
    hs.push_back(std::move(infinity));
    return MultiArrangement(static_cast<int>(dim), std::move(hs));
}

inline std::pair<AffineArrangement, MultiArrangement> build_and_cone(const DeformationSpec& spec) {
    auto affine = build_affine(spec);
    auto coned = cone(affine);
    return {std::move(affine), std::move(coned)};
}

/**
 * Ziegler restriction onto the infinity hyperplane as a multi-braid spec: H_ij gets the
 * number of constants, 2k + 1 + e(i,j) + e(j,i), written as 2(k+1) + s with
 * s = Plus (both arcs), Absent (one arc), Minus (no arc).
 */
inline MultiBraidSpec ziegler_spec(const DeformationSpec& spec) {
    const int n = spec.digraph.vertex_count();
    EdgeBicoloredGraph g(n);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            const int arcs = spec.digraph.epsilon(i, j) + spec.digraph.epsilon(j, i);
            g.set_color(i, j, arcs == 2 ? EdgeColor::Plus : (arcs == 1 ? EdgeColor::Absent : EdgeColor::Minus));
        }
    return MultiBraidSpec::uniform(spec.k + 1, std::move(g));
}

enum class DeformationStatus { Free, NonFree, Undetermined };

inline const char* to_string(DeformationStatus s) {
    switch (s) {
        case DeformationStatus::Free: return "free";
        case DeformationStatus::NonFree: return "non-free";
        default: return "undetermined";
    }
}

struct DeformationVerdict {
    DeformationStatus status = DeformationStatus::Undetermined;
    ConditionCheck conditions;
    MultiBraidSpec ziegler;
    Verdict ziegler_verdict;
    std::string note;
};

/**
 * Free when A1 and A2 hold. NonFree when the Ziegler restriction's graph is not
 * bicolor-eliminable (a free cone has a free Ziegler restriction). Otherwise
 * Undetermined: the converse of the A1/A2 criterion is only conjectured.
 */
inline DeformationVerdict deformation_verdict(const DeformationSpec& spec) {
    DeformationVerdict v;
    v.conditions = check_a1_a2(spec.digraph);
    v.ziegler = ziegler_spec(spec);
    v.ziegler_verdict = classify(v.ziegler);
    if (v.conditions.a1 && v.conditions.a2) {
        v.status = DeformationStatus::Free;
        v.note = "A1 and A2 hold: the coned deformation is free (sufficiency theorem)";
        if (v.ziegler_verdict.status != BraidStatus::Free)
            throw InternalInconsistency("A1 and A2 hold but the Ziegler restriction is not free");
    } else if (v.ziegler_verdict.status == BraidStatus::NonFree) {
        v.status = DeformationStatus::NonFree;
        v.note = "Ziegler restriction is a non-free multi-braid arrangement, so the cone is not free";
    } else {
        v.status = DeformationStatus::Undetermined;
        v.note = "A1/A2 fail but the Ziegler restriction is free; necessity of A1 and A2 is an open "
                 "conjecture (stated for k = 0 only), so no verdict is claimed";
    }
    return v;
}

}  // namespace bicolor
