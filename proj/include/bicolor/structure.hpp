#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <vector>

#include "eliminability.hpp"
#include "graph.hpp"

namespace bicolor {

// Structural side of the eliminability test: chordality of each color class, the
// four-vertex condition, and absence of mountains and hills.

/// (v_1..v_n; omega): a path in the color opposite to `sigma`, omega joined in `sigma`
/// to the interior vertices, no other pairs adjacent.
struct MountainWitness {
    std::vector<int> path;
    int omega = 0;
    EdgeColor sigma = EdgeColor::Plus;
};

/// (v_1..v_n; omega_1, omega_2): path in -sigma, {omega_1,omega_2} in sigma, omega_1
/// joined to v_1..v_{n-1}, omega_2 to v_2..v_n, no other pairs adjacent.
struct HillWitness {
    std::vector<int> path;
    int omega1 = 0;
    int omega2 = 0;
    EdgeColor sigma = EdgeColor::Plus;
};

struct StructuralReport {
    bool chordal_plus = true;
    bool chordal_minus = true;
    std::optional<std::array<int, 4>> bad_quadruple;
    std::optional<MountainWitness> mountain;
    std::optional<HillWitness> hill;

    bool passes() const {
        return chordal_plus && chordal_minus && !bad_quadruple && !mountain && !hill;
    }
};

/// Chordality of the single-color graph (V, E^c) by repeated simplicial-vertex deletion.
inline bool is_chordal(const EdgeBicoloredGraph& g, EdgeColor c) {
    const int n = g.vertex_count();
    std::vector<bool> alive(static_cast<std::size_t>(n) + 1, true);
    for (int removed = 0; removed < n; ++removed) {
        int simplicial = 0;
        for (int v = 1; v <= n && !simplicial; ++v) {
            if (!alive[v]) continue;
            std::vector<int> nb;
            for (int u = 1; u <= n; ++u)
                if (u != v && alive[u] && g.color(u, v) == c) nb.push_back(u);
            bool clique = true;
            for (std::size_t a = 0; a < nb.size() && clique; ++a)
                for (std::size_t b = a + 1; b < nb.size() && clique; ++b)
                    clique = g.color(nb[a], nb[b]) == c;
            if (clique) simplicial = v;
        }
        if (!simplicial) return false;
        alive[simplicial] = false;
    }
    return true;
}

inline bool is_mountain(const EdgeBicoloredGraph& g, const MountainWitness& w) {
    const auto& p = w.path;
    const std::size_t n = p.size();
    if (n < 3) return false;
    std::vector<int> verts = p;
    verts.push_back(w.omega);
    auto expected = [&](std::size_t a, std::size_t b) {
        // a < b are positions in verts; position n is omega.
        if (b == n) return (a >= 1 && a + 1 < n) ? w.sigma : EdgeColor::Absent;
        return b == a + 1 ? opposite(w.sigma) : EdgeColor::Absent;
    };
    for (std::size_t a = 0; a < verts.size(); ++a)
        for (std::size_t b = a + 1; b < verts.size(); ++b) {
            if (verts[a] == verts[b]) return false;
            if (g.color(verts[a], verts[b]) != expected(a, b)) return false;
        }
    return true;
}

inline bool is_hill(const EdgeBicoloredGraph& g, const HillWitness& w) {
    const auto& p = w.path;
    const std::size_t n = p.size();
    if (n < 2) return false;
    std::vector<int> verts = p;
    verts.push_back(w.omega1);
    verts.push_back(w.omega2);
    auto expected = [&](std::size_t a, std::size_t b) {
        if (a == n && b == n + 1) return w.sigma;
        if (b == n) return a + 1 < n ? w.sigma : EdgeColor::Absent;      // omega_1
        if (b == n + 1) return a >= 1 ? w.sigma : EdgeColor::Absent;     // omega_2
        return b == a + 1 ? opposite(w.sigma) : EdgeColor::Absent;
    };
    for (std::size_t a = 0; a < verts.size(); ++a)
        for (std::size_t b = a + 1; b < verts.size(); ++b) {
            if (verts[a] == verts[b]) return false;
            if (g.color(verts[a], verts[b]) != expected(a, b)) return false;
        }
    return true;
}

namespace detail {

// Path extension for mountains: every interior vertex is sigma-joined to omega, the
// end vertex is not joined to omega. Non-consecutive path vertices must be non-adjacent.
inline bool extend_mountain(const EdgeBicoloredGraph& g, MountainWitness& w) {
    const int last = w.path.back();
    const EdgeColor path_color = opposite(w.sigma);
    for (int v = 1; v <= g.vertex_count(); ++v) {
        if (v == w.omega || std::find(w.path.begin(), w.path.end(), v) != w.path.end()) continue;
        if (g.color(last, v) != path_color) continue;
        bool induced = true;
        for (std::size_t a = 0; a + 1 < w.path.size() && induced; ++a)
            induced = !g.adjacent(w.path[a], v);
        if (!induced) continue;
        const EdgeColor to_omega = g.color(v, w.omega);
        w.path.push_back(v);
        if (to_omega == EdgeColor::Absent && w.path.size() >= 3 && is_mountain(g, w)) return true;
        if (to_omega == w.sigma && extend_mountain(g, w)) return true;
        w.path.pop_back();
    }
    return false;
}

inline bool extend_hill(const EdgeBicoloredGraph& g, HillWitness& w) {
    const int last = w.path.back();
    const EdgeColor path_color = opposite(w.sigma);
    for (int v = 1; v <= g.vertex_count(); ++v) {
        if (v == w.omega1 || v == w.omega2) continue;
        if (std::find(w.path.begin(), w.path.end(), v) != w.path.end()) continue;
        if (g.color(last, v) != path_color) continue;
        if (g.color(v, w.omega2) != w.sigma) continue;
        bool induced = true;
        for (std::size_t a = 0; a + 1 < w.path.size() && induced; ++a)
            induced = !g.adjacent(w.path[a], v);
        if (!induced) continue;
        const EdgeColor to_omega1 = g.color(v, w.omega1);
        w.path.push_back(v);
        if (to_omega1 == EdgeColor::Absent && is_hill(g, w)) return true;
        if (to_omega1 == w.sigma && extend_hill(g, w)) return true;
        w.path.pop_back();
    }
    return false;
}

}  // namespace detail

/// First mountain found (sigma = Plus searched before Minus). Exhaustive; exponential worst case.
inline std::optional<MountainWitness> find_mountain(const EdgeBicoloredGraph& g) {
    const int n = g.vertex_count();
    for (EdgeColor sigma : {EdgeColor::Plus, EdgeColor::Minus})
        for (int omega = 1; omega <= n; ++omega)
            for (int v1 = 1; v1 <= n; ++v1) {
                if (v1 == omega || g.adjacent(v1, omega)) continue;
                MountainWitness w{{v1}, omega, sigma};
                if (detail::extend_mountain(g, w)) return w;
            }
    return std::nullopt;
}

inline std::optional<HillWitness> find_hill(const EdgeBicoloredGraph& g) {
    const int n = g.vertex_count();
    for (EdgeColor sigma : {EdgeColor::Plus, EdgeColor::Minus})
        for (int o1 = 1; o1 <= n; ++o1)
            for (int o2 = 1; o2 <= n; ++o2) {
                if (o1 == o2 || g.color(o1, o2) != sigma) continue;
                for (int v1 = 1; v1 <= n; ++v1) {
                    if (v1 == o1 || v1 == o2) continue;
                    if (g.color(v1, o1) != sigma || g.adjacent(v1, o2)) continue;
                    HillWitness w{{v1}, o1, o2, sigma};
                    if (detail::extend_hill(g, w)) return w;
                }
            }
    return std::nullopt;
}

/// First 4-subset (lexicographic) whose induced subgraph has no elimination ordering.
inline std::optional<std::array<int, 4>> find_bad_quadruple(const EdgeBicoloredGraph& g) {
    const int n = g.vertex_count();
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b)
            for (int c = b + 1; c <= n; ++c)
                for (int d = c + 1; d <= n; ++d)
                    if (!has_ordering(induced_subgraph(g, {a, b, c, d})))
                        return std::array<int, 4>{a, b, c, d};
    return std::nullopt;
}

inline StructuralReport structural_check(const EdgeBicoloredGraph& g) {
    StructuralReport r;
    r.chordal_plus = is_chordal(g, EdgeColor::Plus);
    r.chordal_minus = is_chordal(g, EdgeColor::Minus);
    r.bad_quadruple = find_bad_quadruple(g);
    r.mountain = find_mountain(g);
    r.hill = find_hill(g);
    return r;
}

struct EliminabilityEvidence {
    bool eliminable = false;
    std::optional<Ordering> ordering;
    StructuralReport structural;
};

/// Ordering search and structural characterization side by side. Disagreement throws.
inline EliminabilityEvidence is_eliminable(const EdgeBicoloredGraph& g) {
    EliminabilityEvidence ev;
    ev.ordering = find_ordering(g);
    ev.structural = structural_check(g);
    ev.eliminable = ev.ordering.has_value();
    if (ev.eliminable != ev.structural.passes())
        throw InternalInconsistency("ordering search and structural characterization disagree");
    return ev;
}

}  // namespace bicolor
