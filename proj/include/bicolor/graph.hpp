#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace bicolor {

enum class EdgeColor : std::uint8_t { Absent = 0, Plus = 1, Minus = 2 };

constexpr EdgeColor opposite(EdgeColor c) {
    switch (c) {
        case EdgeColor::Plus: return EdgeColor::Minus;
        case EdgeColor::Minus: return EdgeColor::Plus;
        default: return EdgeColor::Absent;
    }
}

/// +1 / -1 / 0: the signed contribution of a pair to the multiplicity.
constexpr int sign_of(EdgeColor c) {
    return c == EdgeColor::Plus ? 1 : (c == EdgeColor::Minus ? -1 : 0);
}

inline const char* to_string(EdgeColor c) {
    switch (c) {
        case EdgeColor::Plus: return "plus";
        case EdgeColor::Minus: return "minus";
        default: return "absent";
    }
}

using Edge = std::pair<int, int>;

/**
 * Complete graph on vertices 1..n whose pairs each carry one of Plus, Minus, Absent.
 *
 * Colors are stored row-major over the upper triangle, (1,2),(1,3),...,(1,n),(2,3),...
 * which is also the serialization used for canonical keys.
 */
class EdgeBicoloredGraph {
public:
    EdgeBicoloredGraph() = default;

    explicit EdgeBicoloredGraph(int vertex_count)
        : n_(vertex_count) {
        if (vertex_count < 1) throw std::invalid_argument("vertex count must be positive");
        colors_.assign(pair_count(vertex_count), EdgeColor::Absent);
    }

    EdgeBicoloredGraph(int vertex_count, std::span<const Edge> plus, std::span<const Edge> minus)
        : EdgeBicoloredGraph(vertex_count) {
        for (const auto& [i, j] : plus) assign_new(i, j, EdgeColor::Plus);
        for (const auto& [i, j] : minus) assign_new(i, j, EdgeColor::Minus);
    }

    EdgeBicoloredGraph(int vertex_count, std::initializer_list<Edge> plus,
                       std::initializer_list<Edge> minus)
        : EdgeBicoloredGraph(vertex_count, std::span<const Edge>(plus.begin(), plus.size()),
                             std::span<const Edge>(minus.begin(), minus.size())) {}

    static constexpr std::size_t pair_count(int n) {
        return static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
    }

    int vertex_count() const { return n_; }

    EdgeColor color(int i, int j) const { return colors_[index(i, j)]; }

    void set_color(int i, int j, EdgeColor c) { colors_[index(i, j)] = c; }

    bool adjacent(int i, int j) const { return color(i, j) != EdgeColor::Absent; }

    /// Upper-triangle color sequence; see the class comment for the order.
    const std::vector<EdgeColor>& colors() const { return colors_; }

    std::vector<Edge> edges(EdgeColor c) const {
        std::vector<Edge> out;
        for (int i = 1; i <= n_; ++i)
            for (int j = i + 1; j <= n_; ++j)
                if (color(i, j) == c) out.emplace_back(i, j);
        return out;
    }

    int edge_count(EdgeColor c) const {
        return static_cast<int>(std::count(colors_.begin(), colors_.end(), c));
    }

    int edge_count() const {
        return static_cast<int>(colors_.size()) - edge_count(EdgeColor::Absent);
    }

    friend bool operator==(const EdgeBicoloredGraph&, const EdgeBicoloredGraph&) = default;

private:
    std::size_t index(int i, int j) const {
        if (i == j) throw std::invalid_argument("self-loop pair {" + std::to_string(i) + "," +
                                                std::to_string(i) + "}");
        if (i < 1 || j < 1 || i > n_ || j > n_)
            throw std::invalid_argument("vertex out of range in pair {" + std::to_string(i) +
                                        "," + std::to_string(j) + "}");
        if (i > j) std::swap(i, j);
        // Row i (0-based a) starts after a*(2n-a-1)/2 entries.
        const std::size_t a = static_cast<std::size_t>(i - 1);
        const std::size_t b = static_cast<std::size_t>(j - 1);
        const std::size_t n = static_cast<std::size_t>(n_);
        return a * (2 * n - a - 1) / 2 + (b - a - 1);
    }

    void assign_new(int i, int j, EdgeColor c) {
        auto& slot = colors_[index(i, j)];
        if (slot != EdgeColor::Absent)
            throw std::invalid_argument("pair {" + std::to_string(i) + "," + std::to_string(j) +
                                        "} listed more than once");
        slot = c;
    }

    int n_ = 0;
    std::vector<EdgeColor> colors_;
};

/// Simple directed graph on 1..n; (i,j) and (j,i) are independent arcs.
class DirectedGraph {
public:
    DirectedGraph() = default;

    explicit DirectedGraph(int vertex_count) : n_(vertex_count) {
        if (vertex_count < 1) throw std::invalid_argument("vertex count must be positive");
        arcs_.assign(static_cast<std::size_t>(n_ * n_), false);
    }

    DirectedGraph(int vertex_count, std::span<const Edge> arcs) : DirectedGraph(vertex_count) {
        for (const auto& [i, j] : arcs) {
            if (has_arc(i, j))
                throw std::invalid_argument("arc (" + std::to_string(i) + "," +
                                            std::to_string(j) + ") listed more than once");
            add_arc(i, j);
        }
    }

    DirectedGraph(int vertex_count, std::initializer_list<Edge> arcs)
        : DirectedGraph(vertex_count, std::span<const Edge>(arcs.begin(), arcs.size())) {}

    int vertex_count() const { return n_; }

    bool has_arc(int i, int j) const { return arcs_[index(i, j)]; }

    /// 1 if (i,j) is an arc, else 0.
    int epsilon(int i, int j) const { return has_arc(i, j) ? 1 : 0; }

    void add_arc(int i, int j) {
        auto slot = arcs_[index(i, j)];
        if (slot)
            throw std::invalid_argument("arc (" + std::to_string(i) + "," + std::to_string(j) + ") added twice");
        slot = true;
    }

    std::vector<Edge> arcs() const {
        std::vector<Edge> out;
        for (int i = 1; i <= n_; ++i)
            for (int j = 1; j <= n_; ++j)
                if (i != j && has_arc(i, j)) out.emplace_back(i, j);
        return out;
    }

    friend bool operator==(const DirectedGraph&, const DirectedGraph&) = default;

private:
    std::size_t index(int i, int j) const {
        if (i == j) throw std::invalid_argument("loop arc (" + std::to_string(i) + "," +
                                                std::to_string(i) + ")");
        if (i < 1 || j < 1 || i > n_ || j > n_)
            throw std::invalid_argument("vertex out of range in arc (" + std::to_string(i) +
                                        "," + std::to_string(j) + ")");
        return static_cast<std::size_t>((i - 1) * n_ + (j - 1));
    }

    int n_ = 0;
    std::vector<bool> arcs_;
};

/// Induced subgraph on `subset`, relabeled order-preservingly to 1..|subset|.
inline EdgeBicoloredGraph induced_subgraph(const EdgeBicoloredGraph& g, std::span<const int> subset) {
    if (subset.empty()) throw std::invalid_argument("induced_subgraph: empty vertex subset");
    std::vector<int> s(subset.begin(), subset.end());
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end())
        throw std::invalid_argument("induced_subgraph: repeated vertex");
    if (s.front() < 1 || s.back() > g.vertex_count())
        throw std::invalid_argument("induced_subgraph: vertex out of range");
    EdgeBicoloredGraph out(static_cast<int>(s.size()));
    for (std::size_t a = 0; a < s.size(); ++a)
        for (std::size_t b = a + 1; b < s.size(); ++b)
            out.set_color(static_cast<int>(a + 1), static_cast<int>(b + 1), g.color(s[a], s[b]));
    return out;
}

inline EdgeBicoloredGraph induced_subgraph(const EdgeBicoloredGraph& g, std::initializer_list<int> subset) {
    return induced_subgraph(g, std::span<const int>(subset.begin(), subset.size()));
}

/// Induced subgraph given as a bitmask over 0-based vertex indices.
inline EdgeBicoloredGraph induced_subgraph_mask(const EdgeBicoloredGraph& g, unsigned mask) {
    std::vector<int> s;
    for (int v = 1; v <= g.vertex_count(); ++v)
        if (mask & (1u << (v - 1))) s.push_back(v);
    return induced_subgraph(g, s);
}

inline EdgeBicoloredGraph color_swap(const EdgeBicoloredGraph& g) {
    EdgeBicoloredGraph out(g.vertex_count());
    for (int i = 1; i <= g.vertex_count(); ++i)
        for (int j = i + 1; j <= g.vertex_count(); ++j) out.set_color(i, j, opposite(g.color(i, j)));
    return out;
}

/// Relabel by `perm`: vertex v of g becomes vertex perm[v-1] of the result.
inline EdgeBicoloredGraph permute(const EdgeBicoloredGraph& g, std::span<const int> perm) {
    const int n = g.vertex_count();
    if (static_cast<int>(perm.size()) != n) throw std::invalid_argument("permute: size mismatch");
    EdgeBicoloredGraph out(n);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) out.set_color(perm[i - 1], perm[j - 1], g.color(i, j));
    return out;
}

/// Single-colored graph: every pair in `edges` gets color `c`.
inline EdgeBicoloredGraph one_colored(int n, std::span<const Edge> edges, EdgeColor c = EdgeColor::Plus) {
    EdgeBicoloredGraph out(n);
    for (const auto& [i, j] : edges) out.set_color(i, j, c);
    return out;
}

/// The labeled graph whose upper-triangle colors are the base-3 digits of `code`.
inline EdgeBicoloredGraph graph_from_code(int n, std::uint64_t code) {
    EdgeBicoloredGraph g(n);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            g.set_color(i, j, static_cast<EdgeColor>(code % 3));
            code /= 3;
        }
    return g;
}

inline std::uint64_t labeled_graph_count(int n) {
    std::uint64_t total = 1;
    for (std::size_t p = 0; p < EdgeBicoloredGraph::pair_count(n); ++p) total *= 3;
    return total;
}

}  // namespace bicolor
