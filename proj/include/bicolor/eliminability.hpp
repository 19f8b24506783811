#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "graph.hpp"

namespace bicolor {

/**
 * Bijection from vertices 1..n to ranks 1..n, with its inverse.
 */
class Ordering {
public:
    Ordering() = default;

    /// `vertices_by_rank[r-1]` is the vertex of rank r.
    static Ordering from_sequence(std::vector<int> vertices_by_rank) {
        Ordering o;
        const int n = static_cast<int>(vertices_by_rank.size());
        o.rank_.assign(static_cast<std::size_t>(n), 0);
        for (int r = 1; r <= n; ++r) {
            const int v = vertices_by_rank[static_cast<std::size_t>(r - 1)];
            if (v < 1 || v > n || o.rank_[static_cast<std::size_t>(v - 1)] != 0)
                throw std::invalid_argument("ordering is not a bijection on 1.." + std::to_string(n));
            o.rank_[static_cast<std::size_t>(v - 1)] = r;
        }
        o.vertex_ = std::move(vertices_by_rank);
        return o;
    }

    /// `ranks[v-1]` is the rank of vertex v.
    static Ordering from_ranks(const std::vector<int>& ranks) {
        std::vector<int> seq(ranks.size(), 0);
        const int n = static_cast<int>(ranks.size());
        for (int v = 1; v <= n; ++v) {
            const int r = ranks[static_cast<std::size_t>(v - 1)];
            if (r < 1 || r > n || seq[static_cast<std::size_t>(r - 1)] != 0)
                throw std::invalid_argument("ranks are not a bijection onto 1.." + std::to_string(n));
            seq[static_cast<std::size_t>(r - 1)] = v;
        }
        return from_sequence(std::move(seq));
    }

    static Ordering identity(int n) {
        std::vector<int> seq(static_cast<std::size_t>(n));
        std::iota(seq.begin(), seq.end(), 1);
        return from_sequence(std::move(seq));
    }

    int size() const { return static_cast<int>(vertex_.size()); }
    int rank(int v) const { return rank_.at(static_cast<std::size_t>(v - 1)); }
    int vertex_at(int r) const { return vertex_.at(static_cast<std::size_t>(r - 1)); }
    const std::vector<int>& vertices_by_rank() const { return vertex_; }
    const std::vector<int>& ranks() const { return rank_; }

    friend bool operator==(const Ordering&, const Ordering&) = default;

private:
    std::vector<int> rank_;
    std::vector<int> vertex_;
};

/// Tilde-degrees indexed by rank: values[r-1] belongs to the rank-r vertex.
struct DegreeVector {
    std::vector<int> values;

    std::vector<int> sorted() const {
        auto v = values;
        std::sort(v.begin(), v.end());
        return v;
    }
    friend bool operator==(const DegreeVector&, const DegreeVector&) = default;
};

struct Filtration {
    std::vector<EdgeBicoloredGraph> steps;
    /// added_edges[t] turns steps[t] into steps[t+1]; the pair is (lower rank, block vertex).
    std::vector<std::pair<Edge, EdgeColor>> added_edges;
    /// Rank of the block vertex for each addition (non-decreasing).
    std::vector<int> blocks;
    Ordering ordering;
};

/**
 * True when the triple with top vertex k realizes one of the two forbidden patterns:
 *   (1) {i,k},{j,k} share a color s and {i,j} is not of color s;
 *   (2) {k,i} has color s, {i,j} has color -s and {k,j} is absent (either role of i, j).
 */
inline bool forbidden_triple(const EdgeBicoloredGraph& g, int i, int j, int k) {
    const EdgeColor ik = g.color(i, k);
    const EdgeColor jk = g.color(j, k);
    const EdgeColor ij = g.color(i, j);
    if (ik != EdgeColor::Absent && ik == jk && ij != ik) return true;
    if (ij == EdgeColor::Absent) return false;
    if (jk == EdgeColor::Absent && ik == opposite(ij)) return true;
    if (ik == EdgeColor::Absent && jk == opposite(ij)) return true;
    return false;
}

inline bool is_valid_ordering(const EdgeBicoloredGraph& g, const Ordering& nu) {
    const int n = g.vertex_count();
    if (nu.size() != n) throw std::invalid_argument("ordering size does not match the graph");
    for (int rk = 3; rk <= n; ++rk) {
        const int k = nu.vertex_at(rk);
        for (int ri = 1; ri < rk; ++ri)
            for (int rj = ri + 1; rj < rk; ++rj)
                if (forbidden_triple(g, nu.vertex_at(ri), nu.vertex_at(rj), k)) return false;
    }
    return true;
}

namespace detail {

/// Whether v may take the largest rank among the vertices in `mask` (0-based bits).
inline bool sink_eligible(const EdgeBicoloredGraph& g, int v, unsigned mask) {
    const int n = g.vertex_count();
    for (int i = 1; i <= n; ++i) {
        if (i == v || !(mask & (1u << (i - 1)))) continue;
        for (int j = i + 1; j <= n; ++j) {
            if (j == v || !(mask & (1u << (j - 1)))) continue;
            if (forbidden_triple(g, i, j, v)) return false;
        }
    }
    return true;
}

class OrderingSearch {
public:
    explicit OrderingSearch(const EdgeBicoloredGraph& g) : g_(g) {}

    /// Fills `tail` (highest rank first) and returns true on success.
    bool run(unsigned mask, std::vector<int>& tail) {
        if (mask == 0) return true;
        if (failed_.contains(mask)) return false;
        for (int v = g_.vertex_count(); v >= 1; --v) {
            if (!(mask & (1u << (v - 1)))) continue;
            if (!sink_eligible(g_, v, mask)) continue;
            tail.push_back(v);
            if (run(mask & ~(1u << (v - 1)), tail)) return true;
            tail.pop_back();
            ++backtracks_;
        }
        failed_.insert(mask);
        return false;
    }

    long backtracks() const { return backtracks_; }

private:
    const EdgeBicoloredGraph& g_;
    std::unordered_set<unsigned> failed_;
    long backtracks_ = 0;
};

}  // namespace detail

/**
 * Some bicolor-elimination ordering of g, if one exists.
 *
 * Backtracking over sink-eligible vertices, memoized on failed remaining-vertex sets.
 */
inline std::optional<Ordering> find_ordering(const EdgeBicoloredGraph& g) {
    const int n = g.vertex_count();
    if (n > 31) throw UnsupportedSize("find_ordering supports at most 31 vertices");
    const unsigned full = (1u << n) - 1u;
    detail::OrderingSearch search(g);
    std::vector<int> tail;
    if (!search.run(full, tail)) return std::nullopt;
    std::reverse(tail.begin(), tail.end());
    return Ordering::from_sequence(std::move(tail));
}

inline bool has_ordering(const EdgeBicoloredGraph& g) { return find_ordering(g).has_value(); }

/// Every valid ordering by brute force over all n! permutations. Small graphs only.
inline std::vector<Ordering> all_valid_orderings(const EdgeBicoloredGraph& g) {
    const int n = g.vertex_count();
    if (n > 9) throw UnsupportedSize("all_valid_orderings supports at most 9 vertices");
    std::vector<int> seq(static_cast<std::size_t>(n));
    std::iota(seq.begin(), seq.end(), 1);
    std::vector<Ordering> out;
    do {
        auto nu = Ordering::from_sequence(seq);
        if (is_valid_ordering(g, nu)) out.push_back(std::move(nu));
    } while (std::next_permutation(seq.begin(), seq.end()));
    return out;
}

/// Signed count of edges from the rank-r vertex to lower ranks, for each r.
inline DegreeVector tilde_degrees(const EdgeBicoloredGraph& g, const Ordering& nu) {
    if (!is_valid_ordering(g, nu))
        throw InvalidOrdering("tilde_degrees requires a bicolor-elimination ordering");
    DegreeVector d;
    const int n = g.vertex_count();
    d.values.assign(static_cast<std::size_t>(n), 0);
    for (int r = 2; r <= n; ++r)
        for (int q = 1; q < r; ++q)
            d.values[static_cast<std::size_t>(r - 1)] += sign_of(g.color(nu.vertex_at(r), nu.vertex_at(q)));
    return d;
}

/**
 * Complete bicolor-eliminable filtration along `nu`.
 *
 * Edges are stripped from the top-ranked vertex l that still has lower neighbours.
 * Among those neighbours, i < j when {i,j} and {i,l} share a color and {j,l} has the
 * other one; the edge to a maximal j is removed (largest index first among maximal
 * ones). The reversed deletion sequence is the filtration. Every intermediate graph is
 * re-checked against `nu`.
 */
inline Filtration complete_filtration(const EdgeBicoloredGraph& g, const Ordering& nu) {
    if (!is_valid_ordering(g, nu))
        throw InvalidOrdering("complete_filtration requires a bicolor-elimination ordering");
    const int n = g.vertex_count();
    EdgeBicoloredGraph cur = g;
    std::vector<std::pair<Edge, EdgeColor>> deleted;
    std::vector<int> deleted_block;

    for (int r = n; r >= 2; --r) {
        const int l = nu.vertex_at(r);
        while (true) {
            std::vector<int> nbrs;
            for (int q = 1; q < r; ++q)
                if (cur.adjacent(l, nu.vertex_at(q))) nbrs.push_back(nu.vertex_at(q));
            if (nbrs.empty()) break;
            std::sort(nbrs.begin(), nbrs.end());

            auto precedes = [&](int a, int b) {
                const EdgeColor al = cur.color(a, l);
                return cur.color(a, b) == al && cur.color(b, l) == opposite(al);
            };
            int chosen = -1;
            for (auto it = nbrs.rbegin(); it != nbrs.rend() && chosen < 0; ++it) {
                const int j = *it;
                const bool maximal = std::none_of(nbrs.begin(), nbrs.end(), [&](int i) {
                    return i != j && precedes(j, i);
                });
                if (maximal) chosen = j;
            }
            if (chosen < 0)
                throw InternalInconsistency("no maximal element in the neighbour poset of vertex " +
                                            std::to_string(l));
            deleted.push_back({{chosen, l}, cur.color(chosen, l)});
            deleted_block.push_back(r);
            cur.set_color(chosen, l, EdgeColor::Absent);
            if (!is_valid_ordering(cur, nu))
                throw InternalInconsistency("edge deletion broke the elimination ordering");
        }
    }

    Filtration f;
    f.ordering = nu;
    f.steps.push_back(cur);
    for (std::size_t t = deleted.size(); t-- > 0;) {
        const auto& [edge, color] = deleted[t];
        cur.set_color(edge.first, edge.second, color);
        f.steps.push_back(cur);
        f.added_edges.push_back(deleted[t]);
        f.blocks.push_back(deleted_block[t]);
    }
    return f;
}

/// Checks every filtration invariant; returns an empty string when sound.
inline std::string filtration_defect(const EdgeBicoloredGraph& g, const Filtration& f) {
    if (f.steps.empty()) return "no steps";
    if (f.steps.front().edge_count() != 0) return "first step is not edgeless";
    if (!(f.steps.back() == g)) return "last step is not the graph";
    if (f.added_edges.size() + 1 != f.steps.size()) return "step/addition count mismatch";
    for (std::size_t t = 0; t < f.steps.size(); ++t) {
        if (!is_valid_ordering(f.steps[t], f.ordering))
            return "step " + std::to_string(t) + " fails the ordering";
        if (t == 0) continue;
        if (f.steps[t].edge_count() != f.steps[t - 1].edge_count() + 1)
            return "step " + std::to_string(t) + " does not add exactly one edge";
        const auto& [edge, color] = f.added_edges[t - 1];
        if (f.steps[t - 1].adjacent(edge.first, edge.second) ||
            f.steps[t].color(edge.first, edge.second) != color)
            return "step " + std::to_string(t) + " does not add the recorded edge";
        const int block = f.blocks[t - 1];
        if (f.ordering.vertex_at(block) != edge.second || f.ordering.rank(edge.first) >= block)
            return "addition " + std::to_string(t) + " is outside its block";
        if (t >= 2 && f.blocks[t - 2] > block) return "blocks are not in rank order";
    }
    return {};
}

}  // namespace bicolor
