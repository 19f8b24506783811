#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <thread>
#include <vector>

#include "graph.hpp"

namespace bicolor {

/// Row-major upper triangle, one byte per pair: 0 Absent, 1 Plus, 2 Minus.
using CanonicalKey = std::vector<std::uint8_t>;

inline constexpr int kMaxCanonicalVertices = 7;
inline constexpr int kMaxExhaustiveCensus = 5;

struct GraphClass {
    CanonicalKey canonical_key;
    EdgeBicoloredGraph representative;
    std::uint64_t labeled_count = 0;
};

inline CanonicalKey serialize(const EdgeBicoloredGraph& g) {
    CanonicalKey key;
    key.reserve(g.colors().size());
    for (auto c : g.colors()) key.push_back(static_cast<std::uint8_t>(c));
    return key;
}

inline EdgeBicoloredGraph deserialize(int n, const CanonicalKey& key) {
    if (key.size() != EdgeBicoloredGraph::pair_count(n))
        throw std::invalid_argument("key length does not match vertex count");
    EdgeBicoloredGraph g(n);
    std::size_t p = 0;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) g.set_color(i, j, static_cast<EdgeColor>(key[p++]));
    return g;
}

inline std::string key_to_string(const CanonicalKey& key) {
    std::string s;
    for (auto b : key) s.push_back(static_cast<char>('0' + b));
    return s;
}

namespace detail {

/// For each vertex permutation, where each upper-triangle slot is sent.
class PairPermutations {
public:
    explicit PairPermutations(int n) : n_(n) {
        std::vector<int> perm(static_cast<std::size_t>(n));
        std::iota(perm.begin(), perm.end(), 0);
        std::vector<std::vector<std::size_t>> slot(static_cast<std::size_t>(n),
                                                   std::vector<std::size_t>(static_cast<std::size_t>(n)));
        std::size_t p = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) slot[i][j] = slot[j][i] = p++;
        do {
            std::vector<std::size_t> map(p);
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) map[slot[i][j]] = slot[perm[i]][perm[j]];
            maps_.push_back(std::move(map));
        } while (std::next_permutation(perm.begin(), perm.end()));
    }

    const std::vector<std::vector<std::size_t>>& maps() const { return maps_; }
    int vertex_count() const { return n_; }

private:
    int n_;
    std::vector<std::vector<std::size_t>> maps_;
};

inline const PairPermutations& pair_permutations(int n) {
    static const auto table = [] {
        std::vector<PairPermutations> t;
        for (int k = 1; k <= kMaxCanonicalVertices; ++k) t.emplace_back(k);
        return t;
    }();
    return table[static_cast<std::size_t>(n - 1)];
}

inline CanonicalKey canonical_key_raw(const CanonicalKey& colors, int n, bool include_swap) {
    CanonicalKey best(colors.size(), 0xFF);
    CanonicalKey image(colors.size());
    static constexpr std::uint8_t swapped[3] = {0, 2, 1};
    for (const auto& map : pair_permutations(n).maps()) {
        for (int s = 0; s < (include_swap ? 2 : 1); ++s) {
            for (std::size_t p = 0; p < colors.size(); ++p)
                image[map[p]] = s ? swapped[colors[p]] : colors[p];
            if (image < best) best = image;
        }
    }
    return best;
}

}  // namespace detail

/// Minimum serialization over all relabelings (and the color swap if requested).
inline CanonicalKey canonical_key(const EdgeBicoloredGraph& g, bool include_swap = true) {
    if (g.vertex_count() > kMaxCanonicalVertices)
        throw UnsupportedSize("canonical_key supports at most " +
                              std::to_string(kMaxCanonicalVertices) + " vertices, got " +
                              std::to_string(g.vertex_count()));
    return detail::canonical_key_raw(serialize(g), g.vertex_count(), include_swap);
}

/**
 * One GraphClass per isomorphism class (up to color swap when requested) of labeled
 * bicolored graphs on n vertices, sorted by canonical key. Work is split over `jobs`
 * threads by labeled-graph code; the merge is order independent.
 */
inline std::vector<GraphClass> enumerate_classes(int n, bool include_swap = true, int jobs = 1) {
    if (n < 1) throw std::invalid_argument("enumerate_classes: vertex count must be positive");
    if (n > kMaxExhaustiveCensus)
        throw UnsupportedSize("exhaustive enumeration supports at most " +
                              std::to_string(kMaxExhaustiveCensus) + " vertices, got " +
                              std::to_string(n));
    const std::uint64_t total = labeled_graph_count(n);
    jobs = std::max(1, jobs);
    std::vector<std::map<CanonicalKey, std::uint64_t>> partial(static_cast<std::size_t>(jobs));
    auto work = [&](int w) {
        auto& counts = partial[static_cast<std::size_t>(w)];
        for (std::uint64_t code = static_cast<std::uint64_t>(w); code < total;
             code += static_cast<std::uint64_t>(jobs))
            ++counts[canonical_key(graph_from_code(n, code), include_swap)];
    };
    if (jobs == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < jobs; ++w) pool.emplace_back(work, w);
        for (auto& t : pool) t.join();
    }
    std::map<CanonicalKey, std::uint64_t> merged;
    for (const auto& part : partial)
        for (const auto& [key, count] : part) merged[key] += count;

    std::vector<GraphClass> out;
    out.reserve(merged.size());
    for (const auto& [key, count] : merged) out.push_back({key, deserialize(n, key), count});
    return out;
}

}  // namespace bicolor
