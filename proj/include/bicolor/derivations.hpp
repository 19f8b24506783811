#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "errors.hpp"
#include "polynomial.hpp"
#include "rational.hpp"

namespace bicolor {

inline constexpr int kMaxOracleDimension = 5;
inline constexpr int kMaxOracleDegree = 40;
inline constexpr std::uint64_t kDefaultSeed = 20240607;

struct Hyperplane {
    std::vector<Rational> normal;
    int mult = 1;
};

/**
 * Central multiarrangement: linear forms with non-negative multiplicities.
 * Hyperplanes of multiplicity zero impose nothing and are dropped on construction.
 */
class MultiArrangement {
public:
    MultiArrangement(int ambient_dim, std::vector<Hyperplane> hyperplanes) : dim_(ambient_dim) {
        if (ambient_dim < 1) throw std::invalid_argument("ambient dimension must be positive");
        for (auto& h : hyperplanes) {
            if (static_cast<int>(h.normal.size()) != ambient_dim)
                throw std::invalid_argument("normal length does not match the ambient dimension");
            if (std::all_of(h.normal.begin(), h.normal.end(), [](const Rational& q) { return q == 0; }))
                throw std::invalid_argument("zero normal vector");
            if (h.mult < 0) throw std::invalid_argument("negative multiplicity");
            if (h.mult == 0) continue;
            for (const auto& other : hyperplanes_)
                if (proportional(other.normal, h.normal))
                    throw std::invalid_argument("proportional normals; merge them into one multiplicity");
            hyperplanes_.push_back(std::move(h));
        }
    }

    int ambient_dim() const { return dim_; }
    const std::vector<Hyperplane>& hyperplanes() const { return hyperplanes_; }

    int total_multiplicity() const {
        int s = 0;
        for (const auto& h : hyperplanes_) s += h.mult;
        return s;
    }

    static bool proportional(const std::vector<Rational>& a, const std::vector<Rational>& b) {
        std::size_t p = 0;
        while (a[p] == 0) ++p;
        if (b[p] == 0) return false;
        const Rational r = b[p] / a[p];
        for (std::size_t i = 0; i < a.size(); ++i)
            if (b[i] != r * a[i]) return false;
        return true;
    }

private:
    int dim_;
    std::vector<Hyperplane> hyperplanes_;
};

/// Homogeneous derivation sum_i components[i] * d/dx_i of the given degree.
struct DerivationElement {
    int degree = 0;
    std::vector<Polynomial> components;
};

enum class FreenessStatus { Free, NonFree, Inconclusive };

inline const char* to_string(FreenessStatus s) {
    switch (s) {
        case FreenessStatus::Free: return "free";
        case FreenessStatus::NonFree: return "non-free";
        default: return "inconclusive";
    }
}

struct FreenessCertificate {
    FreenessStatus status = FreenessStatus::Inconclusive;
    std::vector<DerivationElement> generators;
    std::map<int, int> generator_degree_table;   // degree -> new minimal generators
    std::map<int, long> dimension_table;         // degree -> dim of the graded piece
    std::uint64_t seed = kDefaultSeed;
    std::optional<std::vector<Rational>> saito_point;
    int budget = 0;
    int total_multiplicity = 0;
    std::string reason;

    std::vector<int> generator_degrees() const {
        std::vector<int> out;
        for (const auto& g : generators) out.push_back(g.degree);
        std::sort(out.begin(), out.end());
        return out;
    }
};

/**
 * Graded pieces of D(A,m) by exact linear algebra.
 *
 * A derivation of degree d is the coefficient vector of (f_1..f_l), f_i homogeneous of
 * degree d; column i*M + a is the coefficient of monomial a in f_i. For each hyperplane
 * alpha with multiplicity m, theta(alpha) is rewritten in coordinates where alpha is the
 * pivot variable (x_p = (y - sum_{j!=p} alpha_j x_j) / alpha_p) and every coefficient with
 * y-degree below m must vanish.
 *
 * Not thread-safe; use one instance per thread.
 */
class DerivationOracle {
public:
    explicit DerivationOracle(MultiArrangement a, std::uint64_t seed = kDefaultSeed)
        : a_(std::move(a)), seed_(seed) {
        if (a_.ambient_dim() > kMaxOracleDimension)
            throw UnsupportedSize("derivation oracle supports ambient dimension <= " +
                                  std::to_string(kMaxOracleDimension));
    }

    const MultiArrangement& arrangement() const { return a_; }
    int vars() const { return a_.ambient_dim(); }

    long graded_dimension(int d) { return piece(d).dimension; }

    /// Scan degrees 0..budget and record minimal generators, without a freeness decision.
    FreenessCertificate minimal_generators(int budget) {
        FreenessCertificate cert = start(budget);
        for (int d = 0; d <= budget; ++d) advance(cert, d);
        cert.reason = "generator table complete through degree " + std::to_string(budget);
        return cert;
    }

    /**
     * Free when exactly ambient_dim minimal generators appear, their degrees sum to |m| and
     * their coefficient determinant is not identically zero. NonFree as soon as more
     * generators appear, or ambient_dim of them fail the sum or determinant test (a free
     * module's minimal generators form a basis). Inconclusive if the budget runs out first.
     */
    FreenessCertificate freeness_verdict(std::optional<int> budget = std::nullopt) {
        const int m = a_.total_multiplicity();
        FreenessCertificate cert = start(budget.value_or(m));
        const std::size_t l = static_cast<std::size_t>(vars());
        for (int d = 0; d <= cert.budget; ++d) {
            advance(cert, d);
            const std::size_t count = cert.generators.size();
            if (count > l) {
                cert.status = FreenessStatus::NonFree;
                cert.reason = std::to_string(count) + " minimal generators through degree " +
                              std::to_string(d) + " exceed the rank " + std::to_string(l);
                return cert;
            }
            if (count == l) {
                const auto degs = cert.generator_degrees();
                const int sum = std::accumulate(degs.begin(), degs.end(), 0);
                if (sum != m) {
                    cert.status = FreenessStatus::NonFree;
                    cert.reason = "the first " + std::to_string(l) + " minimal generators have degree sum " +
                                  std::to_string(sum) + " != |m| = " + std::to_string(m);
                    return cert;
                }
                std::vector<Rational> point;
                if (determinant_nonzero(cert.generators, point)) {
                    cert.status = FreenessStatus::Free;
                    cert.saito_point = std::move(point);
                    cert.reason = "Saito criterion: degree sum equals |m| and determinant is nonzero";
                } else {
                    cert.status = FreenessStatus::NonFree;
                    cert.reason = "minimal generators with degree sum |m| have vanishing determinant";
                }
                return cert;
            }
        }
        cert.status = FreenessStatus::Inconclusive;
        cert.reason = "degree budget " + std::to_string(cert.budget) + " exhausted with " +
                      std::to_string(cert.generators.size()) + " generators";
        return cert;
    }

    /// Whether theta lies in D(A,m).
    bool contains(const DerivationElement& theta) {
        const auto v = to_vector(theta);
        for (const auto& row : piece(theta.degree).constraints) {
            Rational s = 0;
            std::size_t a = 0, b = 0;
            while (a < row.size() && b < v.size()) {
                if (row[a].first < v[b].first) ++a;
                else if (v[b].first < row[a].first) ++b;
                else s += row[a++].second * v[b++].second;
            }
            if (s != 0) return false;
        }
        return true;
    }

    /**
     * Saito's criterion for ambient_dim elements: membership, degree sum |m|, and a
     * determinant that is not identically zero. Returns false on a vanishing determinant;
     * throws on a degree-sum mismatch or wrong count.
     */
    bool saito_check(std::span<const DerivationElement> gens) {
        if (static_cast<int>(gens.size()) != vars())
            throw std::invalid_argument("saito_check needs exactly ambient_dim derivations");
        int sum = 0;
        for (const auto& g : gens) sum += g.degree;
        if (sum != a_.total_multiplicity())
            throw std::invalid_argument("saito_check: degree sum " + std::to_string(sum) +
                                        " differs from |m| = " + std::to_string(a_.total_multiplicity()));
        for (const auto& g : gens)
            if (!contains(g)) return false;
        std::vector<Rational> point;
        return determinant_nonzero(gens, point);
    }

    /// Consecutive zero evaluations before falling back to the symbolic determinant.
    int zero_evaluations_before_symbolic = 5;

private:
    struct Piece {
        std::unique_ptr<MonomialBasis> basis;
        std::vector<SparseRow> constraints;
        std::vector<SparseRow> kernel;
        long dimension = 0;
    };

    FreenessCertificate start(int budget) {
        if (budget < 0) throw std::invalid_argument("degree budget must be non-negative");
        if (budget > kMaxOracleDegree)
            throw UnsupportedSize("degree budget " + std::to_string(budget) + " exceeds the limit " +
                                  std::to_string(kMaxOracleDegree));
        FreenessCertificate cert;
        cert.seed = seed_;
        cert.budget = budget;
        cert.total_multiplicity = a_.total_multiplicity();
        gens_.clear();
        return cert;
    }

    const MonomialBasis& basis(int d) { return *piece_basis(d); }

    MonomialBasis* piece_basis(int d) {
        auto& slot = bases_[d];
        if (!slot) slot = std::make_unique<MonomialBasis>(vars(), d);
        return slot.get();
    }

    Piece& piece(int d) {
        if (d < 0) throw std::invalid_argument("negative degree");
        if (d > kMaxOracleDegree) throw UnsupportedSize("degree beyond the oracle limit");
        auto it = pieces_.find(d);
        if (it != pieces_.end()) return it->second;
        Piece p;
        p.constraints = build_constraints(d);
        const int cols = vars() * basis(d).size();
        SparseEchelon ech(cols);
        for (const auto& row : p.constraints) ech.insert(row);
        p.dimension = cols - ech.rank();
        p.kernel = ech.nullspace();
        return pieces_.emplace(d, std::move(p)).first->second;
    }

    std::vector<SparseRow> build_constraints(int d) {
        const int l = vars();
        const MonomialBasis& B = basis(d);
        const int M = B.size();
        std::vector<SparseRow> rows;
        for (const auto& h : a_.hyperplanes()) {
            const auto& alpha = h.normal;
            std::size_t p = 0;
            while (alpha[p] == 0) ++p;
            // (-L)^r in the variables other than p, L = sum_{j != p} alpha_j x_j.
            Polynomial neg_l(l);
            for (std::size_t j = 0; j < alpha.size(); ++j) {
                if (j == p || alpha[j] == 0) continue;
                Exponent e(static_cast<std::size_t>(l), 0);
                e[j] = 1;
                neg_l.add_term(e, -alpha[j]);
            }
            std::vector<Polynomial> powers;
            {
                Polynomial one(l);
                one.add_term(Exponent(static_cast<std::size_t>(l), 0), 1);
                powers.push_back(one);
                for (int r = 1; r <= d; ++r) powers.push_back(powers.back() * neg_l);
            }
            const Rational inv_p = 1 / alpha[p];
            std::map<int, std::map<int, Rational>> acc;  // target monomial -> column -> coeff
            for (int a = 0; a < M; ++a) {
                const Exponent& ea = B[a];
                const int ap = ea[p];
                Rational scale = 1;
                for (int t = 0; t < ap; ++t) scale *= inv_p;
                Rational binom = 1;
                for (int e = 0; e <= std::min(ap, h.mult - 1); ++e) {
                    if (e > 0) binom = binom * (ap - e + 1) / e;
                    for (const auto& [ex, c] : powers[static_cast<std::size_t>(ap - e)].terms()) {
                        Exponent target = ex;
                        for (std::size_t j = 0; j < target.size(); ++j)
                            if (j != p) target[j] += ea[j];
                        target[p] = e;
                        const int tidx = B.index(target);
                        const Rational coef = scale * binom * c;
                        for (int i = 0; i < l; ++i) {
                            if (alpha[static_cast<std::size_t>(i)] == 0) continue;
                            auto& slot = acc[tidx][i * M + a];
                            slot += alpha[static_cast<std::size_t>(i)] * coef;
                        }
                    }
                }
            }
            for (auto& [t, cols] : acc) {
                SparseRow row;
                for (auto& [c, v] : cols)
                    if (v != 0) row.emplace_back(c, std::move(v));
                if (!row.empty()) rows.push_back(std::move(row));
            }
        }
        return rows;
    }

    void advance(FreenessCertificate& cert, int d) {
        Piece& P = piece(d);
        cert.dimension_table[d] = P.dimension;
        const int l = vars();
        const MonomialBasis& B = basis(d);
        const int M = B.size();
        SparseEchelon span(l * M);
        for (const auto& g : gens_) {
            const MonomialBasis& Bg = basis(g.degree);
            const int Mg = Bg.size();
            const MonomialBasis& mult = basis(d - g.degree);
            for (const auto& mu : mult.monomials()) {
                std::map<int, Rational> prod;
                for (const auto& [col, val] : g.vector) {
                    const int i = col / Mg;
                    Exponent e = Bg[col % Mg];
                    for (std::size_t t = 0; t < e.size(); ++t) e[t] += mu[t];
                    prod.emplace(i * M + B.index(e), val);
                }
                span.insert(SparseRow(prod.begin(), prod.end()));
            }
        }
        int fresh = 0;
        for (const auto& v : P.kernel) {
            if (span.rank() == P.dimension) break;
            if (span.insert(v)) {
                gens_.push_back({d, v});
                cert.generators.push_back(to_element(d, v));
                ++fresh;
            }
        }
        cert.generator_degree_table[d] = fresh;
    }

    DerivationElement to_element(int d, const SparseRow& v) {
        const MonomialBasis& B = basis(d);
        const int M = B.size();
        DerivationElement el;
        el.degree = d;
        el.components.assign(static_cast<std::size_t>(vars()), Polynomial(vars()));
        for (const auto& [col, val] : v) el.components[static_cast<std::size_t>(col / M)].add_term(B[col % M], val);
        return el;
    }

    SparseRow to_vector(const DerivationElement& el) {
        const MonomialBasis& B = basis(el.degree);
        const int M = B.size();
        std::map<int, Rational> acc;
        for (std::size_t i = 0; i < el.components.size(); ++i)
            for (const auto& [e, c] : el.components[i].terms()) {
                const int idx = B.index(e);
                if (idx < 0) throw std::invalid_argument("derivation component is not homogeneous of its degree");
                acc[static_cast<int>(i) * M + idx] += c;
            }
        SparseRow out;
        for (auto& [c, v] : acc)
            if (v != 0) out.emplace_back(c, v);
        return out;
    }

    bool determinant_nonzero(std::span<const DerivationElement> gens, std::vector<Rational>& point) {
        std::mt19937_64 rng(seed_);
        std::uniform_int_distribution<int> coord(-97, 97);
        const std::size_t l = static_cast<std::size_t>(vars());
        int zeros = 0;
        while (zeros < zero_evaluations_before_symbolic) {
            std::vector<Rational> x(l);
            for (auto& c : x) c = coord(rng);
            bool on_hyperplane = false;
            for (const auto& h : a_.hyperplanes()) {
                Rational s = 0;
                for (std::size_t i = 0; i < l; ++i) s += h.normal[i] * x[i];
                if (s == 0) on_hyperplane = true;
            }
            if (on_hyperplane) continue;
            std::vector<std::vector<Rational>> m(gens.size(), std::vector<Rational>(l));
            for (std::size_t r = 0; r < gens.size(); ++r)
                for (std::size_t c = 0; c < l; ++c) m[r][c] = gens[r].components[c].evaluate(x);
            if (determinant(std::move(m)) != 0) {
                point = std::move(x);
                return true;
            }
            ++zeros;
        }
        point.clear();
        return !symbolic_determinant(gens).is_zero();
    }

    Polynomial symbolic_determinant(std::span<const DerivationElement> gens) const {
        const std::size_t l = gens.size();
        std::vector<std::size_t> perm(l);
        std::iota(perm.begin(), perm.end(), std::size_t{0});
        Polynomial det(vars());
        do {
            int inversions = 0;
            for (std::size_t a = 0; a < l; ++a)
                for (std::size_t b = a + 1; b < l; ++b)
                    if (perm[a] > perm[b]) ++inversions;
            Polynomial term(vars());
            term.add_term(Exponent(static_cast<std::size_t>(vars()), 0), inversions % 2 ? -1 : 1);
            for (std::size_t r = 0; r < l && !term.is_zero(); ++r) term = term * gens[r].components[perm[r]];
            det = det + term;
        } while (std::next_permutation(perm.begin(), perm.end()));
        return det;
    }

    struct Generator {
        int degree;
        SparseRow vector;
    };

    MultiArrangement a_;
    std::uint64_t seed_;
    std::map<int, std::unique_ptr<MonomialBasis>> bases_;
    std::map<int, Piece> pieces_;
    std::vector<Generator> gens_;
};

inline long graded_dimension(const MultiArrangement& a, int d) {
    DerivationOracle o(a);
    return o.graded_dimension(d);
}

inline FreenessCertificate minimal_generators(const MultiArrangement& a, std::optional<int> budget = std::nullopt) {
    DerivationOracle o(a);
    return o.minimal_generators(budget.value_or(a.total_multiplicity()));
}

inline FreenessCertificate freeness_verdict(const MultiArrangement& a, std::optional<int> budget = std::nullopt,
                                            std::uint64_t seed = kDefaultSeed) {
    DerivationOracle o(a, seed);
    return o.freeness_verdict(budget);
}

inline bool saito_check(const MultiArrangement& a, std::span<const DerivationElement> gens,
                        std::uint64_t seed = kDefaultSeed) {
    DerivationOracle o(a, seed);
    return o.saito_check(gens);
}

/// Graded dimensions agree with a free module whose generators have the certificate's degrees.
inline bool hilbert_consistent(const FreenessCertificate& cert, int vars) {
    const auto degs = cert.generator_degrees();
    for (const auto& [d, dim] : cert.dimension_table) {
        long expected = 0;
        for (int e : degs) expected += monomial_count(vars, d - e);
        if (expected != dim) return false;
    }
    return true;
}

/// Braid-type arrangement in `vars` coordinates: normal e_i - e_j with the given multiplicity.
inline Hyperplane braid_hyperplane(int vars, int i, int j, int mult) {
    Hyperplane h;
    h.normal.assign(static_cast<std::size_t>(vars), Rational(0));
    h.normal[static_cast<std::size_t>(i - 1)] = 1;
    h.normal[static_cast<std::size_t>(j - 1)] = -1;
    h.mult = mult;
    return h;
}

}  // namespace bicolor
