#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "rational.hpp"

namespace bicolor {

using Exponent = std::vector<int>;

/// All monomials of a fixed degree in `vars` variables, in lexicographically decreasing order.
class MonomialBasis {
public:
    MonomialBasis(int vars, int degree) : vars_(vars), degree_(degree) {
        if (vars < 1 || vars > 8) throw std::invalid_argument("MonomialBasis: 1..8 variables");
        if (degree < 0) return;
        Exponent e(static_cast<std::size_t>(vars), 0);
        fill(e, 0, degree);
    }

    int vars() const { return vars_; }
    int degree() const { return degree_; }
    int size() const { return static_cast<int>(monomials_.size()); }
    const Exponent& operator[](int i) const { return monomials_[static_cast<std::size_t>(i)]; }
    const std::vector<Exponent>& monomials() const { return monomials_; }

    /// Index of `e`, or -1 if it is not a monomial of this degree.
    int index(const Exponent& e) const {
        auto it = lookup_.find(pack(e));
        return it == lookup_.end() ? -1 : it->second;
    }

    static std::uint64_t pack(const Exponent& e) {
        std::uint64_t key = 0;
        for (int x : e) key = (key << 8) | static_cast<std::uint64_t>(x & 0xFF);
        return key;
    }

private:
    void fill(Exponent& e, int pos, int remaining) {
        if (pos == vars_ - 1) {
            e[static_cast<std::size_t>(pos)] = remaining;
            lookup_.emplace(pack(e), static_cast<int>(monomials_.size()));
            monomials_.push_back(e);
            return;
        }
        for (int a = remaining; a >= 0; --a) {
            e[static_cast<std::size_t>(pos)] = a;
            fill(e, pos + 1, remaining - a);
        }
        e[static_cast<std::size_t>(pos)] = 0;
    }

    int vars_;
    int degree_;
    std::vector<Exponent> monomials_;
    std::unordered_map<std::uint64_t, int> lookup_;
};

/// Number of monomials of degree d in n variables; 0 for d < 0.
inline long monomial_count(int n, int d) {
    if (d < 0) return 0;
    long c = 1;
    for (int i = 1; i < n; ++i) c = c * (d + i) / i;
    return c;
}

/// Sparse multivariate polynomial over the rationals.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(int vars) : vars_(vars) {}

    int vars() const { return vars_; }
    const std::map<Exponent, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Exponent& e, const Rational& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Rational evaluate(const std::vector<Rational>& point) const {
        Rational total = 0;
        for (const auto& [e, c] : terms_) {
            Rational t = c;
            for (std::size_t i = 0; i < e.size(); ++i)
                for (int p = 0; p < e[i]; ++p) t *= point[i];
            total += t;
        }
        return total;
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        Polynomial out = a;
        if (out.vars_ == 0) out.vars_ = b.vars_;
        for (const auto& [e, c] : b.terms_) out.add_term(e, c);
        return out;
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        Polynomial out(a.vars_ ? a.vars_ : b.vars_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                Exponent e = ea;
                for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
                out.add_term(e, ca * cb);
            }
        return out;
    }

    Polynomial scaled(const Rational& s) const {
        Polynomial out(vars_);
        if (s == 0) return out;
        for (const auto& [e, c] : terms_) out.terms_.emplace(e, c * s);
        return out;
    }

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    int vars_ = 0;
    std::map<Exponent, Rational> terms_;
};

}  // namespace bicolor
