#pragma once

// Sparse multivariate polynomials with exact rational coefficients.
//
// Variables are indexed 1..n and tagged with the basis they live in: 'a'
// variables are the box layer thicknesses a_i = W_i - W_{i-1}, 'W' variables
// the edge lengths themselves. The tag travels with every polynomial and
// mixing bases in arithmetic is an error; the a -> W rewrite is explicit.
//
// Canonical form: terms sorted in descending graded-lexicographic order,
// no zero coefficients, no zero exponents. Equality is plain term-list
// comparison.

#include "boxvol/numeric.hpp"

#include <boost/functional/hash.hpp>

#include <algorithm>
#include <compare>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace boxvol {

enum class VarBasis : unsigned char { A, W };

inline const char* basis_name(VarBasis b) { return b == VarBasis::A ? "a" : "W"; }

class Monomial {
public:
    // (variable index >= 1, exponent >= 1), sorted by variable.
    using Factor = std::pair<int, int>;

    Monomial() = default;  // the monomial 1

    explicit Monomial(std::vector<Factor> factors) : factors_(std::move(factors)) {
        for (std::size_t i = 0; i < factors_.size(); ++i) {
            if (factors_[i].first < 1 || factors_[i].second < 1)
                throw std::invalid_argument("monomial factors need variable >= 1 and exponent >= 1");
            if (i + 1 < factors_.size() && factors_[i].first >= factors_[i + 1].first)
                throw std::invalid_argument("monomial factors must be sorted by variable");
        }
    }

    // a_{v_1} a_{v_2} ... a_{v_k} from a multiset of variable indices.
    static Monomial from_values(std::span<const int> values) {
        std::vector<int> sorted(values.begin(), values.end());
        std::sort(sorted.begin(), sorted.end());
        std::vector<Factor> factors;
        std::size_t i = 0;
        while (i < sorted.size()) {
            std::size_t j = i;
            while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
            factors.emplace_back(sorted[i], static_cast<int>(j - i));
            i = j;
        }
        return Monomial(std::move(factors));
    }

    static Monomial variable(int index, int exponent = 1) {
        return Monomial({{index, exponent}});
    }

    bool is_one() const { return factors_.empty(); }
    const std::vector<Factor>& factors() const { return factors_; }

    int degree() const {
        int d = 0;
        for (const auto& [v, e] : factors_) d += e;
        return d;
    }

    int max_var() const { return factors_.empty() ? 0 : factors_.back().first; }

    int exponent_of(int var) const {
        for (const auto& [v, e] : factors_)
            if (v == var) return e;
        return 0;
    }

    Monomial operator*(const Monomial& o) const {
        std::vector<Factor> out;
        out.reserve(factors_.size() + o.factors_.size());
        std::size_t i = 0, j = 0;
        while (i < factors_.size() && j < o.factors_.size()) {
            if (factors_[i].first == o.factors_[j].first) {
                out.emplace_back(factors_[i].first, factors_[i].second + o.factors_[j].second);
                ++i, ++j;
            } else if (factors_[i].first < o.factors_[j].first) {
                out.push_back(factors_[i++]);
            } else {
                out.push_back(o.factors_[j++]);
            }
        }
        while (i < factors_.size()) out.push_back(factors_[i++]);
        while (j < o.factors_.size()) out.push_back(o.factors_[j++]);
        return Monomial(std::move(out));
    }

    // Graded lexicographic: higher total degree first, ties broken by the
    // dense exponent vector (e_1, e_2, ...) compared lexicographically.
    // Returns <0, 0, >0 like strcmp; positive means *this is the later
    // (larger, more leading) monomial.
    int compare_grlex(const Monomial& o) const {
        const int da = degree(), db = o.degree();
        if (da != db) return da < db ? -1 : 1;
        std::size_t i = 0, j = 0;
        while (i < factors_.size() && j < o.factors_.size()) {
            if (factors_[i].first == o.factors_[j].first) {
                if (factors_[i].second != o.factors_[j].second)
                    return factors_[i].second < o.factors_[j].second ? -1 : 1;
                ++i, ++j;
            } else {
                // the side whose next factor has the smaller variable index is
                // nonzero earlier in the dense vector, hence lex-larger
                return factors_[i].first < o.factors_[j].first ? 1 : -1;
            }
        }
        if (i < factors_.size()) return 1;
        if (j < o.factors_.size()) return -1;
        return 0;
    }

    Rational eval(std::span<const Rational> point) const {
        Rational out = 1;
        for (const auto& [v, e] : factors_) {
            if (static_cast<std::size_t>(v) > point.size())
                throw std::invalid_argument("missing value for variable index " + std::to_string(v));
            out *= pow_rational(point[static_cast<std::size_t>(v - 1)], static_cast<unsigned>(e));
        }
        return out;
    }

    std::string str(const char* var_name) const {
        std::string s;
        for (std::size_t i = 0; i < factors_.size(); ++i) {
            if (i) s += '*';
            s += var_name;
            s += std::to_string(factors_[i].first);
            if (factors_[i].second > 1) {
                s += '^';
                s += std::to_string(factors_[i].second);
            }
        }
        return s;
    }

    bool operator==(const Monomial& o) const { return factors_ == o.factors_; }

private:
    std::vector<Factor> factors_;
};

class Polynomial {
public:
    using Term = std::pair<Monomial, Rational>;

    explicit Polynomial(VarBasis basis = VarBasis::A) : basis_(basis) {}

    static Polynomial zero(VarBasis basis) { return Polynomial(basis); }

    static Polynomial constant(VarBasis basis, Rational value) {
        Polynomial p(basis);
        if (value != 0) p.terms_.emplace_back(Monomial(), std::move(value));
        return p;
    }

    static Polynomial variable(VarBasis basis, int index) {
        Polynomial p(basis);
        p.terms_.emplace_back(Monomial::variable(index), Rational(1));
        return p;
    }

    // Canonicalizes: sorts, merges duplicate monomials, drops zeros.
    static Polynomial from_terms(VarBasis basis, std::vector<Term> terms) {
        std::sort(terms.begin(), terms.end(),
                  [](const Term& x, const Term& y) { return x.first.compare_grlex(y.first) > 0; });
        Polynomial p(basis);
        p.terms_.reserve(terms.size());
        for (auto& t : terms) {
            if (!p.terms_.empty() && p.terms_.back().first == t.first)
                p.terms_.back().second += t.second;
            else
                p.terms_.push_back(std::move(t));
            if (!p.terms_.empty() && p.terms_.back().second == 0) p.terms_.pop_back();
        }
        return p;
    }

    VarBasis basis() const { return basis_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::vector<Term>& terms() const { return terms_; }

    int max_var() const {
        int m = 0;
        for (const auto& [mono, c] : terms_) m = std::max(m, mono.max_var());
        return m;
    }

    Polynomial& operator+=(const Polynomial& o) {
        require_same_basis(o);
        std::vector<Term> merged;
        merged.reserve(terms_.size() + o.terms_.size());
        std::size_t i = 0, j = 0;
        while (i < terms_.size() && j < o.terms_.size()) {
            const int c = terms_[i].first.compare_grlex(o.terms_[j].first);
            if (c > 0) {
                merged.push_back(std::move(terms_[i++]));
            } else if (c < 0) {
                merged.push_back(o.terms_[j++]);
            } else {
                Rational sum = terms_[i].second + o.terms_[j].second;
                if (sum != 0) merged.emplace_back(std::move(terms_[i].first), std::move(sum));
                ++i, ++j;
            }
        }
        while (i < terms_.size()) merged.push_back(std::move(terms_[i++]));
        while (j < o.terms_.size()) merged.push_back(o.terms_[j++]);
        terms_ = std::move(merged);
        return *this;
    }

    friend Polynomial operator+(Polynomial x, const Polynomial& y) { return x += y; }

    Polynomial operator-() const {
        Polynomial p(basis_);
        p.terms_.reserve(terms_.size());
        for (const auto& [m, c] : terms_) p.terms_.emplace_back(m, Rational(-c));
        return p;
    }

    friend Polynomial operator-(const Polynomial& x, const Polynomial& y) { return x + (-y); }

    friend Polynomial operator*(const Polynomial& x, const Polynomial& y) {
        x.require_same_basis(y);
        std::vector<Term> products;
        products.reserve(x.terms_.size() * y.terms_.size());
        for (const auto& [mx, cx] : x.terms_)
            for (const auto& [my, cy] : y.terms_) products.emplace_back(mx * my, cx * cy);
        return from_terms(x.basis_, std::move(products));
    }

    Polynomial operator*(const Rational& scalar) const {
        if (scalar == 0) return Polynomial(basis_);
        Polynomial p(basis_);
        p.terms_.reserve(terms_.size());
        for (const auto& [m, c] : terms_) p.terms_.emplace_back(m, Rational(c * scalar));
        return p;
    }

    // Exact evaluation; point[i-1] supplies the value of variable i and must
    // cover every variable that actually appears.
    Rational eval(std::span<const Rational> point) const {
        Rational out = 0;
        for (const auto& [m, c] : terms_) out += c * m.eval(point);
        return out;
    }

    // Rewrites an a-basis polynomial in the W basis via a_i -> W_i - W_{i-1}
    // (a_1 -> W_1), expanding exactly.
    Polynomial substitute_a_to_w() const {
        if (basis_ != VarBasis::A)
            throw std::invalid_argument("substitute_a_to_w needs an a-basis polynomial");
        Polynomial out(VarBasis::W);
        for (const auto& [mono, coeff] : terms_) {
            Polynomial term = constant(VarBasis::W, coeff);
            for (const auto& [v, e] : mono.factors()) {
                Polynomial layer = variable(VarBasis::W, v);
                if (v > 1) layer = layer - variable(VarBasis::W, v - 1);
                for (int k = 0; k < e; ++k) term = term * layer;
            }
            out += term;
        }
        return out;
    }

    // Display/serialization order is the storage order: descending grlex.
    std::string str() const {
        if (terms_.empty()) return "0";
        const char* var = basis_name(basis_);
        std::string out;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            const bool neg = c < 0;
            const Rational mag = neg ? Rational(-c) : c;
            if (first) {
                if (neg) out += '-';
                first = false;
            } else {
                out += neg ? " - " : " + ";
            }
            const std::string mono = m.str(var);
            if (mono.empty()) {
                out += rational_str(mag);
            } else {
                if (mag != 1) {
                    out += rational_str(mag);
                    out += '*';
                }
                out += mono;
            }
        }
        return out;
    }

    std::size_t hash() const {
        std::size_t h = static_cast<std::size_t>(basis_);
        for (const auto& [m, c] : terms_) {
            for (const auto& [v, e] : m.factors()) {
                boost::hash_combine(h, v);
                boost::hash_combine(h, e);
            }
            boost::hash_combine(h, c);
        }
        return h;
    }

    bool operator==(const Polynomial& o) const {
        return basis_ == o.basis_ && terms_ == o.terms_;
    }

    // Total order for use as ordered-container keys: basis, then term lists
    // (monomials by grlex, coefficients as exact rationals).
    bool operator<(const Polynomial& o) const {
        if (basis_ != o.basis_) return basis_ < o.basis_;
        std::size_t i = 0, j = 0;
        while (i < terms_.size() && j < o.terms_.size()) {
            const int c = terms_[i].first.compare_grlex(o.terms_[j].first);
            if (c != 0) return c < 0;
            if (terms_[i].second != o.terms_[j].second) return terms_[i].second < o.terms_[j].second;
            ++i, ++j;
        }
        return terms_.size() < o.terms_.size();
    }

private:
    void require_same_basis(const Polynomial& o) const {
        if (basis_ != o.basis_)
            throw std::invalid_argument("variable basis mismatch: " + std::string(basis_name(basis_)) +
                                        " vs " + basis_name(o.basis_));
    }

    VarBasis basis_;
    std::vector<Term> terms_;
};

}  // namespace boxvol
