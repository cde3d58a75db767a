#pragma once

// Exact piece volumes of the box dissection and the classification of S_n
// into equal-volume classes.
//
// The box [0,W_1] x ... x [0,W_n] with 0 < W_1 < ... < W_n is cut along all
// hyperplanes x_i = x_j; the piece C_pi keeps the points with
// x_{pi(1)} >= ... >= x_{pi(n)}. Writing a_i = W_i - W_{i-1}, the volume of
// C_pi is the sum over all partitions lambda with n parts lying under
// lambda_max(pi) of a_{lambda_1} ... a_{lambda_n} / |G_lambda|, where
// |G_lambda| is the stabilizer order of lambda under coordinate permutation.
// Two pieces have equal volume exactly when their psi-images agree, and the
// number of classes is the Catalan number C_n.

#include "boxvol/numeric.hpp"
#include "boxvol/parallel.hpp"
#include "boxvol/partition.hpp"
#include "boxvol/permutation.hpp"
#include "boxvol/polynomial.hpp"
#include "boxvol/psi.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace boxvol {

// Strictly increasing positive edge lengths W_1 < W_2 < ... < W_n. The
// strictness is the genericity assumption of the dissection; evaluating a
// polynomial at a degenerate point is still allowed (it is a pure polynomial
// operation), constructing Weights from one is not.
class Weights {
public:
    explicit Weights(std::vector<Rational> w) : w_(std::move(w)) {
        if (w_.empty()) throw std::invalid_argument("weights need n >= 1");
        if (w_.front() <= 0)
            throw std::invalid_argument("weights must satisfy 0 < W_1 < W_2 < ... < W_n");
        for (std::size_t i = 0; i + 1 < w_.size(); ++i)
            if (w_[i] >= w_[i + 1])
                throw std::invalid_argument("weights must satisfy 0 < W_1 < W_2 < ... < W_n");
    }

    int size() const { return static_cast<int>(w_.size()); }
    const std::vector<Rational>& values() const { return w_; }

    // Layer thicknesses a_i = W_i - W_{i-1}, with W_0 = 0.
    std::vector<Rational> layer_values() const {
        std::vector<Rational> a(w_.size());
        for (std::size_t i = 0; i < w_.size(); ++i) a[i] = i == 0 ? w_[0] : Rational(w_[i] - w_[i - 1]);
        return a;
    }

    Rational box_volume() const {
        Rational v = 1;
        for (const Rational& x : w_) v *= x;
        return v;
    }

    bool operator==(const Weights& o) const { return w_ == o.w_; }

private:
    std::vector<Rational> w_;
};

// Exact Catalan number via the closed form C_n = binom(2n, n) / (n + 1).
inline BigInt catalan(unsigned n) {
    return binomial(2 * n, n) / (n + 1);
}

// Vol(C_pi) as an a-basis polynomial: one term per partition below
// lambda_max(pi); distinct partitions give distinct monomials, so no
// cancellation ever occurs and every coefficient is 1/|G_lambda|.
inline Polynomial volume_poly(const Permutation& p) {
    std::vector<Polynomial::Term> terms;
    for (const Partition& lam : partitions_below(lambda_max(p))) {
        Rational coeff(BigInt(1), stabilizer_order(lam));
        terms.emplace_back(Monomial::from_values(lam.parts()), std::move(coeff));
    }
    return Polynomial::from_terms(VarBasis::A, std::move(terms));
}

// Exact rational volume of C_pi for concrete weights. Evaluates the a-basis
// polynomial at a_i = W_i - W_{i-1}; by the substitution/evaluation identity
// this equals evaluating the W-basis polynomial at the weights.
inline Rational volume_at(const Permutation& p, const Weights& w) {
    if (w.size() != p.size())
        throw std::invalid_argument("weights dimension " + std::to_string(w.size()) +
                                    " does not match permutation size " + std::to_string(p.size()));
    return volume_poly(p).eval(w.layer_values());
}

struct VolumeClass {
    Partition psi;
    Permutation representative;        // the unique 132-avoiding member
    std::vector<Permutation> members;  // lexicographic order
    Polynomial volume_a{VarBasis::A};
    Polynomial volume_w{VarBasis::W};
};

struct Classification {
    int n = 0;
    BigInt catalan;  // expected class count C_n
    std::vector<VolumeClass> classes;
    Polynomial total_volume_w{VarBasis::W};  // sum of |class| * volume over classes
    bool paranoid_checked = false;
    bool paranoid_ok = false;
};

struct ClassifyOptions {
    bool paranoid = false;   // recompute all n! polynomials and verify the classes
    unsigned threads = 1;
    int max_n = kDefaultMaxEnumerationN;
};

// Groups S_n by psi, computes one volume polynomial per class, and selects
// the 132-avoiding member as representative. A class without exactly one
// 132-avoiding member would falsify the Catalan correspondence; that is a
// hard error, never a fallback.
inline Classification classify(int n, const ClassifyOptions& opt = {}) {
    std::map<Partition, std::vector<Permutation>> groups;
    std::map<Partition, std::optional<Permutation>> avoiders;
    for (const Permutation& p : permutations(n, opt.max_n)) {
        const Partition key = psi_by_minima(p);
        groups[key].push_back(p);
        if (is_132_avoiding(p)) {
            std::optional<Permutation>& slot = avoiders[key];
            if (slot.has_value())
                throw std::logic_error("class psi=" + key.str() + " has two 132-avoiding members: " +
                                       slot->str() + " and " + p.str());
            slot = p;
        }
    }

    Classification out;
    out.n = n;
    out.catalan = catalan(static_cast<unsigned>(n));
    out.classes.reserve(groups.size());
    for (auto& [psi, members] : groups) {
        const std::optional<Permutation>& rep = avoiders[psi];
        if (!rep.has_value())
            throw std::logic_error("class psi=" + psi.str() + " has no 132-avoiding member");
        out.classes.push_back(VolumeClass{psi, *rep, std::move(members)});
    }

    parallel_for_chunks(out.classes.size(), opt.threads, [&](std::size_t b, std::size_t e) {
        for (std::size_t i = b; i < e; ++i) {
            VolumeClass& c = out.classes[i];
            c.volume_a = volume_poly(c.representative);
            c.volume_w = c.volume_a.substitute_a_to_w();
        }
    });

    Polynomial total(VarBasis::W);
    for (const VolumeClass& c : out.classes)
        total += c.volume_w * Rational(static_cast<unsigned long long>(c.members.size()));
    out.total_volume_w = std::move(total);

    if (opt.paranoid) {
        out.paranoid_checked = true;
        std::vector<char> class_ok(out.classes.size(), 1);
        parallel_for_chunks(out.classes.size(), opt.threads, [&](std::size_t b, std::size_t e) {
            for (std::size_t i = b; i < e; ++i)
                for (const Permutation& p : out.classes[i].members)
                    if (volume_poly(p) != out.classes[i].volume_a) class_ok[i] = 0;
        });
        std::set<Polynomial> distinct;
        for (const VolumeClass& c : out.classes) distinct.insert(c.volume_a);
        out.paranoid_ok = distinct.size() == out.classes.size() &&
                          std::all_of(class_ok.begin(), class_ok.end(), [](char c) { return c != 0; });
    }
    return out;
}

}  // namespace boxvol
