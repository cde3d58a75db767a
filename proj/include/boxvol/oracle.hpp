#pragma once

// Independent verification paths for the volume engine:
//
//  * volume_by_box_enumeration walks the refinement of the box along the
//    hyperplanes x_i = W_j. Every tuple rho in I = {1} x {1,2} x ... x {1..n}
//    names an open sub-box of dimensions a_{rho_1} x ... x a_{rho_n}; the
//    piece C_pi meets it iff rho_{pi(1)} >= ... >= rho_{pi(n)}, and then
//    covers exactly 1/|G_rho| of it. This path never constructs lambda_max,
//    so it is computationally independent of volume_poly.
//
//  * monte_carlo_probability samples the probabilistic formulation: draw
//    X_i uniform on [0,1], scale to x_i = W_i X_i, and count how often the
//    x land in the order prescribed by pi (weak inequalities, as ties have
//    probability zero).
//
//  * verify_theorem partitions S_n by exact polynomial equality of volumes
//    and, independently, by psi-value, then reports whether the two
//    partitions agree, whether the class count is Catalan, and whether the
//    volumes sum to the box volume.

#include "boxvol/numeric.hpp"
#include "boxvol/parallel.hpp"
#include "boxvol/partition.hpp"
#include "boxvol/permutation.hpp"
#include "boxvol/polynomial.hpp"
#include "boxvol/psi.hpp"
#include "boxvol/rng.hpp"
#include "boxvol/volume.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace boxvol {

inline constexpr int kDefaultOracleMaxN = 8;

namespace detail {

// Odometer over I = {1} x {1,2} x ... x {1..n}: position i cycles through
// 1..i. Returns false once the last tuple has been passed.
inline bool next_refinement_tuple(std::vector<int>& rho) {
    for (std::size_t i = rho.size(); i-- > 0;) {
        if (rho[i] < static_cast<int>(i) + 1) {
            ++rho[i];
            std::fill(rho.begin() + static_cast<std::ptrdiff_t>(i) + 1, rho.end(), 1);
            return true;
        }
    }
    return false;
}

}  // namespace detail

// Sums 1/|G_rho| * a_{rho_1} ... a_{rho_n} over the tuples rho in I that are
// weakly decreasing when read through pi. Intended as an oracle: O(n!)
// tuples per call, so the size is capped.
inline Polynomial volume_by_box_enumeration(const Permutation& p, int max_n = kDefaultOracleMaxN) {
    const int n = p.size();
    if (n > max_n)
        throw std::out_of_range("box enumeration on S_" + std::to_string(n) + " exceeds cap " +
                                std::to_string(max_n));
    std::vector<Polynomial::Term> terms;
    std::vector<int> rho(static_cast<std::size_t>(n), 1);
    do {
        bool decreasing = true;
        for (int k = 1; k < n && decreasing; ++k)
            decreasing = rho[static_cast<std::size_t>(p(k) - 1)] >= rho[static_cast<std::size_t>(p(k + 1) - 1)];
        if (decreasing)
            terms.emplace_back(Monomial::from_values(rho), Rational(BigInt(1), stabilizer_order(rho)));
    } while (detail::next_refinement_tuple(rho));
    return Polynomial::from_terms(VarBasis::A, std::move(terms));
}

struct SimReport {
    Permutation permutation;
    Weights weights;
    std::uint64_t samples = 0;
    std::uint64_t hits = 0;
    double estimate = 0.0;
    double std_error = 0.0;
    Rational exact;  // Vol(C_pi) / (W_1 ... W_n)
    std::uint64_t seed = 0;
    unsigned workers = 1;

    bool operator==(const SimReport&) const = default;
};

// Seeded, reproducible Monte Carlo estimate of P(E_pi). Worker k draws from
// its own SplitMix64 stream seeded with the k-th output of a master
// SplitMix64 over `seed`; each sample consumes X_1..X_n in coordinate order.
// Fixed (seed, samples, workers) gives a bit-identical report.
inline SimReport monte_carlo_probability(const Permutation& p, const Weights& w,
                                         std::uint64_t samples, std::uint64_t seed,
                                         unsigned workers = 1) {
    if (samples == 0) throw std::invalid_argument("samples must be >= 1");
    if (w.size() != p.size())
        throw std::invalid_argument("weights dimension does not match permutation size");
    if (workers == 0) workers = 1;
    if (static_cast<std::uint64_t>(workers) > samples) workers = static_cast<unsigned>(samples);

    const int n = p.size();
    std::vector<double> scale(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) scale[static_cast<std::size_t>(i)] = w.values()[static_cast<std::size_t>(i)].convert_to<double>();
    std::vector<int> order(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) order[static_cast<std::size_t>(k)] = p(k + 1) - 1;

    SplitMix64 master(seed);
    std::vector<std::uint64_t> sub_seeds(workers);
    for (unsigned k = 0; k < workers; ++k) sub_seeds[k] = master.next();

    const std::uint64_t base = samples / workers;
    const std::uint64_t extra = samples % workers;
    std::vector<std::uint64_t> hits(workers, 0);
    parallel_for_chunks(workers, workers, [&](std::size_t wb, std::size_t we) {
        std::vector<double> x(static_cast<std::size_t>(n));
        for (std::size_t k = wb; k < we; ++k) {
            SplitMix64 gen(sub_seeds[k]);
            const std::uint64_t count = base + (k < extra ? 1 : 0);
            std::uint64_t local = 0;
            for (std::uint64_t s = 0; s < count; ++s) {
                for (int i = 0; i < n; ++i) x[static_cast<std::size_t>(i)] = scale[static_cast<std::size_t>(i)] * gen.next_unit();
                bool ok = true;
                for (int k2 = 0; k2 + 1 < n && ok; ++k2)
                    ok = x[static_cast<std::size_t>(order[static_cast<std::size_t>(k2)])] >=
                         x[static_cast<std::size_t>(order[static_cast<std::size_t>(k2 + 1)])];
                local += ok ? 1 : 0;
            }
            hits[k] = local;
        }
    });

    SimReport r{p, w, samples, 0, 0.0, 0.0, Rational(), seed, workers};
    for (std::uint64_t h : hits) r.hits += h;
    r.estimate = static_cast<double>(r.hits) / static_cast<double>(samples);
    r.std_error = std::sqrt(r.estimate * (1.0 - r.estimate) / static_cast<double>(samples));
    r.exact = volume_at(p, w) / w.box_volume();
    return r;
}

struct TheoremReport {
    int n = 0;
    // Set partitions of S_n, normalized: members in lexicographic order,
    // classes ordered by their lexicographically smallest member.
    std::vector<std::vector<Permutation>> by_psi;
    std::vector<std::vector<Permutation>> by_polynomial;
    bool agree = false;
    std::size_t class_count = 0;
    BigInt catalan;
    bool total_volume_ok = false;
    bool box_oracle_checked = false;
    bool box_oracle_ok = true;

    bool ok() const {
        return agree && BigInt(class_count) == catalan && total_volume_ok &&
               (!box_oracle_checked || box_oracle_ok);
    }
};

struct VerifyOptions {
    int max_n = 7;                       // exhaustive verification ceiling
    int oracle_max_n = kDefaultOracleMaxN;  // cross-check against the box oracle up to here
    unsigned threads = 1;
    std::size_t block = 1024;            // permutations processed per parallel block
};

// Exhaustively verifies, for one n: the volume partition equals the psi
// partition (both directions), the class count is Catalan, the volumes sum
// to the box volume, and (when n is within the oracle cap) that the box
// refinement oracle reproduces every polynomial. Holds one polynomial per
// discovered class plus one block of in-flight polynomials, never all n!.
inline TheoremReport verify_theorem(int n, const VerifyOptions& opt = {}) {
    if (n < 1 || n > opt.max_n)
        throw std::out_of_range("verification size " + std::to_string(n) + " outside [1, " +
                                std::to_string(opt.max_n) + "]");

    TheoremReport report;
    report.n = n;
    report.catalan = catalan(static_cast<unsigned>(n));
    report.box_oracle_checked = n <= opt.oracle_max_n;

    std::vector<Permutation> all;
    for (const Permutation& p : permutations(n, opt.max_n)) all.push_back(p);

    std::map<Partition, std::size_t> psi_ids;
    std::map<Polynomial, std::size_t> poly_ids;
    std::vector<std::vector<Permutation>> psi_classes;
    std::vector<std::vector<Permutation>> poly_classes;
    Polynomial total(VarBasis::A);
    bool box_ok = true;

    const std::size_t block = std::max<std::size_t>(1, opt.block);
    std::vector<Partition> psis;
    std::vector<Polynomial> polys;
    for (std::size_t begin = 0; begin < all.size(); begin += block) {
        const std::size_t end = std::min(all.size(), begin + block);
        psis.assign(end - begin, Partition());
        polys.assign(end - begin, Polynomial(VarBasis::A));
        std::vector<char> oracle_ok(end - begin, 1);
        parallel_for_chunks(end - begin, opt.threads, [&](std::size_t lo, std::size_t hi) {
            for (std::size_t k = lo; k < hi; ++k) {
                const Permutation& p = all[begin + k];
                psis[k] = psi_by_minima(p);
                polys[k] = volume_poly(p);
                if (report.box_oracle_checked)
                    oracle_ok[k] = volume_by_box_enumeration(p, opt.oracle_max_n) == polys[k] ? 1 : 0;
            }
        });
        for (std::size_t k = 0; k < end - begin; ++k) {
            if (!oracle_ok[k]) box_ok = false;
            total += polys[k];
            auto [pit, pnew] = psi_ids.try_emplace(psis[k], psi_classes.size());
            if (pnew) psi_classes.emplace_back();
            psi_classes[pit->second].push_back(all[begin + k]);
            auto [vit, vnew] = poly_ids.try_emplace(std::move(polys[k]), poly_classes.size());
            if (vnew) poly_classes.emplace_back();
            poly_classes[vit->second].push_back(all[begin + k]);
        }
    }
    report.box_oracle_ok = box_ok;

    // Members arrive in lexicographic order; normalize class order by first
    // member so equal partitions compare (and serialize) identically.
    auto normalize = [](std::vector<std::vector<Permutation>>& classes) {
        std::sort(classes.begin(), classes.end(),
                  [](const auto& x, const auto& y) { return x.front() < y.front(); });
    };
    normalize(psi_classes);
    normalize(poly_classes);
    report.by_psi = std::move(psi_classes);
    report.by_polynomial = std::move(poly_classes);
    report.agree = report.by_psi == report.by_polynomial;
    report.class_count = report.by_polynomial.size();

    // Sum over all pieces = prod_{i=1..n} (a_1 + ... + a_i), whose W-form is
    // the full box volume W_1 ... W_n.
    Polynomial expected = Polynomial::constant(VarBasis::A, 1);
    Polynomial prefix(VarBasis::A);
    for (int i = 1; i <= n; ++i) {
        prefix += Polynomial::variable(VarBasis::A, i);
        expected = expected * prefix;
    }
    std::vector<int> box_vars(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) box_vars[static_cast<std::size_t>(i)] = i + 1;
    Polynomial box_w = Polynomial::from_terms(
        VarBasis::W, {{Monomial::from_values(box_vars), Rational(1)}});
    report.total_volume_ok = (total == expected) && (total.substitute_a_to_w() == box_w);

    return report;
}

}  // namespace boxvol
