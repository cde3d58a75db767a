#pragma once

// Test-only reference implementations. Deliberately naive, and independent
// of the library code paths they are used to check.

#include "boxvol/numeric.hpp"
#include "boxvol/permutation.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace testoracle {

// Literal O(n^3) scan for indices i < j < k with w_i < w_k < w_j.
inline bool avoids_132_bruteforce(const std::vector<int>& w) {
    const int n = static_cast<int>(w.size());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k)
                if (w[i] < w[k] && w[k] < w[j]) return false;
    return true;
}

// Catalan numbers from the convolution recurrence C_{k+1} = sum_i C_i C_{k-i}.
inline boxvol::BigInt catalan_recurrence(unsigned n) {
    std::vector<boxvol::BigInt> c(n + 1);
    c[0] = 1;
    for (unsigned k = 0; k < n; ++k) {
        boxvol::BigInt s = 0;
        for (unsigned i = 0; i <= k; ++i) s += c[i] * c[k - i];
        c[k + 1] = s;
    }
    return c[n];
}

// Every tuple of {1..bound_1}^n kept iff weakly decreasing and within the
// per-coordinate bounds; the filter definition of "partitions below".
inline std::vector<std::vector<int>> partitions_below_bruteforce(const std::vector<int>& bound) {
    std::vector<std::vector<int>> out;
    const std::size_t n = bound.size();
    std::vector<int> t(n, 1);
    while (true) {
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i) {
            if (t[i] > bound[i]) ok = false;
            if (i + 1 < n && t[i] < t[i + 1]) ok = false;
        }
        if (ok) out.push_back(t);
        std::size_t i = n;
        while (i-- > 0) {
            if (t[i] < bound[0]) {
                ++t[i];
                for (std::size_t j = i + 1; j < n; ++j) t[j] = 1;
                break;
            }
            if (i == 0) return out;
        }
    }
}

// Balanced U/R word whose prefixes never have more R than U.
inline bool is_dyck_word(const std::string& w) {
    int height = 0;
    for (char c : w) {
        if (c == 'U') ++height;
        else if (c == 'R') --height;
        else return false;
        if (height < 0) return false;
    }
    return height == 0;
}

// Number of tuples rho in I = {1} x {1,2} x ... x {1..n} with
// rho_{pi(1)} >= ... >= rho_{pi(n)}, counted by a plain odometer walk.
inline std::size_t qualifying_tuple_count(const boxvol::Permutation& p) {
    const int n = p.size();
    std::vector<int> rho(static_cast<std::size_t>(n), 1);
    std::size_t count = 0;
    while (true) {
        bool decreasing = true;
        for (int k = 1; k < n && decreasing; ++k)
            decreasing = rho[static_cast<std::size_t>(p(k) - 1)] >=
                         rho[static_cast<std::size_t>(p(k + 1) - 1)];
        if (decreasing) ++count;
        int i = n;
        bool advanced = false;
        while (i-- > 0) {
            if (rho[static_cast<std::size_t>(i)] < i + 1) {
                ++rho[static_cast<std::size_t>(i)];
                for (int j = i + 1; j < n; ++j) rho[static_cast<std::size_t>(j)] = 1;
                advanced = true;
                break;
            }
        }
        if (!advanced) return count;
    }
}

}  // namespace testoracle
