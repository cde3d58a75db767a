#pragma once

// The map psi from permutations to partitions, computed along two
// independent routes, together with lambda_max, the permutation diagram,
// 132-avoidance, and the Dyck-path encoding of a psi-image.
//
// Matrix convention throughout: rows are positions, columns are values, and
// the permutation matrix of pi has its 1-entries at (i, pi(i)).

#include "boxvol/partition.hpp"
#include "boxvol/permutation.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace boxvol {

// Route 1: literal crossing rule on the permutation matrix. A cell (i', j')
// survives iff no 1-entry lies weakly above-left of it, i.e. the matrix is
// zero on [1..i'] x [1..j']. Surviving cells form the Young diagram of
// psi(pi); dominance is monotone in both coordinates, so a row's survivors
// are exactly its leading cells.
inline Partition psi_by_crossing(const Permutation& p) {
    const int n = p.size();
    std::vector<int> parts;
    parts.reserve(static_cast<std::size_t>(n));
    std::vector<char> dom_above(static_cast<std::size_t>(n) + 1, 0);
    std::vector<char> dom(static_cast<std::size_t>(n) + 1, 0);
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            const bool one_here = (p(i) == j);
            dom[static_cast<std::size_t>(j)] =
                one_here || dom_above[static_cast<std::size_t>(j)] || dom[static_cast<std::size_t>(j - 1)];
        }
        int row = 0;
        while (row < n && !dom[static_cast<std::size_t>(row + 1)]) ++row;
        parts.push_back(row);
        std::swap(dom_above, dom);
        std::fill(dom.begin(), dom.end(), 0);
    }
    return Partition(std::move(parts));
}

// Route 2: the i-th part of psi(pi) is min{pi(1..i)} - 1. Must agree with
// psi_by_crossing on every input; the test suites enforce this.
inline Partition psi_by_minima(const Permutation& p) {
    std::vector<int> parts;
    parts.reserve(static_cast<std::size_t>(p.size()));
    int running_min = p(1);
    for (int i = 1; i <= p.size(); ++i) {
        running_min = std::min(running_min, p(i));
        parts.push_back(running_min - 1);
    }
    return Partition(std::move(parts));
}

// lambda_max(pi): the prefix-minima sequence itself, always exactly n parts
// ending in 1. Equals psi(pi) with an extra first column of height n.
inline Partition lambda_max(const Permutation& p) {
    std::vector<int> parts;
    parts.reserve(static_cast<std::size_t>(p.size()));
    int running_min = p(1);
    for (int i = 1; i <= p.size(); ++i) {
        running_min = std::min(running_min, p(i));
        parts.push_back(running_min);
    }
    return Partition(std::move(parts));
}

// The diagram of pi: cells neither on, directly below, nor directly right of
// a 1-entry, i.e. {(i,j) : j < pi(i) and i < pi^{-1}(j)}. Generally not a
// Young diagram; its size equals the inversion number.
inline CellSet diagram(const Permutation& p) {
    const std::vector<int> inv = p.inverse_word();
    CellSet cells;
    for (int i = 1; i <= p.size(); ++i)
        for (int j = 1; j < p(i); ++j)
            if (i < inv[static_cast<std::size_t>(j - 1)]) cells.emplace(i, j);
    return cells;
}

// True iff the cell set is the diagram of some partition: rows 1..k,
// left-justified, weakly decreasing lengths.
inline bool is_young_diagram(const CellSet& cells) {
    if (cells.empty()) return true;
    std::vector<int> row_len;
    for (const auto& [r, c] : cells) {
        if (r < 1 || c < 1) return false;
        if (static_cast<std::size_t>(r) > row_len.size()) row_len.resize(static_cast<std::size_t>(r), 0);
        ++row_len[static_cast<std::size_t>(r - 1)];
    }
    // contiguity: row i must hold exactly columns 1..row_len[i]
    for (const auto& [r, c] : cells)
        if (c > row_len[static_cast<std::size_t>(r - 1)]) return false;
    for (std::size_t i = 0; i < row_len.size(); ++i) {
        if (row_len[i] == 0) return false;  // a skipped row
        if (i + 1 < row_len.size() && row_len[i] < row_len[i + 1]) return false;
    }
    return true;
}

// No i < j < k with pi(i) < pi(k) < pi(j). Linear-time stack scan from the
// right: `middle` is the largest value known to have a bigger entry to its
// right; any earlier entry below `middle` completes the pattern.
inline bool is_132_avoiding(const Permutation& p) {
    std::vector<int> stack;
    int middle = 0;
    for (int i = p.size(); i >= 1; --i) {
        const int v = p(i);
        if (v < middle) return false;
        while (!stack.empty() && stack.back() < v) {
            middle = stack.back();
            stack.pop_back();
        }
        stack.push_back(v);
    }
    return true;
}

// Encodes the boundary of the Young diagram of a psi-image as a Dyck word.
//
// Convention: pad psi to n parts with zeros and walk the diagram's south-east
// boundary inside the n x n square from the top-right corner to the
// bottom-left corner. Entering row i the walk first moves left from column
// psi_{i-1} (psi_0 = n) to column psi_i, then moves down one unit; each left
// unit emits 'U' and each down unit emits 'R'. The word has n of each letter
// and every prefix satisfies #U >= #R precisely because psi_i <= n - i.
// Locked base case: psi = (), n = 1 encodes to "UR".
inline std::string dyck_path_of(const Partition& psi, int n) {
    if (n < 1) throw std::invalid_argument("dyck_path_of needs n >= 1");
    for (int i = 1; i <= std::max(n, psi.num_parts()); ++i)
        if (psi.part(i) > n - i)
            throw std::invalid_argument("partition " + psi.str() + " exceeds the staircase for n = " +
                                        std::to_string(n) + ": part " + std::to_string(i) + " > " +
                                        std::to_string(n - i));
    std::string word;
    word.reserve(2 * static_cast<std::size_t>(n));
    int col = n;
    for (int i = 1; i <= n; ++i) {
        word.append(static_cast<std::size_t>(col - psi.part(i)), 'U');
        word.push_back('R');
        col = psi.part(i);
    }
    return word;
}

}  // namespace boxvol
