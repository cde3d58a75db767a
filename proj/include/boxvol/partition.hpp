#pragma once

// Integer partitions (Young diagrams) in canonical zero-trimmed form, the
// stabilizer order of a tuple under coordinate permutation, and the stream of
// partitions lying under a given bound in Young's lattice.

#include "boxvol/numeric.hpp"

#include <algorithm>
#include <compare>
#include <cstddef>
#include <iterator>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace boxvol {

// Weakly decreasing positive parts; trailing zeros in the input are trimmed,
// so (2,0,0) and (2) are the same value and () is the empty partition.
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] <= 0)
                throw std::invalid_argument("partition parts must be positive");
            if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
                throw std::invalid_argument("partition parts must be weakly decreasing");
        }
    }

    bool empty() const { return parts_.empty(); }
    int num_parts() const { return static_cast<int>(parts_.size()); }

    // 1-based; parts beyond the stored length are 0.
    int part(int i) const {
        return i <= num_parts() ? parts_[static_cast<std::size_t>(i - 1)] : 0;
    }

    const std::vector<int>& parts() const { return parts_; }

    std::string str() const {
        std::string s = "(";
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(parts_[i]);
        }
        s += ')';
        return s;
    }

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    auto operator<=>(const Partition& o) const { return parts_ <=> o.parts_; }

private:
    std::vector<int> parts_;
};

// |G_rho| = prod_j (n_j)!, where n_j counts occurrences of the value j.
// Invariant under reordering of the input, so it applies equally to
// partitions and to arbitrary tuples of positive integers.
inline BigInt stabilizer_order(std::span<const int> values) {
    std::vector<int> sorted(values.begin(), values.end());
    for (int v : sorted)
        if (v <= 0) throw std::invalid_argument("stabilizer_order expects positive values");
    std::sort(sorted.begin(), sorted.end());
    BigInt out = 1;
    std::size_t i = 0;
    while (i < sorted.size()) {
        std::size_t j = i;
        while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
        out *= factorial(static_cast<unsigned>(j - i));
        i = j;
    }
    return out;
}

inline BigInt stabilizer_order(const Partition& p) {
    return stabilizer_order(std::span<const int>(p.parts()));
}

// Matrix cells, 1-indexed (row, column).
using Cell = std::pair<int, int>;
using CellSet = std::set<Cell>;

// The cells of the Young diagram of a partition: row i holds columns 1..part(i).
inline CellSet cells_of(const Partition& p) {
    CellSet cells;
    for (int i = 1; i <= p.num_parts(); ++i)
        for (int j = 1; j <= p.part(i); ++j) cells.emplace(i, j);
    return cells;
}

// Stream of all partitions lambda with exactly n parts and
// 1 <= lambda_i <= bound_i (weak decrease included), in lexicographic order
// on the part sequence. Each element is emitted exactly once.
class PartitionsBelowRange {
public:
    explicit PartitionsBelowRange(Partition bound) : bound_(std::move(bound)) {
        if (bound_.empty())
            throw std::invalid_argument("partitions_below needs a bound with >= 1 parts");
        // canonical form guarantees every part >= 1
    }

    class iterator {
    public:
        using iterator_category = std::input_iterator_tag;
        using value_type = Partition;
        using difference_type = std::ptrdiff_t;
        using pointer = const Partition*;
        using reference = Partition;

        iterator() : done_(true) {}
        explicit iterator(const std::vector<int>* bound)
            : done_(false), bound_(bound), parts_(bound->size(), 1) {}

        Partition operator*() const { return Partition(parts_); }

        // Lexicographic successor: bump the rightmost part that can grow
        // (capped by both its bound and its left neighbour), reset the tail to 1.
        iterator& operator++() {
            const auto& b = *bound_;
            for (std::size_t k = parts_.size(); k-- > 0;) {
                const int cap = std::min(b[k], k == 0 ? b[0] : parts_[k - 1]);
                if (parts_[k] < cap) {
                    ++parts_[k];
                    std::fill(parts_.begin() + static_cast<std::ptrdiff_t>(k) + 1, parts_.end(), 1);
                    return *this;
                }
            }
            done_ = true;
            return *this;
        }
        void operator++(int) { ++*this; }

        bool operator==(const iterator& o) const {
            if (done_ || o.done_) return done_ == o.done_;
            return parts_ == o.parts_;
        }

    private:
        bool done_ = false;
        const std::vector<int>* bound_ = nullptr;
        std::vector<int> parts_;
    };

    iterator begin() const { return iterator(&bound_.parts()); }
    iterator end() const { return iterator(); }

private:
    Partition bound_;
};

inline PartitionsBelowRange partitions_below(const Partition& bound) {
    return PartitionsBelowRange(bound);
}

}  // namespace boxvol
