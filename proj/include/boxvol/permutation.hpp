#pragma once

// Permutations in one-line notation over {1..n}, with parsing and a
// lexicographic enumeration stream for the whole symmetric group.

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstddef>
#include <iterator>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace boxvol {

// Exhaustive enumeration is cheap up to 10! = 3,628,800 words; anything
// larger must be requested explicitly by raising the per-call cap.
inline constexpr int kDefaultMaxEnumerationN = 10;

class Permutation {
public:
    explicit Permutation(std::vector<int> word) : word_(std::move(word)) {
        if (word_.empty()) throw std::invalid_argument("permutation needs n >= 1");
        std::vector<char> seen(word_.size() + 1, 0);
        for (int v : word_) {
            if (v < 1 || v > static_cast<int>(word_.size()) || seen[static_cast<std::size_t>(v)])
                throw std::invalid_argument("word is not a bijection of {1.." +
                                            std::to_string(word_.size()) + "}: " + join(word_));
            seen[static_cast<std::size_t>(v)] = 1;
        }
    }

    static Permutation identity(int n) {
        std::vector<int> w(static_cast<std::size_t>(n));
        std::iota(w.begin(), w.end(), 1);
        return Permutation(std::move(w));
    }

    // Accepts space-separated one-line notation ("4 2 5 3 1") or, for n <= 9,
    // compact digits ("42531").
    static Permutation parse(std::string_view text) {
        while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
            text.remove_prefix(1);
        while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
            text.remove_suffix(1);
        std::string s(text);
        const bool has_space = s.find_first_of(" \t") != std::string::npos;
        std::vector<int> w;
        if (has_space) {
            std::size_t i = 0;
            while (i < s.size()) {
                while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
                if (i >= s.size()) break;
                std::size_t j = i;
                while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
                w.push_back(parse_value(s.substr(i, j - i)));
                i = j;
            }
        } else if (s.size() == 1) {
            w.push_back(parse_value(s));
        } else {
            // compact form: one digit per value, so only n <= 9 is expressible
            for (char c : s) {
                if (!std::isdigit(static_cast<unsigned char>(c)) || c == '0')
                    throw std::invalid_argument("bad permutation token '" + std::string(1, c) +
                                                "' in '" + s + "' (use space-separated values for n >= 10)");
                w.push_back(c - '0');
            }
        }
        if (w.empty()) throw std::invalid_argument("empty permutation");
        return Permutation(std::move(w));
    }

    int size() const { return static_cast<int>(word_.size()); }

    // pi(i), 1-based position.
    int operator()(int i) const { return word_[static_cast<std::size_t>(i - 1)]; }

    // pi^{-1} as a word: position of each value.
    std::vector<int> inverse_word() const {
        std::vector<int> inv(word_.size());
        for (int i = 1; i <= size(); ++i) inv[static_cast<std::size_t>(word_[static_cast<std::size_t>(i - 1)] - 1)] = i;
        return inv;
    }

    const std::vector<int>& word() const { return word_; }

    std::string str() const { return join(word_); }

    bool operator==(const Permutation& o) const { return word_ == o.word_; }
    auto operator<=>(const Permutation& o) const { return word_ <=> o.word_; }

private:
    static std::string join(const std::vector<int>& w) {
        std::string s;
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (i) s += ' ';
            s += std::to_string(w[i]);
        }
        return s;
    }

    static int parse_value(const std::string& tok) {
        if (tok.empty()) throw std::invalid_argument("empty permutation token");
        for (char c : tok)
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw std::invalid_argument("bad permutation token '" + tok + "'");
        try {
            return std::stoi(tok);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad permutation token '" + tok + "'");
        }
    }

    std::vector<int> word_;
};

// Single-pass, single-consumer stream over all of S_n in lexicographic order
// of one-line notation. Never materializes the full group.
class PermutationRange {
public:
    explicit PermutationRange(int n, int max_n = kDefaultMaxEnumerationN) : n_(n) {
        if (n < 1 || n > max_n)
            throw std::out_of_range("enumeration size " + std::to_string(n) + " outside [1, " +
                                    std::to_string(max_n) + "]");
    }

    class iterator {
    public:
        using iterator_category = std::input_iterator_tag;
        using value_type = Permutation;
        using difference_type = std::ptrdiff_t;
        using pointer = const Permutation*;
        using reference = Permutation;

        iterator() : done_(true) {}
        explicit iterator(int n) : done_(false), word_(static_cast<std::size_t>(n)) {
            std::iota(word_.begin(), word_.end(), 1);
        }

        Permutation operator*() const { return Permutation(word_); }

        iterator& operator++() {
            if (!std::next_permutation(word_.begin(), word_.end())) done_ = true;
            return *this;
        }
        void operator++(int) { ++*this; }

        bool operator==(const iterator& o) const {
            if (done_ || o.done_) return done_ == o.done_;
            return word_ == o.word_;
        }

    private:
        bool done_;
        std::vector<int> word_;
    };

    iterator begin() const { return iterator(n_); }
    iterator end() const { return iterator(); }

private:
    int n_;
};

inline PermutationRange permutations(int n, int max_n = kDefaultMaxEnumerationN) {
    return PermutationRange(n, max_n);
}

}  // namespace boxvol
