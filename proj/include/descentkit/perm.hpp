#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace descentkit {

/// A sequence of pairwise distinct positive integers, e.g. a subsequence
/// pi_I of a permutation. Positions are one-based in every accessor.
class Word {
public:
    Word() = default;
    explicit Word(std::vector<int> entries);
    Word(std::initializer_list<int> entries) : Word(std::vector<int>(entries)) {}

    int size() const noexcept { return static_cast<int>(entries_.size()); }
    bool empty() const noexcept { return entries_.empty(); }

    /// w(i), one-based.
    int operator()(int i) const { return entries_[static_cast<std::size_t>(i - 1)]; }
    std::span<const int> entries() const noexcept { return entries_; }

    /// The factor w(i) w(i+1) ... w(j); empty when j < i.
    Word factor(int i, int j) const;

    friend bool operator==(const Word&, const Word&) = default;

private:
    struct Unchecked {};
    Word(std::vector<int> entries, Unchecked) : entries_(std::move(entries)) {}
    friend class Permutation;
    friend Word subsequence(const Word& w, std::vector<int> indices);
    friend Word subsequence_by_mask(const Word& w, std::uint64_t mask);

    std::vector<int> entries_;
};

/// A bijection of [n] in one-line notation, n >= 1.
class Permutation {
public:
    explicit Permutation(std::vector<int> entries);
    Permutation(std::initializer_list<int> entries)
        : Permutation(std::vector<int>(entries)) {}

    static Permutation identity(int n);

    int size() const noexcept { return word_.size(); }
    int operator()(int i) const { return word_(i); }
    std::span<const int> entries() const noexcept { return word_.entries(); }

    const Word& word() const noexcept { return word_; }
    operator const Word&() const noexcept { return word_; }  // NOLINT

    bool is_identity() const noexcept;

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation& a, const Permutation& b) {
        return std::lexicographical_compare_three_way(
            a.entries().begin(), a.entries().end(), b.entries().begin(), b.entries().end());
    }

private:
    Word word_;
};

/// A finite set of positive positions, kept sorted.
class DescentSet {
public:
    DescentSet() = default;
    explicit DescentSet(std::vector<int> positions);
    DescentSet(std::initializer_list<int> positions)
        : DescentSet(std::vector<int>(positions)) {}

    /// Bit i-1 of the mask marks position i.
    static DescentSet from_mask(std::uint64_t mask);
    std::uint64_t mask() const;

    std::span<const int> positions() const noexcept { return positions_; }
    int size() const noexcept { return static_cast<int>(positions_.size()); }
    bool empty() const noexcept { return positions_.empty(); }
    bool contains(int i) const;
    /// Largest element; 0 for the empty set.
    int max() const noexcept { return positions_.empty() ? 0 : positions_.back(); }
    int min() const noexcept { return positions_.empty() ? 0 : positions_.front(); }

    /// True when every element lies in [n-1].
    bool fits(int n) const noexcept { return max() <= n - 1; }

    friend bool operator==(const DescentSet&, const DescentSet&) = default;

private:
    std::vector<int> positions_;
};

/// A word over {U, D}.
class DescentWord {
public:
    DescentWord() = default;
    explicit DescentWord(std::string letters);

    int size() const noexcept { return static_cast<int>(letters_.size()); }
    bool empty() const noexcept { return letters_.empty(); }
    char operator[](int i) const { return letters_[static_cast<std::size_t>(i)]; }
    const std::string& str() const noexcept { return letters_; }

    /// Positions (one-based) carrying D.
    DescentSet descents() const;
    /// The first len letters of this word repeated forever.
    DescentWord periodic_prefix(int len) const;

    DescentWord operator+(const DescentWord& rhs) const {
        return DescentWord(letters_ + rhs.letters_);
    }

    friend bool operator==(const DescentWord&, const DescentWord&) = default;

private:
    std::string letters_;
};

Permutation parse_permutation(std::string_view text);
/// Comma or whitespace separated positive positions; "" and "{}" give the empty set.
DescentSet parse_descent_set(std::string_view text);

DescentSet descent_set(const Word& w);
int des(const Word& w);
/// len(w) - 1 - des(w); 0 for the empty word.
int asc(const Word& w);

/// pi_I: entries at the given one-based indices, in increasing index order.
Word subsequence(const Word& w, std::vector<int> indices);
/// Subsequence selected by bit i-1 of mask.
Word subsequence_by_mask(const Word& w, std::uint64_t mask);

Permutation reverse_complement(const Permutation& p);

DescentWord descent_word(const Word& w);

std::string to_string(const Word& w);
std::string to_string(const DescentSet& d);

/// Lexicographic successor; false after the last permutation.
bool next_permutation(std::vector<int>& entries);

/// The rank-th permutation of [n] in lexicographic order (rank is zero-based).
Permutation unrank_permutation(int n, std::uint64_t rank);

std::uint64_t factorial(int n);

}  // namespace descentkit
