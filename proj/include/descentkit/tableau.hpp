#pragma once

#include <functional>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "descentkit/perm.hpp"

namespace descentkit {

using BigInt = boost::multiprecision::cpp_int;

/// Integer partition; parts are positive and weakly decreasing, no trailing zeros.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    std::span<const int> parts() const noexcept { return parts_; }
    /// Number of nonzero parts.
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    int size() const noexcept { return size_; }
    bool empty() const noexcept { return parts_.empty(); }
    /// lambda_i, one-based; 0 beyond the last part.
    int part(int i) const noexcept {
        return i >= 1 && i <= length() ? parts_[static_cast<std::size_t>(i - 1)] : 0;
    }
    int first_part() const noexcept { return part(1); }

    Partition conjugate() const;
    /// (lambda_1 + 1, lambda_2, ...).
    Partition widen_first_row() const;
    /// Young diagram containment: every part of other fits inside this.
    bool contains(const Partition& other) const noexcept;
    /// This partition with one box added in row r (one-based), if the result is a partition.
    bool can_add_box(int r) const noexcept;
    Partition with_box(int r) const;

    friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
    friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

private:
    std::vector<int> parts_;
    int size_ = 0;
};

/// All partitions of n, in reverse lexicographic order (n) first.
std::vector<Partition> partitions_of(int n);

/// "322" when every part is a single digit, "12,3" otherwise; "" for the empty partition.
std::string to_string(const Partition& p);
/// Whitespace or comma separated parts, e.g. "3 2 2".
Partition parse_partition(std::string_view text);

/// Standard Young tableau with entries 1..n.
class StandardTableau {
public:
    StandardTableau() = default;
    explicit StandardTableau(std::vector<std::vector<int>> rows);

    const std::vector<std::vector<int>>& rows() const noexcept { return rows_; }
    const Partition& shape() const noexcept { return shape_; }
    int size() const noexcept { return shape_.size(); }
    /// Entry at row r, column c (one-based).
    int at(int r, int c) const { return rows_[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c - 1)]; }
    /// Row 1 read left to right.
    std::span<const int> first_row() const noexcept;
    /// One-based row index of entry e.
    int row_of(int e) const;

    friend bool operator==(const StandardTableau&, const StandardTableau&) = default;

private:
    std::vector<std::vector<int>> rows_;
    Partition shape_;
    std::vector<int> row_index_;  // row_index_[e-1] = row of e
};

/// "[1 3 6][2 4][5 7]".
std::string to_string(const StandardTableau& t);
StandardTableau parse_tableau(std::string_view text);

/// Saturated chain of partitions from the empty partition, one box per step.
class PartitionChain {
public:
    explicit PartitionChain(std::vector<Partition> chain);

    const std::vector<Partition>& shapes() const noexcept { return chain_; }
    int length() const noexcept { return static_cast<int>(chain_.size()) - 1; }
    const Partition& operator[](int i) const { return chain_[static_cast<std::size_t>(i)]; }

    friend bool operator==(const PartitionChain&, const PartitionChain&) = default;

private:
    std::vector<Partition> chain_;
};

PartitionChain chain_encode(const StandardTableau& t);
StandardTableau chain_decode(const PartitionChain& chain);

/// Des(Q) = { i : i+1 lies in a strictly lower row than i }.
DescentSet tableau_descents(const StandardTableau& t);

/// f^lambda by the hook length formula.
BigInt syt_count(const Partition& shape);
/// s_lambda(1^k) by the hook content formula; 0 when k < number of rows.
BigInt ssyt_count(const Partition& shape, int k);

inline constexpr int kDefaultSytCap = 12;

/// Visits every SYT of the shape once. Throws GuardExceeded past the cap.
void for_each_syt(const Partition& shape, const std::function<void(const StandardTableau&)>& visit,
                  int cap = kDefaultSytCap);
std::vector<StandardTableau> enumerate_syt(const Partition& shape, int cap = kDefaultSytCap);

/// Replaces each entry of Q in [u_i, u_{i+1} - 1] by i, where u is row 1 of Q
/// (the last block runs to n). Returned rows have the shape of Q.
std::vector<std::vector<int>> replacement_map(const StandardTableau& q);

struct BijectionCheck {
    BigInt enumerated;  ///< #{SYT Q of shape lambda : des(Q) + lambda_1 = n}
    BigInt formula;     ///< s_{lambda'}(1^{lambda_1})
    bool lands_in_family = true;  ///< images strictly increase along rows, weakly down columns, entries in [lambda_1]
    bool injective = true;

    bool passed() const { return enumerated == formula && lands_in_family && injective; }
};

BijectionCheck descent_count_bijection_check(const Partition& shape, int cap = kDefaultSytCap);

}  // namespace descentkit
