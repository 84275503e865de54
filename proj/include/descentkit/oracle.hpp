#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "descentkit/perm.hpp"
#include "descentkit/stat_triangle.hpp"

namespace descentkit {

inline constexpr int kDefaultOracleCap = 20;

/// Exhaustive ls_D values of one permutation, keyed by the bitmask of D
/// (bit i-1 marks position i), over all D in [n-1].
class LsProfile {
public:
    LsProfile() = default;
    explicit LsProfile(int n)
        : n_(n), values_(std::size_t{1} << (n - 1), 0), ls_d_(static_cast<std::size_t>(n), 0),
          is_k_(static_cast<std::size_t>(n) + 1, 0) {}

    int n() const noexcept { return n_; }
    int operator[](const DescentSet& d) const;
    int at_mask(std::uint64_t mask) const { return values_.at(static_cast<std::size_t>(mask)); }
    std::span<const int> values() const noexcept { return values_; }

    /// Brute ls_d: max over |D| = d. Zero past des(p).
    int ls_d(int d) const;
    /// Brute is_k: max #I with ds(pi_I) <= k.
    int is_k(int k) const;

    friend bool operator==(const LsProfile& a, const LsProfile& b) {
        return a.n_ == b.n_ && a.values_ == b.values_;
    }

private:
    friend LsProfile brute_profile(const Permutation&, int);
    int n_ = 0;
    std::vector<int> values_;
    std::vector<int> ls_d_;
    std::vector<int> is_k_;
};

/// Iterates all 2^n index subsets. Throws GuardExceeded past cap.
LsProfile brute_profile(const Permutation& p, int cap = kDefaultOracleCap);

/// Max length of a subsequence whose descent word is a prefix of w^infinity.
int brute_len_w(const Permutation& p, const DescentWord& w, int cap = kDefaultOracleCap);

/// Max length of an alternating subsequence (Des = {1,3,5,...}).
int brute_alternating_length(const Permutation& p, int cap = kDefaultOracleCap);

/// Black-box ls_D access.
using LsQuery = std::function<int(const DescentSet&)>;
/// Descent words of pi_{[1,i-1]} and pi_{[j+1,n]} for a window (i, j).
using BoundaryWords = std::function<std::pair<DescentWord, DescentWord>(int i, int j)>;

/// Recovers every a_{i,j} from ls_D queries: is(pi_{[i,j]}) is the largest k
/// such that some subsequence has descent word w x1 U^{k-1} x2 v for some
/// letters x1, x2 (dropped at the ends); ds uses D^{k-1}.
StatTriangle reconstruct_triangle_from_profile(int n, const LsQuery& query, const BoundaryWords& boundary);
StatTriangle reconstruct_triangle_from_profile(const Permutation& p, const LsProfile& profile);

}  // namespace descentkit
