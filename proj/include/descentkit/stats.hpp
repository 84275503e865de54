#pragma once

#include <initializer_list>
#include <vector>

#include "descentkit/growth.hpp"
#include "descentkit/perm.hpp"
#include "descentkit/stat_triangle.hpp"

namespace descentkit {

/// Composition c = (c_1, ..., c_k) with positive parts. It encodes the descent
/// set D_c whose maximal runs of descents and ascents on [d_k] have lengths
/// c_1, ..., c_k, with the run ending at d_k always a descent run. An odd
/// number of parts means the first run is descents.
class Composition {
public:
    explicit Composition(std::vector<int> parts);
    Composition(std::initializer_list<int> parts) : Composition(std::vector<int>(parts)) {}

    std::span<const int> parts() const noexcept { return parts_; }
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    int part(int t) const { return parts_[static_cast<std::size_t>(t - 1)]; }
    /// d_t = c_1 + ... + c_t.
    int partial_sum(int t) const;
    /// True when block t is a run of descents.
    bool is_descent_block(int t) const noexcept { return (length() - t) % 2 == 0; }

    friend bool operator==(const Composition&, const Composition&) = default;

private:
    std::vector<int> parts_;
};

DescentSet composition_to_descents(const Composition& c);
/// Inverse of composition_to_descents; D must be nonempty.
Composition descents_to_composition(const DescentSet& d);

/// Longest increasing subsequence length (patience sorting).
int lis(const Word& w);
/// Longest decreasing subsequence length.
int lds(const Word& w);

/// ls_d: longest subsequence with exactly d descents; 0 when d > des(p).
/// Dynamic program over the factor sums of is.
int ls_d(const Permutation& p, int d);
int ls_d(const StatTriangle& t, int d, int des_count);

/// ls_d read by maximizing over all break-ups of the growth diagram base into
/// d + 1 sub-triangles (sum of the first parts at the peaks).
int ls_d_via_growth(const Permutation& p, int d);

/// max{ i + j : Q(1,i) + evac(Q)(1,j) <= n }; 0 for the identity.
int ls1_via_first_rows(const Permutation& p);

/// ls_D: longest subsequence with descent set exactly D (0 if none), by the
/// run-by-run walk over the a_{i,j} triangle.
int ls_D(const Permutation& p, const DescentSet& d);
/// The same walk restricted to the factor pi_{[first, last]}.
int ls_D(const StatTriangle& t, const DescentSet& d, int first, int last);
inline int ls_D(const StatTriangle& t, const DescentSet& d) { return ls_D(t, d, 1, t.n()); }

/// ls_{{i}} from good pairs of row 1 of Q and evac(Q).
int ls_singleton_via_good_pairs(const Permutation& p, int i);

struct SingletonThreshold {
    bool exists = false;
    int lower_bound = 0;  ///< i + n - k, meaningful when exists
};
/// With k the last descent of p: ls_{{i}} is nonzero iff i <= is(pi_{[1,k]}),
/// and then at least i + n - k. Throws PreconditionError for the identity.
SingletonThreshold ls_singleton_threshold(const Permutation& p, int i);

/// i + is(pi_{[k+1,n]}) with k the smallest descent where is(pi_{[1,k]}) >= i.
/// Throws PreconditionError when no such descent exists.
int ls_singleton_formula(const Permutation& p, int i);

/// Recursive nonexistence test by splitting off the last run of D.
bool ls_D_existence(const Permutation& p, const DescentSet& d);

/// Front-peeling recursion computed from is/ds of prefixes of factors.
/// Only meaningful when ls_D(p, D) != 0; throws PreconditionError when a
/// peeling step cannot be carried out.
int ls_D_peel(const Permutation& p, const DescentSet& d);

/// Longest alternating subsequence (descent word DUDU...).
int alternating_length(const Permutation& p);
int alternating_length(const StatTriangle& t);

/// True iff some subsequence of length len(w) + 1 has descent word exactly w.
bool has_descent_word(const Permutation& p, const DescentWord& w);
bool has_descent_word(const StatTriangle& t, const DescentWord& w);

/// Longest subsequence whose descent word is a prefix of w repeated forever.
int len_w(const Permutation& p, const DescentWord& w);
int len_w(const StatTriangle& t, const DescentWord& w);

}  // namespace descentkit
