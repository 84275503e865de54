#pragma once

#include <vector>

#include "descentkit/perm.hpp"
#include "descentkit/tableau.hpp"

namespace descentkit {

/// Insertion tableau P and recording tableau Q of a permutation.
struct RskPair {
    StandardTableau insertion;
    StandardTableau recording;

    const Partition& shape() const noexcept { return recording.shape(); }
};

/// Schensted row insertion of p(1), ..., p(n).
RskPair rsk(const Permutation& p);

/// Recording tableau of a word with distinct entries (no standardization needed).
StandardTableau recording_tableau(const Word& w);

/// RSK shape of a word with distinct entries.
Partition rsk_shape(const Word& w);

/// is_k(p) = lambda_1 + ... + lambda_k; n once k reaches the number of rows.
int greene_sums(const Permutation& p, int k);

/// Row 1 of a recording tableau: u_i is the first index where an
/// increasing subsequence of length i can end.
std::vector<int> first_row_milestones(const StandardTableau& q);

}  // namespace descentkit
