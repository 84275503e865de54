#include "descentkit/oracle.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "descentkit/error.hpp"

namespace descentkit {

int LsProfile::operator[](const DescentSet& d) const {
    if (!d.fits(n_)) return 0;
    return at_mask(d.mask());
}

int LsProfile::ls_d(int d) const {
    if (d < 0 || d >= n_) return 0;
    return ls_d_[static_cast<std::size_t>(d)];
}

int LsProfile::is_k(int k) const {
    if (k < 1) throw std::invalid_argument("is_k needs k >= 1");
    return is_k_[static_cast<std::size_t>(std::min(k, n_))];
}

namespace {

struct SubsetScan {
    std::vector<int> values;
    std::uint64_t descent_mask = 0;
};

// Fills scan with pi_I for the index mask and its descent mask.
void scan_subset(const Permutation& p, std::uint64_t mask, SubsetScan& scan) {
    scan.values.clear();
    for (int i = 1; i <= p.size(); ++i)
        if (mask & (std::uint64_t{1} << (i - 1))) scan.values.push_back(p(i));
    scan.descent_mask = 0;
    for (std::size_t i = 0; i + 1 < scan.values.size(); ++i)
        if (scan.values[i] > scan.values[i + 1]) scan.descent_mask |= std::uint64_t{1} << i;
}

int longest_decreasing(const std::vector<int>& values) {
    std::vector<int> best(values.size(), 1);
    int overall = 0;
    for (std::size_t i = 0; i < values.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j)
            if (values[j] > values[i]) best[i] = std::max(best[i], best[j] + 1);
        overall = std::max(overall, best[i]);
    }
    return overall;
}

}  // namespace

LsProfile brute_profile(const Permutation& p, int cap) {
    const int n = p.size();
    check_guard("brute-force profile size", n, cap);
    LsProfile profile(n);
    std::vector<int> best_by_ds(static_cast<std::size_t>(n) + 1, 0);
    SubsetScan scan;
    const std::uint64_t total = std::uint64_t{1} << n;
    for (std::uint64_t mask = 1; mask < total; ++mask) {
        scan_subset(p, mask, scan);
        const int len = static_cast<int>(scan.values.size());
        auto& slot = profile.values_[static_cast<std::size_t>(scan.descent_mask)];
        slot = std::max(slot, len);
        auto& by_count = profile.ls_d_[static_cast<std::size_t>(std::popcount(scan.descent_mask))];
        by_count = std::max(by_count, len);
        auto& by_ds = best_by_ds[static_cast<std::size_t>(longest_decreasing(scan.values))];
        by_ds = std::max(by_ds, len);
    }
    for (int k = 1; k <= n; ++k)
        profile.is_k_[static_cast<std::size_t>(k)] =
            std::max(profile.is_k_[static_cast<std::size_t>(k - 1)], best_by_ds[static_cast<std::size_t>(k)]);
    return profile;
}

int brute_len_w(const Permutation& p, const DescentWord& w, int cap) {
    const int n = p.size();
    check_guard("brute-force len_w size", n, cap);
    if (w.empty()) throw std::invalid_argument("len_w needs a nonempty descent word");
    const DescentWord target = w.periodic_prefix(n);
    int best = 0;
    SubsetScan scan;
    const std::uint64_t total = std::uint64_t{1} << n;
    for (std::uint64_t mask = 1; mask < total; ++mask) {
        scan_subset(p, mask, scan);
        bool prefix = true;
        for (std::size_t i = 0; i + 1 < scan.values.size(); ++i) {
            const char letter = scan.values[i] > scan.values[i + 1] ? 'D' : 'U';
            if (letter != target[static_cast<int>(i)]) {
                prefix = false;
                break;
            }
        }
        if (prefix) best = std::max(best, static_cast<int>(scan.values.size()));
    }
    return best;
}

int brute_alternating_length(const Permutation& p, int cap) {
    return brute_len_w(p, DescentWord("DU"), cap);
}

namespace {

bool realizable(const LsQuery& query, const DescentWord& word) {
    return query(word.descents()) >= word.size() + 1;
}

}  // namespace

StatTriangle reconstruct_triangle_from_profile(int n, const LsQuery& query, const BoundaryWords& boundary) {
    StatTriangle t(n);
    for (int i = 1; i <= n; ++i) {
        t(i, i) = FactorStats{1, 1};
        for (int j = i + 1; j <= n; ++j) {
            auto [before, after] = boundary(i, j);
            auto largest_run = [&](char letter) {
                for (int k = j - i + 1; k >= 1; --k) {
                    const DescentWord middle(std::string(static_cast<std::size_t>(k - 1), letter));
                    for (char x1 : {'U', 'D'}) {
                        for (char x2 : {'U', 'D'}) {
                            std::string word = before.str();
                            if (i > 1) word.push_back(x1);
                            word += middle.str();
                            if (j < n) word.push_back(x2);
                            word += after.str();
                            if (realizable(query, DescentWord(word))) return k;
                            if (j == n) break;
                        }
                        if (i == 1) break;
                    }
                }
                return 0;
            };
            t(i, j) = FactorStats{largest_run('U'), largest_run('D')};
        }
    }
    return t;
}

StatTriangle reconstruct_triangle_from_profile(const Permutation& p, const LsProfile& profile) {
    const int n = p.size();
    LsQuery query = [&profile](const DescentSet& d) { return profile[d]; };
    BoundaryWords boundary = [&p, n](int i, int j) {
        return std::pair{descent_word(p.word().factor(1, i - 1)), descent_word(p.word().factor(j + 1, n))};
    };
    return reconstruct_triangle_from_profile(n, query, boundary);
}

}  // namespace descentkit
