#include "descentkit/rsk.hpp"

#include <algorithm>
#include <stdexcept>

namespace descentkit {

namespace {

// Returns the row (one-based) where the insertion created a new box.
int row_insert(std::vector<std::vector<int>>& rows, int x) {
    for (std::size_t r = 0;; ++r) {
        if (r == rows.size()) {
            rows.push_back({x});
            return static_cast<int>(r) + 1;
        }
        auto& row = rows[r];
        auto it = std::upper_bound(row.begin(), row.end(), x);
        if (it == row.end()) {
            row.push_back(x);
            return static_cast<int>(r) + 1;
        }
        std::swap(*it, x);
    }
}

struct Insertion {
    std::vector<std::vector<int>> p_rows;
    std::vector<std::vector<int>> q_rows;
};

Insertion insert_all(const Word& w) {
    Insertion out;
    for (int i = 1; i <= w.size(); ++i) {
        int r = row_insert(out.p_rows, w(i));
        if (static_cast<int>(out.q_rows.size()) < r) out.q_rows.emplace_back();
        out.q_rows[static_cast<std::size_t>(r - 1)].push_back(i);
    }
    return out;
}

}  // namespace

RskPair rsk(const Permutation& p) {
    auto ins = insert_all(p);
    return RskPair{StandardTableau(std::move(ins.p_rows)), StandardTableau(std::move(ins.q_rows))};
}

StandardTableau recording_tableau(const Word& w) {
    if (w.empty()) return StandardTableau{};
    return StandardTableau(insert_all(w).q_rows);
}

Partition rsk_shape(const Word& w) {
    std::vector<std::vector<int>> rows;
    for (int i = 1; i <= w.size(); ++i) row_insert(rows, w(i));
    std::vector<int> parts;
    for (const auto& r : rows) parts.push_back(static_cast<int>(r.size()));
    return Partition(std::move(parts));
}

int greene_sums(const Permutation& p, int k) {
    if (k < 1) throw std::invalid_argument("greene_sums needs k >= 1");
    Partition shape = rsk_shape(p);
    int sum = 0;
    for (int i = 1; i <= k && i <= shape.length(); ++i) sum += shape.part(i);
    return sum;
}

std::vector<int> first_row_milestones(const StandardTableau& q) {
    auto row = q.first_row();
    return {row.begin(), row.end()};
}

}  // namespace descentkit
