#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace descentkit {

/// a_{i,j} = (is, ds) of the factor pi_{[i,j]}.
struct FactorStats {
    int is_val = 0;
    int ds_val = 0;

    friend bool operator==(const FactorStats&, const FactorStats&) = default;
};

/// The triangle of a_{i,j} for 1 <= i <= j <= n, stored densely.
class StatTriangle {
public:
    StatTriangle() = default;
    explicit StatTriangle(int n) : n_(n), cells_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) {}

    int n() const noexcept { return n_; }

    const FactorStats& operator()(int i, int j) const { return cells_[index(i, j)]; }
    FactorStats& operator()(int i, int j) { return cells_[index(i, j)]; }

    friend bool operator==(const StatTriangle& a, const StatTriangle& b) {
        if (a.n_ != b.n_) return false;
        for (int i = 1; i <= a.n_; ++i)
            for (int j = i; j <= a.n_; ++j)
                if (a(i, j) != b(i, j)) return false;
        return true;
    }

private:
    std::size_t index(int i, int j) const {
        if (i < 1 || j < i || j > n_)
            throw std::out_of_range("triangle index (" + std::to_string(i) + ", " +
                                    std::to_string(j) + ") outside n = " + std::to_string(n_));
        return static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(n_) +
               static_cast<std::size_t>(j - 1);
    }

    int n_ = 0;
    std::vector<FactorStats> cells_;
};

}  // namespace descentkit
