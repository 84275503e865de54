#include "descentkit/stats.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "descentkit/error.hpp"
#include "descentkit/rsk.hpp"

namespace descentkit {

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) throw std::invalid_argument("a composition needs at least one part");
    for (int c : parts_)
        if (c < 1) throw std::invalid_argument("composition parts must be positive");
}

int Composition::partial_sum(int t) const {
    int s = 0;
    for (int q = 1; q <= t; ++q) s += part(q);
    return s;
}

DescentSet composition_to_descents(const Composition& c) {
    std::vector<int> d;
    int pos = 0;
    for (int t = 1; t <= c.length(); ++t) {
        for (int q = 0; q < c.part(t); ++q) {
            ++pos;
            if (c.is_descent_block(t)) d.push_back(pos);
        }
    }
    return DescentSet(std::move(d));
}

Composition descents_to_composition(const DescentSet& d) {
    if (d.empty()) throw std::invalid_argument("the empty descent set has no composition");
    std::vector<int> runs;
    bool in_descents = d.contains(1);
    int run = 0;
    for (int pos = 1; pos <= d.max(); ++pos) {
        if (d.contains(pos) == in_descents) {
            ++run;
        } else {
            runs.push_back(run);
            run = 1;
            in_descents = !in_descents;
        }
    }
    runs.push_back(run);
    return Composition(std::move(runs));
}

int lis(const Word& w) {
    std::vector<int> tails;
    for (int v : w.entries()) {
        auto it = std::lower_bound(tails.begin(), tails.end(), v);
        if (it == tails.end())
            tails.push_back(v);
        else
            *it = v;
    }
    return static_cast<int>(tails.size());
}

int lds(const Word& w) {
    std::vector<int> tails;
    for (int v : w.entries()) {
        auto it = std::lower_bound(tails.begin(), tails.end(), -v);
        if (it == tails.end())
            tails.push_back(-v);
        else
            *it = -v;
    }
    return static_cast<int>(tails.size());
}

int ls_d(const StatTriangle& t, int d, int des_count) {
    if (d < 0) throw std::invalid_argument("ls_d needs d >= 0");
    const int n = t.n();
    if (d > des_count) return 0;
    if (d == 0) return t(1, n).is_val;
    // best[j] for the current number of windows: max sum of is over windows
    // tiling [1, j] exactly.
    constexpr int kUnreachable = -1;
    std::vector<int> best(static_cast<std::size_t>(n) + 1, kUnreachable);
    for (int j = 1; j <= n; ++j) best[static_cast<std::size_t>(j)] = t(1, j).is_val;
    std::vector<int> prev_round = best;
    for (int windows = 2; windows <= d + 1; ++windows) {
        prev_round = best;
        std::fill(best.begin(), best.end(), kUnreachable);
        for (int j = windows; j <= n; ++j) {
            for (int split = windows - 1; split < j; ++split) {
                int head = prev_round[static_cast<std::size_t>(split)];
                if (head == kUnreachable) continue;
                best[static_cast<std::size_t>(j)] =
                    std::max(best[static_cast<std::size_t>(j)], head + t(split + 1, j).is_val);
            }
        }
    }
    // i_d = n leaves the last window empty.
    return std::max(best[static_cast<std::size_t>(n)], prev_round[static_cast<std::size_t>(n)]);
}

int ls_d(const Permutation& p, int d) {
    if (d < 0) throw std::invalid_argument("ls_d needs d >= 0");
    const int descents = des(p);
    if (d > descents) return 0;
    if (d == 0) return lis(p);
    return ls_d(stat_triangle(p), d, descents);
}

int ls_d_via_growth(const Permutation& p, int d) {
    if (d < 0) throw std::invalid_argument("ls_d needs d >= 0");
    const int n = p.size();
    if (d > des(p)) return 0;
    const GrowthDiagram g = build_growth(rsk(p).recording);
    int best = 0;
    // Each break-up tiles [1, n] by d + 1 nonempty windows; a window [i, j]
    // is the sub-triangle whose peak is Lambda_{i-1, j}.
    std::function<void(int, int, int)> walk = [&](int start, int windows_left, int acc) {
        if (windows_left == 1) {
            best = std::max(best, acc + factor_shape(g, start, n).first_part());
            return;
        }
        for (int end = start; end <= n - (windows_left - 1); ++end)
            walk(end + 1, windows_left - 1, acc + factor_shape(g, start, end).first_part());
    };
    walk(1, d + 1, 0);
    return best;
}

int ls1_via_first_rows(const Permutation& p) {
    const int n = p.size();
    if (p.is_identity()) return 0;
    const StandardTableau q = rsk(p).recording;
    const StandardTableau qe = evacuate(q);
    auto u = q.first_row();
    auto v = qe.first_row();
    int best = 0;
    for (std::size_t i = 0; i < u.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j)
            if (u[i] + v[j] <= n) best = std::max(best, static_cast<int>(i + j) + 2);
    return best;
}

int ls_D(const StatTriangle& t, const DescentSet& d, int first, int last) {
    if (first < 1 || last > t.n() || last < first)
        throw std::out_of_range("ls_D window outside the triangle");
    const int len = last - first + 1;
    if (d.empty()) return t(first, last).is_val;
    if (!d.fits(len)) return 0;
    const Composition c = descents_to_composition(d);
    int cursor = first;
    for (int block = 1; block <= c.length(); ++block) {
        const int target = c.part(block) + 1;
        const bool descending = c.is_descent_block(block);
        int found = 0;
        for (int j = cursor + 1; j <= last; ++j) {
            const FactorStats& a = t(cursor, j);
            if ((descending ? a.ds_val : a.is_val) == target) {
                found = j;
                break;
            }
        }
        if (found == 0) return 0;
        cursor = found;
    }
    return c.partial_sum(c.length()) + t(cursor, last).is_val;
}

int ls_D(const Permutation& p, const DescentSet& d) {
    if (d.empty()) return lis(p);
    if (!d.fits(p.size())) return 0;
    return ls_D(stat_triangle(p), d);
}

int ls_singleton_via_good_pairs(const Permutation& p, int i) {
    if (i < 1) throw std::invalid_argument("singleton descent position must be >= 1");
    const int n = p.size();
    const StandardTableau q = rsk(p).recording;
    const StandardTableau qe = evacuate(q);
    auto u = q.first_row();
    auto v = qe.first_row();
    if (i > static_cast<int>(u.size())) return 0;
    const int ui = u[static_cast<std::size_t>(i - 1)];
    int best = 0;
    for (std::size_t j = 0; j < v.size(); ++j) {
        if (ui + v[j] > n) continue;
        // Past the end of row 1 the consecutive-entry condition holds vacuously.
        if (j + 1 < v.size() && v[j + 1] == v[j] + 1) continue;
        best = std::max(best, i + static_cast<int>(j) + 1);
    }
    return best;
}

SingletonThreshold ls_singleton_threshold(const Permutation& p, int i) {
    if (p.is_identity()) throw PreconditionError("singleton threshold needs a non-identity permutation");
    if (i < 1) throw std::invalid_argument("singleton descent position must be >= 1");
    const int n = p.size();
    const int k = descent_set(p).max();
    const int j = lis(p.word().factor(1, k));
    if (i > j) return {false, 0};
    return {true, i + n - k};
}

int ls_singleton_formula(const Permutation& p, int i) {
    if (i < 1) throw std::invalid_argument("singleton descent position must be >= 1");
    const int n = p.size();
    const DescentSet descents = descent_set(p);
    for (int k : descents.positions()) {
        if (lis(p.word().factor(1, k)) >= i) return i + lis(p.word().factor(k + 1, n));
    }
    throw PreconditionError("no descent k with is(pi_[1,k]) >= " + std::to_string(i));
}

bool ls_D_existence(const Permutation& p, const DescentSet& d) {
    if (d.empty()) return true;
    const int n = p.size();
    if (p.is_identity() || !d.fits(n)) return false;
    // D = D' + [start, start + run - 1], the last maximal run of D.
    const int last = d.max();
    int start = last;
    while (start > 1 && d.contains(start - 1)) --start;
    const int run = last - start + 1;
    std::vector<int> rest;
    for (int x : d.positions())
        if (x < start) rest.push_back(x);
    const DescentSet head(std::move(rest));

    const StatTriangle t = stat_triangle(p);
    // A run of `run` descents is a decreasing subsequence of run + 1 entries.
    int k = 0;
    for (int idx = n; idx >= 1; --idx) {
        if (t(idx, n).ds_val >= run + 1) {
            k = idx;
            break;
        }
    }
    if (k == 0) return false;
    const int reach = head.empty() ? t(1, k).is_val : ls_D(t, head, 1, k);
    return start <= reach;
}

namespace {

int peel(const Word& w, const DescentSet& d) {
    if (d.empty()) return lis(w);
    const int len = w.size();
    int m = 0;
    int k = 0;
    if (d.contains(1)) {
        m = 1;
        while (d.contains(m + 1)) ++m;
        for (int idx = 1; idx <= len; ++idx) {
            if (lds(w.factor(1, idx)) == m + 1) {
                k = idx;
                break;
            }
        }
    } else {
        m = d.min() - 1;
        for (int idx = 1; idx <= len; ++idx) {
            if (lis(w.factor(1, idx)) == m + 1) {
                k = idx;
                break;
            }
        }
    }
    if (k == 0)
        throw PreconditionError("peeling " + to_string(d) + " from " + to_string(w) +
                                ": no prefix reaches the required length");
    std::vector<int> shifted;
    for (int x : d.positions())
        if (x > m) shifted.push_back(x - m);
    return m + peel(w.factor(k, len), DescentSet(std::move(shifted)));
}

}  // namespace

int ls_D_peel(const Permutation& p, const DescentSet& d) {
    if (!d.fits(p.size())) throw PreconditionError("descent set exceeds [n-1]");
    return peel(p, d);
}

int alternating_length(const StatTriangle& t) {
    const int n = t.n();
    for (int k = n / 2; k >= 1; --k) {
        std::vector<int> odd;
        for (int q = 1; q <= k; ++q) odd.push_back(2 * q - 1);
        const int value = ls_D(t, DescentSet(std::move(odd)));
        if (value != 0) return value == 2 * k ? 2 * k : 2 * k + 1;
    }
    // No descent anywhere: only single entries alternate.
    return 1;
}

int alternating_length(const Permutation& p) { return alternating_length(stat_triangle(p)); }

bool has_descent_word(const StatTriangle& t, const DescentWord& w) {
    if (w.size() + 1 > t.n()) return false;
    return ls_D(t, w.descents()) >= w.size() + 1;
}

bool has_descent_word(const Permutation& p, const DescentWord& w) {
    return has_descent_word(stat_triangle(p), w);
}

int len_w(const StatTriangle& t, const DescentWord& w) {
    if (w.empty()) throw std::invalid_argument("len_w needs a nonempty descent word");
    for (int length = t.n(); length >= 2; --length)
        if (has_descent_word(t, w.periodic_prefix(length - 1))) return length;
    return 1;
}

int len_w(const Permutation& p, const DescentWord& w) { return len_w(stat_triangle(p), w); }

}  // namespace descentkit
