#include "descentkit/tableau.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

#include "descentkit/error.hpp"

namespace descentkit {

using boost::multiprecision::cpp_rational;

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1) throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
        size_ += parts_[i];
    }
}

Partition Partition::conjugate() const {
    std::vector<int> out;
    for (int c = 1; c <= first_part(); ++c) {
        int h = 0;
        while (h < length() && parts_[static_cast<std::size_t>(h)] >= c) ++h;
        out.push_back(h);
    }
    return Partition(std::move(out));
}

Partition Partition::widen_first_row() const {
    if (parts_.empty()) return Partition{1};
    auto p = parts_;
    ++p[0];
    return Partition(std::move(p));
}

bool Partition::contains(const Partition& other) const noexcept {
    if (other.length() > length()) return false;
    for (int i = 1; i <= other.length(); ++i)
        if (other.part(i) > part(i)) return false;
    return true;
}

bool Partition::can_add_box(int r) const noexcept {
    if (r < 1 || r > length() + 1) return false;
    return r == 1 || part(r - 1) > part(r);
}

Partition Partition::with_box(int r) const {
    if (!can_add_box(r)) throw std::invalid_argument("cannot add a box in row " + std::to_string(r));
    Partition out = *this;
    if (r == length() + 1)
        out.parts_.push_back(1);
    else
        ++out.parts_[static_cast<std::size_t>(r - 1)];
    ++out.size_;
    return out;
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        cur.push_back(p);
        partitions_rec(remaining - p, p, cur, out);
        cur.pop_back();
    }
}

std::vector<int> parse_ints(std::string_view text) {
    std::vector<int> out;
    std::size_t i = 0;
    auto is_sep = [](char c) { return c == ',' || std::isspace(static_cast<unsigned char>(c)); };
    while (i < text.size()) {
        while (i < text.size() && is_sep(text[i])) ++i;
        std::size_t start = i;
        while (i < text.size() && !is_sep(text[i])) ++i;
        if (i == start) break;
        auto tok = text.substr(start, i - start);
        int v = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (ec != std::errc() || ptr != tok.data() + tok.size())
            throw ParseError("not an integer: '" + std::string(tok) + "'");
        out.push_back(v);
    }
    return out;
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    std::vector<int> cur;
    partitions_rec(n, n, cur, out);
    return out;
}

std::string to_string(const Partition& p) {
    bool compact = p.first_part() <= 9;
    std::string out;
    for (int i = 1; i <= p.length(); ++i) {
        if (!compact && i > 1) out.push_back(',');
        out += std::to_string(p.part(i));
    }
    return out;
}

Partition parse_partition(std::string_view text) {
    try {
        return Partition(parse_ints(text));
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("bad partition '") + std::string(text) + "': " + e.what());
    }
}

StandardTableau::StandardTableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
    std::vector<int> lengths;
    for (const auto& r : rows_) {
        if (r.empty()) throw std::invalid_argument("tableau rows must be nonempty");
        lengths.push_back(static_cast<int>(r.size()));
    }
    shape_ = Partition(lengths);
    const int n = shape_.size();
    row_index_.assign(static_cast<std::size_t>(n), 0);
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        for (std::size_t c = 0; c < rows_[r].size(); ++c) {
            int e = rows_[r][c];
            if (e < 1 || e > n)
                throw std::invalid_argument("tableau entry " + std::to_string(e) + " outside 1.." +
                                            std::to_string(n));
            if (row_index_[static_cast<std::size_t>(e - 1)] != 0)
                throw std::invalid_argument("tableau entry " + std::to_string(e) + " repeated");
            row_index_[static_cast<std::size_t>(e - 1)] = static_cast<int>(r) + 1;
            if (c > 0 && rows_[r][c - 1] >= e)
                throw std::invalid_argument("tableau rows must increase");
            if (r > 0 && rows_[r - 1][c] >= e)
                throw std::invalid_argument("tableau columns must increase");
        }
    }
}

std::span<const int> StandardTableau::first_row() const noexcept {
    if (rows_.empty()) return {};
    return rows_.front();
}

int StandardTableau::row_of(int e) const { return row_index_.at(static_cast<std::size_t>(e - 1)); }

std::string to_string(const StandardTableau& t) {
    std::string out;
    for (const auto& row : t.rows()) {
        out.push_back('[');
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c > 0) out.push_back(' ');
            out += std::to_string(row[c]);
        }
        out.push_back(']');
    }
    return out;
}

StandardTableau parse_tableau(std::string_view text) {
    std::vector<std::vector<int>> rows;
    std::size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
            ++i;
            continue;
        }
        if (c != '[') throw ParseError(std::string("expected '[' in tableau, got '") + c + "'");
        auto close = text.find(']', i);
        if (close == std::string_view::npos) throw ParseError("unterminated tableau row");
        rows.push_back(parse_ints(text.substr(i + 1, close - i - 1)));
        i = close + 1;
    }
    if (rows.empty()) throw ParseError("empty tableau");
    try {
        return StandardTableau(std::move(rows));
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("bad tableau: ") + e.what());
    }
}

PartitionChain::PartitionChain(std::vector<Partition> chain) : chain_(std::move(chain)) {
    if (chain_.empty() || !chain_.front().empty())
        throw std::invalid_argument("partition chain must start at the empty partition");
    for (std::size_t i = 1; i < chain_.size(); ++i) {
        if (chain_[i].size() != chain_[i - 1].size() + 1 || !chain_[i].contains(chain_[i - 1]))
            throw std::invalid_argument("partition chain must grow by one box per step");
    }
}

PartitionChain chain_encode(const StandardTableau& t) {
    const int n = t.size();
    std::vector<Partition> chain{Partition{}};
    Partition cur;
    for (int e = 1; e <= n; ++e) {
        cur = cur.with_box(t.row_of(e));
        chain.push_back(cur);
    }
    return PartitionChain(std::move(chain));
}

StandardTableau chain_decode(const PartitionChain& chain) {
    std::vector<std::vector<int>> rows;
    for (int e = 1; e <= chain.length(); ++e) {
        const Partition& prev = chain[e - 1];
        const Partition& next = chain[e];
        int r = 1;
        while (next.part(r) == prev.part(r)) ++r;
        if (static_cast<int>(rows.size()) < r) rows.resize(static_cast<std::size_t>(r));
        rows[static_cast<std::size_t>(r - 1)].push_back(e);
    }
    return StandardTableau(std::move(rows));
}

DescentSet tableau_descents(const StandardTableau& t) {
    std::vector<int> d;
    for (int i = 1; i < t.size(); ++i)
        if (t.row_of(i + 1) > t.row_of(i)) d.push_back(i);
    return DescentSet(std::move(d));
}

BigInt syt_count(const Partition& shape) {
    const Partition conj = shape.conjugate();
    BigInt num = 1;
    for (int i = 2; i <= shape.size(); ++i) num *= i;
    BigInt hooks = 1;
    for (int r = 1; r <= shape.length(); ++r)
        for (int c = 1; c <= shape.part(r); ++c) hooks *= (shape.part(r) - c) + (conj.part(c) - r) + 1;
    if (num % hooks != 0) throw std::logic_error("hook length product does not divide n!");
    return num / hooks;
}

BigInt ssyt_count(const Partition& shape, int k) {
    if (k < 0) throw std::invalid_argument("ssyt_count needs k >= 0");
    if (shape.empty()) return 1;
    if (k < shape.length()) return 0;
    const Partition conj = shape.conjugate();
    cpp_rational product = 1;
    for (int r = 1; r <= shape.length(); ++r) {
        for (int c = 1; c <= shape.part(r); ++c) {
            int hook = (shape.part(r) - c) + (conj.part(c) - r) + 1;
            product *= cpp_rational(k + c - r, hook);
        }
    }
    if (denominator(product) != 1)
        throw std::logic_error("hook content product did not reduce to an integer");
    return numerator(product);
}

namespace {

void syt_rec(const Partition& target, Partition& cur, std::vector<std::vector<int>>& rows, int next,
             const std::function<void(const StandardTableau&)>& visit) {
    if (next > target.size()) {
        visit(StandardTableau(rows));
        return;
    }
    for (int r = 1; r <= cur.length() + 1 && r <= target.length(); ++r) {
        if (!cur.can_add_box(r) || cur.part(r) >= target.part(r)) continue;
        Partition saved = cur;
        cur = cur.with_box(r);
        if (static_cast<int>(rows.size()) < r) rows.emplace_back();
        rows[static_cast<std::size_t>(r - 1)].push_back(next);
        syt_rec(target, cur, rows, next + 1, visit);
        rows[static_cast<std::size_t>(r - 1)].pop_back();
        if (rows.back().empty()) rows.pop_back();
        cur = saved;
    }
}

}  // namespace

void for_each_syt(const Partition& shape, const std::function<void(const StandardTableau&)>& visit,
                  int cap) {
    check_guard("SYT enumeration size", shape.size(), cap);
    Partition cur;
    std::vector<std::vector<int>> rows;
    syt_rec(shape, cur, rows, 1, visit);
}

std::vector<StandardTableau> enumerate_syt(const Partition& shape, int cap) {
    std::vector<StandardTableau> out;
    for_each_syt(shape, [&](const StandardTableau& t) { out.push_back(t); }, cap);
    return out;
}

std::vector<std::vector<int>> replacement_map(const StandardTableau& q) {
    auto u = q.first_row();
    auto block_of = [&](int e) {
        // largest i with u_i <= e
        auto it = std::upper_bound(u.begin(), u.end(), e);
        return static_cast<int>(it - u.begin());
    };
    std::vector<std::vector<int>> out = q.rows();
    for (auto& row : out)
        for (int& e : row) e = block_of(e);
    return out;
}

BijectionCheck descent_count_bijection_check(const Partition& shape, int cap) {
    BijectionCheck result;
    const int n = shape.size();
    const int width = shape.first_part();
    result.formula = ssyt_count(shape.conjugate(), width);
    std::set<std::vector<std::vector<int>>> images;
    BigInt count = 0;
    for_each_syt(
        shape,
        [&](const StandardTableau& q) {
            if (tableau_descents(q).size() + width != n) return;
            ++count;
            auto img = replacement_map(q);
            for (std::size_t r = 0; r < img.size(); ++r) {
                for (std::size_t c = 0; c < img[r].size(); ++c) {
                    int v = img[r][c];
                    if (v < 1 || v > width) result.lands_in_family = false;
                    if (c > 0 && img[r][c - 1] >= v) result.lands_in_family = false;
                    if (r > 0 && img[r - 1][c] > v) result.lands_in_family = false;
                }
            }
            if (!images.insert(std::move(img)).second) result.injective = false;
        },
        cap);
    result.enumerated = count;
    return result;
}

}  // namespace descentkit
