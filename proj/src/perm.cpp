#include "descentkit/perm.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>
#include <set>
#include <stdexcept>

#include "descentkit/error.hpp"

namespace descentkit {

namespace {

std::vector<std::string_view> split_tokens(std::string_view text) {
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    auto is_sep = [](char c) { return c == ',' || std::isspace(static_cast<unsigned char>(c)); };
    while (i < text.size()) {
        while (i < text.size() && is_sep(text[i])) ++i;
        std::size_t start = i;
        while (i < text.size() && !is_sep(text[i])) ++i;
        if (i > start) tokens.push_back(text.substr(start, i - start));
    }
    return tokens;
}

int parse_int_token(std::string_view token) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size())
        throw ParseError("not an integer: '" + std::string(token) + "'");
    return value;
}

}  // namespace

Word::Word(std::vector<int> entries) : entries_(std::move(entries)) {
    std::vector<int> sorted = entries_;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (sorted[i] < 1)
            throw std::invalid_argument("word entries must be positive, got " +
                                        std::to_string(sorted[i]));
        if (i > 0 && sorted[i] == sorted[i - 1])
            throw std::invalid_argument("duplicate value " + std::to_string(sorted[i]));
    }
}

Word Word::factor(int i, int j) const {
    if (j < i) return Word{};
    if (i < 1 || j > size())
        throw std::out_of_range("factor [" + std::to_string(i) + ", " + std::to_string(j) +
                                "] outside word of length " + std::to_string(size()));
    return Word(std::vector<int>(entries_.begin() + (i - 1), entries_.begin() + j), Unchecked{});
}

Permutation::Permutation(std::vector<int> entries) {
    const int n = static_cast<int>(entries.size());
    if (n == 0) throw ParseError("empty permutation");
    // Duplicates are reported before range errors: "4,4,1" names the repeated 4.
    std::set<int> seen;
    for (int v : entries)
        if (!seen.insert(v).second) throw ParseError("duplicate value " + std::to_string(v));
    for (int v : entries)
        if (v < 1 || v > n)
            throw ParseError("value " + std::to_string(v) + " out of range 1.." + std::to_string(n));
    word_ = Word(std::move(entries), Word::Unchecked{});
}

Permutation Permutation::identity(int n) {
    std::vector<int> e(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) e[static_cast<std::size_t>(i)] = i + 1;
    return Permutation(std::move(e));
}

bool Permutation::is_identity() const noexcept {
    for (int i = 1; i <= size(); ++i)
        if ((*this)(i) != i) return false;
    return true;
}

DescentSet::DescentSet(std::vector<int> positions) : positions_(std::move(positions)) {
    std::sort(positions_.begin(), positions_.end());
    for (std::size_t i = 0; i < positions_.size(); ++i) {
        if (positions_[i] < 1)
            throw std::invalid_argument("descent positions must be >= 1, got " +
                                        std::to_string(positions_[i]));
        if (i > 0 && positions_[i] == positions_[i - 1])
            throw std::invalid_argument("repeated descent position " +
                                        std::to_string(positions_[i]));
    }
}

DescentSet DescentSet::from_mask(std::uint64_t mask) {
    DescentSet d;
    for (int i = 1; mask != 0; ++i, mask >>= 1)
        if (mask & 1U) d.positions_.push_back(i);
    return d;
}

std::uint64_t DescentSet::mask() const {
    std::uint64_t m = 0;
    for (int i : positions_) {
        if (i > 64) throw std::out_of_range("descent position too large for a mask");
        m |= std::uint64_t{1} << (i - 1);
    }
    return m;
}

bool DescentSet::contains(int i) const {
    return std::binary_search(positions_.begin(), positions_.end(), i);
}

DescentWord::DescentWord(std::string letters) : letters_(std::move(letters)) {
    for (char& c : letters_) {
        c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
        if (c != 'U' && c != 'D')
            throw ParseError(std::string("descent word letter must be U or D, got '") + c + "'");
    }
}

DescentSet DescentWord::descents() const {
    std::vector<int> d;
    for (int i = 0; i < size(); ++i)
        if (letters_[static_cast<std::size_t>(i)] == 'D') d.push_back(i + 1);
    return DescentSet(std::move(d));
}

DescentWord DescentWord::periodic_prefix(int len) const {
    if (letters_.empty()) throw std::invalid_argument("periodic prefix of the empty word");
    std::string out;
    out.reserve(static_cast<std::size_t>(len));
    for (int i = 0; i < len; ++i) out.push_back(letters_[static_cast<std::size_t>(i) % letters_.size()]);
    return DescentWord(std::move(out));
}

Permutation parse_permutation(std::string_view text) {
    auto tokens = split_tokens(text);
    if (tokens.empty()) throw ParseError("empty permutation");
    std::vector<int> values;
    if (tokens.size() == 1 && tokens[0].size() > 1) {
        auto tok = tokens[0];
        if (!std::all_of(tok.begin(), tok.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
            throw ParseError("not an integer: '" + std::string(tok) + "'");
        if (tok.size() >= 10)
            throw ParseError("compact digit string '" + std::string(tok) +
                             "' is ambiguous for n >= 10; separate values with spaces or commas");
        for (char c : tok) values.push_back(c - '0');
    } else {
        for (auto tok : tokens) values.push_back(parse_int_token(tok));
    }
    return Permutation(std::move(values));
}

DescentSet parse_descent_set(std::string_view text) {
    std::string cleaned;
    for (char c : text)
        if (c != '{' && c != '}') cleaned.push_back(c);
    std::vector<int> positions;
    for (auto tok : split_tokens(cleaned)) {
        int v = parse_int_token(tok);
        if (v < 1) throw ParseError("descent position must be >= 1: '" + std::string(tok) + "'");
        positions.push_back(v);
    }
    try {
        return DescentSet(std::move(positions));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

DescentSet descent_set(const Word& w) {
    std::vector<int> d;
    for (int i = 1; i < w.size(); ++i)
        if (w(i) > w(i + 1)) d.push_back(i);
    return DescentSet(std::move(d));
}

int des(const Word& w) {
    int count = 0;
    for (int i = 1; i < w.size(); ++i)
        if (w(i) > w(i + 1)) ++count;
    return count;
}

int asc(const Word& w) { return w.empty() ? 0 : w.size() - 1 - des(w); }

Word subsequence(const Word& w, std::vector<int> indices) {
    std::sort(indices.begin(), indices.end());
    std::vector<int> out;
    out.reserve(indices.size());
    for (std::size_t k = 0; k < indices.size(); ++k) {
        int i = indices[k];
        if (i < 1 || i > w.size())
            throw std::out_of_range("index " + std::to_string(i) + " outside 1.." +
                                    std::to_string(w.size()));
        if (k > 0 && indices[k - 1] == i)
            throw std::invalid_argument("repeated index " + std::to_string(i));
        out.push_back(w(i));
    }
    return Word(std::move(out), Word::Unchecked{});
}

Word subsequence_by_mask(const Word& w, std::uint64_t mask) {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(std::popcount(mask)));
    for (int i = 1; i <= w.size(); ++i)
        if (mask & (std::uint64_t{1} << (i - 1))) out.push_back(w(i));
    return Word(std::move(out), Word::Unchecked{});
}

Permutation reverse_complement(const Permutation& p) {
    const int n = p.size();
    std::vector<int> out(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) out[static_cast<std::size_t>(i - 1)] = n + 1 - p(n + 1 - i);
    return Permutation(std::move(out));
}

DescentWord descent_word(const Word& w) {
    std::string letters;
    for (int i = 1; i < w.size(); ++i) letters.push_back(w(i) > w(i + 1) ? 'D' : 'U');
    return DescentWord(std::move(letters));
}

std::string to_string(const Word& w) {
    bool compact = std::all_of(w.entries().begin(), w.entries().end(), [](int v) { return v <= 9; });
    std::string out;
    for (int i = 1; i <= w.size(); ++i) {
        if (!compact && i > 1) out.push_back(' ');
        out += std::to_string(w(i));
    }
    return out;
}

std::string to_string(const DescentSet& d) {
    std::string out = "{";
    for (int i = 0; i < d.size(); ++i) {
        if (i > 0) out += ",";
        out += std::to_string(d.positions()[static_cast<std::size_t>(i)]);
    }
    return out + "}";
}

bool next_permutation(std::vector<int>& entries) {
    return std::next_permutation(entries.begin(), entries.end());
}

std::uint64_t factorial(int n) {
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
}

Permutation unrank_permutation(int n, std::uint64_t rank) {
    std::vector<int> pool;
    for (int i = 1; i <= n; ++i) pool.push_back(i);
    std::vector<int> out;
    for (int k = n; k >= 1; --k) {
        std::uint64_t block = factorial(k - 1);
        auto idx = static_cast<std::size_t>(rank / block);
        rank %= block;
        out.push_back(pool[idx]);
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(idx));
    }
    return Permutation(std::move(out));
}

}  // namespace descentkit
