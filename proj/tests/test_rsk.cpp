#include <doctest.h>

#include <map>
#include <numeric>

#include "descentkit/oracle.hpp"
#include "descentkit/rsk.hpp"
#include "descentkit/stats.hpp"
#include "oracles.hpp"

using namespace descentkit;

namespace {

template <typename Fn>
void for_all_perms(int n, Fn&& fn) {
    std::vector<int> e(static_cast<std::size_t>(n));
    std::iota(e.begin(), e.end(), 1);
    do fn(Permutation(e));
    while (std::next_permutation(e.begin(), e.end()));
}

}  // namespace

TEST_CASE("rsk of 4365172") {
    const RskPair r = rsk(parse_permutation("4365172"));
    CHECK(r.insertion == StandardTableau({{1, 2, 7}, {3, 5}, {4, 6}}));
    CHECK(r.recording == StandardTableau({{1, 3, 6}, {2, 4}, {5, 7}}));
    CHECK(r.shape() == Partition{3, 2, 2});
    CHECK(tableau_descents(r.recording) == DescentSet{1, 3, 4, 6});
}

TEST_CASE("rsk of the identity is a single row") {
    for (int n = 1; n <= 6; ++n) {
        const RskPair r = rsk(Permutation::identity(n));
        std::vector<int> row(static_cast<std::size_t>(n));
        std::iota(row.begin(), row.end(), 1);
        CHECK(r.insertion == StandardTableau({row}));
        CHECK(r.recording == StandardTableau({row}));
    }
}

TEST_CASE("rsk of 234615") {
    const Permutation p = parse_permutation("234615");
    CHECK(rsk(p).shape() == Partition{4, 2});
    CHECK(greene_sums(p, 1) == 4);
    CHECK(greene_sums(p, 2) == 6);
}

TEST_CASE("greene sums") {
    const Permutation p = parse_permutation("4365172");
    CHECK(greene_sums(p, 1) == 3);
    CHECK(greene_sums(p, 2) == 5);
    CHECK(greene_sums(p, 3) == 7);
    CHECK(greene_sums(p, 9) == 7);
    CHECK(greene_sums(Permutation::identity(5), 1) == 5);
    CHECK_THROWS(greene_sums(p, 0));
}

TEST_CASE("first row milestones") {
    CHECK(first_row_milestones(rsk(parse_permutation("4365172")).recording) == std::vector<int>{1, 3, 6});
    CHECK(first_row_milestones(rsk(Permutation::identity(4)).recording) == std::vector<int>{1, 2, 3, 4});
    CHECK(first_row_milestones(rsk(parse_permutation("14567283")).recording) ==
          std::vector<int>{1, 2, 3, 4, 5, 7});
    // u_i is where is(pi_[1,m]) first reaches i.
    for_all_perms(6, [](const Permutation& p) {
        const auto u = first_row_milestones(rsk(p).recording);
        for (std::size_t i = 0; i < u.size(); ++i) {
            const int m = u[i];
            REQUIRE(lis(p.word().factor(1, m)) == static_cast<int>(i) + 1);
            if (m > 1) REQUIRE(lis(p.word().factor(1, m - 1)) == static_cast<int>(i));
        }
    });
}

TEST_CASE("recording tableau of a word with gaps") {
    CHECK(recording_tableau(Word{40, 30, 60}) == rsk(Permutation{2, 1, 3}).recording);
    CHECK(rsk_shape(Word{5, 7, 3}) == Partition{2, 1});
    CHECK(rsk_shape(Word{}).empty());
}

TEST_CASE("Des(p) = Des(Q(p)) on S_7") {
    for_all_perms(7, [](const Permutation& p) { REQUIRE(descent_set(p) == tableau_descents(rsk(p).recording)); });
}

TEST_CASE("Greene sums against the subset oracle on S_6") {
    for_all_perms(6, [](const Permutation& p) {
        const LsProfile profile = brute_profile(p);
        for (int k = 1; k <= 3; ++k) REQUIRE(greene_sums(p, k) == profile.is_k(k));
    });
}

TEST_CASE("first part and length of the shape are lis and lds") {
    for_all_perms(7, [](const Permutation& p) {
        const std::vector<int> e(p.entries().begin(), p.entries().end());
        const Partition shape = rsk(p).shape();
        REQUIRE(shape.first_part() == testoracle::quadratic_lis(e));
        REQUIRE(shape.length() == testoracle::quadratic_lis(e, true));
    });
}

TEST_CASE("rsk is injective on S_6 and prefix shapes follow Q") {
    std::map<std::pair<std::string, std::string>, int> seen;
    for_all_perms(6, [&](const Permutation& p) {
        const RskPair r = rsk(p);
        REQUIRE(r.insertion.shape() == r.recording.shape());
        ++seen[{to_string(r.insertion), to_string(r.recording)}];
        const PartitionChain chain = chain_encode(r.recording);
        for (int m = 1; m <= p.size(); ++m) REQUIRE(rsk_shape(p.word().factor(1, m)) == chain[m]);
    });
    CHECK(seen.size() == 720);
}
