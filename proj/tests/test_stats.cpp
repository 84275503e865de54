#include <doctest.h>

#include <numeric>

#include "descentkit/error.hpp"
#include "descentkit/oracle.hpp"
#include "descentkit/rsk.hpp"
#include "descentkit/stats.hpp"
#include "oracles.hpp"

using namespace descentkit;

namespace {

Permutation P(const char* text) { return parse_permutation(text); }

template <typename Fn>
void for_all_perms(int n, Fn&& fn) {
    std::vector<int> e(static_cast<std::size_t>(n));
    std::iota(e.begin(), e.end(), 1);
    do fn(Permutation(e));
    while (std::next_permutation(e.begin(), e.end()));
}

}  // namespace

TEST_CASE("composition encoding") {
    CHECK(composition_to_descents(Composition{2, 3, 1}) == DescentSet{1, 2, 6});
    CHECK(composition_to_descents(Composition{1}) == DescentSet{1});
    CHECK(composition_to_descents(Composition{1, 2}) == DescentSet{2, 3});
    CHECK(descents_to_composition(DescentSet{1, 2, 6}) == Composition{2, 3, 1});
    CHECK(Composition{2, 3, 1}.partial_sum(2) == 5);
    CHECK(Composition{2, 3, 1}.is_descent_block(1));
    CHECK_FALSE(Composition{2, 3, 1}.is_descent_block(2));
    CHECK_THROWS(Composition{});
    CHECK_THROWS(Composition{2, 0});
    CHECK_THROWS(descents_to_composition(DescentSet{}));

    for (std::uint64_t mask = 1; mask < (1u << 7); ++mask) {
        const DescentSet d = DescentSet::from_mask(mask);
        const Composition c = descents_to_composition(d);
        REQUIRE(composition_to_descents(c) == d);
        REQUIRE(c.partial_sum(c.length()) == d.max());
    }
}

TEST_CASE("lis and lds") {
    CHECK(lis(P("234615")) == 4);
    CHECK(lis(P("54321")) == 1);
    CHECK(lis(P("1573426")) == 4);
    CHECK(lis(Word{}) == 0);
    CHECK(lds(Permutation::identity(6)) == 1);
    CHECK(lds(P("4365172")) == 3);
    CHECK(lds(P("42783561")) == 3);
    for_all_perms(7, [](const Permutation& p) {
        const std::vector<int> e(p.entries().begin(), p.entries().end());
        REQUIRE(lis(p) == testoracle::quadratic_lis(e));
        REQUIRE(lds(p) == testoracle::quadratic_lis(e, true));
    });
}

TEST_CASE("ls_d examples") {
    const Permutation p = P("1573426");
    CHECK(ls_d(p, 0) == 4);
    CHECK(ls_d(p, 1) == 6);
    CHECK(ls_d(p, 2) == 7);
    CHECK(ls_d(p, 3) == 0);
    CHECK(ls_d(Permutation::identity(5), 0) == 5);
    CHECK(ls_d(Permutation::identity(5), 1) == 0);
    CHECK(ls_d(P("563412"), 1) == 4);
    CHECK_THROWS(ls_d(p, -1));
}

TEST_CASE("regression pair 563412") {
    const Permutation p = P("563412");
    CHECK(lis(p) == 2);
    CHECK(ls_d(p, 1) == 4);
    CHECK(asc(p) == 3);
    CHECK(ls_d(p, 1) == lis(p) + 2);
}

TEST_CASE("ls_d via growth break-ups") {
    CHECK(ls_d_via_growth(P("1573426"), 0) == 4);
    CHECK(ls_d_via_growth(P("1573426"), 1) == 6);
    // 3247516 has three descents, so no 7-element subsequence has exactly two.
    CHECK(brute_profile(P("3247516")).ls_d(2) == 6);
    CHECK(ls_d_via_growth(P("3247516"), 2) == 6);
    CHECK(ls_d_via_growth(P("1573426"), 3) == 0);
}

TEST_CASE("ls_1 from first rows") {
    CHECK(ls1_via_first_rows(P("5316274")) == 4);
    CHECK(ls1_via_first_rows(P("21")) == 2);
    CHECK(ls1_via_first_rows(P("1573426")) == 6);
    CHECK(ls1_via_first_rows(Permutation::identity(4)) == 0);
}

TEST_CASE("ls_D examples") {
    CHECK(ls_D(P("3247516"), DescentSet{2, 3}) == 5);
    const Permutation p = P("42783561");
    CHECK(ls_D(p, DescentSet{3}) == 6);
    CHECK(ls_D(p, DescentSet{1, 2, 3}) == 0);
    CHECK(ls_D(p, DescentSet{1, 3, 4}) == 5);
    CHECK(ls_D(Permutation::identity(4), DescentSet{1}) == 0);
    CHECK(ls_D(p, DescentSet{}) == lis(p));
    CHECK(ls_D(p, DescentSet{8}) == 0);
    CHECK(ls_D(p, composition_to_descents(Composition{1, 2})) == ls_D(p, DescentSet{2, 3}));
}

TEST_CASE("ls_D on a window of the triangle") {
    const Permutation p = P("42783561");
    const StatTriangle t = stat_triangle(p);
    CHECK(ls_D(t, DescentSet{1}, 2, 5) == ls_D(Permutation{1, 3, 4, 2}, DescentSet{1}));
    CHECK_THROWS_AS(ls_D(t, DescentSet{1}, 0, 3), std::out_of_range);
    CHECK_THROWS_AS(ls_D(t, DescentSet{1}, 4, 3), std::out_of_range);
}

TEST_CASE("singleton descent sets") {
    CHECK(ls_singleton_via_good_pairs(P("14567283"), 3) == 5);
    CHECK(ls_singleton_via_good_pairs(P("21"), 1) == 2);
    CHECK(ls_singleton_via_good_pairs(P("42783561"), 3) == 6);
    CHECK_THROWS(ls_singleton_via_good_pairs(P("21"), 0));

    const SingletonThreshold a = ls_singleton_threshold(P("132"), 1);
    CHECK(a.exists);
    CHECK(a.lower_bound == 2);
    CHECK_FALSE(ls_singleton_threshold(P("132"), 3).exists);
    CHECK(ls_D(P("132"), DescentSet{3}) == 0);
    const SingletonThreshold b = ls_singleton_threshold(P("21"), 1);
    CHECK(b.exists);
    CHECK(b.lower_bound == 2);
    CHECK(ls_singleton_threshold(P("14567283"), 3).exists);
    CHECK_THROWS_AS(ls_singleton_threshold(Permutation::identity(3), 1), PreconditionError);

    CHECK(ls_singleton_formula(P("132"), 1) == 2);
    CHECK(ls_singleton_formula(P("21"), 1) == 2);
    CHECK(ls_singleton_formula(P("14567283"), 3) == 5);
    CHECK_THROWS_AS(ls_singleton_formula(P("132"), 3), PreconditionError);
    CHECK_THROWS_AS(ls_singleton_formula(Permutation::identity(3), 1), PreconditionError);
}

TEST_CASE("existence and peeling") {
    CHECK_FALSE(ls_D_existence(P("12"), DescentSet{1}));
    CHECK_FALSE(ls_D_existence(P("42783561"), DescentSet{1, 2, 3}));
    CHECK(ls_D_existence(P("3247516"), DescentSet{2, 3}));
    CHECK(ls_D_existence(P("3247516"), DescentSet{}));

    CHECK(ls_D_peel(P("3247516"), DescentSet{2, 3}) == 5);
    CHECK(ls_D_peel(P("3247516"), DescentSet{}) == lis(P("3247516")));
    CHECK(ls_D_peel(P("42783561"), DescentSet{1, 3, 4}) == 5);
    CHECK_THROWS_AS(ls_D_peel(P("12"), DescentSet{1}), PreconditionError);
    CHECK_THROWS_AS(ls_D_peel(P("12"), DescentSet{2}), PreconditionError);
}

TEST_CASE("alternating length") {
    CHECK(alternating_length(P("21")) == 2);
    CHECK(alternating_length(P("1573426")) == 5);
    CHECK(brute_alternating_length(P("1573426")) == 5);
    CHECK(alternating_length(Permutation::identity(1)) == 1);
    CHECK(alternating_length(Permutation::identity(5)) == brute_alternating_length(Permutation::identity(5)));
}

TEST_CASE("descent words") {
    const Permutation p = P("31452867");
    CHECK(len_w(p, DescentWord("UUD")) == 6);
    CHECK(has_descent_word(p, DescentWord("UUDUU")));
    CHECK_FALSE(has_descent_word(p, DescentWord("UUDUUD")));
    CHECK(has_descent_word(P("132"), DescentWord("U")));
    CHECK_FALSE(has_descent_word(P("42783561"), DescentWord("DDD")));
    CHECK(has_descent_word(p, DescentWord("")));
    CHECK_FALSE(has_descent_word(P("21"), DescentWord("DD")));
    CHECK_THROWS(len_w(p, DescentWord("")));
    for_all_perms(6, [](const Permutation& q) {
        REQUIRE(len_w(q, DescentWord("U")) == lis(q));
        REQUIRE(len_w(q, DescentWord("D")) == lds(q));
        REQUIRE(len_w(q, DescentWord("DU")) == alternating_length(q));
    });
}

TEST_CASE("has_descent_word against subset enumeration") {
    for_all_perms(6, [](const Permutation& p) {
        const std::vector<int> e(p.entries().begin(), p.entries().end());
        for (int len = 1; len <= 4; ++len)
            for (int bits = 0; bits < (1 << len); ++bits) {
                std::string letters;
                for (int b = 0; b < len; ++b) letters.push_back(bits & (1 << b) ? 'D' : 'U');
                const DescentWord w(letters);
                // Some (len+1)-subset has descent word exactly w.
                bool found = false;
                for (std::uint64_t s = 0; s < 64 && !found; ++s) {
                    if (__builtin_popcountll(s) != len + 1) continue;
                    found = descent_word(subsequence_by_mask(p, s)) == w;
                }
                REQUIRE(has_descent_word(p, w) == found);
            }
    });
}

TEST_CASE("all ls_D routes agree with the subset oracle on S_6") {
    for_all_perms(6, [](const Permutation& p) {
        const std::vector<int> e(p.entries().begin(), p.entries().end());
        const LsProfile profile = brute_profile(p);
        for (std::uint64_t mask = 0; mask < 32; ++mask) {
            const DescentSet d = DescentSet::from_mask(mask);
            const int expected = testoracle::subset_ls_D(e, mask);
            REQUIRE(profile[d] == expected);
            REQUIRE(ls_D(p, d) == expected);
            if (!p.is_identity() && !d.empty()) REQUIRE(ls_D_existence(p, d) == (expected != 0));
            if (expected != 0) REQUIRE(ls_D_peel(p, d) == expected);
        }
        for (int i = 1; i <= 5; ++i) {
            const int expected = profile[DescentSet{i}];
            REQUIRE(ls_singleton_via_good_pairs(p, i) == expected);
            if (expected != 0) REQUIRE(ls_singleton_formula(p, i) == expected);
            if (!p.is_identity()) {
                const SingletonThreshold t = ls_singleton_threshold(p, i);
                REQUIRE(t.exists == (expected != 0));
                if (t.exists) REQUIRE(expected >= t.lower_bound);
            }
        }
        for (int d = 0; d <= 5; ++d) {
            REQUIRE(ls_d(p, d) == profile.ls_d(d));
            REQUIRE(ls_d_via_growth(p, d) == profile.ls_d(d));
        }
        if (!p.is_identity()) REQUIRE(ls1_via_first_rows(p) == profile.ls_d(1));
    });
}

TEST_CASE("bounds and characterization on S_7") {
    for_all_perms(7, [](const Permutation& p) {
        const int is = lis(p);
        const int a = asc(p);
        for (int d = 0; d <= des(p); ++d) {
            const int v = ls_d(p, d);
            REQUIRE(v >= d + 1);
            REQUIRE(v >= is + d);
            REQUIRE(v <= std::min(greene_sums(p, d + 1), a + d + 1));
            if (d >= 1) {
                REQUIRE((v == is + d) == (a == is - 1));
                if (a == is) REQUIRE(v == is + d + 1);
                REQUIRE(v > ls_d(p, d - 1));
            }
        }
        REQUIRE(ls_d(p, des(p) + 1) == 0);
    });
}
