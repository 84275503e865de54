#include <doctest.h>

#include <set>

#include "descentkit/error.hpp"
#include "descentkit/rsk.hpp"
#include "descentkit/tableau.hpp"
#include "oracles.hpp"

using namespace descentkit;

namespace {

std::vector<int> parts_of(const Partition& p) { return {p.parts().begin(), p.parts().end()}; }

PartitionChain chain_of(std::initializer_list<Partition> shapes) { return PartitionChain(std::vector<Partition>(shapes)); }

}  // namespace

TEST_CASE("Partition basics") {
    const Partition lambda{3, 2, 2};
    CHECK(lambda.size() == 7);
    CHECK(lambda.length() == 3);
    CHECK(lambda.part(1) == 3);
    CHECK(lambda.part(4) == 0);
    CHECK(parts_of(lambda.conjugate()) == std::vector<int>{3, 3, 1});
    CHECK(parts_of(lambda.widen_first_row()) == std::vector<int>{4, 2, 2});
    CHECK(Partition{3, 1, 0, 0} == Partition{3, 1});
    CHECK(Partition{}.empty());
    CHECK(Partition{}.size() == 0);
    CHECK(Partition{}.conjugate().empty());
    CHECK_THROWS(Partition{1, 2});
    CHECK_THROWS(Partition{2, -1});
    CHECK(lambda.contains(Partition{2, 2, 1}));
    CHECK_FALSE(lambda.contains(Partition{4}));
    CHECK(lambda.can_add_box(1));
    CHECK_FALSE(lambda.can_add_box(3));
    CHECK(lambda.can_add_box(4));
    CHECK(lambda.with_box(4) == Partition{3, 2, 2, 1});
    CHECK_THROWS(lambda.with_box(3));
}

TEST_CASE("conjugate is an involution preserving f^lambda") {
    for (int n = 0; n <= 8; ++n)
        for (const Partition& lambda : partitions_of(n)) {
            CHECK(lambda.conjugate().conjugate() == lambda);
            CHECK(syt_count(lambda) == syt_count(lambda.conjugate()));
        }
}

TEST_CASE("partitions_of") {
    CHECK(partitions_of(0).size() == 1);
    CHECK(partitions_of(0).front().empty());
    CHECK(partitions_of(5).size() == 7);
    CHECK(partitions_of(8).size() == 22);
    CHECK(partitions_of(5).front() == Partition{5});
    CHECK(partitions_of(5).back() == Partition{1, 1, 1, 1, 1});
}

TEST_CASE("partition text forms") {
    CHECK(to_string(Partition{3, 2, 2}) == "322");
    CHECK(to_string(Partition{}).empty());
    CHECK(to_string(Partition{12, 3}) == "12,3");
    CHECK(parse_partition("3 2 2") == Partition{3, 2, 2});
    CHECK(parse_partition("12,3") == Partition{12, 3});
    CHECK_THROWS_AS(parse_partition("1 2"), ParseError);
    CHECK_THROWS_AS(parse_partition("3 a"), ParseError);
}

TEST_CASE("StandardTableau validation and accessors") {
    const StandardTableau q({{1, 3, 6}, {2, 4}, {5, 7}});
    CHECK(q.shape() == Partition{3, 2, 2});
    CHECK(q.size() == 7);
    CHECK(q.at(2, 2) == 4);
    CHECK(q.row_of(5) == 3);
    CHECK(std::vector<int>(q.first_row().begin(), q.first_row().end()) == std::vector<int>{1, 3, 6});
    CHECK(to_string(q) == "[1 3 6][2 4][5 7]");
    CHECK(parse_tableau("[1 3 6][2 4][5 7]") == q);
    CHECK(parse_tableau(" [1 3 6] [2 4] [5 7] ") == q);

    CHECK_THROWS(StandardTableau({{1, 3}, {2, 2}}));
    CHECK_THROWS(StandardTableau({{2, 1}}));
    CHECK_THROWS(StandardTableau({{1, 2}, {3, 4, 5}}));
    CHECK_THROWS(StandardTableau({{1, 4}, {3, 2}}));
    CHECK_THROWS(StandardTableau({{1, 5}}));
    CHECK_THROWS_AS(parse_tableau("[1 2][3"), ParseError);
    CHECK_THROWS_AS(parse_tableau("1 2"), ParseError);
    CHECK_THROWS_AS(parse_tableau("[2 1]"), ParseError);
}

TEST_CASE("chain_encode of P(4365172)") {
    const StandardTableau p({{1, 2, 7}, {3, 5}, {4, 6}});
    const PartitionChain expected = chain_of({Partition{}, Partition{1}, Partition{2}, Partition{2, 1}, Partition{2, 1, 1},
                                              Partition{2, 2, 1}, Partition{2, 2, 2}, Partition{3, 2, 2}});
    CHECK(chain_encode(p) == expected);
    CHECK(chain_decode(expected) == p);
}

TEST_CASE("chain_encode small cases") {
    CHECK(chain_encode(StandardTableau(std::vector<std::vector<int>>{{1}})) == chain_of({Partition{}, Partition{1}}));
    const StandardTableau q({{1, 2, 4}, {3}, {5}});
    const PartitionChain chain = chain_encode(q);
    CHECK(chain ==
          chain_of({Partition{}, Partition{1}, Partition{2}, Partition{2, 1}, Partition{3, 1}, Partition{3, 1, 1}}));
    CHECK(chain_decode(chain) == q);
    CHECK_THROWS(chain_of({Partition{1}, Partition{2}}));
    CHECK_THROWS(chain_of({Partition{}, Partition{2}}));
}

TEST_CASE("chain encode and decode are inverse on all SYT up to size 10") {
    for (int n = 1; n <= 10; ++n)
        for (const Partition& lambda : partitions_of(n))
            for_each_syt(lambda, [](const StandardTableau& t) { REQUIRE(chain_decode(chain_encode(t)) == t); });
}

TEST_CASE("tableau_descents") {
    CHECK(tableau_descents(StandardTableau({{1, 3, 6}, {2, 4}, {5, 7}})) == DescentSet{1, 3, 4, 6});
    CHECK(tableau_descents(StandardTableau({{1, 2, 3, 4}})).empty());
    CHECK(tableau_descents(StandardTableau({{1, 2, 4}, {3}, {5}})) == DescentSet{2, 4});
}

TEST_CASE("syt_count by hook lengths") {
    CHECK(syt_count(Partition{1}) == 1);
    CHECK(syt_count(Partition{2, 1}) == 2);
    CHECK(syt_count(Partition{3, 2}) == 5);
    CHECK(syt_count(Partition{}) == 1);
    CHECK(syt_count(Partition{2, 1}) == testoracle::brute_syt_count({2, 1}));
    CHECK(syt_count(Partition{3, 2}) == testoracle::brute_syt_count({3, 2}));
    // f^(10,10) is the tenth Catalan number.
    CHECK(syt_count(Partition{10, 10}) == 16796);
}

TEST_CASE("syt_count matches brute fillings and enumeration up to n = 8") {
    for (int n = 1; n <= 8; ++n)
        for (const Partition& lambda : partitions_of(n)) {
            const auto enumerated = enumerate_syt(lambda);
            REQUIRE(BigInt(enumerated.size()) == syt_count(lambda));
            std::set<std::string> distinct;
            for (const auto& t : enumerated) {
                REQUIRE(t.shape() == lambda);
                distinct.insert(to_string(t));
            }
            REQUIRE(distinct.size() == enumerated.size());
            if (n <= 7) REQUIRE(syt_count(lambda) == testoracle::brute_syt_count(parts_of(lambda)));
        }
}

TEST_CASE("sum of squares of f^lambda is n!") {
    for (int n = 1; n <= 8; ++n) {
        BigInt total = 0;
        for (const Partition& lambda : partitions_of(n)) total += syt_count(lambda) * syt_count(lambda);
        CHECK(total == BigInt(factorial(n)));
    }
}

TEST_CASE("ssyt_count by hook contents") {
    CHECK(ssyt_count(Partition{1}, 5) == 5);
    CHECK(ssyt_count(Partition{1, 1}, 2) == 1);
    CHECK(ssyt_count(Partition{2, 1}, 2) == 2);
    CHECK(ssyt_count(Partition{2, 1}, 1) == 0);
    CHECK(ssyt_count(Partition{1}, 0) == 0);
    CHECK(ssyt_count(Partition{}, 3) == 1);
    CHECK_THROWS(ssyt_count(Partition{1}, -1));
    for (int n = 1; n <= 6; ++n)
        for (const Partition& lambda : partitions_of(n))
            for (int k = 0; k <= 4; ++k)
                REQUIRE(ssyt_count(lambda, k) == testoracle::brute_ssyt_count(parts_of(lambda), k));
}

TEST_CASE("enumerate_syt small shapes and cap") {
    CHECK(enumerate_syt(Partition{1, 1, 1}).size() == 1);
    CHECK(enumerate_syt(Partition{2, 1}).size() == 2);
    CHECK(enumerate_syt(Partition{2, 2}).size() == 2);
    CHECK_THROWS_AS(enumerate_syt(Partition{13}), GuardExceeded);
    CHECK(enumerate_syt(Partition{13}, 13).size() == 1);
}

TEST_CASE("replacement map on the displayed instance") {
    const StandardTableau q({{1, 3, 6}, {2, 4}, {5, 7}});
    const std::vector<std::vector<int>> expected{{1, 2, 3}, {1, 2}, {2, 3}};
    CHECK(replacement_map(q) == expected);
}

TEST_CASE("descent count bijection") {
    const BijectionCheck row = descent_count_bijection_check(Partition{5});
    CHECK(row.enumerated == 1);
    CHECK(row.formula == 1);
    CHECK(row.passed());

    const BijectionCheck square = descent_count_bijection_check(Partition{2, 2});
    CHECK(square.enumerated == square.formula);
    CHECK(square.passed());

    for (int n = 1; n <= 8; ++n)
        for (const Partition& lambda : partitions_of(n)) {
            const BijectionCheck c = descent_count_bijection_check(lambda);
            INFO("shape " << to_string(lambda));
            CHECK(c.enumerated == c.formula);
            CHECK(c.lands_in_family);
            CHECK(c.injective);
        }
}
