#include "doctest.h"
#include "sumdes/counting.hpp"
#include "sumdes/oracle.hpp"

using namespace sumdes;

namespace {
GroupElement el(std::vector<u64> c) { return GroupElement(std::move(c)); }
} // namespace

TEST_CASE("count_subsets worked examples") {
    CHECK(count_subsets(GroupSpec({3, 3}), 3, el({0, 0})) == 12);
    CHECK(count_subsets(GroupSpec({4}), 2, el({1})) == 2);
    CHECK(count_subsets(GroupSpec({2, 2}), 2, el({0, 0})) == 0);
    CHECK_THROWS_AS(count_subsets(GroupSpec({4}), 5, el({0})), domain_error);
}

TEST_CASE("count_subsets_star worked examples") {
    GroupSpec z9({9});
    CHECK(count_subsets_star(z9, 2, el({0})) == 4);
    CHECK(count_subsets_star(z9, 2, el({6})) == 3);
    CHECK(count_subsets_star(z9, 1, el({0})) == 0);
    CHECK_THROWS_AS(count_subsets_star(z9, 9, el({0})), domain_error);
}

TEST_CASE("k = 0 empty-sum convention") {
    GroupSpec g({2, 4});
    CHECK(count_subsets(g, 0, el({0, 0})) == 1);
    CHECK(count_subsets(g, 0, el({1, 0})) == 0);
    CHECK(count_subsets_star(g, 0, el({0, 0})) == 1);
    CHECK(count_subsets_star(g, 0, el({0, 1})) == 0);
}

TEST_CASE("CountQuery dispatch") {
    CountQuery q{GroupSpec({9}), 2, el({6}), true};
    CHECK(count_subsets(q) == 3);
    q.star = false;
    q.target = el({1});
    CHECK(count_subsets(q) == count_subsets(GroupSpec({9}), 2, el({1})));
}

TEST_CASE("is_empty_family") {
    CHECK(is_empty_family(GroupSpec({2, 2}), 2, el({0, 0})));
    CHECK_FALSE(is_empty_family(GroupSpec({4}), 4, el({2})));
    CHECK(is_empty_family(GroupSpec({4}), 4, el({0})));
    CHECK(is_empty_family(GroupSpec({6}), 6, el({0})));
    CHECK_FALSE(is_empty_family(GroupSpec({6}), 6, el({3})));
    CHECK(is_empty_family(GroupSpec({2, 2, 2}), 6, el({0, 0, 0}))); // k = n-2
    CHECK_FALSE(is_empty_family(GroupSpec({2, 2}), 2, el({1, 0})));
}

TEST_CASE("is_empty_family agrees with a zero count") {
    for (u64 n = 1; n <= 16; ++n) {
        for (const auto& g : abelian_group_types(n)) {
            for (u64 k = 1; k <= n; ++k)
                for (const auto& x : ElementRange(g))
                    REQUIRE(is_empty_family(g, k, x) == (count_subsets(g, k, x) == 0));
        }
    }
}

TEST_CASE("replication: blocks through y") {
    GroupSpec z9({9});
    CHECK(replication(z9, 3, el({0}), el({0})) == 4);
    CHECK(replication(z9, 3, el({0}), el({1})) == 3);
    GroupSpec z3z3({3, 3});
    for (const auto& y : ElementRange(z3z3)) CHECK(replication(z3z3, 3, el({0, 0}), y) == 4);
    CHECK_THROWS_AS(replication(z9, 1, el({0}), el({0})), domain_error);
}

TEST_CASE("lambda conversion and block counts") {
    CHECK(lambda_convert(2, 9, 3, BigCount(1), 1) == 4);
    CHECK(lambda_convert(2, 9, 3, BigCount(1), 2) == 1); // i = t identity
    CHECK(block_count(2, 9, 3, BigCount(1)) == 12);
    CHECK(lambda_from_blocks(2, 9, 3, BigCount(12)) == 1);
    CHECK_THROWS_AS(block_count(2, 8, 3, BigCount(1)), inconsistent_parameters_error);
    CHECK_THROWS_AS(lambda_convert(3, 9, 3, BigCount(1), 4), domain_error);
}

TEST_CASE("row sums: sum_x b_k^x = C(n,k)") {
    for (u64 n = 1; n <= 24; ++n) {
        for (const auto& g : abelian_group_types(n)) {
            for (u64 k = 0; k <= n; ++k) {
                BigCount total = 0;
                for (const auto& x : ElementRange(g)) total += count_subsets(g, k, x);
                REQUIRE(total == binomial(n, k));
            }
        }
    }
}

TEST_CASE("star decomposition: a block omits or contains the identity") {
    for (u64 n = 2; n <= 24; ++n) {
        for (const auto& g : abelian_group_types(n)) {
            for (u64 k = 1; k + 1 <= n; ++k)
                for (const auto& x : ElementRange(g))
                    REQUIRE(count_subsets(g, k, x) ==
                            count_subsets_star(g, k, x) + count_subsets_star(g, k - 1, x));
        }
    }
}

TEST_CASE("counts depend on x only through e(x)") {
    for (u64 n = 2; n <= 24; ++n) {
        for (const auto& g : abelian_group_types(n)) {
            // group elements by e-value, compare against the class representative
            for (const auto& [e, rep] : oracle::e_class_representatives(g)) {
                for (u64 k = 0; k <= n; ++k) {
                    BigCount full = count_subsets(g, k, rep);
                    BigCount star = k + 1 <= n ? count_subsets_star(g, k, rep) : BigCount(0);
                    for (const auto& x : ElementRange(g)) {
                        if (g.e_of(x) != e) continue;
                        REQUIRE(count_subsets(g, k, x) == full);
                        if (k + 1 <= n) REQUIRE(count_subsets_star(g, k, x) == star);
                    }
                }
            }
        }
    }
}

TEST_CASE("closed forms match brute-force enumeration on small groups") {
    for (u64 n = 1; n <= 12; ++n) {
        for (const auto& g : abelian_group_types(n)) {
            for (u64 k = 0; k <= n; ++k) {
                for (const auto& [e, x] : oracle::e_class_representatives(g)) {
                    REQUIRE(count_subsets(g, k, x) == oracle::count_blocks(g, k, x, false));
                    if (k + 1 <= n)
                        REQUIRE(count_subsets_star(g, k, x) == oracle::count_blocks(g, k, x, true));
                }
            }
        }
    }
}

TEST_CASE("nonzero e-class of maximal depth separates star counts in p-groups") {
    // For p-groups with exp = p^t, counts at e(g) = p^{t-1} differ from the
    // x = 0 counts for every k.
    for (u64 n : {4, 8, 9, 16, 25, 27}) {
        for (const auto& g : abelian_group_types(n)) {
            const u64 p = factorize(n)[0].first;
            const u64 deep = g.exponent() / p;
            GroupElement rep = g.e_class_representative(deep);
            REQUIRE(g.e_of(rep) == deep);
            for (u64 k = 1; k + 1 <= n; ++k)
                REQUIRE(count_subsets_star(g, k, g.identity()) != count_subsets_star(g, k, rep));
        }
    }
}
