#include "doctest.h"
#include "sumdes/group.hpp"

#include <numeric>
#include <set>

#include "test_util.hpp"

using namespace sumdes;

namespace {
GroupElement el(std::vector<u64> c) { return GroupElement(std::move(c)); }
} // namespace

TEST_CASE("canonicalize reproduces invariant factor chains") {
    CHECK(GroupSpec({2, 4}).factors() == std::vector<u64>{2, 4});
    CHECK(GroupSpec({2, 3}).factors() == std::vector<u64>{6});
    CHECK(GroupSpec({4, 6}).factors() == std::vector<u64>{2, 12});
    CHECK(GroupSpec({1}).factors() == std::vector<u64>{1});
    CHECK(GroupSpec({1, 5, 1}).factors() == std::vector<u64>{5});
    CHECK(GroupSpec({6, 4, 2}).factors() == std::vector<u64>{2, 2, 12});
    CHECK_THROWS_AS(GroupSpec({2, 0}), invalid_spec_error);
}

TEST_CASE("canonicalize is idempotent and order preserving") {
    for (u64 n = 1; n <= 36; ++n) {
        for (const auto& factors : testutil::all_factorizations(n)) {
            GroupSpec g(factors);
            u64 prod = 1;
            for (u64 f : factors) prod *= f;
            CHECK(g.order() == prod);
            CHECK(GroupSpec(g.factors()).factors() == g.factors());
            // chain property
            for (std::size_t i = 0; i + 1 < g.rank(); ++i)
                CHECK(g.factors()[i + 1] % g.factors()[i] == 0);
        }
    }
}

TEST_CASE("element arithmetic") {
    GroupSpec z4({4});
    CHECK(z4.add(el({3}), el({2})) == el({1}));
    GroupSpec z2z4({2, 4});
    CHECK(z2z4.scalar_mul(2, el({1, 3})) == el({0, 2}));
    GroupSpec z6({6});
    CHECK(z6.scalar_mul(-1, el({4})) == el({2}));
    CHECK(z6.add(el({4}), z6.neg(el({4}))) == z6.identity());
    CHECK_THROWS_AS(z6.add(el({4}), el({1, 1})), domain_error);
    CHECK_THROWS_AS(z6.add(el({6}), el({1})), domain_error);
}

TEST_CASE("element order matches repeated addition") {
    for (u64 n = 2; n <= 24; ++n) {
        for (const auto& g : abelian_group_types(n)) {
            for (const auto& x : ElementRange(g)) {
                u64 ord = g.element_order(x);
                CHECK(g.scalar_mul(static_cast<i64>(ord), x) == g.identity());
                GroupElement acc = g.identity();
                u64 direct = 0;
                do {
                    acc = g.add(acc, x);
                    ++direct;
                } while (acc != g.identity());
                CHECK(direct == ord);
            }
        }
    }
}

TEST_CASE("torsion_count") {
    CHECK(GroupSpec({9}).torsion_count(3) == 3);
    CHECK(GroupSpec({2, 4}).torsion_count(2) == 4);
    CHECK(GroupSpec({2, 4}).torsion_count(1) == 1);
    CHECK_THROWS_AS(GroupSpec({4}).torsion_count(0), domain_error);
}

TEST_CASE("torsion_count equals the kernel census") {
    for (u64 n = 1; n <= 100; ++n) {
        for (const auto& g : abelian_group_types(n)) {
            for (u64 d = 1; d <= g.exponent(); ++d) {
                u64 census = 0;
                for (const auto& x : ElementRange(g))
                    if (g.scalar_mul(static_cast<i64>(d), x) == g.identity()) ++census;
                REQUIRE(census == g.torsion_count(d));
            }
        }
    }
}

TEST_CASE("e_of examples and enumeration oracle") {
    CHECK(GroupSpec({4}).e_of(el({2})) == 2);
    CHECK(GroupSpec({9}).e_of(el({0})) == 9);
    CHECK(GroupSpec({2, 4}).e_of(el({1, 2})) == 1);

    for (u64 n = 2; n <= 24; ++n) {
        for (const auto& g : abelian_group_types(n)) {
            // oracle: e(x) = max d | exp with x in dG, dG enumerated directly
            for (const auto& x : ElementRange(g)) {
                u64 expected = 1;
                for (u64 d : g.exponent_divisors()) {
                    bool found = false;
                    for (const auto& y : ElementRange(g)) {
                        if (g.scalar_mul(static_cast<i64>(d), y) == x) {
                            found = true;
                            break;
                        }
                    }
                    if (found) expected = d;
                }
                REQUIRE(g.e_of(x) == expected);
                CHECK(g.exponent() % g.e_of(x) == 0);
            }
        }
    }
}

TEST_CASE("mobius") {
    CHECK(mobius(1) == 1);
    CHECK(mobius(6) == 1);
    CHECK(mobius(12) == 0);
    CHECK(mobius(30) == -1);
    CHECK_THROWS_AS(mobius(0), domain_error);
    for (u64 a = 1; a <= 200; ++a)
        for (u64 b = 1; b <= 200 / a; ++b)
            if (std::gcd(a, b) == 1) CHECK(mobius(a * b) == mobius(a) * mobius(b));
}

TEST_CASE("p_valuation") {
    CHECK(p_valuation(12, 2) == Valuation::finite(2));
    CHECK(p_valuation(0, 5).is_infinite());
    CHECK(p_valuation(7, 3) == Valuation::finite(0));
    CHECK_THROWS_AS(p_valuation(10, 4), domain_error);
    CHECK(Valuation::finite(5) < Valuation::infinity());
    CHECK(Valuation::infinity() == Valuation::infinity());
    CHECK_THROWS_AS(Valuation::infinity().finite_value(), internal_error);
}

TEST_CASE("element enumeration is lexicographic") {
    GroupSpec g({2, 2});
    std::vector<GroupElement> got = elements(g);
    std::vector<GroupElement> want{el({0, 0}), el({0, 1}), el({1, 0}), el({1, 1})};
    CHECK(got == want);
    CHECK(elements(GroupSpec({3})).size() == 3);
    CHECK(elements(GroupSpec({1})) == std::vector<GroupElement>{el({0})});
    CHECK_THROWS_AS(elements(GroupSpec({5, 5}), 10), resource_error);

    // rank/unrank round trip
    GroupSpec h({3, 6});
    u64 r = 0;
    for (const auto& x : ElementRange(h)) {
        CHECK(h.element_rank(x) == r);
        CHECK(h.element_at(r) == x);
        ++r;
    }
    CHECK(r == h.order());
}

TEST_CASE("torsion2_sum") {
    CHECK(GroupSpec({4}).torsion2_sum() == el({2}));
    CHECK(GroupSpec({6}).torsion2_sum() == el({3}));
    CHECK(GroupSpec({9}).torsion2_sum() == el({0}));
    CHECK(GroupSpec({2, 4}).torsion2_sum() == el({0, 0}));
    CHECK(GroupSpec({3, 6}).torsion2_sum() == el({0, 3}));

    for (u64 n = 1; n <= 50; ++n) {
        for (const auto& g : abelian_group_types(n)) {
            GroupElement sum = g.identity();
            for (const auto& x : ElementRange(g))
                if (g.scalar_mul(2, x) == g.identity()) sum = g.add(sum, x);
            REQUIRE(g.torsion2_sum() == sum);
        }
    }
}

TEST_CASE("group spec text format") {
    CHECK(GroupSpec::parse("2,4").factors() == std::vector<u64>{2, 4});
    CHECK(GroupSpec::parse("9").to_string() == "9");
    CHECK_THROWS_AS(GroupSpec::parse(""), invalid_spec_error);
    CHECK_THROWS_AS(GroupSpec::parse("2,,4"), invalid_spec_error);
    CHECK_THROWS_AS(GroupSpec::parse("2,x"), invalid_spec_error);
    CHECK_THROWS_AS(GroupSpec::parse("0"), invalid_spec_error);
}

TEST_CASE("abelian_group_types") {
    CHECK(abelian_group_types(1).size() == 1);
    CHECK(abelian_group_types(12).size() == 2);
    CHECK(abelian_group_types(16).size() == 5);

    // agrees with canonicalize over all factorizations
    for (u64 n = 1; n <= 40; ++n) {
        std::set<std::vector<u64>> via_factorizations;
        for (const auto& f : testutil::all_factorizations(n))
            via_factorizations.insert(GroupSpec(f).factors());
        std::set<std::vector<u64>> via_types;
        for (const auto& g : abelian_group_types(n)) via_types.insert(g.factors());
        REQUIRE(via_factorizations == via_types);
    }
}
