#include "doctest.h"
#include "sumdes/design_law.hpp"
#include "sumdes/oracle.hpp"

#include <algorithm>

using namespace sumdes;
using namespace sumdes::oracle;

namespace {
GroupElement el(std::vector<u64> c) { return GroupElement(std::move(c)); }
} // namespace

TEST_CASE("enumerate_blocks lists blocks lexicographically") {
    auto inst = enumerate_blocks(GroupSpec({3}), 2, el({0}), false);
    REQUIRE(inst.blocks.size() == 1);
    CHECK(inst.blocks[0] == std::vector<u32>{1, 2});

    auto inst2 = enumerate_blocks(GroupSpec({4}), 2, el({1}), false);
    REQUIRE(inst2.blocks.size() == 2);
    CHECK(inst2.blocks[0] == std::vector<u32>{0, 1});
    CHECK(inst2.blocks[1] == std::vector<u32>{2, 3});
    CHECK(std::is_sorted(inst2.blocks.begin(), inst2.blocks.end()));

    CHECK(enumerate_blocks(GroupSpec({2, 2}), 2, el({0, 0}), false).blocks.empty());

    auto star = enumerate_blocks(GroupSpec({9}), 2, el({0}), true);
    CHECK(star.points.size() == 8);
    CHECK(star.blocks.size() == 4);
}

TEST_CASE("block counts match the closed forms everywhere both run") {
    for (u64 n = 1; n <= 14; ++n) {
        for (const auto& g : abelian_group_types(n)) {
            for (u64 k = 0; k <= n; ++k) {
                for (const auto& [e, x] : e_class_representatives(g)) {
                    REQUIRE(count_blocks(g, k, x, false) == count_subsets(g, k, x));
                    auto inst = enumerate_blocks(g, k, x, false);
                    REQUIRE(BigCount(static_cast<unsigned long>(inst.blocks.size())) ==
                            count_subsets(g, k, x));
                }
            }
        }
    }
}

TEST_CASE("enumeration budget is enforced") {
    Budget tiny;
    tiny.max_subset_visits = 10;
    CHECK_THROWS_AS(enumerate_blocks(GroupSpec({12}), 6, el({0}), false, tiny), resource_error);
}

TEST_CASE("check_t_design on the AG(2,3) line design") {
    auto inst = enumerate_blocks(GroupSpec({3, 3}), 3, el({0, 0}), false);
    REQUIRE(inst.blocks.size() == 12);

    auto t2 = check_t_design(inst, 2);
    CHECK(t2.is_design);
    CHECK(*t2.lambda == 1);

    auto t3 = check_t_design(inst, 3);
    CHECK_FALSE(t3.is_design);
    REQUIRE(t3.counterexample.has_value());

    auto t1 = check_t_design(inst, 1);
    CHECK(t1.is_design); // designs descend
    CHECK(*t1.lambda == 4);

    IncidenceInstance empty = inst;
    empty.blocks.clear();
    CHECK(check_t_design(empty, 2).note == "empty-family");
    CHECK_FALSE(check_t_design(empty, 2).is_design);
}

TEST_CASE("check_t_design counterexample is the first lexicographic mismatch") {
    auto inst = enumerate_blocks(GroupSpec({9}), 3, el({0}), false);
    auto rep = check_t_design(inst, 1);
    REQUIRE_FALSE(rep.is_design);
    REQUIRE(rep.counterexample.has_value());
    CHECK(rep.counterexample->first == std::vector<u32>{0});
    CHECK(rep.counterexample->second == std::vector<u32>{1}); // r(0)=4, r(1)=3
}

TEST_CASE("dp_replication equals direct counting") {
    GroupSpec z9({9});
    CHECK(dp_replication(z9, 3, el({0}), el({1}), false) == replication(z9, 3, el({0}), el({1})));
    CHECK(dp_replication(z9, 3, el({0}), el({1}), false) == 3);
    CHECK_THROWS_AS(dp_replication(z9, 3, el({0}), el({0}), true), domain_error);

    for (u64 n = 2; n <= 12; ++n) {
        for (const auto& g : abelian_group_types(n)) {
            for (u64 k = 1; k + 1 <= n; ++k) {
                for (bool star : {false, true}) {
                    auto inst = enumerate_blocks(g, k, g.identity(), star);
                    for (u32 yi = 0; yi < inst.points.size(); ++yi) {
                        u64 direct = 0;
                        for (const auto& block : inst.blocks)
                            if (std::binary_search(block.begin(), block.end(), yi)) ++direct;
                        REQUIRE(dp_replication(g, k, g.identity(), inst.points[yi], star) ==
                                BigCount(static_cast<unsigned long>(direct)));
                    }
                }
            }
        }
    }
}

TEST_CASE("check_1design_dp agrees with the generic closed-form test") {
    for (u64 n = 2; n <= 12; ++n) {
        for (const auto& g : abelian_group_types(n)) {
            for (u64 k = 1; k <= n; ++k)
                for (const auto& [e, x] : e_class_representatives(g))
                    REQUIRE(check_1design_dp(g, k, x, false).is_design ==
                            check_1design_generic(g, k, x).is_design);
        }
    }
}

TEST_CASE("e-class representatives are minimal and complete") {
    GroupSpec z4({4});
    auto reps = e_class_representatives(z4);
    REQUIRE(reps.size() == 3);
    CHECK(reps[0] == std::pair<u64, GroupElement>{4, el({0})});
    CHECK(reps[1] == std::pair<u64, GroupElement>{1, el({1})});
    CHECK(reps[2] == std::pair<u64, GroupElement>{2, el({2})});

    for (u64 n = 2; n <= 24; ++n) {
        for (const auto& g : abelian_group_types(n)) {
            auto rs = e_class_representatives(g);
            REQUIRE(rs.size() == g.exponent_divisors().size());
            for (const auto& [e, rep] : rs) {
                REQUIRE(g.e_of(rep) == e);
                // minimality in enumeration order
                for (const auto& x : ElementRange(g)) {
                    if (x == rep) break;
                    REQUIRE(g.e_of(x) != e);
                }
            }
        }
    }
}

TEST_CASE("conjecture scan over small p-group orders") {
    auto report = conjecture_scan(4, 9);
    // non-elementary p-groups in range: Z_4, Z_8, Z_2+Z_4, Z_9
    CHECK(report.summary.groups_scanned == 4);
    CHECK(report.summary.designs_found == 0);
    CHECK_FALSE(report.summary.budget_exhausted);
    for (const auto& rec : report.records) CHECK_FALSE(rec.two_design);

    bool saw_elementary_skip = false;
    for (const auto& [g, reason] : report.skipped) {
        if (reason == "elementary-abelian") saw_elementary_skip = true;
        if (g.factors() == std::vector<u64>{2, 2}) CHECK(reason == "elementary-abelian");
        if (g.factors() == std::vector<u64>{6}) CHECK(reason == "not-a-p-group");
    }
    CHECK(saw_elementary_skip);
}

TEST_CASE("conjecture scan is deterministic under parallelism") {
    auto serial = conjecture_scan(4, 9, Budget{}, 1);
    auto parallel = conjecture_scan(4, 9, Budget{}, 4);
    REQUIRE(serial.records.size() == parallel.records.size());
    for (std::size_t i = 0; i < serial.records.size(); ++i) {
        CHECK(serial.records[i].group == parallel.records[i].group);
        CHECK(serial.records[i].k == parallel.records[i].k);
        CHECK(serial.records[i].e_value == parallel.records[i].e_value);
        CHECK(serial.records[i].two_design == parallel.records[i].two_design);
    }
}

TEST_CASE("conjecture scan reports a budget frontier") {
    Budget tiny;
    tiny.max_subset_visits = 50;
    auto report = conjecture_scan(4, 8, tiny);
    CHECK(report.summary.budget_exhausted);
    CHECK_FALSE(report.summary.frontier.empty());
}
