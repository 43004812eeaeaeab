#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sumdes/counting.hpp"

namespace sumdes::oracle {

/// Explicit resource limits. Exceeding one raises resource_error; results are
/// never silently truncated.
struct Budget {
    u64 max_subset_visits = 100'000'000; // enumeration nodes + coverage increments
    u64 max_dp_cells = 10'000'000;       // DP table entries
    u64 max_elements = 10'000'000;       // group enumeration guard
};

/// Explicit incidence structure: a point list (G or G*) and blocks stored as
/// sorted point-index vectors, in lexicographic order.
struct IncidenceInstance {
    GroupSpec group = GroupSpec::trivial();
    bool star = false;
    u64 k = 0;
    GroupElement target;
    std::vector<GroupElement> points;
    std::vector<std::vector<u32>> blocks;
};

struct DesignCheckReport {
    unsigned t = 1;
    bool is_design = false;
    std::optional<BigCount> lambda;
    /// Two t-subsets (as sorted point-index vectors) with differing coverage.
    std::optional<std::pair<std::vector<u32>, std::vector<u32>>> counterexample;
    /// "empty-family" for block-less instances, "t>k" for degenerate t.
    std::string note;
};

/// Exhaustively lists B_k^x (or B_k^{x,*}), blocks in lexicographic order.
IncidenceInstance enumerate_blocks(const GroupSpec& g, u64 k, const GroupElement& x, bool star,
                                   const Budget& budget = {});

/// Number of blocks by the same exhaustive walk, without storing them.
BigCount count_blocks(const GroupSpec& g, u64 k, const GroupElement& x, bool star,
                      const Budget& budget = {});

/// Counts coverage of every t-subset of the point set; constant coverage
/// yields the design's lambda, otherwise the first lexicographic pair of
/// differing t-subsets is reported.
DesignCheckReport check_t_design(const IncidenceInstance& inst, unsigned t,
                                 const Budget& budget = {});

/**
 * Independent replication oracle: the number of k-subsets of the point set
 * (G, or G* when star) that contain y and sum to x, by a dynamic program
 * over elements in enumeration order with state (subset size, partial sum).
 */
BigCount dp_replication(const GroupSpec& g, u64 k, const GroupElement& x, const GroupElement& y,
                        bool star, const Budget& budget = {});

/// 1-design check by DP replication constancy over every point.
DesignCheckReport check_1design_dp(const GroupSpec& g, u64 k, const GroupElement& x, bool star,
                                   const Budget& budget = {});

/// One representative per e-class, in discovery order along the elements
/// (0,...,0,r): the representative is the smallest element in enumeration
/// order with its e-value.
std::vector<std::pair<u64, GroupElement>> e_class_representatives(const GroupSpec& g);

struct ScanRecord {
    GroupSpec group = GroupSpec::trivial();
    u64 k = 0;
    u64 e_value = 0;
    GroupElement x;
    bool two_design = false;
    std::optional<BigCount> lambda;
    std::optional<std::pair<std::vector<u32>, std::vector<u32>>> counterexample;
    std::string note;
};

struct ScanSummary {
    u64 groups_scanned = 0;
    u64 groups_skipped = 0;
    u64 items_checked = 0;
    u64 designs_found = 0;
    bool budget_exhausted = false;
    std::string frontier; // first unfunded work item when the budget ran out
};

struct ScanReport {
    std::vector<std::pair<GroupSpec, std::string>> skipped; // group, reason
    std::vector<ScanRecord> records;
    ScanSummary summary;
};

/**
 * Sweeps every non-elementary abelian p-group with order in [order_lo,
 * order_hi], every 1 <= k <= n-1 and one x per e-class, and brute-force
 * checks t = 2. Work items are funded against the visit budget up front from
 * exact closed-form cost predictions, so the report (including any budget
 * frontier) is deterministic and independent of the execution parallelism.
 */
ScanReport conjecture_scan(u64 order_lo, u64 order_hi, const Budget& budget = {},
                           unsigned jobs = 1);

} // namespace sumdes::oracle
