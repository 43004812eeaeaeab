#include "sumdes/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <thread>

namespace sumdes::oracle {

namespace {

inline BigCount big(u64 v) { return BigCount(static_cast<unsigned long>(v)); }

std::vector<GroupElement> point_set(const GroupSpec& g, bool star, const Budget& budget) {
    std::vector<GroupElement> pts;
    pts.reserve(g.order());
    for (const auto& e : ElementRange(g, budget.max_elements))
        if (!star || e != g.identity()) pts.push_back(e);
    return pts;
}

// Depth-first walk over k-subsets of points in index order, maintaining the
// running sum; calls emit(chosen) for every subset summing to target.
class SubsetWalker {
public:
    SubsetWalker(const GroupSpec& g, const std::vector<GroupElement>& points, u64 k,
                 const GroupElement& target, u64 visit_budget)
        : g_(g), points_(points), k_(k), target_(target), budget_(visit_budget) {}

    void run(const std::function<void(const std::vector<u32>&)>& emit) {
        emit_ = &emit;
        sum_ = g_.identity();
        chosen_.clear();
        rec(0);
    }

    u64 visits() const { return visits_; }

private:
    void rec(u32 start) {
        if (++visits_ > budget_)
            throw resource_error("subset enumeration budget exceeded; use dp_replication for "
                                 "counting at this size");
        if (chosen_.size() == k_) {
            if (sum_ == target_) (*emit_)(chosen_);
            return;
        }
        const u64 needed = k_ - chosen_.size();
        for (u32 i = start; i + needed <= points_.size(); ++i) {
            chosen_.push_back(i);
            sum_ = g_.add(sum_, points_[i]);
            rec(i + 1);
            sum_ = g_.sub(sum_, points_[i]);
            chosen_.pop_back();
        }
    }

    const GroupSpec& g_;
    const std::vector<GroupElement>& points_;
    u64 k_;
    GroupElement target_;
    u64 budget_;
    u64 visits_ = 0;
    GroupElement sum_;
    std::vector<u32> chosen_;
    const std::function<void(const std::vector<u32>&)>* emit_ = nullptr;
};

void validate_instance_args(const GroupSpec& g, u64 k, const GroupElement& x, bool star) {
    g.require_element(x);
    const u64 npts = star ? g.order() - 1 : g.order();
    if (k > npts) throw domain_error("k exceeds the point count");
}

// Saturating Pascal table used for colex subset ranking.
std::vector<std::vector<u64>> choose_table(u64 n, unsigned t) {
    std::vector<std::vector<u64>> c(n + 1, std::vector<u64>(t + 1, 0));
    for (u64 i = 0; i <= n; ++i) {
        c[i][0] = 1;
        for (unsigned j = 1; j <= t && j <= i; ++j) {
            u64 a = c[i - 1][j - 1];
            u64 b = c[i - 1][j];
            c[i][j] = (a > UINT64_MAX - b) ? UINT64_MAX : a + b;
        }
    }
    return c;
}

u64 colex_rank(const std::vector<u32>& subset, const std::vector<std::vector<u64>>& c) {
    u64 r = 0;
    for (std::size_t i = 0; i < subset.size(); ++i) r += c[subset[i]][i + 1];
    return r;
}

bool next_combination(std::vector<u32>& comb, u32 n) {
    const std::size_t t = comb.size();
    std::size_t i = t;
    while (i-- > 0) {
        if (comb[i] + (t - i) < n) {
            ++comb[i];
            for (std::size_t j = i + 1; j < t; ++j) comb[j] = comb[j - 1] + 1;
            return true;
        }
    }
    return false;
}

} // namespace

IncidenceInstance enumerate_blocks(const GroupSpec& g, u64 k, const GroupElement& x, bool star,
                                   const Budget& budget) {
    validate_instance_args(g, k, x, star);
    IncidenceInstance inst;
    inst.group = g;
    inst.star = star;
    inst.k = k;
    inst.target = x;
    inst.points = point_set(g, star, budget);
    if (binomial(inst.points.size(), k) > big(budget.max_subset_visits))
        throw resource_error("C(points, k) exceeds the subset visit budget; use dp_replication");
    SubsetWalker walker(g, inst.points, k, x, budget.max_subset_visits);
    walker.run([&](const std::vector<u32>& block) { inst.blocks.push_back(block); });
    return inst;
}

BigCount count_blocks(const GroupSpec& g, u64 k, const GroupElement& x, bool star,
                      const Budget& budget) {
    validate_instance_args(g, k, x, star);
    auto points = point_set(g, star, budget);
    if (binomial(points.size(), k) > big(budget.max_subset_visits))
        throw resource_error("C(points, k) exceeds the subset visit budget; use dp_replication");
    BigCount count = 0;
    SubsetWalker walker(g, points, k, x, budget.max_subset_visits);
    walker.run([&](const std::vector<u32>&) { count += 1; });
    return count;
}

DesignCheckReport check_t_design(const IncidenceInstance& inst, unsigned t, const Budget& budget) {
    DesignCheckReport report;
    report.t = t;
    if (t == 0) throw domain_error("check_t_design: t must be >= 1");
    if (inst.blocks.empty()) {
        report.note = "empty-family";
        return report;
    }
    if (t > inst.k) {
        report.note = "t>k";
        return report;
    }
    const u64 v = inst.points.size();
    auto table = choose_table(v, t);
    const u64 total = table[v][t];
    BigCount increments = big(inst.blocks.size()) * binomial(inst.k, t) + big(total);
    if (total == UINT64_MAX || increments > big(budget.max_subset_visits))
        throw resource_error("check_t_design: coverage table exceeds the visit budget");

    std::vector<u64> coverage(total, 0);
    std::vector<u32> sub(t);
    for (const auto& block : inst.blocks) {
        // every t-subset of the block gets one increment
        std::vector<u32> idx(t);
        for (unsigned i = 0; i < t; ++i) idx[i] = i;
        while (true) {
            for (unsigned i = 0; i < t; ++i) sub[i] = block[idx[i]];
            ++coverage[colex_rank(sub, table)];
            if (!next_combination(idx, static_cast<u32>(block.size()))) break;
        }
    }

    std::vector<u32> first(t);
    for (unsigned i = 0; i < t; ++i) first[i] = i;
    const u64 reference = coverage[colex_rank(first, table)];
    std::vector<u32> comb = first;
    while (true) {
        if (coverage[colex_rank(comb, table)] != reference) {
            report.counterexample = std::make_pair(first, comb);
            return report;
        }
        if (!next_combination(comb, static_cast<u32>(v))) break;
    }
    report.is_design = true;
    report.lambda = big(reference);
    return report;
}

BigCount dp_replication(const GroupSpec& g, u64 k, const GroupElement& x, const GroupElement& y,
                        bool star, const Budget& budget) {
    g.require_element(x);
    g.require_element(y);
    if (star && y == g.identity())
        throw domain_error("dp_replication: y must lie in the point set G*");
    const u64 n = g.order();
    const u64 npts = star ? n - 1 : n;
    if (k == 0 || k > npts) throw domain_error("dp_replication: k out of range");
    if (k > 1 && (k - 1) * n > budget.max_dp_cells)
        throw resource_error("dp_replication: DP table exceeds the cell budget");
    if (npts * n / 2 > budget.max_subset_visits)
        throw resource_error("dp_replication: DP work exceeds the visit budget");

    // Count (k-1)-subsets of points \ {y} summing to x - y.
    const GroupElement target = g.sub(x, y);
    if (k == 1) return target == g.identity() ? 1 : 0;

    const u64 kk = k - 1;
    std::vector<std::vector<BigCount>> dp(kk + 1, std::vector<BigCount>(n));
    dp[0][g.element_rank(g.identity())] = 1;

    std::vector<u64> shifted(n);
    u64 processed = 0;
    for (const auto& z : ElementRange(g, budget.max_elements)) {
        if (z == y) continue;
        if (star && z == g.identity()) continue;
        // destination rank of s + z for every source rank s
        u64 s = 0;
        for (const auto& el : ElementRange(g, budget.max_elements)) {
            shifted[s] = g.element_rank(g.add(el, z));
            ++s;
        }
        ++processed;
        const u64 jmax = std::min<u64>(processed, kk);
        for (u64 j = jmax; j >= 1; --j) {
            auto& prev = dp[j - 1];
            auto& cur = dp[j];
            for (u64 r = 0; r < n; ++r) {
                if (prev[r] != 0) cur[shifted[r]] += prev[r];
            }
        }
    }
    return dp[kk][g.element_rank(target)];
}

DesignCheckReport check_1design_dp(const GroupSpec& g, u64 k, const GroupElement& x, bool star,
                                   const Budget& budget) {
    DesignCheckReport report;
    report.t = 1;
    auto points = point_set(g, star, budget);
    if (k == 0 || k > points.size()) throw domain_error("check_1design_dp: k out of range");

    std::optional<BigCount> common;
    u32 first_idx = 0;
    for (u32 i = 0; i < points.size(); ++i) {
        BigCount r = dp_replication(g, k, x, points[i], star, budget);
        if (!common) {
            common = r;
            first_idx = i;
        } else if (r != *common) {
            report.counterexample =
                std::make_pair(std::vector<u32>{first_idx}, std::vector<u32>{i});
            return report;
        }
    }
    if (*common == 0) {
        report.note = "empty-family";
        return report;
    }
    report.is_design = true;
    report.lambda = *common;
    return report;
}

std::vector<std::pair<u64, GroupElement>> e_class_representatives(const GroupSpec& g) {
    std::vector<std::pair<u64, GroupElement>> reps;
    const std::size_t want = g.exponent_divisors().size();
    std::vector<u64> seen;
    for (u64 r = 0; r < g.exponent() && reps.size() < want; ++r) {
        GroupElement x = g.identity();
        x.coords.back() = r;
        const u64 e = r == 0 ? g.exponent() : std::gcd(r, g.exponent());
        if (std::find(seen.begin(), seen.end(), e) == seen.end()) {
            seen.push_back(e);
            reps.emplace_back(e, x);
        }
    }
    return reps;
}

namespace {

bool is_non_elementary_p_group(const GroupSpec& g, std::string& reason) {
    auto fact = factorize(g.order());
    if (g.is_trivial() || fact.size() != 1) {
        reason = "not-a-p-group";
        return false;
    }
    const u64 p = fact[0].first;
    if (g.exponent() == p) {
        reason = "elementary-abelian";
        return false;
    }
    return true;
}

struct ScanItem {
    GroupSpec group = GroupSpec::trivial();
    u64 k = 0;
    u64 e_value = 0;
    GroupElement x;
    bool degenerate = false; // k < t, recorded without enumeration
};

} // namespace

ScanReport conjecture_scan(u64 order_lo, u64 order_hi, const Budget& budget, unsigned jobs) {
    if (order_lo == 0 || order_hi < order_lo)
        throw domain_error("conjecture_scan: bad order range");
    ScanReport report;

    std::vector<ScanItem> items;
    BigCount funded = 0;
    const BigCount limit = big(budget.max_subset_visits);
    bool exhausted = false;
    for (u64 order = order_lo; order <= order_hi && !exhausted; ++order) {
        for (const auto& g : abelian_group_types(order)) {
            if (exhausted) break;
            std::string reason;
            if (!is_non_elementary_p_group(g, reason)) {
                report.skipped.emplace_back(g, reason);
                continue;
            }
            ++report.summary.groups_scanned;
            const u64 n = g.order();
            for (u64 k = 1; k + 1 <= n && !exhausted; ++k) {
                for (const auto& [e, x] : e_class_representatives(g)) {
                    ScanItem item{g, k, e, x, k < 2};
                    if (!item.degenerate) {
                        // exact upfront cost: enumeration nodes + coverage work
                        BigCount cost = binomial(n, k) +
                                        count_subsets(g, k, x) * binomial(k, 2) + binomial(n, 2);
                        if (funded + cost > limit) {
                            exhausted = true;
                            report.summary.budget_exhausted = true;
                            report.summary.frontier = "group=" + g.to_string() +
                                                      ";k=" + std::to_string(k) +
                                                      ";e=" + std::to_string(e);
                            break;
                        }
                        funded += cost;
                    }
                    items.push_back(std::move(item));
                }
            }
        }
    }
    report.summary.groups_skipped = report.skipped.size();

    std::vector<ScanRecord> records(items.size());
    auto run_item = [&](std::size_t idx) {
        const ScanItem& item = items[idx];
        ScanRecord rec;
        rec.group = item.group;
        rec.k = item.k;
        rec.e_value = item.e_value;
        rec.x = item.x;
        if (item.degenerate) {
            rec.note = "t>k";
            rec.two_design = false;
        } else {
            auto inst = enumerate_blocks(item.group, item.k, item.x, false, budget);
            auto res = check_t_design(inst, 2, budget);
            rec.two_design = res.is_design;
            rec.lambda = res.lambda;
            rec.counterexample = res.counterexample;
            rec.note = res.note;
        }
        records[idx] = std::move(rec);
    };

    if (jobs <= 1) {
        for (std::size_t i = 0; i < items.size(); ++i) run_item(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> workers;
        for (unsigned w = 0; w < jobs; ++w) {
            workers.emplace_back([&] {
                while (true) {
                    std::size_t idx = next.fetch_add(1);
                    if (idx >= items.size()) return;
                    run_item(idx);
                }
            });
        }
        for (auto& th : workers) th.join();
    }

    report.records = std::move(records);
    report.summary.items_checked = report.records.size();
    for (const auto& r : report.records)
        if (r.two_design) ++report.summary.designs_found;
    return report;
}

} // namespace sumdes::oracle
