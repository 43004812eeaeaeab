#include "sumdes/counting.hpp"

#include <numeric>

namespace sumdes {

namespace {

inline BigCount big(u64 v) { return BigCount(static_cast<unsigned long>(v)); }

// sum_{d | gcd(ex, s)} mu(s/d) #G[d]
BigCount torsion_mobius_sum(const GroupSpec& g, u64 ex, u64 s) {
    BigCount acc = 0;
    for (u64 d : divisors(std::gcd(ex, s))) {
        int mu = mobius(s / d);
        if (mu == 0) continue;
        BigCount term = big(g.torsion_count(d));
        acc += mu > 0 ? term : -term;
    }
    return acc;
}

} // namespace

BigCount count_subsets(const GroupSpec& g, u64 k, const GroupElement& x) {
    g.require_element(x);
    const u64 n = g.order();
    if (k > n) throw domain_error("count_subsets: k out of range");
    if (k == 0) return x == g.identity() ? 1 : 0;

    const u64 ex = g.e_of(x);
    BigCount acc = 0;
    for (u64 s : divisors(std::gcd(g.exponent(), k))) {
        BigCount term = binomial(n / s, k / s) * torsion_mobius_sum(g, ex, s);
        acc += ((k + k / s) % 2 == 0) ? term : -term;
    }
    BigCount count = exact_div(acc, big(n), "count_subsets");
    if (count < 0) throw internal_error("count_subsets: negative count");
    return count;
}

BigCount count_subsets_star(const GroupSpec& g, u64 k, const GroupElement& x) {
    g.require_element(x);
    const u64 n = g.order();
    if (k + 1 > n) throw domain_error("count_subsets_star: k out of range");
    if (k == 0) return x == g.identity() ? 1 : 0;

    const u64 ex = g.e_of(x);
    BigCount acc = 0;
    for (u64 s : g.exponent_divisors()) {
        BigCount term = binomial(n / s - 1, k / s) * torsion_mobius_sum(g, ex, s);
        acc += ((k + k / s) % 2 == 0) ? term : -term;
    }
    BigCount count = exact_div(acc, big(n), "count_subsets_star");
    if (count < 0) throw internal_error("count_subsets_star: negative count");
    return count;
}

BigCount count_subsets(const CountQuery& q) {
    return q.star ? count_subsets_star(q.group, q.k, q.target)
                  : count_subsets(q.group, q.k, q.target);
}

bool is_empty_family(const GroupSpec& g, u64 k, const GroupElement& x) {
    g.require_element(x);
    const u64 n = g.order();
    if (k == 0 || k > n) throw domain_error("is_empty_family: k out of range");
    if (k == n) return x != g.torsion2_sum();
    const bool zero = x == g.identity();
    return g.exponent() == 2 && zero && (k == 2 || (n >= 4 && k == n - 2 && k >= 2));
}

BigCount replication(const GroupSpec& g, u64 k, const GroupElement& x, const GroupElement& y) {
    if (k < 2) throw domain_error("replication: k must be >= 2");
    if (k > g.order()) throw domain_error("replication: k out of range");
    GroupElement shifted = g.sub(x, g.scalar_mul(static_cast<i64>(k), y));
    return count_subsets_star(g, k - 1, shifted);
}

BigCount lambda_convert(unsigned t, u64 v, u64 k, const BigCount& lambda_t, unsigned i) {
    if (!(1 <= i && i <= t && t <= k && k <= v))
        throw domain_error("lambda_convert: need 1 <= i <= t <= k <= v");
    if (i == t) return lambda_t;
    return checked_design_div(lambda_t * binomial(v - i, t - i), binomial(k - i, t - i),
                              "lambda_convert");
}

BigCount block_count(unsigned t, u64 v, u64 k, const BigCount& lambda_t) {
    if (!(1 <= t && t <= k && k <= v)) throw domain_error("block_count: need 1 <= t <= k <= v");
    return checked_design_div(binomial(v, t) * lambda_t, binomial(k, t), "block_count");
}

BigCount lambda_from_blocks(unsigned t, u64 v, u64 k, const BigCount& blocks) {
    if (!(1 <= t && t <= k && k <= v))
        throw domain_error("lambda_from_blocks: need 1 <= t <= k <= v");
    return checked_design_div(blocks * binomial(k, t), binomial(v, t), "lambda_from_blocks");
}

} // namespace sumdes
