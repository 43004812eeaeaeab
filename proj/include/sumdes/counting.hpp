#pragma once

#include "sumdes/bigint.hpp"
#include "sumdes/group.hpp"

namespace sumdes {

/// A subset-sum counting query: k-subsets of G (or of G* when star is set)
/// summing to x.
struct CountQuery {
    GroupSpec group;
    u64 k = 0;
    GroupElement target;
    bool star = false;
};

/**
 * Number of k-subsets of G summing to x, by the Möbius-inverted closed form
 *
 *   b_k^x = (1/n) sum_{s | gcd(exp(G),k)} (-1)^{k+k/s} C(n/s, k/s)
 *             sum_{d | gcd(e(x),s)} mu(s/d) #G[d].
 *
 * The division by n is exact. Range 0 <= k <= n; k = 0 counts the empty
 * subset, so it is 1 exactly when x is the identity.
 */
BigCount count_subsets(const GroupSpec& g, u64 k, const GroupElement& x);

/// Star variant: k-subsets of G* = G \ {0} summing to x, 0 <= k <= n-1.
BigCount count_subsets_star(const GroupSpec& g, u64 k, const GroupElement& x);

/// Dispatch on CountQuery::star.
BigCount count_subsets(const CountQuery& q);

/**
 * Exact emptiness classification of the family B_k^x for 1 <= k <= n:
 * empty iff (k = 2, exp(G) = 2, x = 0), (k = n-2 >= 2, exp(G) = 2, x = 0),
 * or (k = n and x != sum of the 2-torsion subgroup).
 */
bool is_empty_family(const GroupSpec& g, u64 k, const GroupElement& x);

/// Replication count r_k^x(y): number of blocks of B_k^x containing y,
/// which equals b_{k-1}^{x-ky,*}. Requires k >= 2.
BigCount replication(const GroupSpec& g, u64 k, const GroupElement& x, const GroupElement& y);

/// lambda_i of the i-design induced by a t-(v,k,lambda_t) design:
/// lambda_i = lambda_t * C(v-i, t-i) / C(k-i, t-i), division enforced exact.
BigCount lambda_convert(unsigned t, u64 v, u64 k, const BigCount& lambda_t, unsigned i);

/// Number of blocks of a t-(v,k,lambda_t) design: b_t = C(v,t) lambda_t / C(k,t).
BigCount block_count(unsigned t, u64 v, u64 k, const BigCount& lambda_t);

/// Inverse of block_count: lambda_t = b_t * C(k,t) / C(v,t).
BigCount lambda_from_blocks(unsigned t, u64 v, u64 k, const BigCount& blocks);

} // namespace sumdes
