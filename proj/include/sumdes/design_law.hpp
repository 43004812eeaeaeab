#pragma once

#include <optional>
#include <string>
#include <utility>

#include "sumdes/counting.hpp"

namespace sumdes {

/// Outcome of a design check on (G, B_k^x) or its star variant.
struct DesignVerdict {
    bool is_design = false;
    unsigned t = 1;
    u64 v = 0;
    u64 k = 0;
    std::optional<BigCount> lambda;
    /// Identifier of the deciding clause or test, e.g. "p-group:(ii)".
    std::string rule;
    /// For generic-test failures: elements y, y' with differing replication.
    std::optional<std::pair<GroupElement, GroupElement>> witness;
};

/**
 * Generic 1-design test: (G, B_k^x) is a 1-(n,k,r) design iff the
 * replication count b_{k-1}^{x-ky,*} is constant over y. Counts depend on
 * x-ky only through e(x-ky), so one representative per reachable e-class is
 * evaluated. Works for every finite abelian group, 1 <= k <= n.
 */
DesignVerdict check_1design_generic(const GroupSpec& g, u64 k, const GroupElement& x);

/**
 * Closed-form 1-design verdict for abelian p-groups Z_{p^t1} + ... + Z_{p^tm}.
 * For odd p the rule is: p | k and one of
 *   (i)   p^tm | k (k != n), or k = n with the unique full block;
 *   (ii)  k != n and some coordinate x_i is not divisible by p;
 *   (iii) k != n, p | x_i for all i, and some nonzero x_i has
 *         v_p(x_i) < v_p(k), where v_p of a zero coordinate counts as
 *         infinite.
 * For p = 2 the same clause shapes apply, except that in (iii) a zero
 * coordinate is assigned the finite weight 2^ti (and for exponent-2 groups
 * the empty families (2,0) and (n-2,0) are excluded up front).
 */
DesignVerdict check_1design_p_group(const GroupSpec& g, u64 k, const GroupElement& x);

/**
 * Closed-form 1-design verdict for groups of exponent pq (p < q distinct
 * primes). Clause (iii) and the clause (iv)/(v) binomial identities are
 * evaluated in exact arithmetic:
 *   T_s = (-1)^{(k-1)+floor((k-1)/s)} C(n/s - 1, floor((k-1)/s)),
 * with (iii) <=> T_q = T_pq, (iv) <=> T_q = (1 - #G[p]) T_pq, and
 * (v) <=> T_p = (1 - #G[q]) T_pq.
 */
DesignVerdict check_1design_pq(const GroupSpec& g, u64 k, const GroupElement& x);

/// 2-design verdict for elementary abelian p-groups: for nonempty families,
/// a 2-design iff p | k and x = 0 (full-group blocks are trivially designs).
DesignVerdict check_2design_elementary(const GroupSpec& g, u64 k, const GroupElement& x);

/// Dispatch to the sharpest applicable 1-design rule: p-group law, exponent-pq
/// law, else the generic replication test.
DesignVerdict check_1design_auto(const GroupSpec& g, u64 k, const GroupElement& x);

enum class CyclicNecessity { RuledOut, Undecided };

/**
 * Necessary condition for (Z_n, B_k^x) to be a 1-design: with q the largest
 * prime factor of n and t = v_q(n), gcd(k, n) = 1 rules the design out
 * whenever n <= q^{2t} - 1. Anything else stays undecided (the criterion is
 * only necessary).
 */
CyclicNecessity cyclic_necessary_1design(u64 n, u64 k);

/// In Z_n, targets with equal gcd against n have identical 1-design status
/// for every k; used to deduplicate checks across x.
bool gcd_equivalent(u64 n, u64 x1, u64 x2);

struct TransferConclusion {
    std::string structure; // "full" = (G, B_k^x), "star" = (G*, B_k^{x,*})
    unsigned t = 0;
    std::string rule;
};

struct TransferReport {
    std::vector<TransferConclusion> conclusions;
};

/**
 * The t <-> t-1 transfer for exp(G) | k < n:
 *  (a) a t-design on (G, B_k^x) yields a (t-1)-design on (G*, B_k^{x,*});
 *  (b) (t-1)-designs on both structures yield a t-design on (G, B_k^x).
 * Emits exactly the implications licensed by the supplied verdicts, nothing
 * more. Throws inapplicable_error when exp(G) does not divide k or k >= n.
 */
TransferReport transfer_design(const GroupSpec& g, u64 k, const GroupElement& x, unsigned t,
                               const DesignVerdict& full,
                               const std::optional<DesignVerdict>& star);

} // namespace sumdes
