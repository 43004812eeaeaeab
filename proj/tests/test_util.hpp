#pragma once

#include <numeric>
#include <vector>

#include "sumdes/ec.hpp"
#include "sumdes/group.hpp"

namespace sumdes::testutil {

/// All multisets of factors >= 2 whose product is n (non-decreasing order),
/// plus {n} itself; {1} for n = 1. Feeding these through canonicalize yields
/// every isomorphism type of abelian group of order n.
inline void factorizations_rec(u64 n, u64 min_factor, std::vector<u64>& cur,
                               std::vector<std::vector<u64>>& out) {
    if (n == 1) {
        out.push_back(cur);
        return;
    }
    for (u64 f = min_factor; f <= n; ++f) {
        if (n % f != 0) continue;
        cur.push_back(f);
        factorizations_rec(n / f, f, cur, out);
        cur.pop_back();
    }
}

inline std::vector<std::vector<u64>> all_factorizations(u64 n) {
    std::vector<std::vector<u64>> out;
    std::vector<u64> cur;
    if (n == 1) {
        out.push_back({1});
        return out;
    }
    factorizations_rec(n, 2, cur, out);
    return out;
}

/// Every nonsingular short-Weierstrass curve over F_p.
inline std::vector<ec::CurveSpec> all_curves(u64 p) {
    std::vector<ec::CurveSpec> out;
    for (u64 a = 0; a < p; ++a) {
        for (u64 b = 0; b < p; ++b) {
            u64 a3 = mul_mod(mul_mod(a, a, p), a, p);
            u64 disc = (4 * a3 + 27 * mul_mod(b, b, p)) % p;
            if (disc != 0) out.emplace_back(p, a, b);
        }
    }
    return out;
}

/// True iff some k-subset of the affine points sums to O, decided purely by
/// the curve group law (no abstract-group routing).
inline bool has_zero_sum_subset(const ec::CurveSpec& e, const std::vector<ec::CurvePoint>& pts,
                                u64 k) {
    std::vector<u32> idx;
    bool found = false;
    std::vector<ec::CurvePoint> partial{ec::CurvePoint::at_infinity()};
    auto rec = [&](auto&& self, u32 start) -> void {
        if (found) return;
        if (idx.size() == k) {
            if (partial.back().infinity) found = true;
            return;
        }
        for (u32 i = start; i + (k - idx.size()) <= pts.size() && !found; ++i) {
            idx.push_back(i);
            partial.push_back(ec::point_add(e, partial.back(), pts[i]));
            self(self, i + 1);
            partial.pop_back();
            idx.pop_back();
        }
    };
    rec(rec, 0);
    return found;
}

/// Exact minimum weight by walking all q^k - 1 nonzero codewords, updating
/// the codeword incrementally along an odometer over message vectors.
inline u64 min_weight_exhaustive(const std::vector<std::vector<u64>>& gen, u64 p) {
    const u64 k = gen.size();
    const u64 n = gen[0].size();
    std::vector<u64> msg(k, 0), word(n, 0);
    u64 best = n + 1;
    while (true) {
        std::size_t i = 0;
        while (i < k) {
            // msg[i] += 1, word += row i
            ++msg[i];
            for (u64 c = 0; c < n; ++c) {
                word[c] += gen[i][c];
                if (word[c] >= p) word[c] -= p;
            }
            if (msg[i] < p) break;
            msg[i] = 0; // row was added p times, i.e. wrapped to zero contribution
            ++i;
        }
        if (i == k) break;
        u64 w = 0;
        for (u64 c = 0; c < n; ++c)
            if (word[c] != 0) ++w;
        best = std::min(best, w);
    }
    return best;
}

} // namespace sumdes::testutil
