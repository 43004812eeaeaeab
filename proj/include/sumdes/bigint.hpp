#pragma once

#include <gmpxx.h>

#include <string>

#include "sumdes/errors.hpp"
#include "sumdes/numtheory.hpp"

namespace sumdes {

/// Exact arbitrary-precision count. All counting results are BigCount; no
/// floating point appears anywhere in the counting paths.
using BigCount = mpz_class;

/// Binomial coefficient C(n, k); 0 when k > n.
inline BigCount binomial(u64 n, u64 k) {
    BigCount r;
    if (k > n) return r; // 0
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

/// Exact division; throws internal_error when the quotient is not exact
/// (callers use it where divisibility is a theorem).
inline BigCount exact_div(const BigCount& num, const BigCount& den, const char* what) {
    if (den == 0) throw internal_error(std::string("exact_div: zero divisor in ") + what);
    BigCount q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (r != 0) throw internal_error(std::string("exact_div: inexact division in ") + what);
    return q;
}

/// Exact division where inexactness means the caller supplied parameters that
/// cannot belong to a design; throws inconsistent_parameters_error.
inline BigCount checked_design_div(const BigCount& num, const BigCount& den, const char* what) {
    if (den == 0) throw inconsistent_parameters_error(std::string(what) + ": zero divisor");
    BigCount q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (r != 0)
        throw inconsistent_parameters_error(std::string(what) + ": parameters admit no exact solution");
    return q;
}

} // namespace sumdes
