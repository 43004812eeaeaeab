#pragma once

#include <cstdint>
#include <vector>

#include "sumdes/errors.hpp"

namespace sumdes {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u32 = std::uint32_t;

u64 mul_mod(u64 a, u64 b, u64 m);
u64 pow_mod(u64 a, u64 e, u64 m);

/// Deterministic Miller-Rabin over the full 64-bit range.
bool is_prime(u64 n);

/// Prime factorization, (prime, exponent) pairs with primes ascending.
/// Uses trial division for small factors and Pollard rho for the rest.
std::vector<std::pair<u64, unsigned>> factorize(u64 n);

/// All divisors of n, ascending.
std::vector<u64> divisors(u64 n);
std::vector<u64> divisors_from_factorization(const std::vector<std::pair<u64, unsigned>>& f);

/// Standard Möbius function; n <= 0 is a domain error.
int mobius(u64 n);

/**
 * Value in N ∪ {∞}, ordered with ∞ greatest. Used for p-adic valuations,
 * where the valuation of 0 is infinite and must stay distinguishable from
 * every finite value.
 */
class Valuation {
public:
    static constexpr Valuation infinity() { return Valuation(true, 0); }
    static constexpr Valuation finite(u64 v) { return Valuation(false, v); }

    constexpr bool is_infinite() const { return infinite_; }
    constexpr u64 finite_value() const {
        if (infinite_) throw internal_error("Valuation: finite_value() on infinity");
        return value_;
    }

    friend constexpr bool operator==(Valuation a, Valuation b) {
        return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
    }
    friend constexpr bool operator!=(Valuation a, Valuation b) { return !(a == b); }
    friend constexpr bool operator<(Valuation a, Valuation b) {
        if (a.infinite_) return false;
        if (b.infinite_) return true;
        return a.value_ < b.value_;
    }
    friend constexpr bool operator<=(Valuation a, Valuation b) { return a < b || a == b; }
    friend constexpr bool operator>(Valuation a, Valuation b) { return b < a; }
    friend constexpr bool operator>=(Valuation a, Valuation b) { return b <= a; }

private:
    constexpr Valuation(bool inf, u64 v) : infinite_(inf), value_(v) {}
    bool infinite_;
    u64 value_;
};

/// p-adic valuation of N; p must be prime. By convention the valuation of 0
/// is infinite.
Valuation p_valuation(u64 n, u64 p);

} // namespace sumdes
