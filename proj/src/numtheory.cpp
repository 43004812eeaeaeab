#include "sumdes/numtheory.hpp"

#include <algorithm>
#include <numeric>

namespace sumdes {

u64 mul_mod(u64 a, u64 b, u64 m) {
    return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % m);
}

u64 pow_mod(u64 a, u64 e, u64 m) {
    if (m == 1) return 0;
    u64 r = 1;
    a %= m;
    while (e) {
        if (e & 1) r = mul_mod(r, a, m);
        a = mul_mod(a, a, m);
        e >>= 1;
    }
    return r;
}

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // This base set is deterministic for all 64-bit integers.
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 0; i < s - 1; ++i) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

namespace {

u64 pollard_rho(u64 n) {
    if ((n & 1) == 0) return 2;
    u64 x = 2, y = 2, c = 1;
    while (true) {
        x = 2;
        y = 2;
        u64 d = 1;
        while (d == 1) {
            x = (mul_mod(x, x, n) + c) % n;
            y = (mul_mod(y, y, n) + c) % n;
            y = (mul_mod(y, y, n) + c) % n;
            d = std::gcd(x > y ? x - y : y - x, n);
        }
        if (d != n) return d;
        ++c;
    }
}

void factor_rec(u64 n, std::vector<u64>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        out.push_back(n);
        return;
    }
    u64 d = pollard_rho(n);
    factor_rec(d, out);
    factor_rec(n / d, out);
}

} // namespace

std::vector<std::pair<u64, unsigned>> factorize(u64 n) {
    if (n == 0) throw domain_error("factorize: argument must be >= 1");
    std::vector<u64> primes;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull}) {
        while (n % p == 0) {
            primes.push_back(p);
            n /= p;
        }
    }
    if (n > 1) factor_rec(n, primes);
    std::sort(primes.begin(), primes.end());
    std::vector<std::pair<u64, unsigned>> out;
    for (u64 p : primes) {
        if (!out.empty() && out.back().first == p)
            ++out.back().second;
        else
            out.emplace_back(p, 1u);
    }
    return out;
}

std::vector<u64> divisors_from_factorization(const std::vector<std::pair<u64, unsigned>>& f) {
    std::vector<u64> out{1};
    for (const auto& [p, e] : f) {
        const std::size_t base = out.size();
        u64 pk = 1;
        for (unsigned i = 1; i <= e; ++i) {
            pk *= p;
            for (std::size_t j = 0; j < base; ++j) out.push_back(out[j] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<u64> divisors(u64 n) { return divisors_from_factorization(factorize(n)); }

int mobius(u64 n) {
    if (n == 0) throw domain_error("mobius: argument must be >= 1");
    if (n == 1) return 1;
    auto f = factorize(n);
    for (const auto& [p, e] : f)
        if (e > 1) return 0;
    return (f.size() % 2 == 0) ? 1 : -1;
}

Valuation p_valuation(u64 n, u64 p) {
    if (!is_prime(p)) throw domain_error("p_valuation: p must be prime");
    if (n == 0) return Valuation::infinity();
    u64 v = 0;
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return Valuation::finite(v);
}

} // namespace sumdes
