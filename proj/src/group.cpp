#include "sumdes/group.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>
#include <sstream>

namespace sumdes {

std::string GroupElement::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(coords[i]);
    }
    return out.empty() ? "0" : out;
}

GroupSpec::GroupSpec(const std::vector<u64>& cyclic_orders) {
    // Regroup prime-power components: for each prime, sort exponents
    // descending; the j-th invariant factor (from the top) multiplies the
    // j-th largest power of every prime.
    std::map<u64, std::vector<unsigned>> parts;
    for (u64 n : cyclic_orders) {
        if (n == 0) throw invalid_spec_error("group spec: every cyclic order must be >= 1");
        for (const auto& [p, e] : factorize(n)) parts[p].push_back(e);
    }
    std::size_t chain_len = 0;
    for (auto& [p, es] : parts) {
        std::sort(es.begin(), es.end(), std::greater<>());
        chain_len = std::max(chain_len, es.size());
    }
    std::vector<u64> chain(chain_len, 1);
    for (const auto& [p, es] : parts) {
        for (std::size_t j = 0; j < es.size(); ++j) {
            u64 pk = 1;
            for (unsigned i = 0; i < es[j]; ++i) {
                if (pk > UINT64_MAX / p) throw invalid_spec_error("group spec: order overflows 64 bits");
                pk *= p;
            }
            if (chain[j] > UINT64_MAX / pk) throw invalid_spec_error("group spec: order overflows 64 bits");
            chain[j] *= pk;
        }
    }
    std::reverse(chain.begin(), chain.end()); // ascending divisibility chain
    if (chain.empty()) chain.push_back(1);    // trivial group is the single factor {1}
    factors_ = std::move(chain);

    order_ = 1;
    for (u64 f : factors_) {
        if (order_ > UINT64_MAX / 2 / f) throw invalid_spec_error("group spec: order overflows 64 bits");
        order_ *= f;
    }
    exp_divisors_ = divisors(exponent());
}

bool GroupSpec::contains(const GroupElement& x) const {
    if (x.coords.size() != factors_.size()) return false;
    for (std::size_t i = 0; i < factors_.size(); ++i)
        if (x.coords[i] >= factors_[i]) return false;
    return true;
}

void GroupSpec::require_element(const GroupElement& x) const {
    if (!contains(x))
        throw domain_error("element does not belong to group " + to_string());
}

GroupElement GroupSpec::add(const GroupElement& a, const GroupElement& b) const {
    require_element(a);
    require_element(b);
    GroupElement out;
    out.coords.resize(factors_.size());
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        u64 s = a.coords[i] + b.coords[i];
        out.coords[i] = s >= factors_[i] ? s - factors_[i] : s;
    }
    return out;
}

GroupElement GroupSpec::neg(const GroupElement& a) const {
    require_element(a);
    GroupElement out;
    out.coords.resize(factors_.size());
    for (std::size_t i = 0; i < factors_.size(); ++i)
        out.coords[i] = a.coords[i] == 0 ? 0 : factors_[i] - a.coords[i];
    return out;
}

GroupElement GroupSpec::sub(const GroupElement& a, const GroupElement& b) const { return add(a, neg(b)); }

GroupElement GroupSpec::scalar_mul(i64 k, const GroupElement& a) const {
    require_element(a);
    GroupElement out;
    out.coords.resize(factors_.size());
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        const u64 n = factors_[i];
        u64 km = k >= 0 ? static_cast<u64>(k) % n : n - static_cast<u64>(-(k + 1)) % n - 1;
        out.coords[i] = mul_mod(km % n, a.coords[i], n);
    }
    return out;
}

u64 GroupSpec::element_order(const GroupElement& x) const {
    require_element(x);
    u64 ord = 1;
    for (std::size_t i = 0; i < factors_.size(); ++i)
        ord = std::lcm(ord, factors_[i] / std::gcd(x.coords[i], factors_[i]));
    return ord;
}

u64 GroupSpec::torsion_count(u64 d) const {
    if (d == 0) throw domain_error("torsion_count: d must be >= 1");
    u64 c = 1;
    for (u64 f : factors_) c *= std::gcd(d, f);
    return c;
}

u64 GroupSpec::e_of(const GroupElement& x) const {
    require_element(x);
    // x lies in dG iff gcd(d, n_i) divides x_i for every coordinate.
    u64 best = 1;
    for (u64 d : exp_divisors_) {
        bool in = true;
        for (std::size_t i = 0; i < factors_.size() && in; ++i)
            in = x.coords[i] % std::gcd(d, factors_[i]) == 0;
        if (in) best = d;
    }
    return best;
}

GroupElement GroupSpec::torsion2_sum() const {
    // Coordinate i of the sum over G[2] picks up n_i/2 multiplied by the
    // number of 2-torsion choices in the other coordinates; with two or more
    // even factors every coordinate cancels mod n_i.
    GroupElement out = identity();
    std::size_t even_count = 0;
    std::size_t even_idx = 0;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (factors_[i] % 2 == 0) {
            ++even_count;
            even_idx = i;
        }
    }
    if (even_count == 1) out.coords[even_idx] = factors_[even_idx] / 2;
    return out;
}

u64 GroupSpec::element_rank(const GroupElement& x) const {
    require_element(x);
    u64 r = 0;
    for (std::size_t i = 0; i < factors_.size(); ++i) r = r * factors_[i] + x.coords[i];
    return r;
}

GroupElement GroupSpec::element_at(u64 rank) const {
    if (rank >= order_) throw domain_error("element_at: rank out of range");
    GroupElement out;
    out.coords.resize(factors_.size());
    for (std::size_t i = factors_.size(); i-- > 0;) {
        out.coords[i] = rank % factors_[i];
        rank /= factors_[i];
    }
    return out;
}

GroupElement GroupSpec::e_class_representative(u64 d) const {
    if (exponent() % d != 0) throw domain_error("e_class_representative: d must divide exp(G)");
    // Elements (0,...,0,r) are first in enumeration order and realize
    // e = gcd(r, exp(G)); the smallest r with that value is r = d (r = 0 for
    // d = exp).
    GroupElement out = identity();
    out.coords.back() = d % exponent();
    return out;
}

std::string GroupSpec::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(factors_[i]);
    }
    return out;
}

GroupSpec GroupSpec::parse(std::string_view text) {
    std::vector<u64> orders;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t next = text.find(',', pos);
        if (next == std::string_view::npos) next = text.size();
        std::string_view tok = text.substr(pos, next - pos);
        u64 v = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (ec != std::errc() || ptr != tok.data() + tok.size() || v == 0)
            throw invalid_spec_error("group spec: cannot parse '" + std::string(text) + "'");
        orders.push_back(v);
        pos = next + 1;
        if (next == text.size()) break;
    }
    if (orders.empty()) throw invalid_spec_error("group spec: empty");
    return GroupSpec(orders);
}

ElementRange::ElementRange(const GroupSpec& g, u64 guard) : group_(&g) {
    if (g.order() > guard)
        throw resource_error("element enumeration: order " + std::to_string(g.order()) +
                             " exceeds guard " + std::to_string(guard));
}

ElementRange::iterator::iterator(const GroupSpec* g, bool done) : group_(g), done_(done) {
    if (!done_) current_ = group_->identity();
}

ElementRange::iterator& ElementRange::iterator::operator++() {
    const auto& f = group_->factors();
    for (std::size_t i = f.size(); i-- > 0;) {
        if (++current_.coords[i] < f[i]) return *this;
        current_.coords[i] = 0;
    }
    done_ = true;
    return *this;
}

std::vector<GroupElement> elements(const GroupSpec& g, u64 guard) {
    std::vector<GroupElement> out;
    out.reserve(g.order());
    for (const auto& x : ElementRange(g, guard)) out.push_back(x);
    return out;
}

namespace {

void partitions_rec(unsigned n, unsigned max_part, std::vector<unsigned>& cur,
                    std::vector<std::vector<unsigned>>& out) {
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (unsigned p = std::min(n, max_part); p >= 1; --p) {
        cur.push_back(p);
        partitions_rec(n - p, p, cur, out);
        cur.pop_back();
    }
}

std::vector<std::vector<unsigned>> partitions(unsigned n) {
    std::vector<std::vector<unsigned>> out;
    std::vector<unsigned> cur;
    partitions_rec(n, n, cur, out);
    return out;
}

} // namespace

std::vector<GroupSpec> abelian_group_types(u64 order) {
    if (order == 0) throw domain_error("abelian_group_types: order must be >= 1");
    auto fact = factorize(order);
    std::vector<std::vector<std::vector<unsigned>>> per_prime;
    for (const auto& [p, e] : fact) per_prime.push_back(partitions(e));

    std::vector<GroupSpec> out;
    std::vector<std::size_t> choice(per_prime.size(), 0);
    while (true) {
        std::size_t chain_len = 1;
        for (std::size_t i = 0; i < per_prime.size(); ++i)
            chain_len = std::max(chain_len, per_prime[i][choice[i]].size());
        std::vector<u64> chain(chain_len, 1); // descending construction
        for (std::size_t i = 0; i < per_prime.size(); ++i) {
            const auto& part = per_prime[i][choice[i]];
            for (std::size_t j = 0; j < part.size(); ++j) {
                u64 pk = 1;
                for (unsigned t = 0; t < part[j]; ++t) pk *= fact[i].first;
                chain[j] *= pk;
            }
        }
        std::reverse(chain.begin(), chain.end());
        out.push_back(GroupSpec(chain));

        std::size_t i = 0;
        for (; i < choice.size(); ++i) {
            if (++choice[i] < per_prime[i].size()) break;
            choice[i] = 0;
        }
        if (i == choice.size()) break;
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace sumdes
