#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sumdes/numtheory.hpp"

namespace sumdes {

/// Element of a finite abelian group: one residue per invariant factor,
/// each reduced modulo its factor. The all-zero vector is the identity.
struct GroupElement {
    std::vector<u64> coords;

    GroupElement() = default;
    explicit GroupElement(std::vector<u64> c) : coords(std::move(c)) {}

    friend bool operator==(const GroupElement& a, const GroupElement& b) { return a.coords == b.coords; }
    friend bool operator!=(const GroupElement& a, const GroupElement& b) { return !(a == b); }
    friend bool operator<(const GroupElement& a, const GroupElement& b) { return a.coords < b.coords; }

    std::string to_string() const;
};

/**
 * Finite abelian group in invariant-factor form: an ordered list of factors
 * n_1 | n_2 | ... | n_m. The constructor accepts any list of cyclic orders
 * and recomputes the chain via the structure theorem, so e.g. {2,3} becomes
 * {6} and {4,6} becomes {2,12}. The trivial group is the single factor {1}.
 *
 * Immutable after construction; all operations on it are pure functions.
 */
class GroupSpec {
public:
    /// Canonicalizes arbitrary cyclic orders into the invariant-factor chain.
    /// Any order <= 0 (i.e. 0 here, inputs being unsigned) is an invalid spec.
    explicit GroupSpec(const std::vector<u64>& cyclic_orders);

    static GroupSpec trivial() { return GroupSpec(std::vector<u64>{1}); }

    const std::vector<u64>& factors() const { return factors_; }
    u64 order() const { return order_; }
    u64 exponent() const { return factors_.back(); }
    std::size_t rank() const { return factors_.size(); }
    bool is_trivial() const { return order_ == 1; }

    /// Divisors of exp(G), ascending (precomputed once).
    const std::vector<u64>& exponent_divisors() const { return exp_divisors_; }

    GroupElement identity() const { return GroupElement(std::vector<u64>(factors_.size(), 0)); }
    bool contains(const GroupElement& x) const;
    void require_element(const GroupElement& x) const;

    GroupElement add(const GroupElement& a, const GroupElement& b) const;
    GroupElement sub(const GroupElement& a, const GroupElement& b) const;
    GroupElement neg(const GroupElement& a) const;
    GroupElement scalar_mul(i64 k, const GroupElement& a) const;

    /// Order of an element: lcm over coordinates of n_i / gcd(x_i, n_i).
    u64 element_order(const GroupElement& x) const;

    /// #G[d] = #{g : dg = 0} = prod_i gcd(d, n_i). d >= 1.
    u64 torsion_count(u64 d) const;

    /// e(x) = max{d : d | exp(G), x in dG}. e(identity) = exp(G).
    u64 e_of(const GroupElement& x) const;

    /// Sum of all elements of G[2]: the unique involution when there is
    /// exactly one, the identity otherwise.
    GroupElement torsion2_sum() const;

    /// Lexicographic position of x (first coordinate most significant).
    u64 element_rank(const GroupElement& x) const;
    GroupElement element_at(u64 rank) const;

    /// Smallest element in enumeration order with e(x) = d, for d | exp(G).
    /// Every divisor of the exponent is realized.
    GroupElement e_class_representative(u64 d) const;

    std::string to_string() const;
    /// Parses the comma-separated factor format, e.g. "2,4" or "9".
    static GroupSpec parse(std::string_view text);

    friend bool operator==(const GroupSpec& a, const GroupSpec& b) { return a.factors_ == b.factors_; }
    friend bool operator!=(const GroupSpec& a, const GroupSpec& b) { return !(a == b); }
    friend bool operator<(const GroupSpec& a, const GroupSpec& b) { return a.factors_ < b.factors_; }

private:
    std::vector<u64> factors_;
    u64 order_ = 1;
    std::vector<u64> exp_divisors_;
};

/// Free-function spelling of the canonicalizing constructor.
inline GroupSpec canonicalize(const std::vector<u64>& cyclic_orders) { return GroupSpec(cyclic_orders); }

/**
 * Forward range over all elements of G in lexicographic coordinate order.
 * Construction fails with resource_error when order(G) exceeds the guard.
 */
class ElementRange {
public:
    static constexpr u64 kDefaultGuard = 10'000'000;

    explicit ElementRange(const GroupSpec& g, u64 guard = kDefaultGuard);

    class iterator {
    public:
        using value_type = GroupElement;

        iterator() : group_(nullptr), done_(true) {}
        iterator(const GroupSpec* g, bool done);

        const GroupElement& operator*() const { return current_; }
        const GroupElement* operator->() const { return &current_; }
        iterator& operator++();

        friend bool operator==(const iterator& a, const iterator& b) { return a.done_ == b.done_; }
        friend bool operator!=(const iterator& a, const iterator& b) { return !(a == b); }

    private:
        const GroupSpec* group_;
        GroupElement current_;
        bool done_;
    };

    iterator begin() const { return iterator(group_, false); }
    iterator end() const { return iterator(group_, true); }

private:
    const GroupSpec* group_;
};

/// Materialized element list (same order as ElementRange), guarded.
std::vector<GroupElement> elements(const GroupSpec& g, u64 guard = ElementRange::kDefaultGuard);

/// All isomorphism types of abelian groups of the given order, in a
/// deterministic order (sorted by invariant factors).
std::vector<GroupSpec> abelian_group_types(u64 order);

} // namespace sumdes
