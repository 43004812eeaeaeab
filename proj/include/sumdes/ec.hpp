#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sumdes/oracle.hpp"

namespace sumdes::ec {

/// Short-Weierstrass curve y^2 = x^3 + ax + b over a prime field, p > 3,
/// with nonzero discriminant -16(4a^3 + 27b^2).
class CurveSpec {
public:
    CurveSpec(u64 p, u64 a, u64 b);

    u64 p() const { return p_; }
    u64 a() const { return a_; }
    u64 b() const { return b_; }
    u64 discriminant() const;

    std::string to_string() const; // "p=43,a=0,b=3"
    static CurveSpec parse(std::string_view text);

private:
    u64 p_, a_, b_;
};

struct CurvePoint {
    bool infinity = true;
    u64 x = 0;
    u64 y = 0;

    static CurvePoint at_infinity() { return CurvePoint{}; }
    static CurvePoint affine(u64 x, u64 y) { return CurvePoint{false, x, y}; }

    friend bool operator==(const CurvePoint& a, const CurvePoint& b) {
        if (a.infinity || b.infinity) return a.infinity == b.infinity;
        return a.x == b.x && a.y == b.y;
    }
    friend bool operator!=(const CurvePoint& a, const CurvePoint& b) { return !(a == b); }
    /// Affine points first (x ascending, then y), the point at infinity last.
    friend bool operator<(const CurvePoint& a, const CurvePoint& b) {
        if (a.infinity != b.infinity) return !a.infinity;
        if (a.infinity) return false;
        return a.x != b.x ? a.x < b.x : a.y < b.y;
    }

    std::string to_string() const;
};

bool on_curve(const CurveSpec& e, const CurvePoint& pt);

/// Chord-tangent group law; inputs are validated against the curve.
CurvePoint point_add(const CurveSpec& e, const CurvePoint& p, const CurvePoint& q);
CurvePoint point_neg(const CurveSpec& e, const CurvePoint& p);
CurvePoint point_scalar_mul(const CurveSpec& e, i64 k, const CurvePoint& p);

/// All rational points: affine points ordered by (x, y) ascending, then the
/// point at infinity. Enumeration is budgeted by the field size.
std::vector<CurvePoint> enumerate_points(const CurveSpec& e, u64 max_p = 10'000);

/// E(F_p) as Z_{n2} (cyclic) or Z_{n1} + Z_{n2} with n1 | n2.
struct GroupStructure {
    u64 n1 = 1; // 1 for cyclic groups
    u64 n2 = 1;
    bool cyclic() const { return n1 == 1; }
    u64 point_count() const { return n1 * n2; }
    GroupSpec spec() const;
    std::string to_string() const;
};

GroupStructure group_structure(const CurveSpec& e, const std::vector<CurvePoint>& points);

/**
 * Explicit isomorphism between E(F_p) and its abstract invariant-factor
 * group, realized by a discrete-log table over one or two generators found
 * by element-order search. Routes curve questions into the exact counting
 * machinery. The star point order (index order) is the code coordinate
 * order: affine (x, y) ascending.
 */
class PointGroupIso {
public:
    PointGroupIso(const CurveSpec& e, u64 max_p = 10'000);

    const CurveSpec& curve() const { return curve_; }
    const GroupStructure& structure() const { return structure_; }
    const GroupSpec& group() const { return group_; }
    const std::vector<CurvePoint>& star_points() const { return star_points_; }

    GroupElement to_element(const CurvePoint& pt) const;
    const CurvePoint& to_point(const GroupElement& x) const;
    u32 star_index(const CurvePoint& pt) const; // index into star_points()

private:
    CurveSpec curve_;
    GroupStructure structure_;
    GroupSpec group_;
    std::vector<CurvePoint> star_points_;
    std::map<CurvePoint, GroupElement> elem_of_point_;
    std::vector<CurvePoint> point_of_rank_; // indexed by element rank
};

/// Monomial x^i y^j in the Riemann-Roch space L(kO); pole order at O is
/// 2i + 3j.
struct Monomial {
    unsigned xdeg = 0;
    unsigned ydeg = 0; // 0 or 1
    unsigned pole_order() const { return 2 * xdeg + 3 * ydeg; }
};

/// Basis of L(kO): monomials x^i y^j with j <= 1 and 2i + 3j <= k, ordered
/// by pole order. Exactly k monomials for k >= 1 (pole order 1 is the gap).
std::vector<Monomial> rr_basis(u64 k);

u64 eval_monomial(const CurveSpec& e, const Monomial& m, const CurvePoint& pt);

/// Evaluation code C_L(D, kO) with D summing all points of E(F_p)*.
struct EvalCode {
    CurveSpec curve;
    u64 k = 0;
    u64 n = 0;
    std::vector<CurvePoint> points;            // coordinate order
    std::vector<std::vector<u64>> generator;   // k rows, n columns
};

EvalCode build_code(const CurveSpec& e, u64 k, u64 max_p = 10'000);

/**
 * For a k-set S of distinct affine points: true iff the k x k matrix of the
 * L(kO) basis evaluated at S is singular, which happens exactly when S sums
 * to O. Both tests are run and must agree; disagreement is an internal
 * error (it would break the MDS correspondence).
 */
bool zero_sum_singularity(const CurveSpec& e, u64 k, const std::vector<CurvePoint>& s);

enum class MdsStatus { MDS, NMDS };

MdsStatus classify_mds(const PointGroupIso& iso, u64 k);

/// Minimum distance implied by the classification: n-k+1 for MDS, n-k for NMDS.
u64 min_distance(const PointGroupIso& iso, u64 k);

enum class SupportDesignMethod { Auto, DpReplication, Enumeration };

struct SupportDesignReport {
    unsigned t = 1;
    bool is_design = false;
    u64 block_size = 0; // n - k, the minimum weight
    std::optional<BigCount> lambda;        // support-design lambda
    std::optional<BigCount> block_total;   // number of distinct supports
    std::string method;                    // deciding engine
    std::optional<std::pair<std::vector<u32>, std::vector<u32>>> counterexample;
};

/**
 * Support design of the minimum-weight codewords: the incidence structure of
 * the weight-(n-k) supports, equivalently (via complements of zero sets) of
 * (E(F_p)*, B_k^*). Requires the code to be NMDS. Method Auto prefers the
 * transfer shortcut (for Z_p + Z_p groups with p | k), then DP replication
 * for t = 1, then enumeration.
 */
SupportDesignReport check_support_design(const PointGroupIso& iso, u64 k, unsigned t,
                                         SupportDesignMethod method = SupportDesignMethod::Auto,
                                         const oracle::Budget& budget = {});

/// A minimum-weight codeword exhibited explicitly: the lexicographically
/// first zero-sum k-set, the kernel coefficients of the k x k evaluation
/// matrix at it, and the resulting codeword (weight n-k).
struct Certificate {
    std::vector<u32> zero_set;      // point indices, ascending
    std::vector<u64> coefficients;  // function coefficients in rr_basis order
    std::vector<u64> codeword;      // evaluations at all n points
};

Certificate make_certificate(const PointGroupIso& iso, const EvalCode& code);

/// Rank of a matrix over F_p (Gaussian elimination).
u64 matrix_rank(std::vector<std::vector<u64>> m, u64 p);

} // namespace sumdes::ec
