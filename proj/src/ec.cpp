#include "sumdes/ec.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

namespace sumdes::ec {

namespace {

inline u64 addm(u64 a, u64 b, u64 p) {
    u64 s = a + b;
    return s >= p ? s - p : s;
}
inline u64 subm(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + p - b; }
inline u64 mulm(u64 a, u64 b, u64 p) { return mul_mod(a, b, p); }
inline BigCount big(u64 v) { return BigCount(static_cast<unsigned long>(v)); }

u64 invm(u64 a, u64 p) {
    if (a % p == 0) throw internal_error("field inverse of zero");
    return pow_mod(a % p, p - 2, p);
}

u64 curve_rhs(const CurveSpec& e, u64 x) {
    const u64 p = e.p();
    return addm(addm(mulm(mulm(x, x, p), x, p), mulm(e.a(), x, p), p), e.b(), p);
}

} // namespace

CurveSpec::CurveSpec(u64 p, u64 a, u64 b) : p_(p), a_(a % p), b_(b % p) {
    if (p <= 3 || !is_prime(p))
        throw invalid_spec_error("curve spec: p must be a prime greater than 3");
    if (discriminant() == 0)
        throw invalid_spec_error("curve spec: singular curve, discriminant is zero");
}

u64 CurveSpec::discriminant() const {
    // -16(4a^3 + 27b^2) mod p; p > 3 keeps the factor -16 invertible, so only
    // 4a^3 + 27b^2 decides singularity.
    u64 a3 = mulm(mulm(a_, a_, p_), a_, p_);
    u64 t = addm(mulm(4 % p_, a3, p_), mulm(27 % p_, mulm(b_, b_, p_), p_), p_);
    return mulm(subm(0, 16 % p_, p_), t, p_);
}

std::string CurveSpec::to_string() const {
    return "p=" + std::to_string(p_) + ",a=" + std::to_string(a_) + ",b=" + std::to_string(b_);
}

CurveSpec CurveSpec::parse(std::string_view text) {
    u64 vals[3];
    const char* keys[3] = {"p=", "a=", "b="};
    std::size_t pos = 0;
    for (int i = 0; i < 3; ++i) {
        std::size_t next = text.find(',', pos);
        if (next == std::string_view::npos) next = text.size();
        std::string_view tok = text.substr(pos, next - pos);
        std::string_view key = keys[i];
        if (tok.substr(0, 2) != key)
            throw invalid_spec_error("curve spec: expected '" + std::string(key) + "' in '" +
                                     std::string(text) + "'");
        tok.remove_prefix(2);
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), vals[i]);
        if (ec != std::errc() || ptr != tok.data() + tok.size())
            throw invalid_spec_error("curve spec: cannot parse '" + std::string(text) + "'");
        pos = next + 1;
    }
    return CurveSpec(vals[0], vals[1], vals[2]);
}

std::string CurvePoint::to_string() const {
    if (infinity) return "O";
    return "(" + std::to_string(x) + "," + std::to_string(y) + ")";
}

bool on_curve(const CurveSpec& e, const CurvePoint& pt) {
    if (pt.infinity) return true;
    if (pt.x >= e.p() || pt.y >= e.p()) return false;
    return mulm(pt.y, pt.y, e.p()) == curve_rhs(e, pt.x);
}

namespace {
void require_on_curve(const CurveSpec& e, const CurvePoint& pt) {
    if (!on_curve(e, pt))
        throw domain_error("point " + pt.to_string() + " is not on curve " + e.to_string());
}
} // namespace

CurvePoint point_add(const CurveSpec& e, const CurvePoint& p, const CurvePoint& q) {
    require_on_curve(e, p);
    require_on_curve(e, q);
    const u64 m = e.p();
    if (p.infinity) return q;
    if (q.infinity) return p;
    if (p.x == q.x && p.y != q.y) return CurvePoint::at_infinity();
    u64 slope;
    if (p.x == q.x) {
        if (p.y == 0) return CurvePoint::at_infinity(); // 2-torsion
        slope = mulm(addm(mulm(3 % m, mulm(p.x, p.x, m), m), e.a(), m),
                     invm(addm(p.y, p.y, m), m), m);
    } else {
        slope = mulm(subm(q.y, p.y, m), invm(subm(q.x, p.x, m), m), m);
    }
    const u64 x3 = subm(subm(mulm(slope, slope, m), p.x, m), q.x, m);
    const u64 y3 = subm(mulm(slope, subm(p.x, x3, m), m), p.y, m);
    return CurvePoint::affine(x3, y3);
}

CurvePoint point_neg(const CurveSpec& e, const CurvePoint& p) {
    require_on_curve(e, p);
    if (p.infinity) return p;
    return CurvePoint::affine(p.x, p.y == 0 ? 0 : e.p() - p.y);
}

CurvePoint point_scalar_mul(const CurveSpec& e, i64 k, const CurvePoint& p) {
    require_on_curve(e, p);
    CurvePoint base = p;
    u64 n;
    if (k < 0) {
        base = point_neg(e, base);
        n = static_cast<u64>(-(k + 1)) + 1;
    } else {
        n = static_cast<u64>(k);
    }
    CurvePoint acc = CurvePoint::at_infinity();
    while (n) {
        if (n & 1) acc = point_add(e, acc, base);
        base = point_add(e, base, base);
        n >>= 1;
    }
    return acc;
}

std::vector<CurvePoint> enumerate_points(const CurveSpec& e, u64 max_p) {
    const u64 p = e.p();
    if (p > max_p)
        throw resource_error("enumerate_points: p exceeds the enumeration budget " +
                             std::to_string(max_p));
    // square-root table: roots[r] lists the y with y^2 = r, y ascending
    std::vector<std::vector<u64>> roots(p);
    for (u64 y = 0; y < p; ++y) roots[mulm(y, y, p)].push_back(y);

    std::vector<CurvePoint> pts;
    for (u64 x = 0; x < p; ++x)
        for (u64 y : roots[curve_rhs(e, x)]) pts.push_back(CurvePoint::affine(x, y));
    pts.push_back(CurvePoint::at_infinity());

    // Hasse bound check; a violation would mean the enumeration is broken.
    const i64 trace = static_cast<i64>(pts.size()) - static_cast<i64>(p) - 1;
    if (static_cast<__int128>(trace) * trace > 4 * static_cast<__int128>(p))
        throw internal_error("enumerate_points: Hasse bound violated");
    return pts;
}

namespace {

u64 point_order(const CurveSpec& e, const CurvePoint& pt, u64 group_order) {
    for (u64 d : divisors(group_order))
        if (point_scalar_mul(e, static_cast<i64>(d), pt).infinity) return d;
    throw internal_error("point_order: no divisor of the group order annihilates the point");
}

} // namespace

GroupSpec GroupStructure::spec() const {
    if (cyclic()) return GroupSpec(std::vector<u64>{n2});
    return GroupSpec(std::vector<u64>{n1, n2});
}

std::string GroupStructure::to_string() const {
    if (cyclic()) return "Z" + std::to_string(n2);
    return "Z" + std::to_string(n1) + "+Z" + std::to_string(n2);
}

GroupStructure group_structure(const CurveSpec& e, const std::vector<CurvePoint>& points) {
    const u64 n = points.size();
    u64 exponent = 1;
    for (const auto& pt : points) {
        exponent = std::lcm(exponent, point_order(e, pt, n));
        if (exponent == n) break;
    }
    GroupStructure s;
    s.n2 = exponent;
    s.n1 = n / exponent;
    if (s.n1 * s.n2 != n || s.n2 % s.n1 != 0)
        throw internal_error("group_structure: computed invariants do not match the point count");
    return s;
}

PointGroupIso::PointGroupIso(const CurveSpec& e, u64 max_p)
    : curve_(e), group_(GroupSpec::trivial()) {
    auto all_points = enumerate_points(e, max_p);
    structure_ = group_structure(e, all_points);
    group_ = structure_.spec();
    const u64 n = all_points.size();

    for (const auto& pt : all_points)
        if (!pt.infinity) star_points_.push_back(pt);
    // enumerate_points returns affine points already sorted by (x, y)

    // generator of maximal order n2
    CurvePoint gen2 = CurvePoint::at_infinity();
    for (const auto& pt : all_points) {
        if (!pt.infinity && point_order(e, pt, n) == structure_.n2) {
            gen2 = pt;
            break;
        }
    }
    if (gen2.infinity && structure_.n2 > 1)
        throw internal_error("PointGroupIso: no element of maximal order found");

    point_of_rank_.assign(n, CurvePoint::at_infinity());
    auto record = [&](u64 rank, const CurvePoint& pt) { point_of_rank_[rank] = pt; };

    if (structure_.cyclic()) {
        CurvePoint acc = CurvePoint::at_infinity();
        for (u64 i = 0; i < structure_.n2; ++i) {
            record(i, acc);
            elem_of_point_.emplace(acc, group_.element_at(i));
            acc = point_add(e, acc, gen2);
        }
    } else {
        // span of gen2, then a second generator independent of it
        std::vector<CurvePoint> span2;
        CurvePoint acc = CurvePoint::at_infinity();
        for (u64 i = 0; i < structure_.n2; ++i) {
            span2.push_back(acc);
            acc = point_add(e, acc, gen2);
        }
        auto in_span2 = [&](const CurvePoint& pt) {
            return std::find(span2.begin(), span2.end(), pt) != span2.end();
        };
        CurvePoint gen1 = CurvePoint::at_infinity();
        for (const auto& pt : all_points) {
            if (pt.infinity || point_order(e, pt, n) != structure_.n1) continue;
            bool independent = true;
            CurvePoint mult = pt;
            for (u64 a = 1; a < structure_.n1 && independent; ++a) {
                if (in_span2(mult)) independent = false;
                mult = point_add(e, mult, pt);
            }
            if (independent) {
                gen1 = pt;
                break;
            }
        }
        if (gen1.infinity)
            throw internal_error("PointGroupIso: no independent generator of order n1 found");

        CurvePoint row = CurvePoint::at_infinity();
        for (u64 a = 0; a < structure_.n1; ++a) {
            CurvePoint cur = row;
            for (u64 b = 0; b < structure_.n2; ++b) {
                const u64 rank = a * structure_.n2 + b;
                record(rank, cur);
                elem_of_point_.emplace(cur, group_.element_at(rank));
                cur = point_add(e, cur, gen2);
            }
            row = point_add(e, row, gen1);
        }
    }
    if (elem_of_point_.size() != n)
        throw internal_error("PointGroupIso: discrete-log table is not a bijection");
}

GroupElement PointGroupIso::to_element(const CurvePoint& pt) const {
    auto it = elem_of_point_.find(pt);
    if (it == elem_of_point_.end())
        throw domain_error("PointGroupIso: point " + pt.to_string() + " is not on the curve");
    return it->second;
}

const CurvePoint& PointGroupIso::to_point(const GroupElement& x) const {
    return point_of_rank_.at(group_.element_rank(x));
}

u32 PointGroupIso::star_index(const CurvePoint& pt) const {
    auto it = std::lower_bound(star_points_.begin(), star_points_.end(), pt);
    if (it == star_points_.end() || *it != pt)
        throw domain_error("PointGroupIso: point is not in the star point list");
    return static_cast<u32>(it - star_points_.begin());
}

std::vector<Monomial> rr_basis(u64 k) {
    if (k == 0) throw domain_error("rr_basis: k must be >= 1");
    std::vector<Monomial> basis;
    for (unsigned j = 0; j <= 1; ++j)
        for (unsigned i = 0; 2 * i + 3 * j <= k; ++i) basis.push_back(Monomial{i, j});
    std::sort(basis.begin(), basis.end(),
              [](const Monomial& a, const Monomial& b) { return a.pole_order() < b.pole_order(); });
    return basis;
}

u64 eval_monomial(const CurveSpec& e, const Monomial& m, const CurvePoint& pt) {
    if (pt.infinity) throw domain_error("eval_monomial: functions in L(kO) have a pole at O");
    u64 v = pow_mod(pt.x, m.xdeg, e.p());
    if (m.ydeg) v = mulm(v, pt.y, e.p());
    return v;
}

EvalCode build_code(const CurveSpec& e, u64 k, u64 max_p) {
    auto all_points = enumerate_points(e, max_p);
    EvalCode code{e, k, all_points.size() - 1, {}, {}};
    if (k == 0 || k + 1 > code.n)
        throw domain_error("build_code: need 1 <= k <= n-1");
    for (const auto& pt : all_points)
        if (!pt.infinity) code.points.push_back(pt);
    auto basis = rr_basis(k);
    code.generator.resize(k, std::vector<u64>(code.n));
    for (u64 r = 0; r < k; ++r)
        for (u64 c = 0; c < code.n; ++c) code.generator[r][c] = eval_monomial(e, basis[r], code.points[c]);
    return code;
}

u64 matrix_rank(std::vector<std::vector<u64>> m, u64 p) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size(), cols = m[0].size();
    u64 rank = 0;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t pivot = row;
        while (pivot < rows && m[pivot][col] % p == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[pivot], m[row]);
        const u64 inv = invm(m[row][col], p);
        for (std::size_t r2 = row + 1; r2 < rows; ++r2) {
            if (m[r2][col] % p == 0) continue;
            const u64 f = mulm(m[r2][col], inv, p);
            for (std::size_t c2 = col; c2 < cols; ++c2)
                m[r2][c2] = subm(m[r2][c2], mulm(f, m[row][c2], p), p);
        }
        ++row;
        ++rank;
    }
    return rank;
}

bool zero_sum_singularity(const CurveSpec& e, u64 k, const std::vector<CurvePoint>& s) {
    if (s.size() != k) throw domain_error("zero_sum_singularity: |S| must equal k");
    for (const auto& pt : s) {
        require_on_curve(e, pt);
        if (pt.infinity) throw domain_error("zero_sum_singularity: S must avoid O");
    }
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (s[i] == s[j]) throw domain_error("zero_sum_singularity: points must be distinct");

    auto basis = rr_basis(k);
    std::vector<std::vector<u64>> m(k, std::vector<u64>(k));
    for (u64 r = 0; r < k; ++r)
        for (u64 c = 0; c < k; ++c) m[r][c] = eval_monomial(e, basis[r], s[c]);
    const bool singular = matrix_rank(std::move(m), e.p()) < k;

    CurvePoint sum = CurvePoint::at_infinity();
    for (const auto& pt : s) sum = point_add(e, sum, pt);
    const bool zero_sum = sum.infinity;

    if (singular != zero_sum)
        throw internal_error("zero_sum_singularity: rank test and group-sum test disagree");
    return singular;
}

MdsStatus classify_mds(const PointGroupIso& iso, u64 k) {
    const u64 n = iso.star_points().size();
    if (k == 0 || k + 1 > n) throw domain_error("classify_mds: need 1 <= k <= n-1");
    BigCount zero_sum_sets = count_subsets_star(iso.group(), k, iso.group().identity());
    return zero_sum_sets == 0 ? MdsStatus::MDS : MdsStatus::NMDS;
}

u64 min_distance(const PointGroupIso& iso, u64 k) {
    const u64 n = iso.star_points().size();
    return classify_mds(iso, k) == MdsStatus::MDS ? n - k + 1 : n - k;
}

SupportDesignReport check_support_design(const PointGroupIso& iso, u64 k, unsigned t,
                                         SupportDesignMethod method,
                                         const oracle::Budget& budget) {
    if (t == 0) throw domain_error("check_support_design: t must be >= 1");
    if (classify_mds(iso, k) == MdsStatus::MDS)
        throw inapplicable_error("check_support_design: MDS code has no weight-(n-k) codewords");
    const GroupSpec& g = iso.group();
    const u64 n = iso.star_points().size();

    SupportDesignReport report;
    report.t = t;
    report.block_size = n - k;
    report.block_total = count_subsets_star(g, k, g.identity());

    if (method == SupportDesignMethod::Auto) {
        // Transfer shortcut: for Z_p + Z_p and p | k the full structure is a
        // 2-design, so the star structure is a 1-design without any search.
        const auto& st = iso.structure();
        if (t == 1 && !st.cyclic() && st.n1 == st.n2 && is_prime(st.n2) && k % st.n2 == 0 &&
            k < n + 1) {
            report.is_design = true;
            report.method = "transfer-elementary";
            report.lambda = checked_design_div(*report.block_total * big(n - k),
                                               BigCount(static_cast<unsigned long>(n)),
                                               "support design lambda");
            return report;
        }
        method = t == 1 ? SupportDesignMethod::DpReplication : SupportDesignMethod::Enumeration;
    }

    if (method == SupportDesignMethod::DpReplication) {
        if (t != 1)
            throw domain_error("check_support_design: DP replication only decides t = 1");
        auto res = oracle::check_1design_dp(g, k, g.identity(), true, budget);
        report.is_design = res.is_design;
        report.method = "dp-replication";
        report.counterexample = res.counterexample;
        if (res.is_design) {
            // supports are complements of zero sets: lambda_supp = b - lambda_zero
            report.lambda = *report.block_total - *res.lambda;
        }
        return report;
    }

    // Direct enumeration of the supports: blocks of B_{n-k}^{e,*} with e the
    // sum over all points of G*.
    GroupElement e_target = g.torsion2_sum();
    auto inst = oracle::enumerate_blocks(g, n - k, e_target, true, budget);
    auto res = oracle::check_t_design(inst, t, budget);
    report.is_design = res.is_design;
    report.method = "enumeration";
    report.lambda = res.lambda;
    report.counterexample = res.counterexample;
    if (res.note == "empty-family")
        throw internal_error("check_support_design: NMDS code produced no supports");
    return report;
}

namespace {

// Lexicographically first zero-sum k-subset of the star points, by DFS with a
// last-point lookup.
std::vector<u32> first_zero_sum_subset(const PointGroupIso& iso, u64 k) {
    const auto& pts = iso.star_points();
    const GroupSpec& g = iso.group();
    const u64 n = pts.size();
    std::vector<u32> chosen;
    GroupElement sum = g.identity();

    std::function<bool(u32)> rec = [&](u32 start) -> bool {
        if (chosen.size() + 1 == k) {
            // solve for the last point directly: need sum + P = 0
            const GroupElement needed = g.neg(sum);
            if (needed == g.identity()) return false; // O is not in the point set
            const CurvePoint& pt = iso.to_point(needed);
            const u32 idx = iso.star_index(pt);
            if (idx >= start) {
                chosen.push_back(idx);
                return true;
            }
            return false;
        }
        for (u32 i = start; i + (k - chosen.size()) <= n; ++i) {
            chosen.push_back(i);
            sum = g.add(sum, iso.to_element(pts[i]));
            if (rec(i + 1)) return true;
            sum = g.sub(sum, iso.to_element(pts[i]));
            chosen.pop_back();
        }
        return false;
    };
    if (k == 0 || !rec(0))
        throw internal_error("first_zero_sum_subset: no zero-sum subset found for an NMDS code");
    return chosen;
}

// One nonzero vector c with c^T M = 0, for a singular square matrix M.
std::vector<u64> left_kernel_vector(const std::vector<std::vector<u64>>& m, u64 p) {
    const std::size_t k = m.size();
    // transpose, then solve M^T c = 0
    std::vector<std::vector<u64>> a(k, std::vector<u64>(k));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) a[i][j] = m[j][i];

    std::vector<std::size_t> pivot_col(k, SIZE_MAX);
    std::size_t row = 0;
    for (std::size_t col = 0; col < k && row < k; ++col) {
        std::size_t pivot = row;
        while (pivot < k && a[pivot][col] % p == 0) ++pivot;
        if (pivot == k) continue;
        std::swap(a[pivot], a[row]);
        const u64 inv = invm(a[row][col], p);
        for (std::size_t c2 = 0; c2 < k; ++c2) a[row][c2] = mulm(a[row][c2], inv, p);
        for (std::size_t r2 = 0; r2 < k; ++r2) {
            if (r2 == row || a[r2][col] == 0) continue;
            const u64 f = a[r2][col];
            for (std::size_t c2 = 0; c2 < k; ++c2)
                a[r2][c2] = subm(a[r2][c2], mulm(f, a[row][c2], p), p);
        }
        pivot_col[row] = col;
        ++row;
    }
    // find a free column and back-substitute
    std::vector<bool> is_pivot(k, false);
    for (std::size_t r = 0; r < row; ++r) is_pivot[pivot_col[r]] = true;
    std::size_t free_col = SIZE_MAX;
    for (std::size_t c = 0; c < k; ++c)
        if (!is_pivot[c]) {
            free_col = c;
            break;
        }
    if (free_col == SIZE_MAX) throw internal_error("left_kernel_vector: matrix is nonsingular");
    std::vector<u64> sol(k, 0);
    sol[free_col] = 1;
    for (std::size_t r = 0; r < row; ++r)
        sol[pivot_col[r]] = subm(0, a[r][free_col], p);
    return sol;
}

} // namespace

Certificate make_certificate(const PointGroupIso& iso, const EvalCode& code) {
    const CurveSpec& e = iso.curve();
    const u64 p = e.p();
    const u64 k = code.k;
    Certificate cert;
    cert.zero_set = first_zero_sum_subset(iso, k);

    auto basis = rr_basis(k);
    std::vector<std::vector<u64>> m(k, std::vector<u64>(k));
    for (u64 r = 0; r < k; ++r)
        for (u64 c = 0; c < k; ++c)
            m[r][c] = eval_monomial(e, basis[r], code.points[cert.zero_set[c]]);
    cert.coefficients = left_kernel_vector(m, p);

    // the codeword is the coefficient combination of the generator rows
    cert.codeword.assign(code.n, 0);
    for (u64 r = 0; r < k; ++r) {
        if (cert.coefficients[r] == 0) continue;
        for (u64 c = 0; c < code.n; ++c)
            cert.codeword[c] =
                addm(cert.codeword[c], mulm(cert.coefficients[r], code.generator[r][c], p), p);
    }

    // re-verify: zero exactly on the zero set, weight n - k
    u64 weight = 0;
    std::size_t zi = 0;
    for (u64 c = 0; c < code.n; ++c) {
        const bool should_vanish = zi < cert.zero_set.size() && cert.zero_set[zi] == c;
        if (should_vanish) ++zi;
        if (cert.codeword[c] != 0) ++weight;
        if (should_vanish != (cert.codeword[c] == 0))
            throw internal_error("make_certificate: codeword support does not match the zero set");
    }
    if (weight != code.n - k)
        throw internal_error("make_certificate: codeword weight is not n-k");
    return cert;
}

} // namespace sumdes::ec
