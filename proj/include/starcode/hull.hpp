#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "starcode/code.hpp"
#include "starcode/error.hpp"
#include "starcode/families.hpp"
#include "starcode/matrix.hpp"

namespace starcode {

/// Points of P^{k-1}, each normalized so its first nonzero coordinate is 1.
struct ProjectivePointSet {
    FieldPtr field;
    std::size_t k = 0;
    std::vector<Vector> points;
};

/// Space of quadratic forms, as coefficient rows over the monomials
/// X_i X_j (i <= j) in lexicographic order.
struct QuadricIdeal {
    std::size_t k = 0;
    Matrix basis;
};

inline std::size_t quadric_monomial_count(std::size_t k) { return k * (k + 1) / 2; }

/// Scales v so that its first nonzero entry is 1; the zero vector is
/// returned unchanged.
inline Vector normalize(const Field& f, std::span<const elem_t> v) {
    Vector out(v.begin(), v.end());
    auto lead = std::find_if(out.begin(), out.end(), [](elem_t x) { return x != 0; });
    if (lead == out.end()) return out;
    const elem_t s = f.inv(*lead);
    for (auto& x : out) x = f.mul(x, s);
    return out;
}

/// Values of all degree-2 monomials at a point.
inline Vector quadric_monomials(const Field& f, std::span<const elem_t> x) {
    Vector out;
    out.reserve(quadric_monomial_count(x.size()));
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = i; j < x.size(); ++j) out.push_back(f.mul(x[i], x[j]));
    return out;
}

/// Columns of g as projective points. Columns must be nonzero and
/// pairwise independent.
inline ProjectivePointSet points_from_generator(const Matrix& g) {
    ProjectivePointSet ps{g.field(), g.rows(), {}};
    std::map<Vector, std::size_t> seen;
    for (std::size_t c = 0; c < g.cols(); ++c) {
        auto pt = normalize(*g.field(), g.column(c));
        if (is_zero(pt)) throw Error(Errc::DependentColumns, "column " + std::to_string(c) + " is zero");
        auto [it, fresh] = seen.emplace(pt, c);
        if (!fresh)
            throw Error(Errc::DependentColumns,
                        "columns " + std::to_string(it->second) + " and " + std::to_string(c) + " are proportional");
        ps.points.push_back(std::move(pt));
    }
    return ps;
}

inline ProjectivePointSet points_from_code(const LinearCode& c) { return points_from_generator(c.generator()); }

/// I_2 of a point set: kernel of the (points x monomials) evaluation matrix.
inline QuadricIdeal quadric_ideal(const ProjectivePointSet& ps) {
    const std::size_t nmon = quadric_monomial_count(ps.k);
    Matrix eval(ps.field, 0, nmon);
    for (const auto& pt : ps.points) eval.append_row(quadric_monomials(*ps.field, pt));
    return {ps.k, kernel(eval)};
}

/// dim C*C + dim I_2(V(C)) == k(k+1)/2.
inline bool verify_exact_sequence(const LinearCode& c) {
    const auto ideal = quadric_ideal(points_from_code(c));
    return square(c).k() + ideal.basis.rows() == quadric_monomial_count(c.k());
}

inline constexpr std::uint64_t kHullEnumerationLimit = std::uint64_t{1} << 22;

/// Every F_q-rational point of P^{k-1} on which all quadrics of the ideal
/// vanish, in enumeration order (leading coordinate position, then the
/// trailing coordinates as a base-q counter).
inline ProjectivePointSet hull_points(const QuadricIdeal& ideal) {
    const FieldPtr& field = ideal.basis.field();
    const Field& f = *field;
    const std::size_t k = ideal.k;
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < k; ++i) {
        total *= f.q();
        if (total > kHullEnumerationLimit) throw Error(Errc::TooLargeToEnumerate, "q^k exceeds 2^22");
    }
    ProjectivePointSet out{field, k, {}};
    Vector pt(k);
    for (std::size_t lead = 0; lead < k; ++lead) {
        std::fill(pt.begin(), pt.end(), 0);
        pt[lead] = 1;
        while (true) {
            const auto mons = quadric_monomials(f, pt);
            bool on_all = true;
            for (std::size_t r = 0; r < ideal.basis.rows() && on_all; ++r)
                on_all = inner_product(f, ideal.basis.row(r), mons) == 0;
            if (on_all) out.points.push_back(pt);
            std::size_t j = k;
            while (j > lead + 1 && pt[j - 1] == f.q() - 1) pt[--j] = 0;
            if (j == lead + 1) break;
            ++pt[j - 1];
        }
    }
    return out;
}

struct HullReport {
    std::size_t k = 0;
    std::size_t n = 0;
    std::size_t dim_i2 = 0;
    std::size_t dim_square = 0;
    std::size_t hull_count = 0;
    bool contains_generators = false;
    std::optional<long> gamma;  // when C*C is non-degenerate
    // Family codes only:
    std::optional<bool> hypotheses_met;  // deg G >= 2g + 2 and deg G < n / 2
    std::optional<std::size_t> known_count;
    std::optional<bool> hull_equals_known;
    QuadricIdeal ideal;
    ProjectivePointSet hull;
};

namespace detail {

inline HullReport hull_report_from(const LinearCode& c, const ProjectivePointSet& ps) {
    auto ideal = quadric_ideal(ps);
    auto hull = hull_points(ideal);
    const auto sq = square(c);
    const std::set<Vector> hull_set(hull.points.begin(), hull.points.end());
    HullReport r{.k = c.k(),
                 .n = c.n(),
                 .dim_i2 = ideal.basis.rows(),
                 .dim_square = sq.k(),
                 .hull_count = hull.points.size(),
                 .contains_generators = std::all_of(ps.points.begin(), ps.points.end(),
                                                    [&](const Vector& p) { return hull_set.count(p) > 0; }),
                 .gamma = std::nullopt,
                 .hypotheses_met = std::nullopt,
                 .known_count = std::nullopt,
                 .hull_equals_known = std::nullopt,
                 .ideal = std::move(ideal),
                 .hull = std::move(hull)};
    if (sq.k() > 0 && !is_degenerate(sq).degenerate)
        r.gamma = static_cast<long>(sq.k()) - (2 * static_cast<long>(c.k()) - 1);
    return r;
}

}  // namespace detail

/// Hull summary for an arbitrary code, in the coordinates of its RREF
/// generator.
inline HullReport hull_report(const LinearCode& c) { return detail::hull_report_from(c, points_from_code(c)); }

/// Hull summary for a family code, in the coordinates of its basis
/// functions. For RS and Hermitian codes the known set is the curve's
/// rational points (the evaluation points plus the image of P_inf, which is
/// the last coordinate vector); for point-set codes it is the point set.
inline HullReport hull_report(const AgCode& ag) {
    const bool basis_independent = ag.evaluation.rows() == ag.code.k();
    const auto ps = basis_independent ? points_from_generator(ag.evaluation) : points_from_code(ag.code);
    auto r = detail::hull_report_from(ag.code, ps);
    if (!basis_independent) return r;
    std::set<Vector> known(ps.points.begin(), ps.points.end());
    switch (ag.spec.family) {
        case Family::ReedSolomon:
        case Family::HermitianOnePoint: {
            const long deg = ag.spec.divisor_degree, g = ag.spec.genus;
            r.hypotheses_met = deg >= 2 * g + 2 && 2 * deg < static_cast<long>(ag.code.n());
            Vector infinity(ag.code.k(), 0);
            if (!infinity.empty()) infinity.back() = 1;
            known.insert(infinity);
            break;
        }
        case Family::PointSetLinear:
            break;
        case Family::MonomialEval:
            return r;
    }
    r.known_count = known.size();
    r.hull_equals_known = std::set<Vector>(r.hull.points.begin(), r.hull.points.end()) == known;
    return r;
}

}  // namespace starcode
