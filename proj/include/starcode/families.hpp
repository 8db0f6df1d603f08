#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "starcode/code.hpp"
#include "starcode/error.hpp"
#include "starcode/field.hpp"
#include "starcode/matrix.hpp"

namespace starcode {

enum class Family { ReedSolomon, HermitianOnePoint, MonomialEval, PointSetLinear };

inline std::string family_name(Family f) {
    switch (f) {
        case Family::ReedSolomon: return "rs";
        case Family::HermitianOnePoint: return "herm";
        case Family::MonomialEval: return "monomial";
        case Family::PointSetLinear: return "pointset";
    }
    return "?";
}

/// Symbolic description of an evaluation code.
///
/// Points are tuples: 1-tuples for the affine line, (x, y) pairs on the
/// Hermitian curve, normalized projective coordinates for point sets.
/// divisor_degree is deg G for a one-point divisor G = m P_inf (for RS
/// codes of dimension k this is k - 1).
struct AgCodeSpec {
    Family family = Family::ReedSolomon;
    FieldPtr field;
    std::vector<std::vector<elem_t>> points;
    long divisor_degree = 0;
    long genus = 0;
    std::vector<unsigned> exponents;  // MonomialEval only
    unsigned q0 = 0;                  // HermitianOnePoint only

    std::size_t n() const noexcept { return points.size(); }
};

struct DesignedParams {
    std::size_t n = 0;
    long k_lower = 0;      // deg G + 1 - g
    bool k_exact = false;  // deg G > 2g - 2
    long d_star = 0;       // n - deg G
};

/// A family-constructed code: the canonical code, its description, and the
/// evaluation matrix whose rows are the basis functions in order of
/// increasing pole order (the coordinates used by the hull lane).
struct AgCode {
    LinearCode code;
    AgCodeSpec spec;
    Matrix evaluation;
};

namespace detail {

inline void require_distinct_points(const std::vector<std::vector<elem_t>>& pts) {
    std::set<std::vector<elem_t>> seen(pts.begin(), pts.end());
    if (seen.size() != pts.size()) throw Error(Errc::DuplicatePoints, "evaluation points must be distinct");
}

inline Matrix monomial_evaluations(const FieldPtr& field, const std::vector<elem_t>& xs,
                                   const std::vector<unsigned>& exps) {
    Matrix m(field, exps.size(), xs.size());
    for (std::size_t r = 0; r < exps.size(); ++r)
        for (std::size_t i = 0; i < xs.size(); ++i) m(r, i) = field->pow(xs[i], exps[r]);
    return m;
}

}  // namespace detail

/// Evaluations of X^e for each exponent e at the given points.
inline AgCode monomial_code(const FieldPtr& field, const std::vector<elem_t>& points,
                            const std::vector<unsigned>& exponents) {
    if (points.size() > field->q()) throw Error(Errc::TooManyPoints, "more points than field elements");
    for (auto x : points)
        if (!field->contains(x)) throw Error(Errc::InvalidArgument, "point outside F_" + field->name());
    if (std::set<elem_t>(points.begin(), points.end()).size() != points.size())
        throw Error(Errc::DuplicatePoints, "evaluation points must be distinct");
    if (std::set<unsigned>(exponents.begin(), exponents.end()).size() != exponents.size())
        throw Error(Errc::DuplicateExponents, "exponents must be distinct");
    AgCodeSpec spec;
    spec.family = Family::MonomialEval;
    spec.field = field;
    for (auto x : points) spec.points.push_back({x});
    spec.exponents = exponents;
    std::sort(spec.exponents.begin(), spec.exponents.end());
    spec.divisor_degree = spec.exponents.empty() ? 0 : static_cast<long>(spec.exponents.back());
    auto eval = detail::monomial_evaluations(field, points, spec.exponents);
    auto code = LinearCode::from_generator(eval);
    return {std::move(code), std::move(spec), std::move(eval)};
}

inline LinearCode monomial_eval_code(const FieldPtr& field, const std::vector<elem_t>& points,
                                     const std::vector<unsigned>& exponents) {
    return monomial_code(field, points, exponents).code;
}

/// RS_k(x): evaluations of polynomials of degree < k. Allows k == n (the
/// full space), which arises as a product of two RS codes.
inline AgCode rs_code(const FieldPtr& field, const std::vector<elem_t>& points, std::size_t k) {
    if (points.size() > field->q()) throw Error(Errc::TooManyPoints, "n > q");
    if (k > points.size()) throw Error(Errc::BadDegree, "k > n");
    std::vector<unsigned> exps(k);
    for (std::size_t i = 0; i < k; ++i) exps[i] = static_cast<unsigned>(i);
    auto out = monomial_code(field, points, exps);
    out.spec.family = Family::ReedSolomon;
    out.spec.divisor_degree = static_cast<long>(k) - 1;
    return out;
}

inline LinearCode reed_solomon(const FieldPtr& field, const std::vector<elem_t>& points, std::size_t k) {
    return rs_code(field, points, k).code;
}

/// The first n field elements in encoding order.
inline std::vector<elem_t> first_points(const Field& field, std::size_t n) {
    if (n > field.q()) throw Error(Errc::TooManyPoints, "n > q");
    std::vector<elem_t> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = static_cast<elem_t>(i);
    return out;
}

/// Affine points of y^q0 + y = x^(q0+1) over F_{q0^2}, ordered by (x, y).
inline std::vector<std::vector<elem_t>> hermitian_points(const Field& f, unsigned q0) {
    std::vector<elem_t> norm(f.q()), trace(f.q());
    for (elem_t a = 0; a < f.q(); ++a) {
        norm[a] = f.pow(a, q0 + 1);
        trace[a] = f.add(f.pow(a, q0), a);
    }
    std::vector<std::vector<elem_t>> pts;
    for (elem_t x = 0; x < f.q(); ++x)
        for (elem_t y = 0; y < f.q(); ++y)
            if (trace[y] == norm[x]) pts.push_back({x, y});
    return pts;
}

/// Monomials x^i y^j spanning L(m P_inf) on the Hermitian curve, as (i, j)
/// sorted by pole order i q0 + j (q0 + 1).
inline std::vector<std::pair<unsigned, unsigned>> hermitian_basis(unsigned q0, long m) {
    std::vector<std::pair<unsigned, unsigned>> basis;
    if (m < 0) return basis;
    for (unsigned j = 0; j < q0; ++j)
        for (unsigned i = 0; static_cast<long>(i * q0 + j * (q0 + 1)) <= m; ++i) basis.emplace_back(i, j);
    std::sort(basis.begin(), basis.end(), [q0](auto a, auto b) {
        return a.first * q0 + a.second * (q0 + 1) < b.first * q0 + b.second * (q0 + 1);
    });
    return basis;
}

/// One-point Hermitian code C_L(X, P, m P_inf) over F_{q0^2}.
inline AgCode hermitian_code(unsigned q0, long m) {
    auto factors = detail::prime_factors(q0);
    if (q0 < 2 || factors.size() != 1) throw Error(Errc::InvalidArgument, "q0 must be a prime power");
    unsigned e = 0;
    for (unsigned v = q0; v > 1; v /= static_cast<unsigned>(factors[0])) ++e;
    if (static_cast<std::uint64_t>(q0) * q0 > kMaxFieldOrder) throw Error(Errc::OrderTooLarge, "q0^2 exceeds 2^16");
    auto field = Field::create(static_cast<std::uint32_t>(factors[0]), 2 * e);
    const auto pts = hermitian_points(*field, q0);
    const long n = static_cast<long>(pts.size());
    if (m < 0 || m >= n)
        throw Error(Errc::BadDegree, "divisor degree " + std::to_string(m) + " outside [0, " + std::to_string(n) + ")");
    const auto basis = hermitian_basis(q0, m);
    Matrix eval(field, basis.size(), pts.size());
    for (std::size_t r = 0; r < basis.size(); ++r)
        for (std::size_t i = 0; i < pts.size(); ++i)
            eval(r, i) = field->mul(field->pow(pts[i][0], basis[r].first), field->pow(pts[i][1], basis[r].second));
    AgCodeSpec spec;
    spec.family = Family::HermitianOnePoint;
    spec.field = field;
    spec.points = pts;
    spec.divisor_degree = m;
    spec.genus = static_cast<long>(q0) * (q0 - 1) / 2;
    spec.q0 = q0;
    auto code = LinearCode::from_generator(eval);
    return {std::move(code), std::move(spec), std::move(eval)};
}

/// Code with the same curve and points but one-point divisor of the given
/// degree (RS and Hermitian families).
inline AgCode one_point_code(const AgCodeSpec& spec, long degree) {
    switch (spec.family) {
        case Family::ReedSolomon: {
            if (degree < -1) throw Error(Errc::BadDegree, "negative RS dimension");
            std::vector<elem_t> xs;
            for (const auto& p : spec.points) xs.push_back(p[0]);
            return rs_code(spec.field, xs, static_cast<std::size_t>(degree + 1));
        }
        case Family::HermitianOnePoint:
            return hermitian_code(spec.q0, degree);
        default:
            throw Error(Errc::InvalidArgument, "one-point divisors exist only for rs and herm families");
    }
}

/// Code whose generator columns are the given projective points.
inline LinearCode point_set_linear_code(const FieldPtr& field, const std::vector<std::vector<elem_t>>& points) {
    if (points.empty()) throw Error(Errc::InvalidArgument, "empty point set");
    const std::size_t k = points[0].size();
    Matrix g(field, k, points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
        const auto& pt = points[i];
        if (pt.size() != k) throw Error(Errc::ShapeMismatch, "points of different dimensions");
        auto lead = std::find_if(pt.begin(), pt.end(), [](elem_t x) { return x != 0; });
        if (lead == pt.end() || *lead != 1)
            throw Error(Errc::InvalidArgument, "point " + std::to_string(i) + " is not normalized");
        for (std::size_t r = 0; r < k; ++r) g(r, i) = pt[r];
    }
    if (std::set<std::vector<elem_t>>(points.begin(), points.end()).size() != points.size())
        throw Error(Errc::DuplicateProjectivePoints, "projective points must be distinct");
    return LinearCode::from_generator(g);
}

inline AgCode point_set_code(const FieldPtr& field, const std::vector<std::vector<elem_t>>& points) {
    auto code = point_set_linear_code(field, points);
    AgCodeSpec spec;
    spec.family = Family::PointSetLinear;
    spec.field = field;
    spec.points = points;
    spec.divisor_degree = 1;
    Matrix g(field, points[0].size(), points.size());
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t r = 0; r < points[i].size(); ++r) g(r, i) = points[i][r];
    return {std::move(code), std::move(spec), std::move(g)};
}

/// Rational points of the union of the plane X3 = 0 and the line
/// X0 = X1 = 0 in P^3, normalized: q^2 + 2q + 1 points.
inline std::vector<std::vector<elem_t>> plane_and_line_points(const Field& f) {
    std::set<std::vector<elem_t>> pts;
    const elem_t q = f.q();
    // Plane: (a, b, c, 0) normalized.
    for (elem_t b = 0; b < q; ++b)
        for (elem_t c = 0; c < q; ++c) pts.insert({1, b, c, 0});
    for (elem_t c = 0; c < q; ++c) pts.insert({0, 1, c, 0});
    pts.insert({0, 0, 1, 0});
    // Line: (0, 0, s, t).
    for (elem_t t = 0; t < q; ++t) pts.insert({0, 0, 1, t});
    pts.insert({0, 0, 0, 1});
    return {pts.begin(), pts.end()};
}

/// Designed parameters: k >= deg G + 1 - g (equality when deg G > 2g - 2)
/// and d >= d* = n - deg G. Point-set codes carry no divisor; they report
/// the trivial bounds k >= 0, d >= 1.
inline DesignedParams designed_params(const AgCodeSpec& spec) {
    DesignedParams out;
    out.n = spec.n();
    if (spec.family == Family::PointSetLinear) {
        out.k_lower = 0;
        out.k_exact = false;
        out.d_star = 1;
        return out;
    }
    out.k_lower = spec.divisor_degree + 1 - spec.genus;
    out.k_exact = spec.divisor_degree > 2 * spec.genus - 2;
    out.d_star = static_cast<long>(spec.n()) - spec.divisor_degree;
    return out;
}

}  // namespace starcode
