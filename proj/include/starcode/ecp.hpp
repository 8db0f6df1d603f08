#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "starcode/code.hpp"
#include "starcode/error.hpp"
#include "starcode/families.hpp"
#include "starcode/matrix.hpp"

namespace starcode {

/// Which decoding guarantee an auxiliary code provides.
///
/// Full: dim A > t, d(A*C) > t and d(A) + d(C) > n; every error of weight
/// <= t is corrected. Relaxed: dim A > t and dim A - t + dim A*C <= n; most
/// errors are corrected but some patterns may fail.
enum class Guarantee { Full, Relaxed, None };

inline std::string guarantee_name(Guarantee g) {
    switch (g) {
        case Guarantee::Full: return "full";
        case Guarantee::Relaxed: return "relaxed";
        case Guarantee::None: return "none";
    }
    return "?";
}

/// Lower bounds on minimum distances. Missing entries are computed exactly
/// by enumeration. Designed distances are valid substitutes because every
/// condition only needs a lower bound.
struct DistanceBounds {
    std::optional<long> code;
    std::optional<long> aux;
    std::optional<long> product;
};

namespace detail {

inline long distance_or_bound(const LinearCode& c, const std::optional<long>& bound) {
    if (bound) return *bound;
    if (c.k() == 0) return static_cast<long>(c.n()) + 1;
    return static_cast<long>(min_distance(c));
}

}  // namespace detail

inline Guarantee check_conditions(const LinearCode& c, const LinearCode& a, const LinearCode& ac, std::size_t t,
                                  const DistanceBounds& bounds = {}) {
    const long n = static_cast<long>(c.n());
    const long tt = static_cast<long>(t);
    if (static_cast<long>(a.k()) <= tt) return Guarantee::None;
    const long d_ac = detail::distance_or_bound(ac, bounds.product);
    if (d_ac > tt) {
        const long d_a = detail::distance_or_bound(a, bounds.aux);
        const long d_c = detail::distance_or_bound(c, bounds.code);
        if (d_a + d_c > n) return Guarantee::Full;
    }
    if (static_cast<long>(a.k()) - tt + static_cast<long>(ac.k()) <= n) return Guarantee::Relaxed;
    return Guarantee::None;
}

inline Guarantee check_conditions(const LinearCode& c, const LinearCode& a, std::size_t t,
                                  const DistanceBounds& bounds = {}) {
    return check_conditions(c, a, star_product(a, c), t, bounds);
}

/// Designed-distance bounds for a one-point pair (C = C_L(G), A = C_L(F)).
inline DistanceBounds designed_bounds(const AgCodeSpec& code, const AgCodeSpec& aux) {
    const long n = static_cast<long>(code.n());
    return {n - code.divisor_degree, n - aux.divisor_degree, n - code.divisor_degree - aux.divisor_degree};
}

/// A code paired with an auxiliary code and the data the decoder reuses.
struct DecodeInstance {
    LinearCode code;
    LinearCode aux;
    LinearCode product;       // aux * code
    Matrix product_checks;    // generator of (aux * code)^perp
    Matrix code_checks;       // generator of code^perp
    std::size_t t = 0;
    Guarantee guarantee = Guarantee::None;
};

inline DecodeInstance make_instance(const LinearCode& c, const LinearCode& a, std::size_t t,
                                    const DistanceBounds& bounds = {}) {
    require_compatible(c, a);
    auto ac = star_product(a, c);
    const auto g = check_conditions(c, a, ac, t, bounds);
    auto ac_checks = dual(ac).generator();
    auto c_checks = dual(c).generator();
    return {c, a, std::move(ac), std::move(ac_checks), std::move(c_checks), t, g};
}

enum class DecodeStatus { Decoded, Failure };

struct DecodeOutcome {
    DecodeStatus status = DecodeStatus::Failure;
    Vector codeword;  // empty on failure
    Vector error;     // empty on failure
    std::size_t locator_dim = 0;
    std::vector<std::size_t> located;
};

/// Basis of K = {a in A : a * y in A*C}, given the parity checks of A*C.
/// Writing a = sum lambda_i a_i, the condition is linear in lambda:
/// H (a_i * y)^T summed with weights lambda_i vanishes.
inline Matrix locator_space_checked(std::span<const elem_t> y, const LinearCode& a, const Matrix& product_checks) {
    if (y.size() != a.n()) throw Error(Errc::LengthMismatch, "received word length does not match code length");
    const Field& f = *a.field();
    if (a.k() == 0) return Matrix(a.field(), 0, a.n());
    Matrix system(a.field(), product_checks.rows(), a.k());
    for (std::size_t i = 0; i < a.k(); ++i) {
        const auto col = multiply(product_checks, star(f, a.generator().row(i), y));
        for (std::size_t r = 0; r < col.size(); ++r) system(r, i) = col[r];
    }
    const Matrix lambdas = kernel(system);
    return row_basis(multiply(lambdas, a.generator()));
}

inline Matrix locator_space(std::span<const elem_t> y, const LinearCode& a, const LinearCode& ac) {
    return locator_space_checked(y, a, dual(ac).generator());
}

/// Coordinates where every row of K vanishes.
inline std::vector<std::size_t> common_zeros(const Matrix& k_basis) {
    if (k_basis.rows() == 0) throw Error(Errc::EmptyLocator, "locator space is zero");
    std::vector<std::size_t> out;
    for (std::size_t c = 0; c < k_basis.cols(); ++c) {
        bool zero = true;
        for (std::size_t r = 0; r < k_basis.rows() && zero; ++r) zero = k_basis(r, c) == 0;
        if (zero) out.push_back(c);
    }
    return out;
}

namespace detail {

inline DecodeOutcome solve_error_checked(std::span<const elem_t> y, const Matrix& checks,
                                         std::span<const std::size_t> located, std::size_t t) {
    DecodeOutcome out;
    out.located.assign(located.begin(), located.end());
    const Field& f = *checks.field();
    const auto syndrome = multiply(checks, y);
    const Matrix restricted = checks.select_columns(located);
    // Several error vectors on J with the same syndrome: refuse to pick one.
    if (rank(restricted) < located.size()) return out;
    const auto sol = solve(restricted, syndrome);
    if (!sol) return out;
    Vector e(y.size(), 0);
    for (std::size_t j = 0; j < located.size(); ++j) e[located[j]] = (*sol)[j];
    if (weight(e) > t) return out;
    Vector c(y.size());
    for (std::size_t i = 0; i < y.size(); ++i) c[i] = f.sub(y[i], e[i]);
    out.status = DecodeStatus::Decoded;
    out.codeword = std::move(c);
    out.error = std::move(e);
    return out;
}

}  // namespace detail

/// Recover e supported on J from the syndrome H y^T = H e^T.
inline DecodeOutcome solve_error(std::span<const elem_t> y, const LinearCode& c, std::span<const std::size_t> located,
                                 std::size_t t) {
    if (y.size() != c.n()) throw Error(Errc::LengthMismatch, "received word length does not match code length");
    for (auto j : located)
        if (j >= c.n()) throw Error(Errc::InvalidArgument, "located position out of range");
    auto out = detail::solve_error_checked(y, dual(c).generator(), located, t);
    if (out.status == DecodeStatus::Decoded && !c.contains(out.codeword)) {
        out.status = DecodeStatus::Failure;
        out.codeword.clear();
        out.error.clear();
    }
    return out;
}

/// Error-correcting-pair decoding of y against a prepared instance.
inline DecodeOutcome decode(const DecodeInstance& inst, std::span<const elem_t> y) {
    if (inst.guarantee == Guarantee::None)
        throw Error(Errc::GuaranteeViolation, "auxiliary code satisfies neither full nor relaxed conditions");
    if (y.size() != inst.code.n()) throw Error(Errc::LengthMismatch, "received word length does not match code length");
    for (auto v : y)
        if (!inst.code.field()->contains(v)) throw Error(Errc::InvalidArgument, "received symbol outside field");
    const Matrix k_basis = locator_space_checked(y, inst.aux, inst.product_checks);
    DecodeOutcome out;
    out.locator_dim = k_basis.rows();
    if (k_basis.rows() == 0) return out;
    const auto located = common_zeros(k_basis);
    out = detail::solve_error_checked(y, inst.code_checks, located, inst.t);
    out.locator_dim = k_basis.rows();
    if (out.status == DecodeStatus::Decoded) {
        // Never return an unverified word.
        if (!inst.code.contains(out.codeword) || weight(out.error) > inst.t) {
            out.status = DecodeStatus::Failure;
            out.codeword.clear();
            out.error.clear();
        }
    }
    return out;
}

inline DecodeOutcome decode(const LinearCode& c, const LinearCode& a, std::span<const elem_t> y, std::size_t t,
                            const DistanceBounds& bounds = {}) {
    return decode(make_instance(c, a, t, bounds), y);
}

/// Largest radius with t <= (d* - 1)/2 - g/2, i.e. 2t <= d* - 1 - g.
inline long ag_radius(const AgCodeSpec& spec) {
    const long d_star = static_cast<long>(spec.n()) - spec.divisor_degree;
    const long twice = d_star - 1 - spec.genus;
    return twice < 0 ? -1 : twice / 2;
}

/// Auxiliary code C_L(F) with deg F = t + g on the points of spec.
inline AgCode auxiliary_for_ag(const AgCodeSpec& spec, std::size_t t) {
    if (spec.family != Family::ReedSolomon && spec.family != Family::HermitianOnePoint)
        throw Error(Errc::InvalidArgument, "auxiliary codes are defined for rs and herm families");
    if (static_cast<long>(t) > ag_radius(spec))
        throw Error(Errc::RadiusTooLarge, "t = " + std::to_string(t) + " exceeds (d*-1)/2 - g/2");
    const long degree = static_cast<long>(t) + spec.genus;
    if (degree >= static_cast<long>(spec.n())) throw Error(Errc::RadiusTooLarge, "t + g >= n");
    return one_point_code(spec, degree);
}

/// Instance for a family code at radius t using designed distances.
inline DecodeInstance make_ag_instance(const AgCode& c, std::size_t t) {
    const auto aux = auxiliary_for_ag(c.spec, t);
    return make_instance(c.code, aux.code, t, designed_bounds(c.spec, aux.spec));
}

}  // namespace starcode
