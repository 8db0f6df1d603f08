#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "starcode/ecp.hpp"

using namespace starcode;

namespace {

std::vector<oracle::Vec> gen_rows(const LinearCode& c) {
    std::vector<oracle::Vec> out;
    for (std::size_t i = 0; i < c.k(); ++i) out.push_back(c.generator().row_vector(i));
    return out;
}

AgCode rs7(std::size_t k) {
    auto f7 = Field::create(7, 1);
    return rs_code(f7, first_points(*f7, 7), k);
}

Vector add_vec(const Field& f, const Vector& a, const Vector& b) {
    Vector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = f.add(a[i], b[i]);
    return out;
}

// Calls fn(e) for every error vector of weight exactly w.
template <typename Fn>
void for_each_error(const Field& f, std::size_t n, std::size_t w, Fn&& fn) {
    std::vector<std::size_t> pos(w);
    std::function<void(std::size_t, std::size_t, Vector&)> rec = [&](std::size_t depth, std::size_t start, Vector& e) {
        if (depth == w) {
            fn(e);
            return;
        }
        for (std::size_t i = start; i < n; ++i)
            for (elem_t v = 1; v < f.q(); ++v) {
                e[i] = v;
                rec(depth + 1, i + 1, e);
                e[i] = 0;
            }
    };
    Vector e(n, 0);
    rec(0, 0, e);
}

}  // namespace

TEST(Ecp, CheckConditions) {
    auto c = rs7(3);
    EXPECT_EQ(check_conditions(c.code, c.code, 2), Guarantee::Full);
    auto h = hermitian_code(2, 3);
    auto a = hermitian_code(2, 2);
    EXPECT_EQ(a.code.k(), 2u);
    EXPECT_EQ(check_conditions(h.code, a.code, 1, designed_bounds(h.spec, a.spec)), Guarantee::Full);
    EXPECT_EQ(check_conditions(h.code, a.code, 1), Guarantee::Full);  // exact distances
    EXPECT_NE(check_conditions(c.code, c.code, 3), Guarantee::Full);
    EXPECT_NE(check_conditions(h.code, a.code, 2), Guarantee::Full);
}

TEST(Ecp, RelaxedGuarantee) {
    // A = RS_3, t = 2, C = RS_4: d(A*C) = d(RS_6) = 2 fails (ii); the
    // relaxed count 3 - 2 + 6 = 7 <= 7 holds.
    auto c = rs7(4), a = rs7(3);
    EXPECT_EQ(check_conditions(c.code, a.code, 2), Guarantee::Relaxed);
    // dim A - t + dim A*C > n: nothing.
    EXPECT_EQ(check_conditions(rs7(5).code, rs7(3).code, 2), Guarantee::None);
}

TEST(Ecp, LocatorSpace) {
    auto c = rs7(3);
    const auto& A = c.code;
    auto ac = star_product(A, c.code);
    const Field& f = *c.spec.field;
    // y in C: K = A.
    auto y = c.code.encode(Vector{3, 1, 4});
    EXPECT_EQ(locator_space(y, A, ac), A.generator());
    // Zero auxiliary code.
    EXPECT_EQ(locator_space(y, LinearCode::zero(c.spec.field, 7), ac).rows(), 0u);

    // Single errors: K = {a in A : a_i = 0}. Oracle: filter A's span by
    // membership of a*y in the span of A*C.
    const auto a_words = oracle::span(f, gen_rows(A), 7);
    const auto ac_words = oracle::span(f, gen_rows(ac), 7);
    for_each_error(f, 7, 1, [&](const Vector& e) {
        const auto yy = add_vec(f, y, e);
        const auto k = locator_space(yy, A, ac);
        std::set<oracle::Vec> expected;
        for (const auto& a : a_words)
            if (ac_words.count(oracle::pairwise_products(f, {a}, {yy})[0])) expected.insert(a);
        EXPECT_EQ(oracle::span(f, gen_rows(LinearCode::from_generator(k)), 7), expected);
        const std::size_t pos = static_cast<std::size_t>(std::find_if(e.begin(), e.end(), [](elem_t v) { return v; }) - e.begin());
        EXPECT_EQ(LinearCode::from_generator(k), vanishing_subcode(A, std::vector<std::size_t>{pos}));
        const auto j = common_zeros(k);
        EXPECT_NE(std::find(j.begin(), j.end(), pos), j.end());
    });
}

TEST(Ecp, CommonZeros) {
    auto f2 = Field::create(2, 1);
    EXPECT_TRUE(common_zeros(Matrix::identity(f2, 3)).empty());
    auto k = Matrix::from_rows(f2, {{0, 1, 0}, {0, 0, 1}}, 3);
    EXPECT_EQ(common_zeros(k), (std::vector<std::size_t>{0}));
    try {
        common_zeros(Matrix(f2, 0, 3));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::EmptyLocator);
    }
}

TEST(Ecp, SolveError) {
    auto c = rs7(3);
    auto y = c.code.encode(Vector{1, 2, 3});
    auto out = solve_error(y, c.code, {}, 2);
    ASSERT_EQ(out.status, DecodeStatus::Decoded);
    EXPECT_EQ(out.codeword, y);
    EXPECT_EQ(out.error, Vector(7, 0));
    y[0] = (y[0] + 1) % 7;
    EXPECT_EQ(solve_error(y, c.code, {}, 2).status, DecodeStatus::Failure);
    // Known positions.
    auto out2 = solve_error(y, c.code, std::vector<std::size_t>{0, 5}, 2);
    ASSERT_EQ(out2.status, DecodeStatus::Decoded);
    EXPECT_EQ(out2.error[0], 1u);
    EXPECT_EQ(weight(out2.error), 1u);
}

TEST(Ecp, DecodeZeroError) {
    auto c = rs7(3);
    auto y = c.code.encode(Vector{6, 0, 2});
    auto out = decode(c.code, c.code, y, 2);
    ASSERT_EQ(out.status, DecodeStatus::Decoded);
    EXPECT_EQ(out.codeword, y);
    EXPECT_EQ(out.locator_dim, 3u);
}

TEST(Ecp, GuaranteeViolation) {
    auto c = rs7(3);
    try {
        decode(rs7(5).code, rs7(3).code, Vector(7, 0), 2);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::GuaranteeViolation);
    }
}

TEST(Ecp, ExhaustiveReedSolomonRadiusTwo) {
    auto c = rs7(3);
    auto inst = make_ag_instance(c, 2);
    ASSERT_EQ(inst.guarantee, Guarantee::Full);
    EXPECT_EQ(inst.aux.k(), 3u);
    const Field& f = *c.spec.field;
    const auto cw = c.code.encode(Vector{5, 3, 1});
    std::size_t decoded = 0, total = 0;
    for (std::size_t w = 0; w <= 2; ++w)
        for_each_error(f, 7, w, [&](const Vector& e) {
            ++total;
            const auto out = decode(inst, add_vec(f, cw, e));
            if (out.status == DecodeStatus::Decoded && out.codeword == cw && out.error == e) ++decoded;
            // Locator equals the shortening of A at supp(e).
            std::vector<std::size_t> supp;
            for (std::size_t i = 0; i < 7; ++i)
                if (e[i]) supp.push_back(i);
            EXPECT_EQ(LinearCode::from_generator(locator_space(add_vec(f, cw, e), inst.aux, inst.product)),
                      vanishing_subcode(inst.aux, supp));
        });
    EXPECT_EQ(total, 1u + 42u + 756u);  // sum over w <= 2 of C(7, w) 6^w
    EXPECT_EQ(decoded, total);
}

TEST(Ecp, ExhaustiveHermitianRadiusOne) {
    auto c = hermitian_code(2, 3);
    auto inst = make_ag_instance(c, 1);
    ASSERT_EQ(inst.guarantee, Guarantee::Full);
    const Field& f = *c.spec.field;
    const auto cw = c.code.encode(Vector{1, 2, 3});
    std::size_t decoded = 0, total = 0;
    for (std::size_t w = 0; w <= 1; ++w)
        for_each_error(f, 8, w, [&](const Vector& e) {
            ++total;
            const auto out = decode(inst, add_vec(f, cw, e));
            decoded += out.status == DecodeStatus::Decoded && out.codeword == cw;
        });
    EXPECT_EQ(total, 25u);
    EXPECT_EQ(decoded, total);
}

TEST(Ecp, HermitianQ3Sampled) {
    // q0 = 3, m = 7: d* = 20, g = 3, radius floor((19 - 3)/2) = 8.
    auto c = hermitian_code(3, 7);
    EXPECT_EQ(ag_radius(c.spec), 8);
    auto inst = make_ag_instance(c, 8);
    ASSERT_EQ(inst.guarantee, Guarantee::Full);
    const Field& f = *c.spec.field;
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        Vector msg(c.code.k());
        for (auto& x : msg) x = static_cast<elem_t>(rng() % f.q());
        const auto cw = c.code.encode(msg);
        Vector e(27, 0);
        std::vector<std::size_t> idx(27);
        std::iota(idx.begin(), idx.end(), std::size_t{0});
        std::shuffle(idx.begin(), idx.end(), rng);
        for (std::size_t i = 0; i < 8; ++i) e[idx[i]] = static_cast<elem_t>(1 + rng() % (f.q() - 1));
        const auto out = decode(inst, add_vec(f, cw, e));
        ASSERT_EQ(out.status, DecodeStatus::Decoded);
        EXPECT_EQ(out.codeword, cw);
    }
}

TEST(Ecp, NeverWrongUnderRelaxedGuarantee) {
    // Beyond the guaranteed radius the decoder may fail but any Decoded
    // outcome is a codeword within distance t.
    auto c = rs7(4), a = rs7(3);
    auto inst = make_instance(c.code, a.code, 2);
    ASSERT_EQ(inst.guarantee, Guarantee::Relaxed);
    const Field& f = *c.spec.field;
    const auto cw = c.code.encode(Vector{1, 1, 2, 3});
    for (std::size_t w = 0; w <= 3; ++w)
        for_each_error(f, 7, w, [&](const Vector& e) {
            const auto y = add_vec(f, cw, e);
            const auto out = decode(inst, y);
            if (out.status == DecodeStatus::Decoded) {
                EXPECT_TRUE(c.code.contains(out.codeword));
                EXPECT_LE(weight(out.error), 2u);
                EXPECT_EQ(add_vec(f, out.codeword, out.error), y);
            }
        });
}

TEST(Ecp, AuxiliaryForAg) {
    auto c = rs7(3);
    auto a = auxiliary_for_ag(c.spec, 2);
    EXPECT_EQ(a.code, rs7(3).code);
    auto h = hermitian_code(2, 3);
    auto ha = auxiliary_for_ag(h.spec, 1);
    EXPECT_EQ(ha.code.k(), 2u);
    EXPECT_EQ(ha.spec.divisor_degree, 2);
    auto a0 = auxiliary_for_ag(c.spec, 0);
    EXPECT_EQ(a0.code.k(), 1u);
    EXPECT_EQ(a0.code.generator().row_vector(0), Vector(7, 1));
    try {
        auxiliary_for_ag(c.spec, 3);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::RadiusTooLarge);
    }
    EXPECT_THROW(auxiliary_for_ag(h.spec, 2), Error);
}
