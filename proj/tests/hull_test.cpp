#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "starcode/hull.hpp"

using namespace starcode;

namespace {

AgCode rs(std::uint32_t q, std::size_t k) {
    auto f = Field::create(q, 1);
    return rs_code(f, first_points(*f, q), k);
}

// Brute-force: every normalized point of P^{k-1} where all ideal rows vanish.
std::set<Vector> hull_oracle(const QuadricIdeal& ideal) {
    const Field& f = *ideal.basis.field();
    std::set<Vector> out;
    std::vector<oracle::Vec> all{Vector{}};
    for (std::size_t i = 0; i < ideal.k; ++i) {
        std::vector<oracle::Vec> next;
        for (const auto& v : all)
            for (elem_t x = 0; x < f.q(); ++x) {
                auto w = v;
                w.push_back(x);
                next.push_back(w);
            }
        all = std::move(next);
    }
    for (const auto& v : all) {
        if (is_zero(v)) continue;
        const auto p = normalize(f, v);
        const auto mons = quadric_monomials(f, p);
        bool ok = true;
        for (std::size_t r = 0; r < ideal.basis.rows(); ++r) ok = ok && inner_product(f, ideal.basis.row(r), mons) == 0;
        if (ok) out.insert(p);
    }
    return out;
}

}  // namespace

TEST(Hull, ReedSolomonConic) {
    auto c = rs(7, 3);
    auto r = hull_report(c);
    EXPECT_EQ(r.k, 3u);
    EXPECT_EQ(r.dim_square, 5u);
    EXPECT_EQ(r.dim_i2, 1u);
    EXPECT_EQ(r.hull_count, 8u);
    EXPECT_TRUE(r.contains_generators);
    ASSERT_TRUE(r.known_count.has_value());
    EXPECT_EQ(*r.known_count, 8u);
    EXPECT_TRUE(*r.hull_equals_known);
    // The conic X0 X2 = X1^2 in monomial coordinates (1, x, x^2).
    const Field& f = *c.spec.field;
    for (const auto& p : r.hull.points) EXPECT_EQ(f.mul(p[0], p[2]), f.mul(p[1], p[1]));
    // The hypotheses deg G >= 2g + 2, 2 deg G < n hold for deg 2.
    EXPECT_TRUE(*r.hypotheses_met);
}

TEST(Hull, ReedSolomonElevenDegreeThree) {
    auto r = hull_report(rs(11, 4));
    EXPECT_EQ(r.dim_i2, 3u);
    EXPECT_EQ(r.hull_count, 12u);
    EXPECT_TRUE(*r.hull_equals_known);
}

TEST(Hull, PlaneAndLine) {
    auto f5 = Field::create(5, 1);
    auto ag = point_set_code(f5, plane_and_line_points(*f5));
    auto r = hull_report(ag);
    EXPECT_EQ(r.n, 36u);
    EXPECT_EQ(r.dim_i2, 2u);
    EXPECT_EQ(r.dim_square, 8u);
    EXPECT_EQ(r.dim_square, 2 * r.k);
    // I_2 = span{X0 X3, X1 X3}: plane X3 = 0 union line X0 = X1 = 0.
    Matrix expected(f5, 0, 10);
    Vector x0x3(10, 0), x1x3(10, 0);
    x0x3[3] = 1;  // lex order: 00 01 02 03 11 12 13 22 23 33
    x1x3[6] = 1;
    expected.append_row(x0x3);
    expected.append_row(x1x3);
    EXPECT_EQ(rref(r.ideal.basis).reduced, rref(expected).reduced);
    EXPECT_EQ(r.hull_count, 36u);
    EXPECT_TRUE(*r.hull_equals_known);
    // The plane and the line meet in (0:0:1:0), so C*C stays connected.
    ASSERT_TRUE(r.gamma.has_value());
    EXPECT_EQ(*r.gamma, 1);
}

TEST(Hull, HermitianBelowHypotheses) {
    auto h = hermitian_code(2, 6);
    auto r = hull_report(h);
    EXPECT_FALSE(*r.hypotheses_met);
    EXPECT_TRUE(r.contains_generators);
    EXPECT_EQ(r.dim_square + r.dim_i2, quadric_monomial_count(r.k));
}

TEST(Hull, HermitianHypothesesHold) {
    // q0 = 3: g = 3, deg 8 >= 2g + 2 and 16 < 27.
    auto h = hermitian_code(3, 8);
    auto r = hull_report(h);
    EXPECT_TRUE(*r.hypotheses_met);
    EXPECT_TRUE(*r.hull_equals_known);
    EXPECT_EQ(*r.known_count, 28u);
}

TEST(Hull, RandomCodeHasNoQuadrics) {
    auto f7 = Field::create(7, 1);
    std::size_t checked = 0;
    for (std::uint64_t seed = 0; checked < 3 && seed < 20; ++seed) {
        auto c = random_code(f7, 10, 4, seed);
        try {
            points_from_code(c);
        } catch (const Error&) {
            continue;
        }
        ++checked;
        auto r = hull_report(c);
        EXPECT_EQ(r.dim_i2, 0u);
        EXPECT_EQ(r.hull_count, 400u);  // (7^4 - 1) / 6
    }
    EXPECT_EQ(checked, 3u);
}

TEST(Hull, EnumerationMatchesOracle) {
    for (auto c : {rs(5, 3), rs(7, 4), hermitian_code(2, 4)}) {
        auto r = hull_report(c);
        EXPECT_EQ(std::set<Vector>(r.hull.points.begin(), r.hull.points.end()), hull_oracle(r.ideal));
    }
}

TEST(Hull, IdealVanishesOnPoints) {
    auto ag = rs(7, 3);
    auto ps = points_from_generator(ag.evaluation);
    auto ideal = quadric_ideal(ps);
    const Field& f = *ag.spec.field;
    for (const auto& p : ps.points) {
        const auto mons = quadric_monomials(f, p);
        for (std::size_t r = 0; r < ideal.basis.rows(); ++r) EXPECT_EQ(inner_product(f, ideal.basis.row(r), mons), 0u);
    }
}

TEST(Hull, ExactSequenceRandom) {
    std::size_t tested = 0;
    for (std::uint64_t seed = 0; tested < 100; ++seed) {
        auto f = Field::create(seed % 3 == 0 ? 5 : (seed % 3 == 1 ? 7 : 11), 1);
        auto c = random_code(f, 8 + seed % 8, 2 + seed % 4, seed);
        try {
            points_from_code(c);
        } catch (const Error&) {
            continue;
        }
        ++tested;
        EXPECT_TRUE(verify_exact_sequence(c));
    }
}

TEST(Hull, ExactSequenceFamilies) {
    // Smaller degrees repeat projective columns.
    for (long m = 3; m < 8; ++m) EXPECT_TRUE(verify_exact_sequence(hermitian_code(2, m).code));
    for (std::size_t k = 2; k < 7; ++k) EXPECT_TRUE(verify_exact_sequence(rs(7, k).code));
}

TEST(Hull, DependentColumns) {
    auto f5 = Field::create(5, 1);
    auto g = Matrix::from_rows(f5, {{1, 0, 2}, {0, 1, 4}}, 3);
    auto g2 = Matrix::from_rows(f5, {{1, 2, 0}, {0, 0, 1}}, 3);
    try {
        points_from_generator(g2);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::DependentColumns);
        EXPECT_NE(std::string(e.what()).find("columns 0 and 1"), std::string::npos);
    }
    EXPECT_EQ(points_from_generator(g).points.size(), 3u);
    auto zero_col = Matrix::from_rows(f5, {{1, 0}, {0, 0}}, 2);
    EXPECT_THROW(points_from_generator(zero_col), Error);
}

TEST(Hull, VeroneseOfRationalNormalCurve) {
    // Points (1, x, x^2) together with (0, 0, 1): I_2 of the conic is
    // spanned by X0 X2 - X1^2.
    auto ag = rs(5, 3);
    auto ideal = quadric_ideal(points_from_generator(ag.evaluation));
    ASSERT_EQ(ideal.basis.rows(), 1u);
    const Field& f = *ag.spec.field;
    auto row = normalize(f, ideal.basis.row(0));
    // order 00 01 02 11 12 22
    EXPECT_EQ(row, (Vector{0, 0, 1, f.neg(1), 0, 0}));
}

TEST(Hull, GammaConsistency) {
    auto h = hermitian_code(3, 7);
    auto r = hull_report(h);
    ASSERT_TRUE(r.gamma.has_value());
    EXPECT_EQ(*r.gamma, gamma(h.code));
    EXPECT_EQ(*r.gamma, 3);
}

TEST(Hull, TooLarge) {
    QuadricIdeal big{8, Matrix(Field::create(11, 1), 0, quadric_monomial_count(8))};
    try {
        hull_points(big);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::TooLargeToEnumerate);
    }
}
