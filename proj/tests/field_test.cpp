#include <gtest/gtest.h>

#include <random>
#include <set>

#include "starcode/field.hpp"

using namespace starcode;

namespace {

const std::vector<std::pair<std::uint32_t, std::uint32_t>> kSmallFields = {
    {2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}, {2, 3}, {3, 2}, {2, 4}, {5, 2}, {3, 3}, {7, 2}, {2, 6}};

}  // namespace

TEST(Field, SmallestIrreducibleModulus) {
    EXPECT_EQ(Field::create(2, 2)->modulus(), (std::vector<std::uint32_t>{1, 1, 1}));
    EXPECT_EQ(Field::create(3, 2)->modulus(), (std::vector<std::uint32_t>{1, 0, 1}));
    // x^3 + x + 1 is the smallest irreducible cubic over F_2.
    EXPECT_EQ(Field::create(2, 3)->modulus(), (std::vector<std::uint32_t>{1, 1, 0, 1}));
    auto f7 = Field::create(7, 1);
    EXPECT_TRUE(f7->is_prime_field());
    EXPECT_EQ(f7->q(), 7u);
}

TEST(Field, SpecExamples) {
    auto f2 = Field::create(2, 1);
    EXPECT_EQ(f2->add(1, 1), 0u);
    auto f4 = Field::create(2, 2);
    EXPECT_EQ(f4->mul(2, 2), 3u);  // x * x = x + 1
    auto f7 = Field::create(7, 1);
    EXPECT_EQ(f7->inv(3), 5u);
}

TEST(Field, ElementApiAndEnumerate) {
    auto f4 = Field::create(2, 2);
    auto all = enumerate(f4);
    ASSERT_EQ(all.size(), 4u);
    for (elem_t i = 0; i < 4; ++i) EXPECT_EQ(all[i].value(), i);
    EXPECT_EQ(mul(all[2], all[2]).value(), 3u);
    EXPECT_EQ(add(all[3], all[3]).value(), 0u);
    EXPECT_EQ((all[2] * inv(all[2])).value(), 1u);
    EXPECT_EQ(neg(all[1]).value(), 1u);

    auto f9 = enumerate(Field::create(3, 2));
    ASSERT_EQ(f9.size(), 9u);
    EXPECT_EQ(f9[0].value(), 0u);
    EXPECT_EQ(f9[1].value(), 1u);
}

TEST(Field, Errors) {
    auto expect_code = [](auto fn, Errc code) {
        try {
            fn();
            FAIL() << "expected " << errc_name(code);
        } catch (const Error& e) {
            EXPECT_EQ(e.code(), code);
        }
    };
    expect_code([] { Field::create(4, 1); }, Errc::NotPrime);
    expect_code([] { Field::create(2, 17); }, Errc::OrderTooLarge);
    expect_code([] { Field::create(257, 2); }, Errc::OrderTooLarge);
    expect_code([] { Field::create(5, 1)->inv(0); }, Errc::DivisionByZero);
    auto a = FieldElem(Field::create(5, 1), 2);
    auto b = FieldElem(Field::create(7, 1), 2);
    expect_code([&] { (void)(a + b); }, Errc::ContextMismatch);
    expect_code([&] { (void)(a * b); }, Errc::ContextMismatch);
    expect_code([] { Field::parse("6"); }, Errc::NotPrime);
    expect_code([] { Field::parse("x"); }, Errc::ParseError);
}

TEST(Field, Parse) {
    EXPECT_EQ(Field::parse("3^2")->q(), 9u);
    EXPECT_EQ(Field::parse("9")->m(), 2u);
    EXPECT_EQ(Field::parse("7")->name(), "7");
    EXPECT_EQ(Field::parse("2^4")->name(), "2^4");
    EXPECT_EQ(Field::parse("65536")->q(), 65536u);
}

TEST(Field, TablesAgreeWithPolynomialArithmetic) {
    for (auto [p, m] : kSmallFields) {
        auto f = Field::create(p, m);
        for (elem_t a = 0; a < f->q(); ++a)
            for (elem_t b = 0; b < f->q(); ++b) ASSERT_EQ(f->mul(a, b), f->mul_slow(a, b)) << f->name();
    }
    // Large fields: sampled pairs.
    for (auto [p, m] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 16}, {3, 10}, {251, 2}, {65521, 1}}) {
        auto f = Field::create(p, m);
        std::mt19937 rng(p * 31 + m);
        std::uniform_int_distribution<elem_t> d(0, f->q() - 1);
        for (int i = 0; i < 2000; ++i) {
            const elem_t a = d(rng), b = d(rng);
            ASSERT_EQ(f->mul(a, b), f->mul_slow(a, b)) << f->name();
            if (a) ASSERT_EQ(f->mul(a, f->inv(a)), 1u);
            ASSERT_EQ(f->add(f->sub(a, b), b), a);
        }
    }
}

TEST(Field, AxiomsExhaustive) {
    for (auto [p, m] : kSmallFields) {
        auto f = Field::create(p, m);
        const elem_t q = f->q();
        for (elem_t a = 0; a < q; ++a) {
            ASSERT_EQ(f->add(a, f->neg(a)), 0u);
            ASSERT_EQ(f->mul(a, 1), a);
            if (a) ASSERT_EQ(f->mul(a, f->inv(a)), 1u);
            for (elem_t b = 0; b < q; ++b) {
                ASSERT_EQ(f->add(a, b), f->add(b, a));
                ASSERT_EQ(f->mul(a, b), f->mul(b, a));
                for (elem_t c = 0; c < q; ++c) {
                    ASSERT_EQ(f->add(f->add(a, b), c), f->add(a, f->add(b, c)));
                    ASSERT_EQ(f->mul(f->mul(a, b), c), f->mul(a, f->mul(b, c)));
                    ASSERT_EQ(f->mul(a, f->add(b, c)), f->add(f->mul(a, b), f->mul(a, c)));
                }
            }
        }
    }
}

TEST(Field, FrobeniusIsAdditive) {
    for (auto [p, m] : kSmallFields) {
        auto f = Field::create(p, m);
        for (elem_t a = 0; a < f->q(); ++a)
            for (elem_t b = 0; b < f->q(); ++b)
                ASSERT_EQ(f->pow(f->add(a, b), p), f->add(f->pow(a, p), f->pow(b, p)));
    }
}

TEST(Field, MultiplicativeGroupIsCyclic) {
    for (auto [p, m] : kSmallFields) {
        auto f = Field::create(p, m);
        const elem_t g = f->primitive();
        std::set<elem_t> powers;
        elem_t x = 1;
        for (elem_t i = 0; i + 1 < f->q(); ++i) {
            powers.insert(x);
            x = f->mul(x, g);
        }
        EXPECT_EQ(powers.size(), f->q() - 1) << f->name();
        EXPECT_EQ(x, 1u);
    }
}

TEST(Field, PrimeSubfieldSitsAtLowEncodings) {
    auto f = Field::create(3, 2);
    for (elem_t a = 0; a < 3; ++a)
        for (elem_t b = 0; b < 3; ++b) {
            EXPECT_EQ(f->add(a, b), (a + b) % 3);
            EXPECT_EQ(f->mul(a, b), (a * b) % 3);
        }
}
