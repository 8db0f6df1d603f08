#pragma once

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "starcode/error.hpp"

namespace starcode {

/// Integer encoding of a field element: sum of a_i * p^i over the
/// coefficient vector (a_0, ..., a_{m-1}) of its polynomial representative.
using elem_t = std::uint32_t;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

inline constexpr std::uint64_t kMaxFieldOrder = 65536;

namespace detail {

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

// Dense polynomials over F_p, constant term first, no trailing zeros
// (the zero polynomial is empty).
using Poly = std::vector<std::uint32_t>;

inline void poly_trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline std::uint32_t inv_mod_p(std::uint32_t a, std::uint32_t p) {
    // Fermat: a^(p-2)
    std::uint64_t result = 1, base = a % p;
    std::uint32_t e = p - 2;
    while (e) {
        if (e & 1) result = result * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return static_cast<std::uint32_t>(result);
}

// Remainder of a modulo a nonzero b.
inline Poly poly_mod(Poly a, const Poly& b, std::uint32_t p) {
    poly_trim(a);
    const std::size_t db = b.size() - 1;
    const std::uint32_t lead_inv = inv_mod_p(b.back(), p);
    while (a.size() > db) {
        const std::size_t shift = a.size() - 1 - db;
        const std::uint32_t factor = static_cast<std::uint32_t>(
            static_cast<std::uint64_t>(a.back()) * lead_inv % p);
        for (std::size_t i = 0; i <= db; ++i) {
            std::uint64_t sub = static_cast<std::uint64_t>(factor) * b[i] % p;
            a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
        }
        poly_trim(a);
    }
    return a;
}

// Irreducibility by trial division against every monic polynomial of
// degree 1..deg/2.
inline bool is_irreducible(const Poly& f, std::uint32_t p) {
    const std::size_t deg = f.size() - 1;
    for (std::size_t d = 1; d <= deg / 2; ++d) {
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < d; ++i) count *= p;
        for (std::uint64_t c = 0; c < count; ++c) {
            Poly g(d + 1);
            std::uint64_t v = c;
            for (std::size_t i = 0; i < d; ++i) {
                g[i] = static_cast<std::uint32_t>(v % p);
                v /= p;
            }
            g[d] = 1;
            if (poly_mod(f, g, p).empty()) return false;
        }
    }
    return true;
}

}  // namespace detail

/// Finite field F_{p^m} with q = p^m <= 2^16.
///
/// The defining modulus is the lexicographically smallest monic irreducible
/// polynomial of degree m, where the coefficient vector (a_0, ..., a_{m-1})
/// is read as the base-p integer sum a_i p^i. Elements are integers in
/// [0, q) using the same base-p digit encoding, so the prime subfield F_p
/// sits at encodings 0..p-1.
///
/// Instances are immutable once created and are shared through FieldPtr.
class Field {
public:
    static FieldPtr create(std::uint32_t p, std::uint32_t m) {
        if (!detail::is_prime(p)) throw Error(Errc::NotPrime, std::to_string(p) + " is not prime");
        if (m == 0) throw Error(Errc::InvalidArgument, "extension degree must be >= 1");
        std::uint64_t q = 1;
        for (std::uint32_t i = 0; i < m; ++i) {
            q *= p;
            if (q > kMaxFieldOrder)
                throw Error(Errc::OrderTooLarge, std::to_string(p) + "^" + std::to_string(m) + " exceeds 2^16");
        }
        return std::shared_ptr<const Field>(new Field(p, m, static_cast<std::uint32_t>(q)));
    }

    /// Field from text: "p^m", or a decimal prime power such as "7" or "9".
    static FieldPtr parse(std::string_view text) {
        auto to_u = [&](std::string_view s) -> std::uint64_t {
            if (s.empty() || s.size() > 9) throw Error(Errc::ParseError, "bad field '" + std::string(text) + "'");
            std::uint64_t v = 0;
            for (char c : s) {
                if (c < '0' || c > '9') throw Error(Errc::ParseError, "bad field '" + std::string(text) + "'");
                v = v * 10 + static_cast<std::uint64_t>(c - '0');
            }
            return v;
        };
        if (auto caret = text.find('^'); caret != std::string_view::npos) {
            auto p = to_u(text.substr(0, caret));
            auto m = to_u(text.substr(caret + 1));
            if (m > 64) throw Error(Errc::OrderTooLarge, std::string(text));
            return create(static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(m));
        }
        const std::uint64_t q = to_u(text);
        if (q > kMaxFieldOrder) throw Error(Errc::OrderTooLarge, std::string(text));
        if (q < 2) throw Error(Errc::NotPrime, std::string(text));
        // Decompose q as a prime power.
        auto factors = detail::prime_factors(q);
        if (factors.size() != 1) throw Error(Errc::NotPrime, std::string(text) + " is not a prime power");
        std::uint32_t m = 0;
        for (std::uint64_t v = q; v > 1; v /= factors[0]) ++m;
        return create(static_cast<std::uint32_t>(factors[0]), m);
    }

    std::uint32_t p() const noexcept { return p_; }
    std::uint32_t m() const noexcept { return m_; }
    std::uint32_t q() const noexcept { return q_; }
    bool is_prime_field() const noexcept { return m_ == 1; }

    /// Monic modulus, constant term first, length m + 1. For prime fields
    /// this is the placeholder x.
    const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }

    /// "p^m", or the decimal prime for prime fields.
    std::string name() const {
        return m_ == 1 ? std::to_string(p_) : std::to_string(p_) + "^" + std::to_string(m_);
    }

    bool same_as(const Field& other) const noexcept { return p_ == other.p_ && m_ == other.m_; }

    elem_t zero() const noexcept { return 0; }
    elem_t one() const noexcept { return 1; }
    elem_t primitive() const noexcept { return primitive_; }

    bool contains(elem_t a) const noexcept { return a < q_; }

    /// Coefficient of x^i in the polynomial representative of a.
    std::uint32_t digit(elem_t a, std::uint32_t i) const noexcept {
        for (std::uint32_t j = 0; j < i; ++j) a /= p_;
        return a % p_;
    }

    elem_t add(elem_t a, elem_t b) const noexcept {
        if (p_ == 2) return a ^ b;
        if (m_ == 1) {
            elem_t s = a + b;
            return s >= p_ ? s - p_ : s;
        }
        if (!add_table_.empty()) return add_table_[a * q_ + b];
        return add_digits(a, b);
    }

    elem_t neg(elem_t a) const noexcept {
        if (p_ == 2) return a;
        if (m_ == 1) return a == 0 ? 0 : p_ - a;
        elem_t out = 0, scale = 1;
        for (std::uint32_t i = 0; i < m_; ++i) {
            elem_t d = a % p_;
            a /= p_;
            out += (d == 0 ? 0 : p_ - d) * scale;
            scale *= p_;
        }
        return out;
    }

    elem_t sub(elem_t a, elem_t b) const noexcept { return add(a, neg(b)); }

    elem_t mul(elem_t a, elem_t b) const noexcept {
        if (a == 0 || b == 0) return 0;
        if (m_ == 1) return static_cast<elem_t>(static_cast<std::uint64_t>(a) * b % p_);
        return exp_[log_[a] + log_[b]];
    }

    elem_t inv(elem_t a) const {
        if (a == 0) throw Error(Errc::DivisionByZero, "inverse of zero in F_" + name());
        if (m_ == 1) return detail::inv_mod_p(a, p_);
        return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
    }

    elem_t div(elem_t a, elem_t b) const { return mul(a, inv(b)); }

    elem_t pow(elem_t a, std::uint64_t e) const noexcept {
        elem_t result = 1;
        while (e) {
            if (e & 1) result = mul(result, a);
            a = mul(a, a);
            e >>= 1;
        }
        return result;
    }

    /// Reference multiplication by polynomial product and reduction; does
    /// not use the log tables.
    elem_t mul_slow(elem_t a, elem_t b) const {
        if (m_ == 1) return static_cast<elem_t>(static_cast<std::uint64_t>(a) * b % p_);
        detail::Poly pa = to_poly(a), pb = to_poly(b);
        if (pa.empty() || pb.empty()) return 0;
        detail::Poly prod(pa.size() + pb.size() - 1, 0);
        for (std::size_t i = 0; i < pa.size(); ++i)
            for (std::size_t j = 0; j < pb.size(); ++j)
                prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + static_cast<std::uint64_t>(pa[i]) * pb[j]) % p_);
        return from_poly(detail::poly_mod(std::move(prod), modulus_, p_));
    }

    /// Elements in encoding order 0, ..., q - 1.
    std::vector<elem_t> elements() const {
        std::vector<elem_t> out(q_);
        for (elem_t i = 0; i < q_; ++i) out[i] = i;
        return out;
    }

private:
    Field(std::uint32_t p, std::uint32_t m, std::uint32_t q) : p_(p), m_(m), q_(q) {
        if (m == 1) {
            modulus_ = {0, 1};
        } else {
            bool found = false;
            for (std::uint32_t c = 0; c < q && !found; ++c) {
                detail::Poly f(m + 1);
                std::uint32_t v = c;
                for (std::uint32_t i = 0; i < m; ++i) {
                    f[i] = v % p;
                    v /= p;
                }
                f[m] = 1;
                if (detail::is_irreducible(f, p)) {
                    modulus_ = std::move(f);
                    found = true;
                }
            }
            if (!found) {
                std::fprintf(stderr, "starcode: no irreducible polynomial of degree %u over F_%u\n", m, p);
                std::abort();
            }
        }
        primitive_ = find_primitive();
        build_tables();
    }

    detail::Poly to_poly(elem_t a) const {
        detail::Poly out(m_);
        for (std::uint32_t i = 0; i < m_; ++i) {
            out[i] = a % p_;
            a /= p_;
        }
        detail::poly_trim(out);
        return out;
    }

    elem_t from_poly(const detail::Poly& a) const {
        elem_t out = 0, scale = 1;
        for (std::size_t i = 0; i < a.size() && i < m_; ++i) {
            out += a[i] * scale;
            scale *= p_;
        }
        return out;
    }

    elem_t add_digits(elem_t a, elem_t b) const noexcept {
        elem_t out = 0, scale = 1;
        for (std::uint32_t i = 0; i < m_; ++i) {
            elem_t d = a % p_ + b % p_;
            if (d >= p_) d -= p_;
            out += d * scale;
            a /= p_;
            b /= p_;
            scale *= p_;
        }
        return out;
    }

    elem_t pow_slow(elem_t a, std::uint64_t e) const {
        elem_t result = 1;
        while (e) {
            if (e & 1) result = mul_slow(result, a);
            a = mul_slow(a, a);
            e >>= 1;
        }
        return result;
    }

    elem_t find_primitive() const {
        if (q_ == 2) return 1;
        const auto factors = detail::prime_factors(q_ - 1);
        for (elem_t g = 2; g < q_; ++g) {
            bool ok = true;
            for (auto r : factors)
                if (pow_slow(g, (q_ - 1) / r) == 1) {
                    ok = false;
                    break;
                }
            if (ok) return g;
        }
        std::fprintf(stderr, "starcode: no primitive element in F_%u\n", q_);
        std::abort();
    }

    void build_tables() {
        if (m_ == 1) return;
        exp_.assign(2 * (q_ - 1), 0);
        log_.assign(q_, 0);
        elem_t x = 1;
        for (std::uint32_t i = 0; i < q_ - 1; ++i) {
            exp_[i] = x;
            exp_[i + q_ - 1] = x;
            log_[x] = i;
            x = mul_slow(x, primitive_);
        }
        if (p_ != 2 && q_ <= 256) {
            add_table_.resize(static_cast<std::size_t>(q_) * q_);
            for (elem_t a = 0; a < q_; ++a)
                for (elem_t b = 0; b < q_; ++b) add_table_[a * q_ + b] = static_cast<std::uint16_t>(add_digits(a, b));
        }
    }

    std::uint32_t p_, m_, q_;
    std::vector<std::uint32_t> modulus_;
    elem_t primitive_ = 1;
    std::vector<elem_t> exp_;
    std::vector<std::uint32_t> log_;
    std::vector<std::uint16_t> add_table_;
};

/// A field element bound to its field; arithmetic across fields throws
/// ContextMismatch.
class FieldElem {
public:
    FieldElem(FieldPtr field, elem_t value) : field_(std::move(field)), value_(value) {
        if (!field_->contains(value_))
            throw Error(Errc::InvalidArgument, "encoding " + std::to_string(value_) + " outside F_" + field_->name());
    }

    elem_t value() const noexcept { return value_; }
    const FieldPtr& field() const noexcept { return field_; }

    friend FieldElem operator+(const FieldElem& a, const FieldElem& b) {
        a.check(b);
        return {a.field_, a.field_->add(a.value_, b.value_)};
    }
    friend FieldElem operator-(const FieldElem& a, const FieldElem& b) {
        a.check(b);
        return {a.field_, a.field_->sub(a.value_, b.value_)};
    }
    friend FieldElem operator*(const FieldElem& a, const FieldElem& b) {
        a.check(b);
        return {a.field_, a.field_->mul(a.value_, b.value_)};
    }
    FieldElem operator-() const { return {field_, field_->neg(value_)}; }
    FieldElem inv() const { return {field_, field_->inv(value_)}; }

    friend bool operator==(const FieldElem& a, const FieldElem& b) {
        return a.field_->same_as(*b.field_) && a.value_ == b.value_;
    }

private:
    void check(const FieldElem& other) const {
        if (!field_->same_as(*other.field_))
            throw Error(Errc::ContextMismatch, "F_" + field_->name() + " vs F_" + other.field_->name());
    }

    FieldPtr field_;
    elem_t value_;
};

inline FieldElem add(const FieldElem& a, const FieldElem& b) { return a + b; }
inline FieldElem mul(const FieldElem& a, const FieldElem& b) { return a * b; }
inline FieldElem neg(const FieldElem& a) { return -a; }
inline FieldElem inv(const FieldElem& a) { return a.inv(); }

/// All elements of the field, in encoding order.
inline std::vector<FieldElem> enumerate(const FieldPtr& field) {
    std::vector<FieldElem> out;
    out.reserve(field->q());
    for (elem_t v = 0; v < field->q(); ++v) out.emplace_back(field, v);
    return out;
}

}  // namespace starcode
