#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <span>
#include <vector>

#include "starcode/error.hpp"
#include "starcode/field.hpp"
#include "starcode/matrix.hpp"

namespace starcode {

/// Exhaustive enumeration guard for minimum distance and audits: q^k <= 2^20.
inline constexpr std::uint64_t kEnumerationLimit = std::uint64_t{1} << 20;

/// A linear code held by its canonical (RREF) generator matrix. Two codes
/// are equal iff their generators are equal.
class LinearCode {
public:
    static LinearCode from_generator(const Matrix& m) {
        auto res = rref(m);
        return LinearCode(res.reduced.select_rows(0, res.rank), std::move(res.pivots));
    }

    static LinearCode zero(FieldPtr field, std::size_t n) { return LinearCode(Matrix(std::move(field), 0, n), {}); }

    static LinearCode full(FieldPtr field, std::size_t n) {
        std::vector<std::size_t> piv(n);
        std::iota(piv.begin(), piv.end(), std::size_t{0});
        return LinearCode(Matrix::identity(std::move(field), n), std::move(piv));
    }

    const FieldPtr& field() const noexcept { return gen_.field(); }
    std::size_t n() const noexcept { return gen_.cols(); }
    std::size_t k() const noexcept { return gen_.rows(); }
    const Matrix& generator() const noexcept { return gen_; }
    const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

    bool contains(std::span<const elem_t> v) const {
        if (v.size() != n()) throw Error(Errc::LengthMismatch, "vector length does not match code length");
        return is_zero(reduce_against(gen_, pivots_, v));
    }

    /// message * G.
    Vector encode(std::span<const elem_t> message) const { return combine_rows(gen_, message); }

    /// Coordinates of a codeword in the RREF basis (the entries at the pivot
    /// columns).
    Vector coordinates(std::span<const elem_t> codeword) const {
        Vector out(k());
        for (std::size_t i = 0; i < k(); ++i) out[i] = codeword[pivots_[i]];
        return out;
    }

    /// Contains this code in other?
    bool is_subcode_of(const LinearCode& other) const {
        for (std::size_t i = 0; i < k(); ++i)
            if (!other.contains(gen_.row(i))) return false;
        return true;
    }

    friend bool operator==(const LinearCode& a, const LinearCode& b) { return a.gen_ == b.gen_; }

private:
    LinearCode(Matrix gen, std::vector<std::size_t> pivots) : gen_(std::move(gen)), pivots_(std::move(pivots)) {}

    Matrix gen_;
    std::vector<std::size_t> pivots_;
};

inline void require_compatible(const LinearCode& a, const LinearCode& b) {
    require_same_field(*a.field(), *b.field());
    if (a.n() != b.n())
        throw Error(Errc::LengthMismatch, "code lengths " + std::to_string(a.n()) + " and " + std::to_string(b.n()));
}

inline std::size_t weight(std::span<const elem_t> v) {
    return static_cast<std::size_t>(std::count_if(v.begin(), v.end(), [](elem_t x) { return x != 0; }));
}

inline elem_t inner_product(const Field& f, std::span<const elem_t> a, std::span<const elem_t> b) {
    elem_t acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i) acc = f.add(acc, f.mul(a[i], b[i]));
    return acc;
}

/// Component-wise product.
inline Vector star(const Field& f, std::span<const elem_t> a, std::span<const elem_t> b) {
    Vector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = f.mul(a[i], b[i]);
    return out;
}

/// q^k, saturated at limit + 1.
inline std::uint64_t codeword_count(const LinearCode& c, std::uint64_t limit = kEnumerationLimit) {
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < c.k(); ++i) {
        total *= c.field()->q();
        if (total > limit) return limit + 1;
    }
    return total;
}

/// Calls fn(codeword) for all q^k codewords (including zero) in odometer
/// order over the RREF coordinates. fn returns false to stop early.
template <typename Fn>
void for_each_codeword(const LinearCode& c, Fn&& fn, std::uint64_t limit = kEnumerationLimit) {
    if (codeword_count(c, limit) > limit)
        throw Error(Errc::TooLargeToEnumerate, "q^k = " + std::to_string(c.field()->q()) + "^" + std::to_string(c.k()) +
                                                   " exceeds enumeration limit");
    const Field& f = *c.field();
    const Matrix& g = c.generator();
    const std::size_t k = c.k(), n = c.n();
    const elem_t q = f.q();
    std::vector<elem_t> digits(k, 0);
    Vector word(n, 0);
    if (!fn(std::span<const elem_t>(word))) return;
    while (true) {
        std::size_t j = 0;
        while (j < k && digits[j] == q - 1) {
            // Wrap digit j back to zero: subtract (q-1) * row_j.
            auto row = g.row(j);
            for (std::size_t i = 0; i < n; ++i)
                if (row[i]) word[i] = f.sub(word[i], f.mul(q - 1, row[i]));
            digits[j] = 0;
            ++j;
        }
        if (j == k) return;
        auto row = g.row(j);
        const elem_t old = digits[j], nxt = old + 1;
        for (std::size_t i = 0; i < n; ++i)
            if (row[i]) word[i] = f.add(f.sub(word[i], f.mul(old, row[i])), f.mul(nxt, row[i]));
        digits[j] = nxt;
        if (!fn(std::span<const elem_t>(word))) return;
    }
}

/// Exact minimum distance by exhaustive enumeration (requires q^k <= 2^20).
inline std::size_t min_distance(const LinearCode& c) {
    if (c.k() == 0) throw Error(Errc::ZeroCode, "minimum distance of the zero code");
    std::size_t best = c.n();
    for_each_codeword(c, [&](std::span<const elem_t> w) {
        const auto wt = weight(w);
        if (wt != 0 && wt < best) best = wt;
        return best > 1;
    });
    return best;
}

inline LinearCode dual(const LinearCode& c) { return LinearCode::from_generator(kernel(c.generator())); }

/// Span of all component-wise products a_i * b_j of basis rows.
inline LinearCode star_product(const LinearCode& a, const LinearCode& b) {
    require_compatible(a, b);
    const Field& f = *a.field();
    const bool same = a == b;
    Matrix products(a.field(), 0, a.n());
    for (std::size_t i = 0; i < a.k(); ++i)
        for (std::size_t j = same ? i : 0; j < b.k(); ++j)
            products.append_row(star(f, a.generator().row(i), b.generator().row(j)));
    return LinearCode::from_generator(products);
}

inline LinearCode square(const LinearCode& c) { return star_product(c, c); }

inline LinearCode intersection(const LinearCode& a, const LinearCode& b) {
    require_compatible(a, b);
    return LinearCode::from_generator(row_space_intersection(a.generator(), b.generator()));
}

struct Decomposition {
    bool degenerate = false;
    std::vector<LinearCode> components;
};

/// Finest decomposition of C into subcodes with pairwise disjoint supports.
///
/// If C = C1 + C2 with disjoint supports, every RREF basis row lies wholly
/// in one summand: its part in the other summand is a codeword vanishing on
/// all of that summand's pivot columns, hence zero. So the components are
/// the connected classes of basis rows under "supports intersect".
inline Decomposition is_degenerate(const LinearCode& c) {
    if (c.k() == 0) throw Error(Errc::ZeroCode, "degeneracy of the zero code");
    const std::size_t k = c.k(), n = c.n();
    std::vector<std::size_t> parent(k);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    std::vector<std::size_t> owner(n, k);  // k = no row yet
    for (std::size_t r = 0; r < k; ++r) {
        auto row = c.generator().row(r);
        for (std::size_t i = 0; i < n; ++i) {
            if (row[i] == 0) continue;
            if (owner[i] == k)
                owner[i] = r;
            else
                parent[find(r)] = find(owner[i]);
        }
    }
    std::vector<std::vector<std::size_t>> groups;
    std::vector<std::size_t> group_of(k, k);
    for (std::size_t r = 0; r < k; ++r) {
        const auto root = find(r);
        if (group_of[root] == k) {
            group_of[root] = groups.size();
            groups.emplace_back();
        }
        groups[group_of[root]].push_back(r);
    }
    Decomposition out;
    out.degenerate = groups.size() > 1;
    for (const auto& grp : groups) {
        Matrix m(c.field(), 0, n);
        for (auto r : grp) m.append_row(c.generator().row(r));
        out.components.push_back(LinearCode::from_generator(m));
    }
    return out;
}

/// dim C*C - (2 dim C - 1); requires a non-degenerate square.
inline long gamma(const LinearCode& c) {
    const auto sq = square(c);
    if (sq.k() == 0 || is_degenerate(sq).degenerate)
        throw Error(Errc::DegenerateSquare, "gamma is undefined when C*C is degenerate");
    return static_cast<long>(sq.k()) - (2 * static_cast<long>(c.k()) - 1);
}

namespace detail {

inline std::vector<std::size_t> complement(std::size_t n, std::span<const std::size_t> drop) {
    std::vector<bool> gone(n, false);
    for (auto i : drop) {
        if (i >= n) throw Error(Errc::InvalidArgument, "coordinate " + std::to_string(i) + " out of range");
        gone[i] = true;
    }
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < n; ++i)
        if (!gone[i]) keep.push_back(i);
    return keep;
}

}  // namespace detail

/// Projection deleting the coordinates in drop.
inline LinearCode puncture(const LinearCode& c, std::span<const std::size_t> drop) {
    const auto keep = detail::complement(c.n(), drop);
    return LinearCode::from_generator(c.generator().select_columns(keep));
}

/// Subcode of codewords vanishing on every coordinate in zeros, kept at
/// full length n.
inline LinearCode vanishing_subcode(const LinearCode& c, std::span<const std::size_t> zeros) {
    detail::complement(c.n(), zeros);  // range check
    if (zeros.empty() || c.k() == 0) return c;
    // lambda * G restricted to zeros = 0  <=>  lambda in ker(G_I^T).
    const Matrix g_i = c.generator().select_columns(zeros);
    const Matrix lambdas = kernel(g_i.transpose());
    return LinearCode::from_generator(multiply(lambdas, c.generator()));
}

/// Classical shortening: codewords vanishing on drop, with those
/// coordinates deleted.
inline LinearCode shorten(const LinearCode& c, std::span<const std::size_t> drop) {
    return puncture(vanishing_subcode(c, drop), drop);
}

/// Codewords of C (over F_{p^m}) whose entries all lie in the prime field F_p.
/// Each parity check over F_{p^m} expands into m checks over F_p.
inline LinearCode subfield_subcode(const LinearCode& c, const FieldPtr& target) {
    const Field& big = *c.field();
    if (big.m() < 2 || !target->is_prime_field() || target->p() != big.p())
        throw Error(Errc::NotAnExtension, "F_" + big.name() + " is not a proper extension of F_" + target->name());
    const Matrix h = dual(c).generator();
    Matrix checks(target, 0, c.n());
    Vector row(c.n());
    for (std::size_t r = 0; r < h.rows(); ++r)
        for (std::uint32_t l = 0; l < big.m(); ++l) {
            for (std::size_t j = 0; j < c.n(); ++j) row[j] = big.digit(h(r, j), l);
            checks.append_row(row);
        }
    return LinearCode::from_generator(kernel(checks));
}

namespace detail {

inline Matrix random_matrix(const FieldPtr& field, std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
    std::uniform_int_distribution<elem_t> dist(0, field->q() - 1);
    std::vector<elem_t> data(rows * cols);
    for (auto& x : data) x = dist(rng);
    return Matrix(field, rows, cols, std::move(data));
}

inline Matrix random_full_rank(const FieldPtr& field, std::size_t rows, std::size_t cols, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    while (true) {
        auto m = random_matrix(field, rows, cols, rng);
        if (rank(m) == rows) return m;
    }
}

}  // namespace detail

/// Uniformly random k-dimensional subspace of F_q^n.
inline LinearCode random_code(const FieldPtr& field, std::size_t n, std::size_t k, std::uint64_t seed) {
    if (k > n) throw Error(Errc::InvalidArgument, "k > n");
    return LinearCode::from_generator(detail::random_full_rank(field, k, n, seed));
}

/// Uniformly random k'-dimensional subcode of C.
inline LinearCode random_subcode(const LinearCode& c, std::size_t k_sub, std::uint64_t seed) {
    if (k_sub > c.k()) throw Error(Errc::InvalidArgument, "subcode dimension exceeds k");
    const auto coeffs = detail::random_full_rank(c.field(), k_sub, c.k(), seed);
    return LinearCode::from_generator(multiply(coeffs, c.generator()));
}

/// Image of C under a coordinate permutation: word w maps to w' with
/// w'[i] = w[perm[i]].
inline LinearCode permute(const LinearCode& c, std::span<const std::size_t> perm) {
    return LinearCode::from_generator(c.generator().select_columns(perm));
}

/// Image of C under component-wise scaling by x.
inline LinearCode scale(const LinearCode& c, std::span<const elem_t> x) {
    Matrix g = c.generator();
    const Field& f = *c.field();
    for (std::size_t r = 0; r < g.rows(); ++r)
        for (std::size_t i = 0; i < g.cols(); ++i) g(r, i) = f.mul(g(r, i), x[i]);
    return LinearCode::from_generator(g);
}

}  // namespace starcode
