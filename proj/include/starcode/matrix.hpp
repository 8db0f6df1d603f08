#pragma once

#include <algorithm>
#include <cstddef>
#include <istream>
#include <iterator>
#include <optional>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "starcode/error.hpp"
#include "starcode/field.hpp"

namespace starcode {

using Vector = std::vector<elem_t>;

/// Dense row-major matrix over a finite field.
class Matrix {
public:
    Matrix(FieldPtr field, std::size_t rows, std::size_t cols)
        : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

    Matrix(FieldPtr field, std::size_t rows, std::size_t cols, std::vector<elem_t> data)
        : field_(std::move(field)), rows_(rows), cols_(cols), data_(std::move(data)) {
        if (data_.size() != rows_ * cols_) throw Error(Errc::ShapeMismatch, "entry count does not match shape");
        for (auto v : data_)
            if (!field_->contains(v)) throw Error(Errc::InvalidArgument, "entry outside F_" + field_->name());
    }

    static Matrix from_rows(FieldPtr field, const std::vector<Vector>& rows, std::size_t cols) {
        Matrix out(std::move(field), 0, cols);
        for (const auto& r : rows) out.append_row(r);
        return out;
    }

    static Matrix identity(FieldPtr field, std::size_t n) {
        Matrix out(std::move(field), n, n);
        for (std::size_t i = 0; i < n; ++i) out(i, i) = 1;
        return out;
    }

    const FieldPtr& field() const noexcept { return field_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool empty() const noexcept { return rows_ == 0; }

    elem_t& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }
    elem_t operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }

    std::span<elem_t> row(std::size_t r) noexcept { return {data_.data() + r * cols_, cols_}; }
    std::span<const elem_t> row(std::size_t r) const noexcept { return {data_.data() + r * cols_, cols_}; }
    Vector row_vector(std::size_t r) const {
        auto s = row(r);
        return {s.begin(), s.end()};
    }
    Vector column(std::size_t c) const {
        Vector out(rows_);
        for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
        return out;
    }

    const std::vector<elem_t>& data() const noexcept { return data_; }

    void append_row(std::span<const elem_t> v) {
        if (v.size() != cols_) throw Error(Errc::LengthMismatch, "row length " + std::to_string(v.size()) + " != " + std::to_string(cols_));
        for (auto x : v)
            if (!field_->contains(x)) throw Error(Errc::InvalidArgument, "entry outside F_" + field_->name());
        data_.insert(data_.end(), v.begin(), v.end());
        ++rows_;
    }

    Matrix transpose() const {
        Matrix out(field_, cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
        return out;
    }

    Matrix select_columns(std::span<const std::size_t> idx) const {
        Matrix out(field_, rows_, idx.size());
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t j = 0; j < idx.size(); ++j) out(r, j) = (*this)(r, idx[j]);
        return out;
    }

    Matrix select_rows(std::size_t first, std::size_t count) const {
        Matrix out(field_, count, cols_);
        std::copy_n(data_.begin() + static_cast<std::ptrdiff_t>(first * cols_), count * cols_, out.data_.begin());
        return out;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.field_->same_as(*b.field_) && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    FieldPtr field_;
    std::size_t rows_, cols_;
    std::vector<elem_t> data_;
};

inline void require_same_field(const Field& a, const Field& b) {
    if (!a.same_as(b)) throw Error(Errc::ContextMismatch, "F_" + a.name() + " vs F_" + b.name());
}

/// Stack the rows of a on top of the rows of b.
inline Matrix vstack(const Matrix& a, const Matrix& b) {
    require_same_field(*a.field(), *b.field());
    if (a.cols() != b.cols()) throw Error(Errc::ShapeMismatch, "column counts differ");
    std::vector<elem_t> data = a.data();
    data.insert(data.end(), b.data().begin(), b.data().end());
    return Matrix(a.field(), a.rows() + b.rows(), a.cols(), std::move(data));
}

/// M * v^T.
inline Vector multiply(const Matrix& m, std::span<const elem_t> v) {
    if (v.size() != m.cols()) throw Error(Errc::LengthMismatch, "vector length does not match columns");
    const Field& f = *m.field();
    Vector out(m.rows(), 0);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        elem_t acc = 0;
        for (std::size_t c = 0; c < m.cols(); ++c) acc = f.add(acc, f.mul(m(r, c), v[c]));
        out[r] = acc;
    }
    return out;
}

/// a * b.
inline Matrix multiply(const Matrix& a, const Matrix& b) {
    require_same_field(*a.field(), *b.field());
    if (a.cols() != b.rows()) throw Error(Errc::ShapeMismatch, "inner dimensions differ");
    const Field& f = *a.field();
    Matrix out(a.field(), a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t l = 0; l < a.cols(); ++l) {
            const elem_t x = a(i, l);
            if (x == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) = f.add(out(i, j), f.mul(x, b(l, j)));
        }
    return out;
}

/// Row vector times matrix: sum of coeffs[i] * row i.
inline Vector combine_rows(const Matrix& m, std::span<const elem_t> coeffs) {
    if (coeffs.size() != m.rows()) throw Error(Errc::LengthMismatch, "coefficient count does not match rows");
    const Field& f = *m.field();
    Vector out(m.cols(), 0);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        if (coeffs[r] == 0) continue;
        auto row = m.row(r);
        for (std::size_t c = 0; c < m.cols(); ++c) out[c] = f.add(out[c], f.mul(coeffs[r], row[c]));
    }
    return out;
}

struct Rref {
    Matrix reduced;
    std::vector<std::size_t> pivots;
    std::size_t rank = 0;
};

/// Reduced row echelon form by Gauss-Jordan elimination. The pivot in each
/// column is the first nonzero entry at or below the current row.
inline Rref rref(Matrix m) {
    const Field& f = *m.field();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t pr = r;
        while (pr < m.rows() && m(pr, c) == 0) ++pr;
        if (pr == m.rows()) continue;
        if (pr != r) std::swap_ranges(m.row(pr).begin(), m.row(pr).end(), m.row(r).begin());
        const elem_t s = f.inv(m(r, c));
        if (s != 1)
            for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = f.mul(m(r, j), s);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c) == 0) continue;
            const elem_t factor = f.neg(m(i, c));
            for (std::size_t j = c; j < m.cols(); ++j)
                if (m(r, j) != 0) m(i, j) = f.add(m(i, j), f.mul(factor, m(r, j)));
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(m), pivots, pivots.size()};
}

inline std::size_t rank(const Matrix& m) { return rref(m).rank; }

/// Nonzero rows of the RREF: the canonical basis of the row space.
inline Matrix row_basis(const Matrix& m) {
    auto res = rref(m);
    return res.reduced.select_rows(0, res.rank);
}

/// RREF basis of {v : M v^T = 0}; it has cols - rank rows.
inline Matrix kernel(const Matrix& m) {
    auto [r, pivots, rk] = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : pivots) is_pivot[p] = true;
    const Field& f = *m.field();
    Matrix basis(m.field(), 0, m.cols());
    Vector v(m.cols());
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::fill(v.begin(), v.end(), 0);
        v[free] = 1;
        for (std::size_t i = 0; i < rk; ++i) v[pivots[i]] = f.neg(r(i, free));
        basis.append_row(v);
    }
    return row_basis(basis);
}

/// One solution of M x^T = b^T with free variables set to zero, or nullopt
/// when the system is inconsistent.
inline std::optional<Vector> solve(const Matrix& m, std::span<const elem_t> b) {
    if (b.size() != m.rows()) throw Error(Errc::LengthMismatch, "right-hand side length does not match rows");
    Matrix aug(m.field(), m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
        aug(i, m.cols()) = b[i];
    }
    auto [r, pivots, rk] = rref(std::move(aug));
    if (rk > 0 && pivots.back() == m.cols()) return std::nullopt;
    Vector x(m.cols(), 0);
    for (std::size_t i = 0; i < rk; ++i) x[pivots[i]] = r(i, m.cols());
    return x;
}

/// Reduce v against an RREF basis (rows = basis, pivots given). The result
/// is zero iff v lies in the row space.
inline Vector reduce_against(const Matrix& basis, std::span<const std::size_t> pivots, std::span<const elem_t> v) {
    const Field& f = *basis.field();
    Vector out(v.begin(), v.end());
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        const elem_t c = out[pivots[i]];
        if (c == 0) continue;
        const elem_t factor = f.neg(c);
        auto row = basis.row(i);
        for (std::size_t j = 0; j < out.size(); ++j)
            if (row[j] != 0) out[j] = f.add(out[j], f.mul(factor, row[j]));
    }
    return out;
}

inline bool is_zero(std::span<const elem_t> v) {
    return std::all_of(v.begin(), v.end(), [](elem_t x) { return x == 0; });
}

/// True iff v lies in the row space of a.
inline bool membership(std::span<const elem_t> v, const Matrix& a) {
    if (v.size() != a.cols()) throw Error(Errc::LengthMismatch, "vector length does not match columns");
    auto res = rref(a);
    return is_zero(reduce_against(res.reduced, res.pivots, v));
}

/// RREF basis of rowspace(a) ∩ rowspace(b) (Zassenhaus: reduce [a a; b 0]
/// and read off the right halves of rows whose left half vanishes).
inline Matrix row_space_intersection(const Matrix& a, const Matrix& b) {
    require_same_field(*a.field(), *b.field());
    if (a.cols() != b.cols()) throw Error(Errc::ShapeMismatch, "column counts differ");
    const std::size_t n = a.cols();
    Matrix z(a.field(), a.rows() + b.rows(), 2 * n);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < n; ++j) z(i, j) = z(i, n + j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < n; ++j) z(a.rows() + i, j) = b(i, j);
    auto [r, pivots, rk] = rref(std::move(z));
    Matrix out(a.field(), 0, n);
    for (std::size_t i = 0; i < rk; ++i) {
        if (pivots[i] < n) continue;
        auto row = r.row(i);
        out.append_row(row.subspan(n));
    }
    return row_basis(out);
}

// ---------------------------------------------------------------------------
// Text format:
//   line 1: "q n k" (q as "p^m", or decimal for prime fields)
//   then k lines of n space-separated decimal encodings
//   '#' starts a comment line; the text must end with a newline.

inline void write_matrix(std::ostream& out, const Matrix& m) {
    out << m.field()->name() << ' ' << m.cols() << ' ' << m.rows() << '\n';
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (c) out << ' ';
            out << m(r, c);
        }
        out << '\n';
    }
}

inline std::string to_text(const Matrix& m) {
    std::ostringstream os;
    write_matrix(os, m);
    return os.str();
}

inline Matrix parse_matrix(std::string_view text) {
    auto fail = [](std::size_t line, const std::string& msg) -> Error {
        return Error(Errc::ParseError, "line " + std::to_string(line) + ": " + msg);
    };
    if (text.empty() || text.back() != '\n')
        throw fail(static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n')) + 1, "missing trailing newline");

    std::vector<std::pair<std::size_t, std::string>> lines;
    std::size_t lineno = 0, start = 0;
    while (start < text.size()) {
        auto end = text.find('\n', start);
        ++lineno;
        std::string line(text.substr(start, end - start));
        if (!line.empty() && line.back() == '\r') line.pop_back();
        start = end + 1;
        auto first = line.find_first_not_of(" \t");
        if (first == std::string::npos || line[first] == '#') continue;
        lines.emplace_back(lineno, std::move(line));
    }
    if (lines.empty()) throw fail(lineno, "missing header");

    auto read_uint = [&](std::istringstream& is, std::size_t line, const char* what) -> std::uint64_t {
        std::string tok;
        if (!(is >> tok)) throw fail(line, std::string("missing ") + what);
        std::uint64_t v = 0;
        if (tok.size() > 18) throw fail(line, std::string("bad ") + what + " '" + tok + "'");
        for (char c : tok) {
            if (c < '0' || c > '9') throw fail(line, std::string("bad ") + what + " '" + tok + "'");
            v = v * 10 + static_cast<std::uint64_t>(c - '0');
        }
        return v;
    };

    std::istringstream header(lines[0].second);
    std::string qtok;
    header >> qtok;
    FieldPtr field;
    try {
        field = Field::parse(qtok);
    } catch (const Error& e) {
        throw fail(lines[0].first, e.what());
    }
    const auto n = read_uint(header, lines[0].first, "n");
    const auto k = read_uint(header, lines[0].first, "k");
    std::string extra;
    if (header >> extra) throw fail(lines[0].first, "trailing tokens in header");
    if (lines.size() - 1 != k)
        throw fail(lines.back().first, "expected " + std::to_string(k) + " rows, found " + std::to_string(lines.size() - 1));
    if (n > (1u << 24) || k > (1u << 24)) throw fail(lines[0].first, "dimensions too large");

    std::vector<elem_t> data;
    data.reserve(static_cast<std::size_t>(n * k));
    for (std::size_t i = 1; i < lines.size(); ++i) {
        std::istringstream is(lines[i].second);
        for (std::uint64_t j = 0; j < n; ++j) {
            auto v = read_uint(is, lines[i].first, "entry");
            if (v >= field->q()) throw fail(lines[i].first, "entry " + std::to_string(v) + " outside F_" + field->name());
            data.push_back(static_cast<elem_t>(v));
        }
        if (is >> extra) throw fail(lines[i].first, "more than " + std::to_string(n) + " entries");
    }
    return Matrix(field, static_cast<std::size_t>(k), static_cast<std::size_t>(n), std::move(data));
}

inline Matrix read_matrix(std::istream& in) {
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return parse_matrix(text);
}

}  // namespace starcode
