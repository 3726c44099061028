#include "toric/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace toric {

std::string to_string(const LatticeVector& v) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i)
        os << (i ? "," : "") << v[i];
    os << ')';
    return os.str();
}

std::string to_string(const RationalVector& v) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i)
        os << (i ? "," : "") << v[i].get_str();
    os << ')';
    return os.str();
}

IntegerMatrix::IntegerMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Integer(0)) {}

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
    IntegerMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

IntegerMatrix IntegerMatrix::from_rows(const std::vector<LatticeVector>& rows, std::size_t cols) {
    IntegerMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols)
            throw DomainError("matrix row has wrong length");
        for (std::size_t c = 0; c < cols; ++c)
            m(r, c) = to_integer(rows[r][c]);
    }
    return m;
}

IntegerMatrix IntegerMatrix::from_rows(const std::vector<std::vector<Integer>>& rows) {
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    IntegerMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols)
            throw DomainError("matrix row has wrong length");
        for (std::size_t c = 0; c < cols; ++c)
            m(r, c) = rows[r][c];
    }
    return m;
}

std::vector<Integer> IntegerMatrix::row(std::size_t r) const {
    return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
            data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

IntegerMatrix IntegerMatrix::transpose() const {
    IntegerMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            t(c, r) = (*this)(r, c);
    return t;
}

void IntegerMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c)
        std::swap((*this)(a, c), (*this)(b, c));
}

void IntegerMatrix::swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t r = 0; r < rows_; ++r)
        std::swap((*this)(r, a), (*this)(r, b));
}

void IntegerMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Integer& k) {
    if (k == 0) return;
    for (std::size_t c = 0; c < cols_; ++c)
        (*this)(dst, c) += k * (*this)(src, c);
}

void IntegerMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Integer& k) {
    if (k == 0) return;
    for (std::size_t r = 0; r < rows_; ++r)
        (*this)(r, dst) += k * (*this)(r, src);
}

void IntegerMatrix::negate_row(std::size_t r) {
    for (std::size_t c = 0; c < cols_; ++c)
        (*this)(r, c) = -(*this)(r, c);
}

void IntegerMatrix::negate_col(std::size_t c) {
    for (std::size_t r = 0; r < rows_; ++r)
        (*this)(r, c) = -(*this)(r, c);
}

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
    if (a.cols() != b.rows())
        throw DomainError("matrix product dimension mismatch");
    IntegerMatrix p(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k) == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                p(i, j) += a(i, k) * b(k, j);
        }
    return p;
}

std::vector<Integer> SmithForm::elementary_divisors() const {
    std::vector<Integer> d;
    for (std::size_t i = 0; i < std::min(S.rows(), S.cols()); ++i)
        if (S(i, i) != 0)
            d.push_back(S(i, i));
    return d;
}

SmithForm smith_normal_form(const IntegerMatrix& a) {
    if (a.empty())
        throw DomainError("smith_normal_form of an empty matrix");
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    IntegerMatrix s = a;
    IntegerMatrix u = IntegerMatrix::identity(m);
    IntegerMatrix v = IntegerMatrix::identity(n);

    for (std::size_t t = 0; t < std::min(m, n); ++t) {
        while (true) {
            // smallest nonzero entry of the trailing block becomes the pivot
            std::size_t pi = m, pj = n;
            for (std::size_t i = t; i < m; ++i)
                for (std::size_t j = t; j < n; ++j)
                    if (s(i, j) != 0 && (pi == m || abs(s(i, j)) < abs(s(pi, pj)))) {
                        pi = i;
                        pj = j;
                    }
            if (pi == m)
                return {std::move(u), std::move(s), std::move(v)};
            s.swap_rows(t, pi);
            u.swap_rows(t, pi);
            s.swap_cols(t, pj);
            v.swap_cols(t, pj);

            bool clean = true;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (s(i, t) == 0) continue;
                const Integer q = floor_div(s(i, t), s(t, t));
                s.add_row_multiple(i, t, -q);
                u.add_row_multiple(i, t, -q);
                if (s(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (s(t, j) == 0) continue;
                const Integer q = floor_div(s(t, j), s(t, t));
                s.add_col_multiple(j, t, -q);
                v.add_col_multiple(j, t, -q);
                if (s(t, j) != 0) clean = false;
            }
            if (!clean) continue;

            // divisibility chain: pull in any entry the pivot does not divide
            bool divides = true;
            for (std::size_t i = t + 1; i < m && divides; ++i)
                for (std::size_t j = t + 1; j < n; ++j)
                    if (s(i, j) % s(t, t) != 0) {
                        s.add_row_multiple(t, i, 1);
                        u.add_row_multiple(t, i, 1);
                        divides = false;
                        break;
                    }
            if (divides) break;
        }
        if (s(t, t) < 0) {
            s.negate_row(t);
            u.negate_row(t);
        }
    }
    return {std::move(u), std::move(s), std::move(v)};
}

IntegerMatrix hermite_normal_form(const IntegerMatrix& basis) {
    IntegerMatrix h = basis;
    const std::size_t m = h.rows();
    const std::size_t n = h.cols();
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < m; ++c) {
        while (true) {
            std::size_t best = m;
            for (std::size_t i = r; i < m; ++i)
                if (h(i, c) != 0 && (best == m || abs(h(i, c)) < abs(h(best, c))))
                    best = i;
            if (best == m) break;
            h.swap_rows(r, best);
            bool clean = true;
            for (std::size_t i = r + 1; i < m; ++i) {
                if (h(i, c) == 0) continue;
                h.add_row_multiple(i, r, -floor_div(h(i, c), h(r, c)));
                if (h(i, c) != 0) clean = false;
            }
            if (clean) break;
        }
        if (h(r, c) == 0) continue;
        if (h(r, c) < 0) h.negate_row(r);
        for (std::size_t i = 0; i < r; ++i)
            h.add_row_multiple(i, r, -floor_div(h(i, c), h(r, c)));
        ++r;
    }
    IntegerMatrix out(r, n);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t c = 0; c < n; ++c)
            out(i, c) = h(i, c);
    return out;
}

std::vector<Integer> reduce_against_hnf(std::vector<Integer> v, const IntegerMatrix& hnf) {
    if (hnf.rows() > 0 && v.size() != hnf.cols())
        throw DomainError("hermite_reduce: vector length does not match lattice");
    for (std::size_t r = 0; r < hnf.rows(); ++r) {
        std::size_t c = 0;
        while (hnf(r, c) == 0) ++c;
        const Integer q = floor_div(v[c], hnf(r, c));
        if (q == 0) continue;
        for (std::size_t k = 0; k < v.size(); ++k)
            v[k] -= q * hnf(r, k);
    }
    return v;
}

std::vector<Integer> hermite_reduce(std::span<const Integer> v, const IntegerMatrix& basis) {
    return reduce_against_hnf({v.begin(), v.end()}, hermite_normal_form(basis));
}

std::vector<Integer> hermite_reduce(const LatticeVector& v, const IntegerMatrix& basis) {
    std::vector<Integer> w;
    w.reserve(v.size());
    for (auto x : v) w.push_back(to_integer(x));
    return hermite_reduce(std::span<const Integer>(w), basis);
}

bool in_row_lattice(std::span<const Integer> v, const IntegerMatrix& basis) {
    const auto r = hermite_reduce(v, basis);
    return std::all_of(r.begin(), r.end(), [](const Integer& x) { return x == 0; });
}

RationalMatrix to_rational(const std::vector<LatticeVector>& rows) {
    RationalMatrix m;
    m.reserve(rows.size());
    for (const auto& row : rows) {
        RationalVector r;
        r.reserve(row.size());
        for (auto x : row) r.emplace_back(static_cast<long>(x));
        m.push_back(std::move(r));
    }
    return m;
}

std::vector<std::size_t> rref(RationalMatrix& m) {
    std::vector<std::size_t> pivots;
    if (m.empty()) return pivots;
    const std::size_t cols = m.front().size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
        std::size_t p = r;
        while (p < m.size() && m[p][c] == 0) ++p;
        if (p == m.size()) continue;
        std::swap(m[r], m[p]);
        const Rational inv = 1 / m[r][c];
        for (auto& x : m[r]) x *= inv;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == r || m[i][c] == 0) continue;
            const Rational f = m[i][c];
            for (std::size_t k = c; k < cols; ++k)
                m[i][k] -= f * m[r][k];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::size_t rank(const IntegerMatrix& a) {
    RationalMatrix m(a.rows(), RationalVector(a.cols()));
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c)
            m[r][c] = a(r, c);
    return rref(m).size();
}

std::vector<RationalVector> nullspace(RationalMatrix a, std::size_t cols) {
    const auto pivots = rref(a);
    std::vector<bool> is_pivot(cols, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<RationalVector> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        RationalVector x(cols);
        x[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            x[pivots[r]] = -a[r][free];
        basis.push_back(std::move(x));
    }
    return basis;
}

std::optional<RationalVector> solve(const RationalMatrix& a, const RationalVector& b, std::size_t cols) {
    RationalMatrix aug;
    aug.reserve(a.size());
    for (std::size_t r = 0; r < a.size(); ++r) {
        RationalVector row = a[r];
        row.push_back(b[r]);
        aug.push_back(std::move(row));
    }
    const auto pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == cols)
        return std::nullopt;
    RationalVector x(cols);
    for (std::size_t r = 0; r < pivots.size(); ++r)
        x[pivots[r]] = aug[r][cols];
    return x;
}

Integer gcd_of(const LatticeVector& v) {
    Integer g = 0;
    for (auto x : v) g = gcd(g, to_integer(x));
    return g;
}

bool is_primitive(const LatticeVector& v) { return gcd_of(v) == 1; }

} // namespace toric
