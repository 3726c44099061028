#pragma once

#include <optional>
#include <span>
#include <vector>

#include "toric/arith.hpp"

namespace toric {

/// Dense matrix of arbitrary-precision integers, row-major.
class IntegerMatrix {
public:
    IntegerMatrix() = default;
    IntegerMatrix(std::size_t rows, std::size_t cols);

    static IntegerMatrix identity(std::size_t n);
    static IntegerMatrix from_rows(const std::vector<LatticeVector>& rows, std::size_t cols);
    static IntegerMatrix from_rows(const std::vector<std::vector<Integer>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::vector<Integer> row(std::size_t r) const;
    IntegerMatrix transpose() const;

    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);
    // row[dst] += k * row[src]
    void add_row_multiple(std::size_t dst, std::size_t src, const Integer& k);
    void add_col_multiple(std::size_t dst, std::size_t src, const Integer& k);
    void negate_row(std::size_t r);
    void negate_col(std::size_t c);

    bool operator==(const IntegerMatrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> data_;
};

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);

struct SmithForm {
    IntegerMatrix U; ///< rows x rows, unimodular
    IntegerMatrix S; ///< diagonal, d_1 | d_2 | ..., non-negative
    IntegerMatrix V; ///< cols x cols, unimodular

    std::vector<Integer> elementary_divisors() const; ///< nonzero diagonal entries
};

/// U * A * V = S.
SmithForm smith_normal_form(const IntegerMatrix& a);

/// Row Hermite normal form of the lattice spanned by the rows of `basis`:
/// echelon, positive pivots, entries above each pivot reduced into [0, pivot).
/// Zero rows are dropped.
IntegerMatrix hermite_normal_form(const IntegerMatrix& basis);

/// Canonical representative of v + L where L is the row span of `basis`.
std::vector<Integer> hermite_reduce(std::span<const Integer> v, const IntegerMatrix& basis);
std::vector<Integer> hermite_reduce(const LatticeVector& v, const IntegerMatrix& basis);

/// Same as hermite_reduce but against a basis already in Hermite normal form.
std::vector<Integer> reduce_against_hnf(std::vector<Integer> v, const IntegerMatrix& hnf);

bool in_row_lattice(std::span<const Integer> v, const IntegerMatrix& basis);

std::size_t rank(const IntegerMatrix& a);
Integer gcd_of(const LatticeVector& v);
bool is_primitive(const LatticeVector& v);

/// Dense rational linear algebra used for coordinates inside cones.
using RationalMatrix = std::vector<RationalVector>;

RationalMatrix to_rational(const std::vector<LatticeVector>& rows);

/// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> rref(RationalMatrix& m);

/// Basis of {x : A x = 0} for A with `cols` columns.
std::vector<RationalVector> nullspace(RationalMatrix a, std::size_t cols);

/// Some solution of A x = b, or nullopt when inconsistent.
std::optional<RationalVector> solve(const RationalMatrix& a, const RationalVector& b, std::size_t cols);

} // namespace toric
