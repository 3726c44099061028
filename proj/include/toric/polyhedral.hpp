#pragma once

#include <vector>

#include "toric/arith.hpp"

namespace toric {

/// The half-space { m : <m, normal> >= bound } of M_R.
struct HalfSpace {
    LatticeVector normal;
    std::int64_t bound = 0;
};

/// Rational linear constraint  coeffs . x >= rhs.
struct LinearInequality {
    RationalVector coeffs;
    Rational rhs;

    bool operator==(const LinearInequality&) const = default;
};

/// Rational linear constraint  coeffs . x == rhs.
struct LinearEquation {
    RationalVector coeffs;
    Rational rhs;
};

/// Projects the system onto the remaining coordinates by eliminating `var`
/// (Fourier–Motzkin). The eliminated coordinate keeps a zero coefficient.
std::vector<LinearInequality> fourier_motzkin_eliminate(const std::vector<LinearInequality>& system,
                                                        std::size_t var);

/// Exact rational feasibility of  eqs, ineqs  over free variables.
bool is_feasible(const std::vector<LinearInequality>& ineqs,
                 const std::vector<LinearEquation>& eqs, std::size_t nvars);

/// Every integral point of the polyhedron cut out by `halfspaces` in Z^dim,
/// in lexicographic order. Empty systems yield an empty list.
/// Throws DomainError("polytope unbounded") when the rational polyhedron is
/// nonempty and unbounded.
std::vector<LatticeVector> lattice_points(const std::vector<HalfSpace>& halfspaces, std::size_t dim);

} // namespace toric
