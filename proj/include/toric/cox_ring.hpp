#pragma once

#include <optional>
#include <vector>

#include "toric/fan.hpp"
#include "toric/polyhedral.hpp"
#include "toric/polynomial.hpp"

namespace toric {

/// Class in Z^n / L, L = {(<m,e_1>, ..., <m,e_n>) : m in M}, stored as the
/// Hermite-reduced representative. Equal classes have equal representatives.
struct DegreeClass {
    std::vector<Integer> representative;

    bool is_zero() const;
    bool operator==(const DegreeClass&) const = default;
    bool operator<(const DegreeClass& o) const { return representative < o.representative; }
    std::string to_string() const;
};

/// The Chow-group grading of the homogeneous coordinate ring of a fan.
class ChowGrading {
public:
    explicit ChowGrading(const Fan& fan);

    DegreeClass degree_of(const ExponentVector& e) const;
    /// Common degree of all terms, or nullopt if p is zero or inhomogeneous.
    std::optional<DegreeClass> degree_of(const Polynomial& p) const;
    /// (<u,e_1>, ..., <u,e_n>)
    ExponentVector pairing_vector(const LatticeVector& u) const;

    const IntegerMatrix& relations() const { return hnf_; }

private:
    std::vector<LatticeVector> rays_;
    IntegerMatrix hnf_;
};

DegreeClass degree_of(const Fan& fan, const ExponentVector& e);

/// Exponent vectors b_i + <m,e_i> for the lattice points m of
/// { m : <m,e_i> >= -b_i }, in lexicographic order of m.
std::vector<ExponentVector> monomials_of_degree(const Fan& fan, const std::vector<std::int64_t>& b);

/// Lattice point m with  b_i + <m,e_i> = e_i  for every i, if one exists.
std::optional<LatticeVector> solve_character(const Fan& fan, const ExponentVector& e,
                                             const std::vector<std::int64_t>& b);

} // namespace toric
