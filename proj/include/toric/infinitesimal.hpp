#pragma once

#include <vector>

#include "toric/families.hpp"
#include "toric/vector_field.hpp"

namespace toric {

/// Indices i with df/dx_i not identically zero.
std::vector<std::size_t> nonvanishing_partials(const Polynomial& f);

/// (gamma_A)_{i0 i1} = sqrt(-1) A (d_{i1}/f_{i1} - d_{i0}/f_{i0}), the contraction
/// <d_a ^ d_b, df> = (d_a f) d_b - (d_b f) d_a divided by f_a f_b.
CechCocycle gamma_A(const Fan& fan, const Polynomial& f, const Polynomial& a);

/// d^l_k for k = 1..n+1 (nonzero only at k = j, j+1 where l = l_j).
VectorField d_l(const TwoConeData& cone, std::size_t l, std::size_t k, std::size_t nvars);

/// Charts (i, k): i over the nonvanishing partials, k over 1..n+1.
CechCocycle gamma_l_B(const Fan& fan, const Polynomial& f, const TwoConeData& cone, std::size_t l,
                      const Polynomial& b);

/// (B / prod_{rho_i in sigma} x_i)(d^l_{k1} - d^l_{k0}) over charts k = 1..n+1.
CechCocycle lift_nonpolynomial(const Fan& fan, const TwoConeData& cone, std::size_t l, const Polynomial& b);

/// {2 x^u x_l d_l} on (U^l_0, U^l_1).
CechCocycle kodaira_cocycle(const Root& root);

/// theta_{(i0,k0)(i1,k1)} of the first-order family, computed straight from
/// its closed formula (not from the psi decomposition).
CechCocycle theta_cocycle(const HypersurfaceFamily& family);

/// e_{j-1}/mult(sigma_j) + e_{j+1}/mult(sigma_{j+1}) ==
///   mult(cone(e_{j-1}, e_{j+1})) / (mult(sigma_j) mult(sigma_{j+1})) * e_j
bool ray_identity_check(const TwoConeData& cone, std::size_t j);

/// -2 mult(sigma_j) mult(sigma_{j+1}) / mult(cone(e_{j-1}, e_{j+1})).
Rational matching_factor(const TwoConeData& cone, std::size_t j);
Rational matching_factor(const Integer& mult_j, const Integer& mult_j1, const Integer& mult_outer);

/// dim S_beta - dim J_1(f)_beta with J_1(f) = <x_i df/dx_i> : x_1...x_n and
/// beta = deg f. A nonzero `shuffle_seed` permutes the monomial bases and the
/// generator order first; the result must not change.
std::size_t dim_R1(const Fan& fan, const Polynomial& f, std::uint64_t shuffle_seed = 0);

struct NonPolynomialSummand {
    RayIndices sigma;   ///< boundary rays of the 2-cone
    std::size_t l = 0;
    std::size_t dim = 0;        ///< monomials of degree beta1 with no x_l
    std::size_t root_count = 0; ///< |enumerate_roots|, must agree with dim
};

struct H1Decomposition {
    std::size_t polynomial_dim = 0;
    std::vector<NonPolynomialSummand> non_polynomial;
    std::size_t total = 0;
};

H1Decomposition h1_decomposition(const Fan& fan, const Polynomial& f);

} // namespace toric
