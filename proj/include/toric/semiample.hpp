#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "toric/cox_ring.hpp"
#include "toric/fan.hpp"

namespace toric {

/// Coefficients b_i of the torus-invariant divisor sum b_i D_i.
using TorusDivisor = std::vector<std::int64_t>;

/// { m : <m, e_i> >= -b_i }.
std::vector<HalfSpace> polytope_of_divisor(const Fan& fan, const TorusDivisor& b);

struct NefBigReport {
    bool nef = false;
    bool big = false;
    /// Per maximal cone of the fan (order of Fan::maximal_cones()): the m with
    /// <m, e_i> = -b_i on the cone's rays, when that system is solvable.
    std::vector<std::optional<RationalVector>> witnesses;
    std::vector<Cone> maximal_cones;
};

/// Witnesses satisfy <m_sigma, e_i> = -b_i on sigma and lie in the polytope
/// exactly when D is nef. Witnesses may be rational (Q-Cartier divisors).
NefBigReport nef_big_classify(const Fan& fan, const TorusDivisor& b);

/// The coarsened fan on whose cones the support function of D is linear.
struct SigmaXData {
    Fan fan;                                ///< Sigma_X, over its own ray list
    std::vector<std::size_t> ray_origin;    ///< Sigma_X ray -> index in the original fan
    std::vector<RayIndices> maximal_cones;  ///< extremal rays, original indices
    std::vector<RayIndices> contained_rays; ///< every original ray inside each maximal cone
    std::vector<RationalVector> witnesses;  ///< m_sigma per maximal cone
    std::vector<std::size_t> assignment;    ///< original maximal cone -> Sigma_X maximal cone

    /// 2-cones of Sigma_X as pairs of original ray indices (sorted).
    std::vector<RayIndices> two_cones() const;
};

SigmaXData compute_sigma_x(const Fan& fan, const TorusDivisor& b);

/// A 2-cone sigma of Sigma_X together with the rays of the fine fan inside it,
/// in angular order l_0, l_1, ..., l_{n+1}. l_0 and l_{n+1} span sigma; the
/// others lie in its relative interior.
struct TwoConeData {
    std::vector<std::size_t> order;
    std::vector<LatticeVector> generators;           ///< e_{l_k}, same order
    std::vector<Integer> subcone_multiplicity;       ///< mult(sigma_j), j = 1..n+1 at index j-1
    Integer multiplicity;                            ///< mult(sigma)
    TorusDivisor beta1_divisor;                      ///< indicator of the rays in sigma
    DegreeClass beta1;

    std::size_t interior_count() const { return order.size() - 2; }
    /// j with l = l_j; throws when l is not in sigma.
    std::size_t position(std::size_t l) const;
    bool is_interior(std::size_t l) const;
    std::size_t l0() const { return order.front(); }
    RayIndices rays() const;
    /// Same cone, angular order starting at the boundary ray `l0`.
    TwoConeData reoriented(std::size_t l0) const;
};

TwoConeData two_cone_analysis(const Fan& fan, const SigmaXData& sigma_x, const RayIndices& sigma);

/// Every (sigma, l) with sigma in Sigma_X(2) and e_l interior to sigma.
std::vector<std::pair<TwoConeData, std::size_t>> interior_ray_pairs(const Fan& fan, const SigmaXData& sigma_x);

} // namespace toric
