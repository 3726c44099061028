#pragma once

#include <string>
#include <vector>

#include "toric/polynomial.hpp"
#include "toric/semiample.hpp"

namespace toric {

/// Rays that must be nonzero on U^l_0, U^l_1 and on their intersection.
/// With l = l_j: chart 0 inverts l_k for k > j, chart 1 inverts l_k for k < j.
struct ChartCover {
    std::size_t l = 0;
    RayIndices chart0;
    RayIndices chart1;
    RayIndices intersection;

    const RayIndices& chart(int k) const { return k == 0 ? chart0 : chart1; }
};

ChartCover chart_cover(const TwoConeData& cone, std::size_t l);

/// Lattice point u with <u,e_l> = -1, <u,e_i> >= -1 on the rays of sigma and
/// >= 0 on all other rays. The literature calls -u the root; every formula
/// uses u, so u is what we store.
struct Root {
    LatticeVector u;
    std::size_t l = 0;
    TwoConeData cone;
    ExponentVector pairing;   ///< (<u,e_1>, ..., <u,e_n>), the Laurent monomial x^u
    ExponentVector b_monomial; ///< prod_{rho_i in sigma} x_i * x^u, of degree beta1

    /// x_l * x^u; free of x_l.
    ExponentVector shift() const;
};

/// Sorted by u in descending lexicographic order.
std::vector<Root> enumerate_roots(const Fan& fan, const TwoConeData& cone, std::size_t l);

/// Same constraints without <u,e_l> = -1: the full monomial basis of
/// S_{beta1}, through u -> b_monomial.
std::vector<Root> enumerate_root_candidates(const Fan& fan, const TwoConeData& cone, std::size_t l);

/// x_l -> x_l + sign * t * x_l * x^u.
struct TransitionMap {
    std::size_t variable = 0;
    int sign = 1;
    ExponentVector shift;
    Polynomial replacement;

    std::string to_string() const;
};

/// k in {0, 1}; sign (-1)^k.
TransitionMap gluing_map(const Root& root, int k);
/// Chart-0 to chart-1 transition: x_l -> x_l - 2 t x_l x^u (exact, since
/// x_l x^u does not involve x_l).
TransitionMap composite_transition(const Root& root);
/// p with the substitution applied.
Polynomial apply(const TransitionMap& map, const Polynomial& p);

enum class Regularity { Chart0, Chart1, Both, Neither };
std::string to_string(Regularity r);

/// Where x_l * x^u is pole-free: all negative exponents must sit on
/// variables inverted by the chart.
Regularity regularity_locus(const Fan& fan, const TwoConeData& cone, std::size_t l, const LatticeVector& u);

} // namespace toric
