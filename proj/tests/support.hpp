#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "toric/families.hpp"
#include "toric/infinitesimal.hpp"
#include "toric/model.hpp"

namespace support {

using namespace toric;

inline Fan projective_space(std::size_t d) {
    std::vector<LatticeVector> rays;
    for (std::size_t i = 0; i < d; ++i) {
        LatticeVector e(d, 0);
        e[i] = 1;
        rays.push_back(e);
    }
    rays.push_back(LatticeVector(d, -1));
    std::vector<RayIndices> cones;
    for (std::size_t omit = 0; omit <= d; ++omit) {
        RayIndices c;
        for (std::size_t i = 0; i <= d; ++i)
            if (i != omit) c.push_back(i);
        cones.push_back(c);
    }
    return Fan::from_maximal_cones(d, rays, cones);
}

inline Polynomial poly(std::size_t n, const std::vector<std::pair<long, ExponentVector>>& terms) {
    Polynomial p(n);
    for (const auto& [c, e] : terms) p.add_term(e, Coefficient(c));
    return p;
}

inline ExponentVector ev(std::initializer_list<std::int64_t> v) { return ExponentVector(v); }

/// All integer points of [lo, hi]^dim.
inline std::vector<LatticeVector> box(std::size_t dim, std::int64_t lo, std::int64_t hi) {
    std::vector<LatticeVector> out;
    LatticeVector v(dim, lo);
    while (true) {
        out.push_back(v);
        std::size_t k = 0;
        while (k < dim && v[k] == hi) v[k++] = lo;
        if (k == dim) break;
        ++v[k];
    }
    return out;
}

/// Pulls b back along a refinement: b(v) = max over maximal cones of -<m_sigma, v>.
inline TorusDivisor pull_back(const Fan& base, const TorusDivisor& b, const Fan& fine) {
    const NefBigReport r = nef_big_classify(base, b);
    TorusDivisor out;
    for (const auto& v : fine.rays()) {
        Rational best;
        bool first = true;
        for (const auto& m : r.witnesses) {
            const Rational x = -pairing(*m, v);
            if (first || x > best) best = x;
            first = false;
        }
        out.push_back(to_int64(best.get_num() / best.get_den()));
    }
    return out;
}

struct RefinedFan {
    Fan base = Fan::from_cones(1, {}, {});
    Fan fan = Fan::from_cones(1, {}, {});
    TorusDivisor b;
    std::size_t added = 0;
};

/// P^d with one or two extra rays inside one 2-cone, and the pull-back of O(k).
inline RefinedFan random_refined_fan(std::mt19937& rng, std::size_t d) {
    RefinedFan out;
    out.base = projective_space(d);
    std::uniform_int_distribution<int> pick_ray(0, static_cast<int>(d));
    std::uniform_int_distribution<int> coeff(1, 3);
    std::size_t i = static_cast<std::size_t>(pick_ray(rng));
    std::size_t j = i;
    while (j == i) j = static_cast<std::size_t>(pick_ray(rng));
    out.fan = out.base;
    const std::size_t extra = std::uniform_int_distribution<int>(1, 2)(rng);
    std::vector<std::pair<int, int>> used;
    while (out.added < extra) {
        int a = coeff(rng), c = coeff(rng);
        if (std::gcd(a, c) != 1 || std::find(used.begin(), used.end(), std::make_pair(a, c)) != used.end()) continue;
        used.emplace_back(a, c);
        LatticeVector p(d);
        for (std::size_t k = 0; k < d; ++k) p[k] = a * out.base.ray(i)[k] + c * out.base.ray(j)[k];
        out.fan = star_subdivision(out.fan, p);
        ++out.added;
    }
    TorusDivisor base_b(d + 1, 0);
    base_b[d] = std::uniform_int_distribution<int>(1, 2)(rng);
    out.b = pull_back(out.base, base_b, out.fan);
    return out;
}

/// A few random monomials of the class of b with small nonzero coefficients.
inline Polynomial random_section(std::mt19937& rng, const Fan& fan, const TorusDivisor& b, std::size_t terms) {
    auto monomials = monomials_of_degree(fan, b);
    std::shuffle(monomials.begin(), monomials.end(), rng);
    std::uniform_int_distribution<int> c(-3, 3);
    Polynomial f(fan.ray_count());
    for (std::size_t k = 0; k < std::min(terms, monomials.size()); ++k) {
        int v = 0;
        while (v == 0) v = c(rng);
        f.add_term(monomials[k], Coefficient(static_cast<long>(v)));
    }
    return f;
}

/// Monomials of the class of `b` found by scanning a box of exponent vectors
/// and solving for the character directly.
inline std::vector<ExponentVector> brute_force_degree(const Fan& fan, const ExponentVector& b,
                                                      const std::vector<std::int64_t>& bound) {
    std::vector<ExponentVector> out;
    ExponentVector e(b.size(), 0);
    while (true) {
        if (solve_character(fan, e, b)) out.push_back(e);
        std::size_t k = 0;
        while (k < e.size() && e[k] == bound[k]) e[k++] = 0;
        if (k == e.size()) break;
        ++e[k];
    }
    return out;
}

inline bool divides(const ExponentVector& a, const ExponentVector& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

/// dim R_1(f)_beta when <x_i f_i> is generated by the monomials occurring in
/// the x_i f_i: then J_1 is the monomial ideal of m / gcd(m, x_1...x_n).
inline std::size_t monomial_r1_oracle(const Fan& fan, const Polynomial& f, const std::vector<std::int64_t>& bound) {
    const std::size_t n = fan.ray_count();
    std::vector<ExponentVector> gens;
    for (std::size_t i = 0; i < n; ++i) {
        const Polynomial d = partial_derivative(f, i);
        for (const auto& [e, c] : d.terms()) {
            ExponentVector g = e;
            g[i] += 1;
            for (auto& x : g) x = std::max<std::int64_t>(x - 1, 0);
            gens.push_back(g);
        }
    }
    const ExponentVector beta = f.terms().begin()->first;
    std::size_t count = 0;
    for (const auto& m : brute_force_degree(fan, beta, bound)) {
        bool in_ideal = false;
        for (const auto& g : gens)
            if (divides(g, m)) in_ideal = true;
        if (!in_ideal) ++count;
    }
    return count;
}

/// Roots found by scanning a box in M and testing the defining inequalities.
inline std::vector<LatticeVector> brute_force_roots(const Fan& fan, const TwoConeData& cone, std::size_t l,
                                                    std::int64_t radius) {
    const RayIndices in_sigma = cone.rays();
    std::vector<LatticeVector> out;
    for (const auto& u : box(fan.rank(), -radius, radius)) {
        if (pairing(u, fan.ray(l)) != -1) continue;
        bool ok = true;
        for (std::size_t i = 0; i < fan.ray_count() && ok; ++i) {
            const bool inside = std::binary_search(in_sigma.begin(), in_sigma.end(), i);
            ok = pairing(u, fan.ray(i)) >= (inside ? -1 : 0);
        }
        if (ok) out.push_back(u);
    }
    return out;
}

struct RandomCase {
    RefinedFan r;
    Polynomial f;
    TwoConeData cone;
    std::size_t l = 0;
    Root root;
};

// random refinements that carry at least one root
inline std::vector<RandomCase> random_root_cases(std::size_t want, unsigned seed = 53) {
    std::vector<RandomCase> out;
    std::mt19937 rng(seed);
    for (int trial = 0; trial < 200 && out.size() < want; ++trial) {
        auto r = random_refined_fan(rng, 2 + trial % 2);
        const auto sx = compute_sigma_x(r.fan, r.b);
        const Polynomial f = random_section(rng, r.fan, r.b, 5);
        for (const auto& [cone, l] : interior_ray_pairs(r.fan, sx)) {
            const auto roots = enumerate_roots(r.fan, cone, l);
            if (roots.empty()) continue;
            out.push_back({r, f, cone, l, roots.front()});
            break;
        }
    }
    return out;
}

inline Model example() { return preset("p11222-resolved"); }

} // namespace support
