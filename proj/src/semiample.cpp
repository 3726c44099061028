#include "toric/semiample.hpp"

#include <algorithm>
#include <map>

namespace toric {
namespace {

struct RationalVectorLess {
    bool operator()(const RationalVector& a, const RationalVector& b) const {
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                            [](const Rational& x, const Rational& y) { return x < y; });
    }
};

// (s, t) with v = s a + t b, when it exists.
std::optional<std::pair<Rational, Rational>> plane_coordinates(const LatticeVector& a, const LatticeVector& b,
                                                               const LatticeVector& v) {
    RationalMatrix m(a.size(), RationalVector(2));
    RationalVector rhs(a.size());
    for (std::size_t r = 0; r < a.size(); ++r) {
        m[r][0] = static_cast<long>(a[r]);
        m[r][1] = static_cast<long>(b[r]);
        rhs[r] = static_cast<long>(v[r]);
    }
    auto x = solve(m, rhs, 2);
    if (!x) return std::nullopt;
    return std::make_pair((*x)[0], (*x)[1]);
}

} // namespace

std::vector<HalfSpace> polytope_of_divisor(const Fan& fan, const TorusDivisor& b) {
    if (b.size() != fan.ray_count())
        throw DomainError("divisor has " + std::to_string(b.size()) + " coefficients, fan has " +
                          std::to_string(fan.ray_count()) + " rays");
    std::vector<HalfSpace> h;
    for (std::size_t i = 0; i < b.size(); ++i) h.push_back({fan.ray(i), -b[i]});
    return h;
}

NefBigReport nef_big_classify(const Fan& fan, const TorusDivisor& b) {
    const auto polytope = polytope_of_divisor(fan, b);
    const std::size_t d = fan.rank();
    NefBigReport report;
    report.maximal_cones = fan.maximal_cones();
    report.nef = !report.maximal_cones.empty();
    for (const auto& cone : report.maximal_cones) {
        RationalMatrix a;
        RationalVector rhs;
        for (auto i : cone.rays) {
            RationalVector row(d);
            for (std::size_t k = 0; k < d; ++k) row[k] = static_cast<long>(fan.ray(i)[k]);
            a.push_back(std::move(row));
            rhs.emplace_back(static_cast<long>(-b[i]));
        }
        auto m = solve(a, rhs, d);
        if (!m || cone.dim != d) {
            report.nef = false;
            report.witnesses.push_back(std::move(m));
            continue;
        }
        for (const auto& h : polytope)
            if (pairing(*m, h.normal) < Rational(static_cast<long>(h.bound))) {
                report.nef = false;
                break;
            }
        report.witnesses.push_back(std::move(m));
    }

    // full-dimensional polytope: some m with <m,e_i> + b_i > 0 for all i
    std::vector<LinearInequality> strict;
    for (std::size_t i = 0; i < b.size(); ++i) {
        LinearInequality q{RationalVector(d + 1), Rational(1)};
        for (std::size_t k = 0; k < d; ++k) q.coeffs[k] = static_cast<long>(fan.ray(i)[k]);
        q.coeffs[d] = static_cast<long>(b[i]);
        strict.push_back(std::move(q));
    }
    LinearInequality scale{RationalVector(d + 1), Rational(1)};
    scale.coeffs[d] = 1;
    strict.push_back(std::move(scale));
    report.big = is_feasible(strict, {}, d + 1);
    return report;
}

std::vector<RayIndices> SigmaXData::two_cones() const {
    std::vector<RayIndices> out;
    for (const auto& c : fan.cones_of_dim(2)) {
        RayIndices r;
        for (auto i : c.rays) r.push_back(ray_origin[i]);
        out.push_back(normalize_indices(std::move(r)));
    }
    std::sort(out.begin(), out.end());
    return out;
}

SigmaXData compute_sigma_x(const Fan& fan, const TorusDivisor& b) {
    const NefBigReport report = nef_big_classify(fan, b);
    if (!report.nef) throw DomainError("divisor is not nef");
    if (!report.big) throw DomainError("divisor is not big");

    // maximal cones sharing a witness form one linearity domain
    std::map<RationalVector, std::size_t, RationalVectorLess> group_of;
    std::vector<RationalVector> witnesses;
    std::vector<RayIndices> contained;
    std::vector<std::size_t> assignment;
    for (std::size_t k = 0; k < report.maximal_cones.size(); ++k) {
        const auto& m = *report.witnesses[k];
        auto [it, inserted] = group_of.emplace(m, witnesses.size());
        if (inserted) {
            witnesses.push_back(m);
            contained.emplace_back();
        }
        auto& rays = contained[it->second];
        rays.insert(rays.end(), report.maximal_cones[k].rays.begin(), report.maximal_cones[k].rays.end());
        rays = normalize_indices(std::move(rays));
        assignment.push_back(it->second);
    }

    std::vector<RayIndices> extremal;
    RayIndices used;
    for (const auto& rays : contained) {
        RayIndices ext;
        for (auto r : rays) {
            std::vector<LatticeVector> others;
            for (auto s : rays)
                if (s != r) others.push_back(fan.ray(s));
            if (!cone_contains(others, fan.ray(r))) ext.push_back(r);
        }
        used.insert(used.end(), ext.begin(), ext.end());
        extremal.push_back(std::move(ext));
    }
    used = normalize_indices(std::move(used));

    std::vector<LatticeVector> coarse_rays;
    std::map<std::size_t, std::size_t> local;
    for (auto r : used) {
        local[r] = coarse_rays.size();
        coarse_rays.push_back(fan.ray(r));
    }
    std::vector<RayIndices> coarse_cones;
    for (const auto& ext : extremal) {
        RayIndices c;
        for (auto r : ext) c.push_back(local.at(r));
        coarse_cones.push_back(std::move(c));
    }

    // every original ray lying in a coarse cone counts as contained in it
    for (std::size_t g = 0; g < extremal.size(); ++g) {
        const auto gens = fan.generators(extremal[g]);
        RayIndices all;
        for (std::size_t r = 0; r < fan.ray_count(); ++r)
            if (cone_contains(gens, fan.ray(r))) all.push_back(r);
        contained[g] = std::move(all);
    }

    return SigmaXData{Fan::from_maximal_cones(fan.rank(), std::move(coarse_rays), coarse_cones),
                      std::move(used),
                      std::move(extremal),
                      std::move(contained),
                      std::move(witnesses),
                      std::move(assignment)};
}

std::size_t TwoConeData::position(std::size_t l) const {
    auto it = std::find(order.begin(), order.end(), l);
    if (it == order.end())
        throw DomainError("ray " + std::to_string(l + 1) + " does not lie in the 2-cone");
    return static_cast<std::size_t>(it - order.begin());
}

bool TwoConeData::is_interior(std::size_t l) const {
    auto it = std::find(order.begin(), order.end(), l);
    return it != order.end() && it != order.begin() && it + 1 != order.end();
}

RayIndices TwoConeData::rays() const { return normalize_indices(order); }

TwoConeData TwoConeData::reoriented(std::size_t new_l0) const {
    if (new_l0 == order.front()) return *this;
    if (new_l0 != order.back())
        throw DomainError("orientation: ray " + std::to_string(new_l0 + 1) + " is not a boundary ray of the 2-cone");
    TwoConeData r = *this;
    std::reverse(r.order.begin(), r.order.end());
    std::reverse(r.generators.begin(), r.generators.end());
    std::reverse(r.subcone_multiplicity.begin(), r.subcone_multiplicity.end());
    return r;
}

TwoConeData two_cone_analysis(const Fan& fan, const SigmaXData& sigma_x, const RayIndices& sigma) {
    const RayIndices s = normalize_indices(sigma);
    const auto twos = sigma_x.two_cones();
    if (s.size() != 2 || std::find(twos.begin(), twos.end(), s) == twos.end())
        throw DomainError("not a 2-dimensional cone of Sigma_X");
    const auto& a = fan.ray(s[0]);
    const auto& b = fan.ray(s[1]);

    struct Inside {
        std::size_t ray;
        Rational s, t;
    };
    std::vector<Inside> interior;
    for (std::size_t r = 0; r < fan.ray_count(); ++r) {
        if (r == s[0] || r == s[1]) continue;
        auto st = plane_coordinates(a, b, fan.ray(r));
        if (!st || st->first < 0 || st->second < 0) continue;
        interior.push_back({r, st->first, st->second});
    }
    // angular order from a: increasing t/s
    std::sort(interior.begin(), interior.end(),
              [](const Inside& x, const Inside& y) { return x.t * y.s < y.t * x.s; });

    TwoConeData data;
    data.order.push_back(s[0]);
    for (const auto& in : interior) data.order.push_back(in.ray);
    data.order.push_back(s[1]);
    for (auto r : data.order) data.generators.push_back(fan.ray(r));
    for (std::size_t j = 1; j < data.order.size(); ++j)
        data.subcone_multiplicity.push_back(cone_multiplicity({data.generators[j - 1], data.generators[j]}));
    data.multiplicity = cone_multiplicity({a, b});
    data.beta1_divisor.assign(fan.ray_count(), 0);
    for (auto r : data.order) data.beta1_divisor[r] = 1;
    data.beta1 = ChowGrading(fan).degree_of(data.beta1_divisor);
    return data;
}

std::vector<std::pair<TwoConeData, std::size_t>> interior_ray_pairs(const Fan& fan, const SigmaXData& sigma_x) {
    std::vector<std::pair<TwoConeData, std::size_t>> out;
    for (const auto& sigma : sigma_x.two_cones()) {
        const TwoConeData data = two_cone_analysis(fan, sigma_x, sigma);
        for (std::size_t j = 1; j + 1 < data.order.size(); ++j) out.emplace_back(data, data.order[j]);
    }
    return out;
}

} // namespace toric
