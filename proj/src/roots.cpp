#include "toric/roots.hpp"

#include <algorithm>

namespace toric {
namespace {

std::vector<Root> enumerate(const Fan& fan, const TwoConeData& cone, std::size_t l, bool pin_l) {
    if (!cone.is_interior(l))
        throw DomainError("ray " + std::to_string(l + 1) + " is not interior to the 2-cone");
    const RayIndices in_sigma = cone.rays();
    auto inside = [&](std::size_t i) { return std::binary_search(in_sigma.begin(), in_sigma.end(), i); };

    std::vector<HalfSpace> constraints;
    for (std::size_t i = 0; i < fan.ray_count(); ++i) constraints.push_back({fan.ray(i), inside(i) ? -1 : 0});
    if (pin_l) {
        LatticeVector neg = fan.ray(l);
        for (auto& x : neg) x = -x;
        constraints.push_back({std::move(neg), 1});
    }

    std::vector<LatticeVector> points;
    try {
        points = lattice_points(constraints, fan.rank());
    } catch (const DomainError&) {
        throw DomainError("root polytope unbounded (fan not complete?)");
    }
    // descending, so B runs x_a before x_b for a < b
    std::sort(points.begin(), points.end(), [](const LatticeVector& a, const LatticeVector& b) { return a > b; });
    const ChowGrading grading(fan);
    std::vector<Root> out;
    for (auto& u : points) {
        Root r;
        r.pairing = grading.pairing_vector(u);
        r.b_monomial = r.pairing;
        for (auto i : in_sigma) r.b_monomial[i] += 1;
        r.u = std::move(u);
        r.l = l;
        r.cone = cone;
        out.push_back(std::move(r));
    }
    return out;
}

} // namespace

ChartCover chart_cover(const TwoConeData& cone, std::size_t l) {
    if (!cone.is_interior(l))
        throw DomainError("ray " + std::to_string(l + 1) + " is not interior to the 2-cone");
    const std::size_t j = cone.position(l);
    ChartCover c;
    c.l = l;
    for (std::size_t k = 0; k < cone.order.size(); ++k) {
        if (k > j) c.chart0.push_back(cone.order[k]);
        if (k < j) c.chart1.push_back(cone.order[k]);
        if (k != j) c.intersection.push_back(cone.order[k]);
    }
    c.chart0 = normalize_indices(std::move(c.chart0));
    c.chart1 = normalize_indices(std::move(c.chart1));
    c.intersection = normalize_indices(std::move(c.intersection));
    return c;
}

ExponentVector Root::shift() const {
    ExponentVector s = pairing;
    s.at(l) += 1;
    return s;
}

std::vector<Root> enumerate_roots(const Fan& fan, const TwoConeData& cone, std::size_t l) {
    return enumerate(fan, cone, l, true);
}

std::vector<Root> enumerate_root_candidates(const Fan& fan, const TwoConeData& cone, std::size_t l) {
    return enumerate(fan, cone, l, false);
}

std::string TransitionMap::to_string() const {
    const std::size_t n = replacement.nvars();
    ExponentVector xl(n, 0);
    xl[variable] = 1;
    Coefficient c = Coefficient(static_cast<long>(sign)) * Coefficient::lambda();
    return monomial_string(xl) + " -> " + monomial_string(xl) + term_string(shift, c, false);
}

static TransitionMap make_transition(const Root& root, int sign) {
    TransitionMap m;
    m.variable = root.l;
    m.sign = sign;
    m.shift = root.shift();
    const std::size_t n = m.shift.size();
    m.replacement = Polynomial::variable(n, root.l) +
                    Polynomial::monomial(m.shift, Coefficient(static_cast<long>(sign)) * Coefficient::lambda());
    return m;
}

TransitionMap gluing_map(const Root& root, int k) {
    if (k != 0 && k != 1) throw DomainError("chart index must be 0 or 1");
    return make_transition(root, k == 0 ? 1 : -1);
}

TransitionMap composite_transition(const Root& root) {
    // gluing_map(1) after the inverse of gluing_map(0); the shifts commute
    const TransitionMap g0 = gluing_map(root, 0);
    const TransitionMap g1 = gluing_map(root, 1);
    const Polynomial inverse0 = Polynomial::variable(g0.replacement.nvars(), root.l) -
                                Polynomial::monomial(g0.shift, Coefficient::lambda());
    TransitionMap m = make_transition(root, g1.sign - g0.sign);
    if (substitute_variable(g1.replacement, root.l, inverse0) != m.replacement)
        throw DomainError("composite transition: shifts do not compose");
    return m;
}

Polynomial apply(const TransitionMap& map, const Polynomial& p) {
    return substitute_variable(p, map.variable, map.replacement);
}

std::string to_string(Regularity r) {
    switch (r) {
    case Regularity::Chart0: return "chart-0 regular";
    case Regularity::Chart1: return "chart-1 regular";
    case Regularity::Both: return "both";
    case Regularity::Neither: return "neither";
    }
    return "";
}

Regularity regularity_locus(const Fan& fan, const TwoConeData& cone, std::size_t l, const LatticeVector& u) {
    const ChartCover cover = chart_cover(cone, l);
    ExponentVector e = ChowGrading(fan).pairing_vector(u);
    e.at(l) += 1;
    auto regular = [&](const RayIndices& inverted) {
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] < 0 && !std::binary_search(inverted.begin(), inverted.end(), i)) return false;
        return true;
    };
    const bool r0 = regular(cover.chart0);
    const bool r1 = regular(cover.chart1);
    if (r0 && r1) return Regularity::Both;
    if (r0) return Regularity::Chart0;
    if (r1) return Regularity::Chart1;
    return Regularity::Neither;
}

} // namespace toric
