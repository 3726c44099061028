#include "toric/families.hpp"

#include <algorithm>

namespace toric {
namespace {

int sign_of_int(std::int64_t v) { return (v > 0) - (v < 0); }

std::size_t default_l0(const Root& root) {
    return std::min(root.cone.order.front(), root.cone.order.back());
}

Root oriented(const Root& root, std::size_t l0) {
    Root r = root;
    r.cone = root.cone.reoriented(l0);
    return r;
}

void require_homogeneous(const Fan& fan, const Polynomial& f) {
    if (f.is_zero()) throw DomainError("polynomial is zero");
    if (!ChowGrading(fan).degree_of(f)) throw DomainError("polynomial is not homogeneous");
    for (const auto& [e, c] : f.terms()) {
        if (c.uses_lambda() || c.uses_epsilon()) throw DomainError("polynomial has parameter-dependent coefficients");
        for (auto x : e)
            if (x < 0) throw DomainError("polynomial has negative exponents");
    }
}

// sum_m a_m x^a (1 + w_m * t * x^u)^{a_l}, or the eps-linearization of it
Polynomial twisted(const Polynomial& f, const ExponentVector& xu, std::size_t l, const std::vector<int>& w,
                   bool first_order) {
    const std::size_t n = f.nvars();
    Polynomial out(n);
    std::size_t k = 0;
    for (const auto& [a, coeff] : f.terms()) {
        const int weight = w[k++];
        const Polynomial term = Polynomial::monomial(a, coeff);
        if (weight == 0 || a[l] == 0) {
            out += term;
            continue;
        }
        if (first_order) {
            const Coefficient c = Coefficient(static_cast<long>(weight * a[l])) * Coefficient::epsilon();
            out += term + term * Polynomial::monomial(xu, c);
        } else {
            const Polynomial factor = Polynomial::constant(n, 1) +
                                      Polynomial::monomial(xu, Coefficient(static_cast<long>(weight)) *
                                                                        Coefficient::lambda());
            out += term * factor.pow(static_cast<unsigned>(a[l]));
        }
    }
    return out;
}

std::vector<int> chart_weights(const CmTable& cm, int k) {
    std::vector<int> w;
    for (const auto& e : cm) w.push_back((k == 0 ? 1 : -1) + e.c);
    return w;
}

std::vector<int> plain_weights(const CmTable& cm) {
    std::vector<int> w;
    for (const auto& e : cm) w.push_back(e.c);
    return w;
}

} // namespace

bool is_anticanonical(const Fan& fan, const Polynomial& f) {
    const ChowGrading g(fan);
    const auto d = g.degree_of(f);
    return d && *d == g.degree_of(ExponentVector(fan.ray_count(), 1));
}

CmTable compute_cm(const Fan& fan, const Polynomial& f, const Root& root, std::size_t l0) {
    require_homogeneous(fan, f);
    const TwoConeData cone = root.cone.reoriented(l0);
    const std::int64_t ul0 = root.pairing.at(cone.l0());
    const bool anticanonical = is_anticanonical(fan, f);
    const std::vector<std::int64_t> ones(fan.ray_count(), 1);
    CmTable table;
    for (const auto& [a, coeff] : f.terms()) {
        CmEntry e;
        e.exponent = a;
        e.coefficient = coeff;
        if (anticanonical) e.m = solve_character(fan, a, ones);
        e.c = sign_of_int(a[cone.l0()] + ul0 * a[root.l]);
        table.push_back(std::move(e));
    }
    return table;
}

HypersurfaceFamily build_family_with_cm(const Fan& fan, const Polynomial& f, const Root& root, std::size_t l0,
                                        const std::vector<int>& c) {
    require_homogeneous(fan, f);
    if (c.size() != f.size()) throw DomainError("c_m table has the wrong length");
    HypersurfaceFamily fam;
    fam.root = oriented(root, l0);
    fam.l0 = l0;
    fam.cover = chart_cover(fam.root.cone, root.l);
    fam.f = f;
    std::size_t k = 0;
    for (const auto& [a, coeff] : f.terms()) fam.cm.push_back({a, coeff, std::nullopt, c[k++]});
    const ExponentVector& xu = root.pairing;
    fam.f_lambda = twisted(f, xu, root.l, plain_weights(fam.cm), false);
    for (int chart = 0; chart < 2; ++chart)
        fam.f_chart[chart] = twisted(f, xu, root.l, chart_weights(fam.cm, chart), false);
    return fam;
}

HypersurfaceFamily build_family(const Fan& fan, const Polynomial& f, const Root& root, std::size_t l0) {
    const CmTable cm = compute_cm(fan, f, root, l0);
    std::vector<int> c;
    for (const auto& e : cm) c.push_back(e.c);
    HypersurfaceFamily fam = build_family_with_cm(fan, f, root, l0, c);
    fam.cm = cm;
    return fam;
}

HypersurfaceFamily build_family(const Fan& fan, const Polynomial& f, const Root& root) {
    return build_family(fan, f, root, default_l0(root));
}

std::vector<ChartPoleReport> verify_no_poles(const HypersurfaceFamily& family) {
    std::vector<ChartPoleReport> out;
    for (int k = 0; k < 2; ++k) {
        ChartPoleReport r;
        r.chart = k;
        const RayIndices& inverted = family.cover.chart(k);
        for (const auto& [e, c] : family.f_chart[k].terms()) {
            for (std::size_t i = 0; i < e.size(); ++i)
                if (e[i] < 0 && !std::binary_search(inverted.begin(), inverted.end(), i)) {
                    r.offending.push_back(e);
                    break;
                }
        }
        r.passed = r.offending.empty();
        out.push_back(std::move(r));
    }
    return out;
}

FirstOrderFamily first_order_family(const HypersurfaceFamily& family) {
    const ExponentVector& xu = family.root.pairing;
    const std::size_t l = family.root.l;
    FirstOrderFamily out;
    out.f_eps = twisted(family.f, xu, l, plain_weights(family.cm), true);
    for (int k = 0; k < 2; ++k) out.f_chart[k] = twisted(family.f, xu, l, chart_weights(family.cm, k), true);
    return out;
}

} // namespace toric
