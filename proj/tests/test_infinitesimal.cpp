#include <doctest.h>

#include <random>

#include "support.hpp"

using namespace toric;
using support::ev;

namespace {

struct ExampleData {
    Model model = support::example();
    Polynomial f = *model.polynomial;
    SigmaXData sx = compute_sigma_x(model.fan, model.divisor);
    TwoConeData cone = interior_ray_pairs(model.fan, sx).front().first;
    std::vector<Root> roots = enumerate_roots(model.fan, cone, 5);
};

// coefficient of eps, as a polynomial
Polynomial eps_part(const Polynomial& p) {
    return p.map_coefficients([](const Coefficient& c) {
        Coefficient out;
        for (const auto& [k, v] : c.terms())
            if (k.second == 1) out += Coefficient(v) * Coefficient::lambda(k.first);
        return out;
    });
}

RationalFunction rf(const Polynomial& num, const Polynomial& den) { return RationalFunction(num, den); }

// theta rebuilt from the trivializations psi_(i,k) = -(-1)^k N d_l + (eps part of f^k)/f_i d_i,
// which only uses the first-order family.
CechCocycle theta_oracle(const HypersurfaceFamily& fam) {
    const FirstOrderFamily fo = first_order_family(fam);
    const std::size_t l = fam.root.l;
    const Polynomial n_field = Polynomial::monomial(fam.root.shift());
    std::vector<VectorField> psi;
    CechCocycle c;
    for (auto i : nonvanishing_partials(fam.f))
        for (int k = 0; k < 2; ++k) {
            VectorField v = VectorField::component(l, RationalFunction(Coefficient(k == 0 ? -1L : 1L) * n_field));
            v.add(i, rf(eps_part(fo.f_chart[k]), partial_derivative(fam.f, i)));
            psi.push_back(v);
            c.charts.push_back("");
        }
    for (std::size_t a = 0; a < psi.size(); ++a)
        for (std::size_t b = 0; b < psi.size(); ++b) {
            VectorField e = psi[b] - psi[a];
            if (!e.is_zero()) c.entries[{a, b}] = e;
        }
    return c;
}

bool same_cochain(const CechCocycle& a, const CechCocycle& b) {
    if (a.charts.size() != b.charts.size()) return false;
    for (std::size_t p = 0; p < a.charts.size(); ++p)
        for (std::size_t q = 0; q < a.charts.size(); ++q)
            if (!a.entry(p, q).equals(b.entry(p, q))) return false;
    return true;
}

} // namespace

TEST_CASE("gamma_A on the quintic matches the closed form") {
    const Model q = preset("quintic");
    const Polynomial& f = *q.polynomial;
    const Polynomial a = support::poly(5, {{1, ev({1, 1, 1, 1, 1})}});
    const auto g = gamma_A(q.fan, f, a);
    REQUIRE(g.charts.size() == 5);
    CHECK(g.charts[0] == "x1");
    const Polynomial ia = Coefficient::sqrt_minus_one() * a;
    for (std::size_t p = 0; p < 5; ++p)
        for (std::size_t r = 0; r < 5; ++r) {
            if (p == r) {
                CHECK(g.entry(p, r).is_zero());
                continue;
            }
            // i A (d_r / f_r - d_p / f_p) with f_i = 5 x_i^4
            const Polynomial fp = support::poly(5, {{5, [&] { ExponentVector e(5, 0); e[p] = 4; return e; }()}});
            const Polynomial fr = support::poly(5, {{5, [&] { ExponentVector e(5, 0); e[r] = 4; return e; }()}});
            VectorField expected = VectorField::component(r, rf(ia, fr));
            expected.add(p, -rf(ia, fp));
            CHECK(g.entry(p, r).equals(expected));
        }
    // the x1 component of the (x1, x2) entry: -i x2 x3 x4 x5 / (5 x1^3)
    const auto& comp = g.entry(0, 1).components().at(0);
    CHECK(comp.equals(rf(Coefficient::sqrt_minus_one() * support::poly(5, {{-1, ev({-3, 1, 1, 1, 1})}}),
                         Polynomial::constant(5, 5))));
    CHECK(g.check_antisymmetry());
    CHECK(g.check_cocycle());

    // A = f: the (x1, x2) entry is i (x2^-4 d2 - x1^-4 d1) f / 5
    const auto gf = gamma_A(q.fan, f, f);
    const Polynomial if5 = Coefficient(GaussianRational(0, Rational(1, 5))) * f;
    VectorField want = VectorField::component(1, RationalFunction(if5 * Polynomial::monomial(ev({0, -4, 0, 0, 0}))));
    want.add(0, RationalFunction(-(if5 * Polynomial::monomial(ev({-4, 0, 0, 0, 0})))));
    CHECK(gf.entry(0, 1).equals(want));
    CHECK_THROWS_AS(gamma_A(q.fan, f, support::poly(5, {{1, ev({1, 0, 0, 0, 0})}})), DomainError);
}

TEST_CASE("cocycle identities on the example") {
    const ExampleData ex;
    const auto ga = gamma_A(ex.model.fan, ex.f, support::poly(6, {{1, ev({1, 1, 1, 1, 1, 1})}}));
    CHECK(ga.check_antisymmetry());
    CHECK(ga.check_cocycle());
    for (const auto& root : ex.roots) {
        const Polynomial b = Polynomial::monomial(root.b_monomial);
        const auto lift = lift_nonpolynomial(ex.model.fan, ex.cone, 5, b);
        CHECK(lift.check_antisymmetry());
        CHECK(lift.check_cocycle());
        CHECK_FALSE(lift.coboundary);
        const auto fam = build_family(ex.model.fan, ex.f, root);
        const auto th = theta_cocycle(fam);
        CHECK(th.check_antisymmetry());
        CHECK(th.check_cocycle());
        const auto k = kodaira_cocycle(root);
        CHECK(k.check_antisymmetry());
        CHECK(k.check_cocycle());
    }
}

TEST_CASE("gamma^l_B is a cocycle and flagged when x_l divides B") {
    const ExampleData ex;
    std::size_t flagged = 0, unflagged = 0;
    for (const auto& c : enumerate_root_candidates(ex.model.fan, ex.cone, 5)) {
        const Polynomial b = Polynomial::monomial(c.b_monomial);
        const auto g = gamma_l_B(ex.model.fan, ex.f, ex.cone, 5, b);
        CHECK(g.check_antisymmetry());
        CHECK(g.check_cocycle());
        const bool divisible = c.b_monomial[5] >= 1;
        CHECK(g.coboundary == divisible);
        CHECK(lift_nonpolynomial(ex.model.fan, ex.cone, 5, b).coboundary == divisible);
        (divisible ? flagged : unflagged)++;
    }
    CHECK(flagged == 3);
    CHECK(unflagged == 3);
    CHECK_THROWS_AS(gamma_l_B(ex.model.fan, ex.f, ex.cone, 5, ex.f), DomainError);
}

TEST_CASE("lift and Kodaira entries on the example") {
    const ExampleData ex;
    const Polynomial b = Polynomial::monomial(ex.roots[0].b_monomial);
    const auto lift = lift_nonpolynomial(ex.model.fan, ex.cone, 5, b);
    REQUIRE(lift.charts.size() == 2);
    VectorField expected = VectorField::component(0, rf(support::poly(6, {{-1, ev({0, -1, 1, 0, 0, -1})}}),
                                                        Polynomial::constant(6, 1)));
    expected.add(1, rf(support::poly(6, {{-1, ev({-1, 0, 1, 0, 0, -1})}}), Polynomial::constant(6, 1)));
    CHECK(lift.entry(0, 1).equals(expected));
    CHECK(lift.entry(0, 1).to_string() == "(-x3/(x2*x6))*d1 + (-x3/(x1*x6))*d2");

    for (std::size_t r = 0; r < ex.roots.size(); ++r) {
        const auto k = kodaira_cocycle(ex.roots[r]);
        ExponentVector n(6, 0);
        n[0] = n[1] = -1;
        n[2 + r] = 1;
        const VectorField want = VectorField::component(5, RationalFunction(support::poly(6, {{2, n}})));
        CHECK(k.entry(0, 1).equals(want));
        CHECK(k.entry(1, 0).equals(-want));
        CHECK(k.entry(0, 0).is_zero());
    }
    CHECK(kodaira_cocycle(ex.roots[0]).entry(0, 1).to_string() == "(2*x3/(x1*x2))*d6");
}

TEST_CASE("d^l fields") {
    const ExampleData ex;
    CHECK(d_l(ex.cone, 5, 1, 6).equals(VectorField::component(0, RationalFunction(Polynomial::variable(6, 0)))));
    CHECK(d_l(ex.cone, 5, 2, 6).equals(VectorField::component(1, RationalFunction(-Polynomial::variable(6, 1)))));
    CHECK(d_l(ex.cone, 5, 3, 6).is_zero());
    CHECK_THROWS_AS(d_l(ex.cone, 0, 1, 6), DomainError);
}

TEST_CASE("theta agrees with the trivializations of the first-order family") {
    const ExampleData ex;
    for (const auto& root : ex.roots) {
        const auto fam = build_family(ex.model.fan, ex.f, root);
        const auto th = theta_cocycle(fam);
        CHECK(same_cochain(th, theta_oracle(fam)));
        // the l-component between the two charts is the Kodaira entry
        const auto k = kodaira_cocycle(fam.root);
        const std::size_t p = 0, q = 1; // (x_i, 0) -> (x_i, 1)
        CHECK(th.entry(p, q).components().at(5).equals(k.entry(0, 1).components().at(5)));
        // each psi kills f up to the eps part of f_eps: theta entries annihilate f
        for (std::size_t a = 0; a < th.charts.size(); ++a)
            for (std::size_t b = 0; b < th.charts.size(); ++b) CHECK(th.entry(a, b).apply(fam.f).is_zero());
    }
}

TEST_CASE("cocycle identities on random refinements") {
    const auto cases = support::random_root_cases(4);
    REQUIRE(cases.size() >= 3);
    for (const auto& c : cases) {
        const Fan& fan = c.r.fan;
        const auto ga = gamma_A(fan, c.f, c.f);
        CHECK(ga.check_antisymmetry());
        CHECK(ga.check_cocycle());
        const Polynomial b = Polynomial::monomial(c.root.b_monomial);
        const auto lift = lift_nonpolynomial(fan, c.cone, c.l, b);
        CHECK(lift.check_antisymmetry());
        CHECK(lift.check_cocycle());
        const auto gb = gamma_l_B(fan, c.f, c.cone, c.l, b);
        CHECK(gb.check_antisymmetry());
        CHECK(gb.check_cocycle());
        const auto fam = build_family(fan, c.f, c.root);
        const auto th = theta_cocycle(fam);
        CHECK(th.check_antisymmetry());
        CHECK(th.check_cocycle());
        CHECK(same_cochain(th, theta_oracle(fam)));
    }
}

TEST_CASE("ray identity and matching factor") {
    const ExampleData ex;
    CHECK(ray_identity_check(ex.cone, 1));
    CHECK(matching_factor(ex.cone, 1) == -1);
    CHECK_THROWS_AS(ray_identity_check(ex.cone, 0), DomainError);
    CHECK(matching_factor(Integer(1), Integer(2), Integer(3)) == Rational(-4, 3));

    SUBCASE("blow-up of the plane") {
        const Fan bl = star_subdivision(support::projective_space(2), {1, 1});
        const auto b = support::pull_back(support::projective_space(2), {0, 0, 1}, bl);
        const auto pairs = interior_ray_pairs(bl, compute_sigma_x(bl, b));
        REQUIRE(pairs.size() == 1);
        CHECK(ray_identity_check(pairs[0].first, 1));
        CHECK(matching_factor(pairs[0].first, 1) == -2);
    }
    SUBCASE("a singular 2-cone") {
        const Fan base = Fan::from_maximal_cones(2, {{1, 0}, {1, 2}, {-1, -1}}, {{0, 1}, {1, 2}, {0, 2}});
        const Fan fine = star_subdivision(base, {1, 1});
        const auto b = support::pull_back(base, {0, 0, 1}, fine);
        const auto pairs = interior_ray_pairs(fine, compute_sigma_x(fine, b));
        REQUIRE(pairs.size() == 1);
        const auto& cone = pairs[0].first;
        CHECK(cone.multiplicity == 2);
        CHECK(ray_identity_check(cone, 1));
        CHECK(matching_factor(cone, 1) == -1);
    }
}

TEST_CASE("ray identity on every consecutive triple of random refinements") {
    std::mt19937 rng(59);
    std::size_t triples = 0;
    for (int trial = 0; trial < 20; ++trial) {
        const auto r = support::random_refined_fan(rng, 2 + trial % 2);
        const auto sx = compute_sigma_x(r.fan, r.b);
        for (const auto& s : sx.two_cones()) {
            const auto cone = two_cone_analysis(r.fan, sx, s);
            for (std::size_t j = 1; j + 1 < cone.order.size(); ++j) {
                CHECK(ray_identity_check(cone, j));
                ++triples;
            }
        }
    }
    CHECK(triples > 0);
}

TEST_CASE("dim R_1 against the monomial-ideal oracle") {
    const Model ex = support::example();
    CHECK(dim_R1(ex.fan, *ex.polynomial) == 83);
    CHECK(support::monomial_r1_oracle(ex.fan, *ex.polynomial, {8, 8, 4, 4, 4, 4}) == 83);
    const Model q = preset("quintic");
    CHECK(dim_R1(q.fan, *q.polynomial) == 101);
    CHECK(support::monomial_r1_oracle(q.fan, *q.polynomial, {5, 5, 5, 5, 5}) == 101);
    const Model p1 = preset("p1");
    CHECK(dim_R1(p1.fan, *p1.polynomial) == 0);
    CHECK(support::monomial_r1_oracle(p1.fan, *p1.polynomial, {2, 2}) == 0);
    const Model p2 = preset("p2");
    CHECK(dim_R1(p2.fan, *p2.polynomial) == support::monomial_r1_oracle(p2.fan, *p2.polynomial, {3, 3, 3}));
}

TEST_CASE("dim R_1 does not depend on the basis order") {
    const Model ex = support::example();
    for (std::uint64_t seed : {1u, 2u, 99u}) CHECK(dim_R1(ex.fan, *ex.polynomial, seed) == 83);
    const Model q = preset("quintic");
    CHECK(dim_R1(q.fan, *q.polynomial, 7) == 101);
}

TEST_CASE("dim R_1 needs rational coefficients") {
    const Model p2 = preset("p2");
    const Polynomial f = Coefficient::sqrt_minus_one() * *p2.polynomial;
    CHECK_THROWS_AS(dim_R1(p2.fan, f), DomainError);
}

TEST_CASE("deformation space decomposition") {
    const Model ex = support::example();
    const auto h = h1_decomposition(ex.fan, *ex.polynomial);
    CHECK(h.polynomial_dim == 83);
    REQUIRE(h.non_polynomial.size() == 1);
    CHECK(h.non_polynomial[0].dim == 3);
    CHECK(h.non_polynomial[0].root_count == 3);
    CHECK(h.non_polynomial[0].l == 5);
    CHECK(h.non_polynomial[0].sigma == RayIndices{0, 1});
    CHECK(h.total == 86);

    const Model q = preset("quintic");
    const auto hq = h1_decomposition(q.fan, *q.polynomial);
    CHECK(hq.polynomial_dim == 101);
    CHECK(hq.non_polynomial.empty());
    CHECK(hq.total == 101);

    const Model p2 = preset("p2");
    const Polynomial conic = support::poly(3, {{1, ev({2, 0, 0})}, {1, ev({0, 2, 0})}, {1, ev({0, 0, 2})}});
    CHECK_THROWS_WITH_AS(h1_decomposition(p2.fan, conic), "decomposition requires anticanonical degree",
                         DomainError);
}
