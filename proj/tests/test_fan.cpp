#include <doctest.h>

#include <random>
#include <set>

#include "support.hpp"

using namespace toric;

namespace {

std::set<RayIndices> maximal_sets(const Fan& f) {
    std::set<RayIndices> s;
    for (const auto& c : f.maximal_cones()) s.insert(c.rays);
    return s;
}

} // namespace

TEST_CASE("presets are complete simplicial fans") {
    for (const auto& name : preset_names()) {
        CAPTURE(name);
        const auto d = validate_fan(preset(name).fan);
        CHECK(d.is_fan);
        CHECK(d.is_complete);
        CHECK(d.is_simplicial);
        CHECK(d.violations.empty());
    }
    CHECK(support::example().fan.maximal_cones().size() == 8);
    CHECK(preset("quintic").fan.maximal_cones().size() == 5);
}

TEST_CASE("violations are reported") {
    SUBCASE("overlapping cones") {
        const auto f = Fan::from_maximal_cones(2, {{1, 0}, {0, 1}, {1, 1}}, {{0, 1}, {0, 2}});
        const auto d = validate_fan(f);
        CHECK_FALSE(d.is_fan);
        CHECK_FALSE(d.violations.empty());
    }
    SUBCASE("not strongly convex") {
        const auto f = Fan::from_maximal_cones(1, {{1}, {-1}}, {{0, 1}});
        CHECK_FALSE(validate_fan(f).is_fan);
    }
    SUBCASE("incomplete") {
        const auto f = Fan::from_maximal_cones(2, {{1, 0}, {0, 1}, {-1, 0}}, {{0, 1}, {1, 2}});
        const auto d = validate_fan(f);
        CHECK(d.is_fan);
        CHECK_FALSE(d.is_complete);
    }
    SUBCASE("non-primitive ray") {
        CHECK_THROWS_AS(Fan::from_maximal_cones(1, {{2}, {-1}}, {{0}, {1}}), DomainError);
    }
    SUBCASE("non-simplicial") {
        const auto f = Fan::from_maximal_cones(3, {{1, 0, 1}, {0, 1, 1}, {-1, 0, 1}, {0, -1, 1}}, {{0, 1, 2, 3}});
        const auto d = validate_fan(f);
        CHECK(d.is_fan);
        CHECK_FALSE(d.is_simplicial);
    }
}

TEST_CASE("star subdivision of the weighted projective fan gives the resolved preset") {
    const Fan coarse = preset("p11222").fan;
    const Fan fine = star_subdivision(coarse, {0, -1, -1, -1});
    const Fan expected = support::example().fan;
    CHECK(fine.rays() == expected.rays());
    CHECK(maximal_sets(fine) == maximal_sets(expected));
}

TEST_CASE("cone multiplicities") {
    const Fan f = support::example().fan;
    // the 2-cone over e1 = (-1,-2,-2,-2), e2 = (1,0,0,0)
    CHECK(cone_multiplicity(f, {0, 1}) == 2);
    CHECK(cone_multiplicity(f, {0, 5}) == 1);
    CHECK(cone_multiplicity(f, {1, 5}) == 1);
    CHECK(cone_multiplicity(std::vector<LatticeVector>{{1, 0}, {1, 2}}) == 2);
    CHECK(cone_multiplicity(std::vector<LatticeVector>{{1, 0}, {0, 1}}) == 1);
    for (const auto& c : preset("p11222").fan.maximal_cones()) {
        // (-1,-2,-2,-2) with three unit vectors: index 2 unless e1 is the one left out
        const bool singular = c.rays.front() == 0 && c.rays[1] == 1;
        CHECK(cone_multiplicity(preset("p11222").fan, c.rays) == (singular ? 2 : 1));
    }
}

TEST_CASE("random refinements of projective space stay complete fans") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 12; ++trial) {
        const auto r = support::random_refined_fan(rng, 2 + trial % 2);
        const auto d = validate_fan(r.fan);
        CHECK(d.is_fan);
        CHECK(d.is_complete);
        CHECK(d.is_simplicial);
        CHECK(r.fan.ray_count() == r.base.ray_count() + r.added);
        // every maximal cone is full-dimensional
        for (const auto& c : r.fan.maximal_cones()) CHECK(c.dim == r.fan.rank());
    }
}

TEST_CASE("cone containment and faces") {
    const std::vector<LatticeVector> gens = {{1, 0}, {1, 2}};
    CHECK(cone_contains(gens, {1, 1}));
    CHECK(cone_contains(gens, {2, 4}));
    CHECK_FALSE(cone_contains(gens, {0, 1}));
    const std::vector<LatticeVector> rays = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    CHECK(cone_faces(rays, {0, 1, 2}).size() == 7);
    CHECK(cone_facets(rays, {0, 1, 2}).size() == 3);
}
