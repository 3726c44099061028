#pragma once

#include <string>
#include <vector>

#include "toric/arith.hpp"
#include "toric/lattice.hpp"

namespace toric {

/// Sorted set of indices into a fan's ray list. Identifies a cone.
using RayIndices = std::vector<std::size_t>;

struct Cone {
    RayIndices rays;
    std::size_t dim = 0;

    bool operator==(const Cone&) const = default;
};

/// A fan in N_R: primitive ray generators plus a list of cones, each cone
/// given by the rays generating it.
///
/// Rays must be primitive and nonzero; non-primitive input is rejected rather
/// than rescaled. Construction does not check the fan axioms, use
/// validate_fan for that.
class Fan {
public:
    /// Cones are taken as listed (no face closure).
    static Fan from_cones(std::size_t rank, std::vector<LatticeVector> rays, std::vector<RayIndices> cones);
    /// Lists every face of the given cones as well.
    static Fan from_maximal_cones(std::size_t rank, std::vector<LatticeVector> rays,
                                  const std::vector<RayIndices>& maximal);

    std::size_t rank() const { return rank_; }
    std::size_t ray_count() const { return rays_.size(); }
    const std::vector<LatticeVector>& rays() const { return rays_; }
    const LatticeVector& ray(std::size_t i) const { return rays_.at(i); }

    const std::vector<Cone>& cones() const { return cones_; }
    /// Cones not strictly contained (as ray sets) in another listed cone.
    std::vector<Cone> maximal_cones() const;
    std::vector<Cone> cones_of_dim(std::size_t k) const;
    bool has_cone(const RayIndices& rays) const;

    std::vector<LatticeVector> generators(const RayIndices& cone) const;
    /// Index of `v` in the ray list, or ray_count() when absent.
    std::size_t find_ray(const LatticeVector& v) const;

private:
    Fan(std::size_t rank, std::vector<LatticeVector> rays, std::vector<Cone> cones);

    std::size_t rank_ = 0;
    std::vector<LatticeVector> rays_;
    std::vector<Cone> cones_;
};

RayIndices normalize_indices(RayIndices r);

/// Dimension of the linear span of the generators.
std::size_t cone_dimension(const std::vector<LatticeVector>& generators);

/// All faces of the cone generated by `cone` (as subsets of it), including
/// the cone itself and excluding the zero cone. For a simplicial cone these
/// are all nonempty subsets.
std::vector<RayIndices> cone_faces(const std::vector<LatticeVector>& rays, const RayIndices& cone);

/// Faces of codimension one inside the cone's own span.
std::vector<RayIndices> cone_facets(const std::vector<LatticeVector>& rays, const RayIndices& cone);

bool is_strongly_convex(const std::vector<LatticeVector>& rays, const RayIndices& cone);

/// Exact test v in cone(generators).
bool cone_contains(const std::vector<LatticeVector>& generators, const LatticeVector& v);

/// Index of the sublattice generated by linearly independent generators
/// inside the saturated lattice of their span.
Integer cone_multiplicity(const std::vector<LatticeVector>& generators);
Integer cone_multiplicity(const Fan& fan, const RayIndices& cone);

struct FanDiagnostics {
    bool is_fan = false;
    bool is_complete = false;
    bool is_simplicial = false;
    std::vector<std::string> violations;
};

FanDiagnostics validate_fan(const Fan& fan);

/// Star subdivision at a primitive lattice point of the support.
Fan star_subdivision(const Fan& fan, const LatticeVector& new_ray);

} // namespace toric
