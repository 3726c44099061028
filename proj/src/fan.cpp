#include "toric/fan.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "toric/polyhedral.hpp"

namespace toric {
namespace {

std::string describe(const RayIndices& cone) {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < cone.size(); ++i)
        os << (i ? "," : "") << cone[i] + 1;
    os << '}';
    return os.str();
}

RayIndices intersect(const RayIndices& a, const RayIndices& b) {
    RayIndices out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

bool is_subset(const RayIndices& a, const RayIndices& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

// Coordinates of every generator in a basis chosen among the generators.
struct SpanCoordinates {
    std::size_t dim = 0;
    std::vector<RationalVector> coords;
};

SpanCoordinates span_coordinates(const std::vector<LatticeVector>& gens) {
    SpanCoordinates sc;
    std::vector<LatticeVector> basis;
    for (const auto& g : gens) {
        auto trial = basis;
        trial.push_back(g);
        RationalMatrix m = to_rational(trial);
        if (rref(m).size() == trial.size()) basis = std::move(trial);
    }
    sc.dim = basis.size();
    if (sc.dim == 0) return sc;
    // solve  sum_b c_b basis_b = g
    const std::size_t d = gens.front().size();
    RationalMatrix a(d, RationalVector(sc.dim));
    for (std::size_t b = 0; b < sc.dim; ++b)
        for (std::size_t r = 0; r < d; ++r)
            a[r][b] = static_cast<long>(basis[b][r]);
    for (const auto& g : gens) {
        RationalVector rhs(d);
        for (std::size_t r = 0; r < d; ++r) rhs[r] = static_cast<long>(g[r]);
        auto c = solve(a, rhs, sc.dim);
        sc.coords.push_back(std::move(*c));
    }
    return sc;
}

void for_each_subset(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& fn) {
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    if (k > n) return;
    while (true) {
        fn(idx);
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
        if (i == 0) return;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

bool independent(const std::vector<LatticeVector>& gens) {
    if (gens.empty()) return true;
    RationalMatrix m = to_rational(gens);
    return rref(m).size() == gens.size();
}

} // namespace

RayIndices normalize_indices(RayIndices r) {
    std::sort(r.begin(), r.end());
    r.erase(std::unique(r.begin(), r.end()), r.end());
    return r;
}

std::size_t cone_dimension(const std::vector<LatticeVector>& generators) {
    if (generators.empty()) return 0;
    RationalMatrix m = to_rational(generators);
    return rref(m).size();
}

Fan::Fan(std::size_t rank, std::vector<LatticeVector> rays, std::vector<Cone> cones)
    : rank_(rank), rays_(std::move(rays)), cones_(std::move(cones)) {}

Fan Fan::from_cones(std::size_t rank, std::vector<LatticeVector> rays, std::vector<RayIndices> cones) {
    if (rank == 0)
        throw DomainError("fan rank must be positive");
    for (std::size_t i = 0; i < rays.size(); ++i) {
        if (rays[i].size() != rank)
            throw DomainError("ray " + std::to_string(i + 1) + " has wrong length");
        if (!is_primitive(rays[i]))
            throw DomainError("ray " + std::to_string(i + 1) + " " + to_string(rays[i]) +
                              " is not a primitive lattice vector");
    }
    for (std::size_t i = 0; i < rays.size(); ++i)
        for (std::size_t j = i + 1; j < rays.size(); ++j)
            if (rays[i] == rays[j])
                throw DomainError("rays " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                                  " coincide");
    std::vector<Cone> out;
    out.reserve(cones.size());
    for (auto& c : cones) {
        c = normalize_indices(std::move(c));
        for (auto i : c)
            if (i >= rays.size())
                throw DomainError("cone refers to ray " + std::to_string(i + 1) + " which does not exist");
        std::vector<LatticeVector> gens;
        for (auto i : c) gens.push_back(rays[i]);
        out.push_back({c, cone_dimension(gens)});
    }
    return Fan(rank, std::move(rays), std::move(out));
}

Fan Fan::from_maximal_cones(std::size_t rank, std::vector<LatticeVector> rays,
                            const std::vector<RayIndices>& maximal) {
    Fan base = from_cones(rank, std::move(rays), maximal);
    std::set<RayIndices> all;
    for (const auto& c : base.cones_)
        for (auto& f : cone_faces(base.rays_, c.rays))
            all.insert(std::move(f));
    std::vector<Cone> cones;
    for (const auto& c : all)
        cones.push_back({c, cone_dimension(base.generators(c))});
    std::stable_sort(cones.begin(), cones.end(), [](const Cone& a, const Cone& b) {
        return a.dim != b.dim ? a.dim < b.dim : a.rays < b.rays;
    });
    return Fan(rank, std::move(base.rays_), std::move(cones));
}

std::vector<Cone> Fan::maximal_cones() const {
    std::vector<Cone> out;
    for (const auto& c : cones_) {
        bool maximal = true;
        for (const auto& d : cones_)
            if (d.rays.size() > c.rays.size() && is_subset(c.rays, d.rays)) {
                maximal = false;
                break;
            }
        if (maximal && std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
    }
    return out;
}

std::vector<Cone> Fan::cones_of_dim(std::size_t k) const {
    std::vector<Cone> out;
    for (const auto& c : cones_)
        if (c.dim == k) out.push_back(c);
    return out;
}

bool Fan::has_cone(const RayIndices& rays) const {
    return std::any_of(cones_.begin(), cones_.end(), [&](const Cone& c) { return c.rays == rays; });
}

std::vector<LatticeVector> Fan::generators(const RayIndices& cone) const {
    std::vector<LatticeVector> g;
    g.reserve(cone.size());
    for (auto i : cone) g.push_back(rays_.at(i));
    return g;
}

std::size_t Fan::find_ray(const LatticeVector& v) const {
    for (std::size_t i = 0; i < rays_.size(); ++i)
        if (rays_[i] == v) return i;
    return rays_.size();
}

std::vector<RayIndices> cone_facets(const std::vector<LatticeVector>& rays, const RayIndices& cone) {
    std::vector<LatticeVector> gens;
    for (auto i : cone) gens.push_back(rays.at(i));
    const SpanCoordinates sc = span_coordinates(gens);
    if (sc.dim <= 1 && independent(gens)) return {};
    if (independent(gens)) {
        std::vector<RayIndices> out;
        for (std::size_t skip = 0; skip < cone.size(); ++skip) {
            RayIndices f;
            for (std::size_t i = 0; i < cone.size(); ++i)
                if (i != skip) f.push_back(cone[i]);
            out.push_back(std::move(f));
        }
        return out;
    }
    // facet normals through dim-1 independent generators
    std::set<RayIndices> facets;
    for_each_subset(gens.size(), sc.dim - 1, [&](const std::vector<std::size_t>& sub) {
        RationalMatrix m;
        for (auto s : sub) m.push_back(sc.coords[s]);
        RationalMatrix probe = m;
        if (!m.empty() && rref(probe).size() != sub.size()) return;
        const auto ns = nullspace(m, sc.dim);
        if (ns.size() != 1) return;
        const auto& normal = ns.front();
        bool has_pos = false, has_neg = false;
        RayIndices zero;
        for (std::size_t g = 0; g < gens.size(); ++g) {
            Rational v = 0;
            for (std::size_t k = 0; k < sc.dim; ++k) v += normal[k] * sc.coords[g][k];
            if (v > 0) has_pos = true;
            else if (v < 0) has_neg = true;
            else zero.push_back(cone[g]);
        }
        if (has_pos && has_neg) return;
        facets.insert(normalize_indices(std::move(zero)));
    });
    std::vector<RayIndices> out;
    for (const auto& f : facets)
        if (!f.empty()) out.push_back(f);
    return out;
}

std::vector<RayIndices> cone_faces(const std::vector<LatticeVector>& rays, const RayIndices& cone) {
    const RayIndices c = normalize_indices(cone);
    if (c.empty()) return {};
    std::vector<LatticeVector> gens;
    for (auto i : c) gens.push_back(rays.at(i));
    std::set<RayIndices> faces;
    if (independent(gens)) {
        for (std::size_t mask = 1; mask < (std::size_t{1} << c.size()); ++mask) {
            RayIndices f;
            for (std::size_t i = 0; i < c.size(); ++i)
                if (mask & (std::size_t{1} << i)) f.push_back(c[i]);
            faces.insert(std::move(f));
        }
    } else {
        faces.insert(c);
        for (const auto& facet : cone_facets(rays, c))
            for (auto& f : cone_faces(rays, facet))
                faces.insert(std::move(f));
    }
    return {faces.begin(), faces.end()};
}

bool is_strongly_convex(const std::vector<LatticeVector>& rays, const RayIndices& cone) {
    std::vector<LatticeVector> gens;
    for (auto i : cone) gens.push_back(rays.at(i));
    if (independent(gens)) return true;
    RayIndices minimal = normalize_indices(cone);
    for (const auto& f : cone_facets(rays, cone)) minimal = intersect(minimal, f);
    // the smallest face is the lineality space; it holds a generator iff nonzero
    return minimal.empty();
}

bool cone_contains(const std::vector<LatticeVector>& generators, const LatticeVector& v) {
    const std::size_t k = generators.size();
    const std::size_t d = v.size();
    if (k == 0) return std::all_of(v.begin(), v.end(), [](auto x) { return x == 0; });
    std::vector<LinearEquation> eqs;
    for (std::size_t r = 0; r < d; ++r) {
        LinearEquation e{RationalVector(k), Rational(static_cast<long>(v[r]))};
        for (std::size_t i = 0; i < k; ++i) e.coeffs[i] = static_cast<long>(generators[i][r]);
        eqs.push_back(std::move(e));
    }
    std::vector<LinearInequality> ineqs;
    for (std::size_t i = 0; i < k; ++i) {
        LinearInequality q{RationalVector(k), Rational(0)};
        q.coeffs[i] = 1;
        ineqs.push_back(std::move(q));
    }
    return is_feasible(ineqs, eqs, k);
}

Integer cone_multiplicity(const std::vector<LatticeVector>& generators) {
    if (generators.empty()) return 1;
    if (!independent(generators))
        throw DomainError("multiplicity undefined for non-simplicial cone");
    const auto snf = smith_normal_form(IntegerMatrix::from_rows(generators, generators.front().size()));
    Integer index = 1;
    for (const auto& d : snf.elementary_divisors()) index *= d;
    return index;
}

Integer cone_multiplicity(const Fan& fan, const RayIndices& cone) {
    return cone_multiplicity(fan.generators(normalize_indices(cone)));
}

namespace {

// Does  relint-overlap  of sigma and tau exceed cone(common)?
bool overlaps_beyond(const Fan& fan, const RayIndices& sigma, const RayIndices& tau, const RayIndices& common) {
    const std::size_t a = sigma.size();
    const std::size_t b = tau.size();
    const std::size_t n = a + b;
    const std::size_t d = fan.rank();
    std::vector<LinearEquation> eqs;
    for (std::size_t r = 0; r < d; ++r) {
        LinearEquation e{RationalVector(n), Rational(0)};
        for (std::size_t i = 0; i < a; ++i) e.coeffs[i] = static_cast<long>(fan.ray(sigma[i])[r]);
        for (std::size_t j = 0; j < b; ++j) e.coeffs[a + j] = -static_cast<long>(fan.ray(tau[j])[r]);
        eqs.push_back(std::move(e));
    }
    LinearEquation weight{RationalVector(n), Rational(1)};
    bool any = false;
    for (std::size_t i = 0; i < a; ++i)
        if (!std::binary_search(common.begin(), common.end(), sigma[i])) {
            weight.coeffs[i] = 1;
            any = true;
        }
    if (!any) return false;
    eqs.push_back(std::move(weight));
    std::vector<LinearInequality> ineqs;
    for (std::size_t i = 0; i < n; ++i) {
        LinearInequality q{RationalVector(n), Rational(0)};
        q.coeffs[i] = 1;
        ineqs.push_back(std::move(q));
    }
    return is_feasible(ineqs, eqs, n);
}

bool is_face_of(const Fan& fan, const RayIndices& face, const RayIndices& cone) {
    if (face.empty()) return is_strongly_convex(fan.rays(), cone);
    const auto faces = cone_faces(fan.rays(), cone);
    return std::find(faces.begin(), faces.end(), face) != faces.end();
}

std::vector<RayIndices> codim_one_faces(const Fan& fan, const Cone& c) {
    if (c.dim == 1) return {RayIndices{}};
    return cone_facets(fan.rays(), c.rays);
}

} // namespace

FanDiagnostics validate_fan(const Fan& fan) {
    FanDiagnostics diag;
    auto& v = diag.violations;
    const std::size_t d = fan.rank();

    if (rank(IntegerMatrix::from_rows(fan.rays(), d)) != d)
        v.push_back("rays do not span N_R");

    for (const auto& c : fan.cones())
        if (!is_strongly_convex(fan.rays(), c.rays))
            v.push_back("cone " + describe(c.rays) + " is not strongly convex");

    for (const auto& c : fan.cones())
        for (const auto& f : cone_faces(fan.rays(), c.rays))
            if (!fan.has_cone(f))
                v.push_back("face " + describe(f) + " of cone " + describe(c.rays) + " is not in the fan");

    const auto maximal = fan.maximal_cones();
    for (std::size_t i = 0; i < maximal.size(); ++i)
        for (std::size_t j = i + 1; j < maximal.size(); ++j) {
            const auto& s = maximal[i].rays;
            const auto& t = maximal[j].rays;
            const RayIndices common = intersect(s, t);
            const bool faces_ok = is_face_of(fan, common, s) && is_face_of(fan, common, t);
            if (!faces_ok || overlaps_beyond(fan, s, t, common) || overlaps_beyond(fan, t, s, common))
                v.push_back("cones " + describe(s) + " and " + describe(t) + " do not meet in a common face");
        }

    diag.is_fan = v.empty();
    diag.is_simplicial = std::all_of(maximal.begin(), maximal.end(),
                                     [&](const Cone& c) { return independent(fan.generators(c.rays)); });

    bool complete = diag.is_fan && !maximal.empty();
    for (const auto& c : maximal)
        if (c.dim != d) complete = false;
    if (complete) {
        std::vector<std::vector<RayIndices>> facets;
        for (const auto& c : maximal) facets.push_back(codim_one_faces(fan, c));
        for (std::size_t i = 0; i < maximal.size() && complete; ++i)
            for (const auto& f : facets[i]) {
                std::size_t owners = 0;
                for (const auto& other : facets)
                    owners += static_cast<std::size_t>(std::count(other.begin(), other.end(), f));
                if (owners != 2) {
                    complete = false;
                    break;
                }
            }
    }
    diag.is_complete = complete;
    return diag;
}

Fan star_subdivision(const Fan& fan, const LatticeVector& new_ray) {
    if (new_ray.size() != fan.rank())
        throw DomainError("star_subdivision: ray has wrong length");
    if (!is_primitive(new_ray))
        throw DomainError("star_subdivision: " + to_string(new_ray) + " is not primitive");
    if (fan.find_ray(new_ray) < fan.ray_count()) return fan;

    auto rays = fan.rays();
    const std::size_t r = rays.size();
    rays.push_back(new_ray);

    std::vector<RayIndices> cones;
    bool in_support = false;
    for (const auto& c : fan.maximal_cones()) {
        if (!cone_contains(fan.generators(c.rays), new_ray)) {
            cones.push_back(c.rays);
            continue;
        }
        in_support = true;
        for (const auto& facet : codim_one_faces(fan, c)) {
            if (!facet.empty() && cone_contains(fan.generators(facet), new_ray)) continue;
            RayIndices joined = facet;
            joined.push_back(r);
            cones.push_back(normalize_indices(std::move(joined)));
        }
    }
    if (!in_support)
        throw DomainError("star_subdivision: " + to_string(new_ray) + " lies outside the support of the fan");
    return Fan::from_maximal_cones(fan.rank(), std::move(rays), cones);
}

} // namespace toric
