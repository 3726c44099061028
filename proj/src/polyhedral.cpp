#include "toric/polyhedral.hpp"

#include <map>
#include <optional>

#include "toric/lattice.hpp"

namespace toric {
namespace {

struct CoeffLess {
    bool operator()(const RationalVector& a, const RationalVector& b) const {
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i] < b[i]) return true;
            if (b[i] < a[i]) return false;
        }
        return false;
    }
};

// Rows keyed by their (normalized) coefficient vector; only the tightest
// right-hand side per direction is kept.
class ConstraintSet {
public:
    explicit ConstraintSet(std::size_t nvars) : nvars_(nvars) {}

    void add(LinearInequality c) {
        std::size_t lead = 0;
        while (lead < nvars_ && c.coeffs[lead] == 0) ++lead;
        if (lead == nvars_) {
            if (c.rhs > 0) contradiction_ = true;
            return;
        }
        const Rational scale = abs(c.coeffs[lead]);
        if (scale != 1) {
            for (auto& x : c.coeffs) x /= scale;
            c.rhs /= scale;
        }
        auto [it, inserted] = rows_.emplace(std::move(c.coeffs), c.rhs);
        if (!inserted && it->second < c.rhs) it->second = c.rhs;
    }

    bool contradiction() const { return contradiction_; }

    std::vector<LinearInequality> rows() const {
        std::vector<LinearInequality> out;
        if (contradiction_) {
            out.push_back({RationalVector(nvars_), Rational(1)});
            return out;
        }
        out.reserve(rows_.size());
        for (const auto& [coeffs, rhs] : rows_) out.push_back({coeffs, rhs});
        return out;
    }

private:
    std::size_t nvars_;
    bool contradiction_ = false;
    std::map<RationalVector, Rational, CoeffLess> rows_;
};

bool has_contradiction(const std::vector<LinearInequality>& system) {
    for (const auto& row : system) {
        bool zero = true;
        for (const auto& c : row.coeffs)
            if (c != 0) { zero = false; break; }
        if (zero && row.rhs > 0) return true;
    }
    return false;
}

struct Interval {
    std::optional<Rational> lo;
    std::optional<Rational> hi;
    bool empty = false;
};

// Bounds on coordinate `var` of rows whose other coefficients at indices
// < var are evaluated at `prefix` and beyond var are zero.
Interval bounds_at(const std::vector<LinearInequality>& system, std::size_t var,
                   const std::vector<Integer>& prefix) {
    Interval iv;
    for (const auto& row : system) {
        Rational rest = row.rhs;
        for (std::size_t i = 0; i < var; ++i)
            if (row.coeffs[i] != 0) rest -= row.coeffs[i] * Rational(prefix[i]);
        const Rational& a = row.coeffs[var];
        if (a == 0) {
            if (rest > 0) iv.empty = true;
            continue;
        }
        const Rational b = rest / a;
        if (a > 0) {
            if (!iv.lo || *iv.lo < b) iv.lo = b;
        } else {
            if (!iv.hi || b < *iv.hi) iv.hi = b;
        }
    }
    if (iv.lo && iv.hi && *iv.hi < *iv.lo) iv.empty = true;
    return iv;
}

void descend(const std::vector<std::vector<LinearInequality>>& projections, std::vector<Integer>& prefix,
             std::vector<LatticeVector>& out) {
    const std::size_t k = prefix.size();
    if (k == projections.size()) {
        LatticeVector p;
        p.reserve(k);
        for (const auto& x : prefix) p.push_back(to_int64(x));
        out.push_back(std::move(p));
        return;
    }
    const Interval iv = bounds_at(projections[k], k, prefix);
    if (iv.empty) return;
    if (!iv.lo || !iv.hi)
        throw DomainError("polytope unbounded");
    const Integer lo = ceil_of(*iv.lo);
    const Integer hi = floor_of(*iv.hi);
    for (Integer x = lo; x <= hi; ++x) {
        prefix.push_back(x);
        descend(projections, prefix, out);
        prefix.pop_back();
    }
}

} // namespace

std::vector<LinearInequality> fourier_motzkin_eliminate(const std::vector<LinearInequality>& system,
                                                        std::size_t var) {
    if (system.empty()) return {};
    const std::size_t nvars = system.front().coeffs.size();
    ConstraintSet out(nvars);
    std::vector<const LinearInequality*> pos, neg;
    for (const auto& row : system) {
        const int s = sign_of(row.coeffs[var]);
        if (s > 0) pos.push_back(&row);
        else if (s < 0) neg.push_back(&row);
        else out.add(row);
    }
    for (const auto* p : pos)
        for (const auto* n : neg) {
            const Rational a = p->coeffs[var];
            const Rational b = -n->coeffs[var];
            LinearInequality c{RationalVector(nvars), b * p->rhs + a * n->rhs};
            for (std::size_t i = 0; i < nvars; ++i)
                c.coeffs[i] = b * p->coeffs[i] + a * n->coeffs[i];
            c.coeffs[var] = 0;
            out.add(std::move(c));
        }
    return out.rows();
}

bool is_feasible(const std::vector<LinearInequality>& ineqs, const std::vector<LinearEquation>& eqs,
                 std::size_t nvars) {
    // eliminate the equations by substitution
    RationalMatrix aug;
    for (const auto& e : eqs) {
        RationalVector row = e.coeffs;
        row.push_back(e.rhs);
        aug.push_back(std::move(row));
    }
    const auto pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == nvars) return false;

    std::vector<LinearInequality> system;
    system.reserve(ineqs.size());
    for (auto row : ineqs) {
        for (std::size_t r = 0; r < pivots.size(); ++r) {
            const std::size_t p = pivots[r];
            const Rational a = row.coeffs[p];
            if (a == 0) continue;
            // x_p = aug[r][nvars] - sum_{f != p} aug[r][f] x_f
            row.rhs -= a * aug[r][nvars];
            for (std::size_t f = 0; f < nvars; ++f)
                if (f != p) row.coeffs[f] -= a * aug[r][f];
            row.coeffs[p] = 0;
        }
        system.push_back(std::move(row));
    }
    if (has_contradiction(system)) return false;
    for (std::size_t v = 0; v < nvars; ++v) {
        system = fourier_motzkin_eliminate(system, v);
        if (has_contradiction(system)) return false;
    }
    return true;
}

std::vector<LatticeVector> lattice_points(const std::vector<HalfSpace>& halfspaces, std::size_t dim) {
    std::vector<LinearInequality> system;
    system.reserve(halfspaces.size());
    for (const auto& h : halfspaces) {
        if (h.normal.size() != dim)
            throw DomainError("lattice_points: inequality has wrong dimension");
        LinearInequality row{RationalVector(dim), Rational(static_cast<long>(h.bound))};
        for (std::size_t i = 0; i < dim; ++i) row.coeffs[i] = static_cast<long>(h.normal[i]);
        system.push_back(std::move(row));
    }
    if (has_contradiction(system)) return {};
    if (dim == 0) return {LatticeVector{}};

    // rational emptiness and boundedness, one coordinate at a time
    for (std::size_t k = 0; k < dim; ++k) {
        auto projected = system;
        for (std::size_t v = 0; v < dim; ++v) {
            if (v == k) continue;
            projected = fourier_motzkin_eliminate(projected, v);
            if (has_contradiction(projected)) return {};
        }
        const Interval iv = bounds_at(projected, k, std::vector<Integer>(k));
        if (iv.empty) return {};
        if (!iv.lo || !iv.hi)
            throw DomainError("polytope unbounded");
    }

    // projections[k] involves coordinates 0..k only
    std::vector<std::vector<LinearInequality>> projections(dim);
    projections[dim - 1] = system;
    for (std::size_t k = dim - 1; k > 0; --k)
        projections[k - 1] = fourier_motzkin_eliminate(projections[k], k);

    std::vector<LatticeVector> out;
    std::vector<Integer> prefix;
    descend(projections, prefix, out);
    return out;
}

} // namespace toric
