#include "toric/infinitesimal.hpp"

#include <algorithm>
#include <map>
#include <random>

namespace toric {
namespace {

int parity_sign(int k) { return k == 0 ? 1 : -1; }

std::string var_name(std::size_t i) { return "x" + std::to_string(i + 1); }

RationalFunction poly(const Polynomial& p) { return RationalFunction(p); }

RationalFunction over(const Polynomial& num, const Polynomial& den) { return RationalFunction(num, den); }

void require_degree(const Fan& fan, const Polynomial& p, const DegreeClass& expected, const char* what) {
    if (p.is_zero()) return;
    const auto d = ChowGrading(fan).degree_of(p);
    if (!d) throw DomainError(std::string(what) + " is not homogeneous");
    if (*d != expected) throw DomainError(std::string(what) + " has degree " + d->to_string() + ", expected " +
                                          expected.to_string());
}

DegreeClass degree_of_nonzero(const Fan& fan, const Polynomial& f) {
    const auto d = ChowGrading(fan).degree_of(f);
    if (!d) throw DomainError("polynomial is zero or not homogeneous");
    return *d;
}

// <d_a ^ v, df> = (d_a f) v - (v f) d_a
VectorField contraction(const Polynomial& fa, std::size_t a, const VectorField& v, const Polynomial& f) {
    VectorField out = fa * v;
    const RationalFunction vf = v.apply(f);
    out.add(a, -vf);
    return out;
}

Polynomial sigma_indicator_inverse(const TwoConeData& cone, std::size_t nvars) {
    ExponentVector e(nvars, 0);
    for (auto r : cone.order) e[r] = -1;
    return Polynomial::monomial(std::move(e));
}

// sparse row echelon over Q
class Echelon {
public:
    using Row = std::map<std::size_t, Rational>;

    bool insert(Row row) {
        while (!row.empty()) {
            const auto lead = row.begin()->first;
            auto p = pivots_.find(lead);
            if (p == pivots_.end()) {
                pivots_.emplace(lead, std::move(row));
                return true;
            }
            const Rational factor = row.begin()->second / p->second.begin()->second;
            for (const auto& [c, v] : p->second) {
                Rational& x = row[c];
                x -= factor * v;
                if (x == 0) row.erase(c);
            }
        }
        return false;
    }
    std::size_t rank() const { return pivots_.size(); }

private:
    std::map<std::size_t, Row> pivots_;
};

Rational real_scalar(const Coefficient& c) {
    if (!c.is_scalar() || !c.scalar_part().is_real())
        throw DomainError("dimension count needs rational coefficients");
    return c.scalar_part().real();
}

} // namespace

std::vector<std::size_t> nonvanishing_partials(const Polynomial& f) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < f.nvars(); ++i)
        if (!partial_derivative(f, i).is_zero()) out.push_back(i);
    return out;
}

CechCocycle gamma_A(const Fan& fan, const Polynomial& f, const Polynomial& a) {
    require_degree(fan, a, degree_of_nonzero(fan, f), "A");
    const auto idx = nonvanishing_partials(f);
    const std::size_t n = f.nvars();
    std::vector<Polynomial> fi;
    CechCocycle c;
    for (auto i : idx) {
        c.charts.push_back(var_name(i));
        fi.push_back(partial_derivative(f, i));
    }
    const Polynomial ia = Coefficient::sqrt_minus_one() * a;
    for (std::size_t p = 0; p < idx.size(); ++p)
        for (std::size_t q = 0; q < idx.size(); ++q) {
            if (a.is_zero()) continue;
            const VectorField dq = VectorField::component(idx[q], poly(Polynomial::constant(n, 1)));
            const VectorField w = contraction(fi[p], idx[p], dq, f);
            const RationalFunction scale = over(ia, fi[p] * fi[q]);
            VectorField e = scale * w;
            if (!e.is_zero()) c.entries[{p, q}] = std::move(e);
        }
    return c;
}

VectorField d_l(const TwoConeData& cone, std::size_t l, std::size_t k, std::size_t nvars) {
    const std::size_t j = cone.position(l);
    if (j == 0 || j + 1 == cone.order.size())
        throw DomainError("ray " + std::to_string(l + 1) + " is not interior to the 2-cone");
    std::size_t neighbour;
    Integer mult;
    long sign;
    if (k == j) {
        neighbour = cone.order[j - 1];
        mult = cone.subcone_multiplicity[j - 1];
        sign = 1;
    } else if (k == j + 1) {
        neighbour = cone.order[j + 1];
        mult = cone.subcone_multiplicity[j];
        sign = -1;
    } else {
        return {};
    }
    ExponentVector e(nvars, 0);
    e[neighbour] = 1;
    const Coefficient c(fraction(Integer(sign), mult));
    return VectorField::component(neighbour, poly(Polynomial::monomial(std::move(e), c)));
}

CechCocycle gamma_l_B(const Fan& fan, const Polynomial& f, const TwoConeData& cone, std::size_t l,
                      const Polynomial& b) {
    require_degree(fan, b, cone.beta1, "B");
    const auto idx = nonvanishing_partials(f);
    const std::size_t n = f.nvars();
    const std::size_t cells = cone.order.size() - 1; // k = 1..n+1
    struct Chart {
        std::size_t i, k;
        Polynomial fi;
    };
    std::vector<Chart> charts;
    CechCocycle c;
    for (auto i : idx)
        for (std::size_t k = 1; k <= cells; ++k) {
            charts.push_back({i, k, partial_derivative(f, i)});
            c.charts.push_back("(" + var_name(i) + "," + std::to_string(k) + ")");
        }
    bool divisible = true;
    for (const auto& [e, v] : b.terms())
        if (e.at(l) < 1) divisible = false;
    c.coboundary = divisible;
    if (b.is_zero()) return c;

    const Polynomial prefactor = b * sigma_indicator_inverse(cone, n);
    std::vector<VectorField> term;
    for (const auto& ch : charts)
        term.push_back(over(prefactor, ch.fi) * contraction(ch.fi, ch.i, d_l(cone, l, ch.k, n), f));
    for (std::size_t p = 0; p < charts.size(); ++p)
        for (std::size_t q = 0; q < charts.size(); ++q) {
            VectorField e = term[q] - term[p];
            if (!e.is_zero()) c.entries[{p, q}] = std::move(e);
        }
    return c;
}

CechCocycle lift_nonpolynomial(const Fan& fan, const TwoConeData& cone, std::size_t l, const Polynomial& b) {
    require_degree(fan, b, cone.beta1, "B");
    const std::size_t n = fan.ray_count();
    const std::size_t cells = cone.order.size() - 1;
    CechCocycle c;
    for (std::size_t k = 1; k <= cells; ++k) c.charts.push_back(std::to_string(k));
    c.coboundary = true;
    for (const auto& [e, v] : b.terms())
        if (e.at(l) < 1) c.coboundary = false;
    if (b.is_zero()) return c;
    const Polynomial prefactor = b * sigma_indicator_inverse(cone, n);
    for (std::size_t p = 0; p < cells; ++p)
        for (std::size_t q = 0; q < cells; ++q) {
            VectorField e = prefactor * (d_l(cone, l, q + 1, n) - d_l(cone, l, p + 1, n));
            if (!e.is_zero()) c.entries[{p, q}] = std::move(e);
        }
    return c;
}

CechCocycle kodaira_cocycle(const Root& root) {
    CechCocycle c;
    c.charts = {"U0", "U1"};
    const Polynomial field = Polynomial::monomial(root.shift());
    for (int k0 = 0; k0 < 2; ++k0)
        for (int k1 = 0; k1 < 2; ++k1) {
            const long s = parity_sign(k0) - parity_sign(k1);
            if (s == 0) continue;
            c.entries[{static_cast<std::size_t>(k0), static_cast<std::size_t>(k1)}] =
                VectorField::component(root.l, poly(Coefficient(s) * field));
        }
    return c;
}

CechCocycle theta_cocycle(const HypersurfaceFamily& family) {
    const Polynomial& f = family.f;
    const std::size_t n = f.nvars();
    const std::size_t l = family.root.l;
    const Polynomial xu = Polynomial::monomial(family.root.pairing);
    const Polynomial xl_xu = Polynomial::monomial(family.root.shift());

    // G_k = sum_m a_m ((-1)^k + c_m) x_l d_l x^a
    Polynomial g[2] = {Polynomial(n), Polynomial(n)};
    for (const auto& entry : family.cm)
        for (int k = 0; k < 2; ++k) {
            const long w = (parity_sign(k) + entry.c) * entry.exponent[l];
            g[k] += Polynomial::monomial(entry.exponent, Coefficient(w) * entry.coefficient);
        }

    const auto idx = nonvanishing_partials(f);
    struct Chart {
        std::size_t i;
        int k;
        Polynomial fi;
    };
    std::vector<Chart> charts;
    CechCocycle c;
    for (auto i : idx)
        for (int k = 0; k < 2; ++k) {
            charts.push_back({i, k, partial_derivative(f, i)});
            c.charts.push_back("(" + var_name(i) + "," + std::to_string(k) + ")");
        }
    for (std::size_t p = 0; p < charts.size(); ++p)
        for (std::size_t q = 0; q < charts.size(); ++q) {
            const auto& a = charts[p];
            const auto& b = charts[q];
            VectorField e;
            const long s = parity_sign(a.k) - parity_sign(b.k);
            if (s != 0) e.add(l, poly(Coefficient(s) * xl_xu));
            e.add(a.i, -over(xu * g[a.k], a.fi));
            e.add(b.i, over(xu * g[b.k], b.fi));
            if (!e.is_zero()) c.entries[{p, q}] = std::move(e);
        }
    return c;
}

bool ray_identity_check(const TwoConeData& cone, std::size_t j) {
    if (j == 0 || j + 1 >= cone.order.size()) throw DomainError("identity check: j out of range");
    const Integer& mj = cone.subcone_multiplicity[j - 1];
    const Integer& mj1 = cone.subcone_multiplicity[j];
    const Integer outer = cone_multiplicity({cone.generators[j - 1], cone.generators[j + 1]});
    const auto& prev = cone.generators[j - 1];
    const auto& mid = cone.generators[j];
    const auto& next = cone.generators[j + 1];
    for (std::size_t r = 0; r < mid.size(); ++r) {
        const Rational lhs = fraction(to_integer(prev[r]), mj) + fraction(to_integer(next[r]), mj1);
        const Rational rhs = fraction(outer * to_integer(mid[r]), mj * mj1);
        if (lhs != rhs) return false;
    }
    return true;
}

Rational matching_factor(const Integer& mult_j, const Integer& mult_j1, const Integer& mult_outer) {
    return fraction(-2 * mult_j * mult_j1, mult_outer);
}

Rational matching_factor(const TwoConeData& cone, std::size_t j) {
    if (j == 0 || j + 1 >= cone.order.size()) throw DomainError("matching factor: j out of range");
    const Integer outer = cone_multiplicity({cone.generators[j - 1], cone.generators[j + 1]});
    return matching_factor(cone.subcone_multiplicity[j - 1], cone.subcone_multiplicity[j], outer);
}

std::size_t dim_R1(const Fan& fan, const Polynomial& f, std::uint64_t shuffle_seed) {
    if (f.is_zero() || !ChowGrading(fan).degree_of(f)) throw DomainError("polynomial is zero or not homogeneous");
    const std::size_t n = fan.ray_count();
    const ExponentVector beta = f.terms().begin()->first;
    std::vector<std::int64_t> target = beta;
    for (auto& x : target) x += 1;

    auto basis = monomials_of_degree(fan, beta);
    auto cofactors = monomials_of_degree(fan, std::vector<std::int64_t>(n, 1));
    auto big = monomials_of_degree(fan, target);
    if (basis.empty()) throw DomainError("degree class is not effective");
    std::vector<std::size_t> generators;
    for (std::size_t i = 0; i < n; ++i) generators.push_back(i);
    if (shuffle_seed != 0) {
        std::mt19937_64 rng(shuffle_seed);
        std::shuffle(basis.begin(), basis.end(), rng);
        std::shuffle(cofactors.begin(), cofactors.end(), rng);
        std::shuffle(big.begin(), big.end(), rng);
        std::shuffle(generators.begin(), generators.end(), rng);
    }
    std::map<ExponentVector, std::size_t> column;
    for (std::size_t k = 0; k < big.size(); ++k) column.emplace(big[k], k);

    auto to_row = [&](const Polynomial& p) {
        Echelon::Row row;
        for (const auto& [e, c] : p.terms()) {
            auto it = column.find(e);
            if (it == column.end()) throw DomainError("dimension count: term outside the graded piece");
            row[it->second] = real_scalar(c);
        }
        return row;
    };

    Echelon echelon;
    for (auto i : generators) {
        ExponentVector xi(n, 0);
        xi[i] = 1;
        const Polynomial gen = partial_derivative(f, i).shifted(xi);
        if (gen.is_zero()) continue;
        for (const auto& h : cofactors) echelon.insert(to_row(gen.shifted(h)));
    }
    const std::size_t rank_g = echelon.rank();
    const ExponentVector all_ones(n, 1);
    for (const auto& g : basis) {
        ExponentVector e = g;
        for (std::size_t i = 0; i < n; ++i) e[i] += all_ones[i];
        Echelon::Row row;
        row[column.at(e)] = 1;
        echelon.insert(std::move(row));
    }
    return echelon.rank() - rank_g;
}

H1Decomposition h1_decomposition(const Fan& fan, const Polynomial& f) {
    if (!is_anticanonical(fan, f)) throw DomainError("decomposition requires anticanonical degree");
    const FanDiagnostics diag = validate_fan(fan);
    if (!diag.is_fan || !diag.is_complete || !diag.is_simplicial)
        throw DomainError("decomposition requires a complete simplicial fan");
    H1Decomposition out;
    out.polynomial_dim = dim_R1(fan, f);
    out.total = out.polynomial_dim;
    const SigmaXData sx = compute_sigma_x(fan, std::vector<std::int64_t>(fan.ray_count(), 1));
    for (const auto& [cone, l] : interior_ray_pairs(fan, sx)) {
        NonPolynomialSummand s;
        s.sigma = normalize_indices({cone.order.front(), cone.order.back()});
        s.l = l;
        for (const auto& e : monomials_of_degree(fan, cone.beta1_divisor))
            if (e[l] == 0) ++s.dim;
        s.root_count = enumerate_roots(fan, cone, l).size();
        if (s.dim != s.root_count)
            throw DomainError("non-polynomial summand: monomial count and root count disagree");
        out.total += s.dim;
        out.non_polynomial.push_back(std::move(s));
    }
    return out;
}

} // namespace toric
