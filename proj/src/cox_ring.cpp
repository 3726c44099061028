#include "toric/cox_ring.hpp"

#include <sstream>

namespace toric {

bool DegreeClass::is_zero() const {
    for (const auto& x : representative)
        if (x != 0) return false;
    return true;
}

std::string DegreeClass::to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < representative.size(); ++i)
        os << (i ? "," : "") << representative[i].get_str();
    os << ']';
    return os.str();
}

ChowGrading::ChowGrading(const Fan& fan) : rays_(fan.rays()) {
    // rows of the relation lattice: (<m_k,e_1>, ..., <m_k,e_n>) for a basis m_k of M
    const std::size_t d = fan.rank();
    const std::size_t n = fan.ray_count();
    IntegerMatrix rel(d, n);
    for (std::size_t k = 0; k < d; ++k)
        for (std::size_t i = 0; i < n; ++i)
            rel(k, i) = to_integer(rays_[i][k]);
    hnf_ = hermite_normal_form(rel);
}

DegreeClass ChowGrading::degree_of(const ExponentVector& e) const {
    if (e.size() != rays_.size())
        throw DomainError("degree_of: exponent vector has wrong length");
    std::vector<Integer> v;
    v.reserve(e.size());
    for (auto x : e) v.push_back(to_integer(x));
    return {reduce_against_hnf(std::move(v), hnf_)};
}

std::optional<DegreeClass> ChowGrading::degree_of(const Polynomial& p) const {
    if (p.is_zero()) return std::nullopt;
    const DegreeClass first = degree_of(p.terms().begin()->first);
    for (const auto& [e, c] : p.terms())
        if (degree_of(e) != first) return std::nullopt;
    return first;
}

ExponentVector ChowGrading::pairing_vector(const LatticeVector& u) const {
    ExponentVector out;
    out.reserve(rays_.size());
    for (const auto& e : rays_) out.push_back(pairing(u, e));
    return out;
}

DegreeClass degree_of(const Fan& fan, const ExponentVector& e) { return ChowGrading(fan).degree_of(e); }

std::vector<ExponentVector> monomials_of_degree(const Fan& fan, const std::vector<std::int64_t>& b) {
    if (b.size() != fan.ray_count())
        throw DomainError("monomials_of_degree: divisor has wrong length");
    std::vector<HalfSpace> polytope;
    for (std::size_t i = 0; i < fan.ray_count(); ++i) polytope.push_back({fan.ray(i), -b[i]});
    std::vector<ExponentVector> out;
    for (const auto& m : lattice_points(polytope, fan.rank())) {
        ExponentVector e(b.size());
        for (std::size_t i = 0; i < b.size(); ++i) e[i] = b[i] + pairing(m, fan.ray(i));
        out.push_back(std::move(e));
    }
    return out;
}

std::optional<LatticeVector> solve_character(const Fan& fan, const ExponentVector& e,
                                             const std::vector<std::int64_t>& b) {
    const std::size_t n = fan.ray_count();
    const std::size_t d = fan.rank();
    RationalMatrix a(n, RationalVector(d));
    RationalVector rhs(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < d; ++k) a[i][k] = static_cast<long>(fan.ray(i)[k]);
        rhs[i] = static_cast<long>(e.at(i) - b.at(i));
    }
    const auto m = solve(a, rhs, d);
    if (!m) return std::nullopt;
    LatticeVector out;
    for (const auto& x : *m) {
        if (x.get_den() != 1) return std::nullopt;
        out.push_back(to_int64(x.get_num()));
    }
    return out;
}

} // namespace toric
