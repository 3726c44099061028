#include "toric/vector_field.hpp"

namespace toric {

RationalFunction::RationalFunction(Polynomial num) : num_(std::move(num)), den_(Polynomial::constant(num_.nvars(), 1)) {}

RationalFunction::RationalFunction(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DomainError("rational function with zero denominator");
    normalize();
}

void RationalFunction::normalize() {
    if (num_.is_zero()) {
        den_ = Polynomial::constant(num_.nvars() ? num_.nvars() : den_.nvars(), 1);
        return;
    }
    if (den_.is_monomial()) {
        if (auto inv = closed_form_inverse(den_)) {
            num_ = num_ * *inv;
            den_ = Polynomial::constant(num_.nvars(), 1);
        }
    }
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    if (den_ == o.den_) {
        num_ += o.num_;
    } else {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ = den_ * o.den_;
    }
    normalize();
    return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) { return *this += -o; }

RationalFunction operator*(const Polynomial& p, const RationalFunction& r) {
    return RationalFunction(p * r.num_, r.den_);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
}

bool RationalFunction::equals(const RationalFunction& o) const {
    if (den_ == o.den_) return num_ == o.num_;
    return num_ * o.den_ == o.num_ * den_;
}

std::string RationalFunction::to_string() const {
    if (den_ == Polynomial::constant(den_.nvars(), 1)) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

VectorField VectorField::component(std::size_t i, RationalFunction r) {
    VectorField v;
    v.add(i, r);
    return v;
}

void VectorField::add(std::size_t i, const RationalFunction& r) {
    if (r.is_zero()) return;
    auto [it, inserted] = comps_.emplace(i, r);
    if (!inserted) {
        it->second += r;
        if (it->second.is_zero()) comps_.erase(it);
    }
}

VectorField& VectorField::operator+=(const VectorField& o) {
    for (const auto& [i, r] : o.comps_) add(i, r);
    return *this;
}

VectorField& VectorField::operator-=(const VectorField& o) {
    for (const auto& [i, r] : o.comps_) add(i, -r);
    return *this;
}

VectorField operator*(const Polynomial& p, const VectorField& v) {
    VectorField out;
    for (const auto& [i, r] : v.comps_) out.add(i, p * r);
    return out;
}

VectorField operator*(const RationalFunction& s, const VectorField& v) {
    VectorField out;
    for (const auto& [i, r] : v.comps_) out.add(i, s * r);
    return out;
}

VectorField VectorField::operator-() const {
    VectorField out;
    for (const auto& [i, r] : comps_) out.comps_.emplace(i, -r);
    return out;
}

bool VectorField::equals(const VectorField& o) const {
    VectorField d = *this;
    d -= o;
    return d.is_zero();
}

RationalFunction VectorField::apply(const Polynomial& p) const {
    RationalFunction out;
    for (const auto& [i, r] : comps_) out += partial_derivative(p, i) * r;
    return out;
}

std::string VectorField::to_string() const {
    if (comps_.empty()) return "0";
    std::string s;
    for (const auto& [i, r] : comps_) {
        if (!s.empty()) s += " + ";
        s += "(" + r.to_string() + ")*d" + std::to_string(i + 1);
    }
    return s;
}

const VectorField& CechCocycle::entry(std::size_t a, std::size_t b) const {
    static const VectorField zero;
    auto it = entries.find({a, b});
    return it == entries.end() ? zero : it->second;
}

bool CechCocycle::check_antisymmetry() const {
    for (std::size_t a = 0; a < charts.size(); ++a) {
        if (!entry(a, a).is_zero()) return false;
        for (std::size_t b = a + 1; b < charts.size(); ++b)
            if (!(entry(a, b) + entry(b, a)).is_zero()) return false;
    }
    return true;
}

bool CechCocycle::check_cocycle() const {
    const std::size_t n = charts.size();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c) {
                VectorField s = entry(a, b);
                s += entry(b, c);
                s -= entry(a, c);
                if (!s.is_zero()) return false;
            }
    return true;
}

} // namespace toric
