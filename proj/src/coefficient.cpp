#include "toric/coefficient.hpp"

#include <sstream>

namespace toric {

GaussianRational GaussianRational::inverse() const {
    const Rational norm = re_ * re_ + im_ * im_;
    if (norm == 0)
        throw DomainError("division by zero in Q(i)");
    return {re_ / norm, -im_ / norm};
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
    if (im_ == 0 && o.im_ == 0) {
        re_ *= o.re_;
        return *this;
    }
    Rational re = re_ * o.re_ - im_ * o.im_;
    Rational im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

std::string GaussianRational::to_string() const {
    auto imag_str = [](const Rational& q) {
        if (q == 1) return std::string("i");
        if (q == -1) return std::string("-i");
        return q.get_str() + "*i";
    };
    if (im_ == 0) return re_.get_str();
    if (re_ == 0) return imag_str(im_);
    std::string im = imag_str(im_);
    return "(" + re_.get_str() + (im.front() == '-' ? "" : "+") + im + ")";
}

Coefficient::Coefficient(long v) {
    if (v != 0) terms_.emplace(Key{0, 0}, GaussianRational(v));
}

Coefficient::Coefficient(const Rational& q) {
    if (q != 0) terms_.emplace(Key{0, 0}, GaussianRational(q));
}

Coefficient::Coefficient(const GaussianRational& g) {
    if (!g.is_zero()) terms_.emplace(Key{0, 0}, g);
}

Coefficient Coefficient::lambda(int power) {
    Coefficient c;
    c.terms_.emplace(Key{power, 0}, GaussianRational(1));
    return c;
}

Coefficient Coefficient::epsilon() {
    Coefficient c;
    c.terms_.emplace(Key{0, 1}, GaussianRational(1));
    return c;
}

Coefficient Coefficient::sqrt_minus_one() { return Coefficient(GaussianRational::i()); }

bool Coefficient::is_scalar() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Key{0, 0});
}

GaussianRational Coefficient::scalar_part() const {
    auto it = terms_.find(Key{0, 0});
    return it == terms_.end() ? GaussianRational() : it->second;
}

bool Coefficient::uses_lambda() const {
    for (const auto& [k, v] : terms_)
        if (k.first != 0) return true;
    return false;
}

bool Coefficient::uses_epsilon() const {
    for (const auto& [k, v] : terms_)
        if (k.second != 0) return true;
    return false;
}

int Coefficient::lambda_degree() const {
    int d = 0;
    for (const auto& [k, v] : terms_) d = std::max(d, k.first);
    return d;
}

void Coefficient::add_term(Key k, const GaussianRational& v) {
    if (v.is_zero()) return;
    auto [it, inserted] = terms_.emplace(k, v);
    if (!inserted) {
        it->second += v;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

std::optional<Coefficient> Coefficient::inverse() const {
    // (a + eps*b)^-1 = a^-1 - eps*b*a^-2, valid when a is a unit of Q(i)
    Coefficient a, b;
    for (const auto& [k, v] : terms_) {
        if (k.second == 0) a.add_term(k, v);
        else b.add_term({k.first, 0}, v);
    }
    if (!a.is_scalar() || a.is_zero()) return std::nullopt;
    const GaussianRational inv = a.scalar_part().inverse();
    Coefficient out(inv);
    for (const auto& [k, v] : b.terms_) out.add_term({k.first, 1}, -(v * inv * inv));
    return out;
}

Coefficient Coefficient::evaluate_lambda(const Rational& value) const {
    Coefficient out;
    for (const auto& [k, v] : terms_) {
        Rational p = 1;
        for (int e = 0; e < k.first; ++e) p *= value;
        out.add_term({0, k.second}, v * GaussianRational(p));
    }
    return out;
}

Coefficient Coefficient::drop_epsilon() const {
    Coefficient out;
    for (const auto& [k, v] : terms_)
        if (k.second == 0) out.add_term(k, v);
    return out;
}

Coefficient Coefficient::lambda_to_epsilon() const {
    if (uses_epsilon())
        throw DomainError("lambda_to_epsilon: coefficient already involves eps");
    Coefficient out;
    for (const auto& [k, v] : terms_)
        if (k.first <= 1) out.add_term({0, k.first}, v);
    return out;
}

Coefficient& Coefficient::operator+=(const Coefficient& o) {
    for (const auto& [k, v] : o.terms_) add_term(k, v);
    return *this;
}

Coefficient& Coefficient::operator-=(const Coefficient& o) {
    for (const auto& [k, v] : o.terms_) add_term(k, -v);
    return *this;
}

Coefficient operator*(const Coefficient& a, const Coefficient& b) {
    Coefficient out;
    for (const auto& [ka, va] : a.terms_)
        for (const auto& [kb, vb] : b.terms_) {
            const int eps = ka.second + kb.second;
            if (eps >= 2) continue;
            out.add_term({ka.first + kb.first, eps}, va * vb);
        }
    return out;
}

Coefficient& Coefficient::operator*=(const Coefficient& o) { return *this = *this * o; }

Coefficient Coefficient::operator-() const {
    Coefficient out;
    for (const auto& [k, v] : terms_) out.terms_.emplace(k, -v);
    return out;
}

std::string Coefficient::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, v] : terms_) {
        std::string factors;
        if (k.first == 1) factors = "t";
        else if (k.first > 1) factors = "t^" + std::to_string(k.first);
        if (k.second == 1) factors += factors.empty() ? "eps" : "*eps";

        std::string term;
        const std::string s = v.to_string();
        if (factors.empty()) term = s;
        else if (s == "1") term = factors;
        else if (s == "-1") term = "-" + factors;
        else term = s + "*" + factors;

        if (first) os << term;
        else if (term.front() == '-') os << " - " << term.substr(1);
        else os << " + " << term;
        first = false;
    }
    return os.str();
}

} // namespace toric
