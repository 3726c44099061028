#include "toric/polynomial.hpp"

#include <sstream>

namespace toric {
namespace {

std::string join(const std::vector<std::string>& parts, const char* sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

std::string power(std::size_t var, std::int64_t e) {
    std::string s = "x" + std::to_string(var + 1);
    if (e != 1) s += "^" + std::to_string(e);
    return s;
}

std::string body(std::vector<std::string> factors, const ExponentVector& e) {
    std::vector<std::string> den;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] > 0) factors.push_back(power(i, e[i]));
        else if (e[i] < 0) den.push_back(power(i, -e[i]));
    }
    std::string s = factors.empty() ? "1" : join(factors, "*");
    if (!den.empty()) s += "/" + (den.size() > 1 ? "(" + join(den, "*") + ")" : den.front());
    return s;
}

} // namespace

Polynomial Polynomial::monomial(ExponentVector exponent, Coefficient c) {
    Polynomial p(exponent.size());
    if (!c.is_zero()) p.terms_.emplace(std::move(exponent), std::move(c));
    return p;
}

Polynomial Polynomial::constant(std::size_t nvars, Coefficient c) {
    return monomial(ExponentVector(nvars, 0), std::move(c));
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t i) {
    ExponentVector e(nvars, 0);
    e.at(i) = 1;
    return monomial(std::move(e));
}

void Polynomial::check(const ExponentVector& e) const {
    if (e.size() != nvars_)
        throw DomainError("exponent vector of length " + std::to_string(e.size()) + " in a ring of " +
                          std::to_string(nvars_) + " variables");
}

Coefficient Polynomial::coefficient(const ExponentVector& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Coefficient() : it->second;
}

void Polynomial::add_term(const ExponentVector& e, const Coefficient& c) {
    check(e);
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (nvars_ == 0 && terms_.empty()) nvars_ = o.nvars_;
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (nvars_ == 0 && terms_.empty()) nvars_ = o.nvars_;
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.nvars_ != b.nvars_)
        throw DomainError("product of polynomials in different rings");
    Polynomial out(a.nvars_);
    ExponentVector e(a.nvars_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    return out;
}

Polynomial operator*(const Coefficient& c, const Polynomial& p) {
    Polynomial out(p.nvars_);
    for (const auto& [e, v] : p.terms_) out.add_term(e, c * v);
    return out;
}

Polynomial Polynomial::operator-() const {
    Polynomial out(nvars_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
}

Polynomial Polynomial::pow(unsigned k) const {
    Polynomial result = constant(nvars_, 1);
    Polynomial base = *this;
    while (k) {
        if (k & 1u) result *= base;
        k >>= 1u;
        if (k) base *= base;
    }
    return result;
}

Polynomial Polynomial::shifted(const ExponentVector& e) const {
    check(e);
    Polynomial out(nvars_);
    for (const auto& [x, c] : terms_) {
        ExponentVector y = x;
        for (std::size_t i = 0; i < y.size(); ++i) y[i] += e[i];
        out.terms_.emplace(std::move(y), c);
    }
    return out;
}

Polynomial Polynomial::map_coefficients(const std::function<Coefficient(const Coefficient&)>& fn) const {
    Polynomial out(nvars_);
    for (const auto& [e, c] : terms_) out.add_term(e, fn(c));
    return out;
}

bool Polynomial::uses_lambda() const {
    for (const auto& [e, c] : terms_)
        if (c.uses_lambda()) return true;
    return false;
}

bool Polynomial::uses_epsilon() const {
    for (const auto& [e, c] : terms_)
        if (c.uses_epsilon()) return true;
    return false;
}

std::int64_t Polynomial::min_exponent(std::size_t i) const {
    if (terms_.empty()) return 0;
    std::int64_t m = terms_.begin()->first.at(i);
    for (const auto& [e, c] : terms_) m = std::min(m, e[i]);
    return m;
}

std::string monomial_string(const ExponentVector& e) { return body({}, e); }

std::string term_string(const ExponentVector& e, const Coefficient& c, bool leading) {
    std::vector<std::string> factors;
    bool negative = false;
    const auto& terms = c.terms();
    const bool single = terms.size() == 1;
    const bool real = single && terms.begin()->second.is_real();
    const bool imaginary = single && terms.begin()->second.real() == 0;
    if (real || imaginary) {
        const auto& [key, value] = *terms.begin();
        Rational q = real ? value.real() : value.imag();
        if (q < 0) {
            negative = true;
            q = -q;
        }
        if (q != 1) factors.push_back(q.get_str());
        if (imaginary) factors.push_back("i");
        if (key.first == 1) factors.push_back("t");
        else if (key.first > 1) factors.push_back("t^" + std::to_string(key.first));
        if (key.second == 1) factors.push_back("eps");
    } else {
        factors.push_back("(" + c.to_string() + ")");
    }
    const std::string b = body(std::move(factors), e);
    if (leading) return negative ? "-" + b : b;
    return (negative ? " - " : " + ") + b;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool leading = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        out += term_string(it->first, it->second, leading);
        leading = false;
    }
    return out;
}

Polynomial partial_derivative(const Polynomial& p, std::size_t i) {
    if (i >= p.nvars())
        throw DomainError("partial_derivative: variable index out of range");
    Polynomial out(p.nvars());
    for (const auto& [e, c] : p.terms()) {
        if (e[i] == 0) continue;
        ExponentVector d = e;
        d[i] -= 1;
        out.add_term(d, Coefficient(static_cast<long>(e[i])) * c);
    }
    return out;
}

std::optional<Polynomial> closed_form_inverse(const Polynomial& r) {
    const std::size_t n = r.nvars();
    Polynomial base(n), nilpotent(n);
    for (const auto& [e, c] : r.terms()) {
        base.add_term(e, c.drop_epsilon());
        nilpotent.add_term(e, c - c.drop_epsilon());
    }
    if (!base.is_monomial()) return std::nullopt;
    const auto& [e0, c0] = *base.terms().begin();
    if (!c0.is_scalar()) return std::nullopt;
    ExponentVector neg = e0;
    for (auto& x : neg) x = -x;
    const Polynomial inv0 = Polynomial::monomial(neg, Coefficient(c0.scalar_part().inverse()));
    if (nilpotent.is_zero()) return inv0;
    return inv0 - nilpotent * inv0 * inv0;
}

Polynomial substitute_variable(const Polynomial& p, std::size_t l, const Polynomial& r) {
    if (l >= p.nvars() || r.nvars() != p.nvars())
        throw DomainError("substitute_variable: variable or ring mismatch");
    std::map<std::int64_t, Polynomial> powers;
    std::optional<Polynomial> inverse;
    auto power_of = [&](std::int64_t k) -> const Polynomial& {
        auto it = powers.find(k);
        if (it != powers.end()) return it->second;
        Polynomial v(p.nvars());
        if (k >= 0) {
            v = r.pow(static_cast<unsigned>(k));
        } else {
            if (!inverse) {
                inverse = closed_form_inverse(r);
                if (!inverse) throw DomainError("substitution not closed-form");
            }
            v = inverse->pow(static_cast<unsigned>(-k));
        }
        return powers.emplace(k, std::move(v)).first->second;
    };
    Polynomial out(p.nvars());
    for (const auto& [e, c] : p.terms()) {
        ExponentVector rest = e;
        rest[l] = 0;
        out += Polynomial::monomial(rest, c) * power_of(e[l]);
    }
    return out;
}

Polynomial evaluate_lambda(const Polynomial& p, const Rational& value) {
    return p.map_coefficients([&](const Coefficient& c) { return c.evaluate_lambda(value); });
}

Polynomial drop_epsilon(const Polynomial& p) {
    return p.map_coefficients([](const Coefficient& c) { return c.drop_epsilon(); });
}

Polynomial lambda_to_epsilon(const Polynomial& p) {
    return p.map_coefficients([](const Coefficient& c) { return c.lambda_to_epsilon(); });
}

} // namespace toric
