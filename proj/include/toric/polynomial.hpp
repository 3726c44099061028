#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "toric/coefficient.hpp"

namespace toric {

/// Laurent polynomial in x_1..x_n over the Coefficient ring. Terms are kept in
/// lexicographic order of exponent vectors; zero coefficients are never stored.
class Polynomial {
public:
    using TermMap = std::map<ExponentVector, Coefficient>;

    explicit Polynomial(std::size_t nvars = 0) : nvars_(nvars) {}

    static Polynomial monomial(ExponentVector exponent, Coefficient c = Coefficient(1));
    static Polynomial constant(std::size_t nvars, Coefficient c);
    static Polynomial variable(std::size_t nvars, std::size_t i);

    std::size_t nvars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_monomial() const { return terms_.size() == 1; }
    Coefficient coefficient(const ExponentVector& e) const;

    void add_term(const ExponentVector& e, const Coefficient& c);

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Coefficient& c, const Polynomial& p);
    Polynomial operator-() const;
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
    bool operator==(const Polynomial& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

    Polynomial pow(unsigned k) const;
    /// Shift every exponent by `e` (multiplication by the Laurent monomial x^e).
    Polynomial shifted(const ExponentVector& e) const;

    Polynomial map_coefficients(const std::function<Coefficient(const Coefficient&)>& fn) const;
    bool uses_lambda() const;
    bool uses_epsilon() const;

    /// Smallest exponent of x_i over all terms (0 for the zero polynomial).
    std::int64_t min_exponent(std::size_t i) const;

    /// Plain-text form with highest lexicographic term first, e.g.
    /// "x6 - 2*t*x3/(x1*x2)".
    std::string to_string() const;

private:
    void check(const ExponentVector& e) const;

    std::size_t nvars_ = 0;
    TermMap terms_;
};

std::string monomial_string(const ExponentVector& e);
std::string term_string(const ExponentVector& e, const Coefficient& c, bool leading);

/// Formal d/dx_i of a Laurent polynomial.
Polynomial partial_derivative(const Polynomial& p, std::size_t i);

/// Two-sided inverse when it exists in closed form: a single term with an
/// invertible coefficient, plus optionally an eps-multiple of anything.
std::optional<Polynomial> closed_form_inverse(const Polynomial& r);

/// Ring homomorphism x_l -> r applied to p. Negative powers of x_l need
/// closed_form_inverse(r); otherwise throws "substitution not closed-form".
Polynomial substitute_variable(const Polynomial& p, std::size_t l, const Polynomial& r);

Polynomial evaluate_lambda(const Polynomial& p, const Rational& value);
Polynomial drop_epsilon(const Polynomial& p);
Polynomial lambda_to_epsilon(const Polynomial& p);

} // namespace toric
