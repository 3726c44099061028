#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "toric/arith.hpp"

namespace toric {

/// Element of Q(i).
class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(Rational re, Rational im = 0) : re_(std::move(re)), im_(std::move(im)) {}
    GaussianRational(long v) : re_(v) {}

    static GaussianRational i() { return {0, 1}; }

    const Rational& real() const { return re_; }
    const Rational& imag() const { return im_; }
    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_real() const { return im_ == 0; }

    GaussianRational inverse() const;

    GaussianRational& operator+=(const GaussianRational& o);
    GaussianRational& operator-=(const GaussianRational& o);
    GaussianRational& operator*=(const GaussianRational& o);
    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
        return a * b.inverse();
    }
    GaussianRational operator-() const { return {-re_, -im_}; }
    bool operator==(const GaussianRational& o) const { return re_ == o.re_ && im_ == o.im_; }

    std::string to_string() const;

private:
    Rational re_ = 0;
    Rational im_ = 0;
};

/// Coefficient ring of every polynomial in the library:
///   Q(i)[t][eps] / (eps^2)
/// where t is the deformation parameter (lambda) and eps the first-order
/// nilpotent. Stored as a sparse map (t-power, eps-power) -> Q(i).
class Coefficient {
public:
    using Key = std::pair<int, int>; // (lambda power, epsilon power)

    Coefficient() = default;
    Coefficient(long v);
    Coefficient(const Rational& q);
    Coefficient(const GaussianRational& g);

    static Coefficient lambda(int power = 1);
    static Coefficient epsilon();
    static Coefficient sqrt_minus_one();

    bool is_zero() const { return terms_.empty(); }
    /// Pure element of Q(i) (no t, no eps).
    bool is_scalar() const;
    GaussianRational scalar_part() const;
    bool uses_lambda() const;
    bool uses_epsilon() const;
    int lambda_degree() const;

    const std::map<Key, GaussianRational>& terms() const { return terms_; }

    /// Inverse when the eps-free part is a nonzero scalar; nullopt otherwise.
    std::optional<Coefficient> inverse() const;

    /// t -> value.
    Coefficient evaluate_lambda(const Rational& value) const;
    /// eps -> 0.
    Coefficient drop_epsilon() const;
    /// Base change t -> eps, truncated at eps^2.
    Coefficient lambda_to_epsilon() const;

    Coefficient& operator+=(const Coefficient& o);
    Coefficient& operator-=(const Coefficient& o);
    Coefficient& operator*=(const Coefficient& o);
    friend Coefficient operator+(Coefficient a, const Coefficient& b) { return a += b; }
    friend Coefficient operator-(Coefficient a, const Coefficient& b) { return a -= b; }
    friend Coefficient operator*(const Coefficient& a, const Coefficient& b);
    Coefficient operator-() const;
    bool operator==(const Coefficient& o) const { return terms_ == o.terms_; }

    /// Plain-text form, e.g. "1 + 2*t", "3/2*eps", "i".
    std::string to_string() const;

private:
    void add_term(Key k, const GaussianRational& v);

    std::map<Key, GaussianRational> terms_;
};

} // namespace toric
