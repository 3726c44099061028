#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "toric/polynomial.hpp"

namespace toric {

/// num / den with den a nonzero Laurent polynomial. A single-term denominator
/// is folded into the numerator, so Laurent expressions compare by equality.
class RationalFunction {
public:
    RationalFunction() = default;
    explicit RationalFunction(Polynomial num);
    RationalFunction(Polynomial num, Polynomial den);

    const Polynomial& numerator() const { return num_; }
    const Polynomial& denominator() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    RationalFunction& operator+=(const RationalFunction& o);
    RationalFunction& operator-=(const RationalFunction& o);
    friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
    friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
    friend RationalFunction operator*(const Polynomial& p, const RationalFunction& r);
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    RationalFunction operator-() const;

    /// Cross-multiplied comparison.
    bool equals(const RationalFunction& o) const;
    std::string to_string() const;

private:
    void normalize();
    Polynomial num_;
    Polynomial den_;
};

/// sum_i r_i d/dx_i, zero components omitted.
class VectorField {
public:
    using Components = std::map<std::size_t, RationalFunction>;

    VectorField() = default;
    static VectorField component(std::size_t i, RationalFunction r);

    const Components& components() const { return comps_; }
    bool is_zero() const { return comps_.empty(); }
    void add(std::size_t i, const RationalFunction& r);

    VectorField& operator+=(const VectorField& o);
    VectorField& operator-=(const VectorField& o);
    friend VectorField operator+(VectorField a, const VectorField& b) { return a += b; }
    friend VectorField operator-(VectorField a, const VectorField& b) { return a -= b; }
    friend VectorField operator*(const Polynomial& p, const VectorField& v);
    friend VectorField operator*(const RationalFunction& r, const VectorField& v);
    VectorField operator-() const;

    bool equals(const VectorField& o) const;
    /// Applies the field to a polynomial: sum_i r_i * dp/dx_i.
    RationalFunction apply(const Polynomial& p) const;
    std::string to_string() const;

private:
    Components comps_;
};

/// Degree-1 Cech cochain: a vector field for every ordered pair of charts.
struct CechCocycle {
    std::vector<std::string> charts;
    std::map<std::pair<std::size_t, std::size_t>, VectorField> entries;
    bool coboundary = false; ///< known to be a coboundary by construction

    const VectorField& entry(std::size_t a, std::size_t b) const;
    bool check_antisymmetry() const;
    bool check_cocycle() const;
};

} // namespace toric
