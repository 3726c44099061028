#pragma once

#include <optional>
#include <string>
#include <vector>

#include "toric/roots.hpp"

namespace toric {

struct CmEntry {
    ExponentVector exponent;          ///< b + (<m,e_i>)_i
    Coefficient coefficient;          ///< a_m
    std::optional<LatticeVector> m;   ///< relative to the anticanonical divisor, when f has that degree
    int c = 0;
};

/// c_m per term of f, in the term order of f.
using CmTable = std::vector<CmEntry>;

/// sign(a_{l0} + <u,e_{l0}> a_l) for each term x^a of f. `l0` must be a
/// boundary ray of the root's cone.
CmTable compute_cm(const Fan& fan, const Polynomial& f, const Root& root, std::size_t l0);

struct HypersurfaceFamily {
    Root root;                  ///< cone reoriented so that order.front() == l0
    std::size_t l0 = 0;
    ChartCover cover;
    CmTable cm;
    Polynomial f;
    Polynomial f_lambda;        ///< on U^l_0 cap U^l_1
    Polynomial f_chart[2];      ///< f^0 on U^l_0, f^1 on U^l_1
};

HypersurfaceFamily build_family(const Fan& fan, const Polynomial& f, const Root& root, std::size_t l0);
/// Default orientation: the boundary ray with the smaller index.
HypersurfaceFamily build_family(const Fan& fan, const Polynomial& f, const Root& root);
/// Same construction with caller-supplied c_m, one per term of f. Used to
/// check that the pole test actually detects a wrong sign table.
HypersurfaceFamily build_family_with_cm(const Fan& fan, const Polynomial& f, const Root& root, std::size_t l0,
                                        const std::vector<int>& c);

struct ChartPoleReport {
    int chart = 0;
    bool passed = true;
    std::vector<ExponentVector> offending; ///< terms with a pole off the chart's inverted set
};

std::vector<ChartPoleReport> verify_no_poles(const HypersurfaceFamily& family);

struct FirstOrderFamily {
    Polynomial f_eps;
    Polynomial f_chart[2];
};

FirstOrderFamily first_order_family(const HypersurfaceFamily& family);

/// Every term of f is in the class of x_1...x_n.
bool is_anticanonical(const Fan& fan, const Polynomial& f);

} // namespace toric
