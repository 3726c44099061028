#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace toric {

using Integer = mpz_class;
using Rational = mpq_class;

// Coordinates of lattice vectors and Laurent exponents. Anything that feeds
// matrix algebra is promoted to Integer first.
using LatticeVector = std::vector<std::int64_t>;
using ExponentVector = std::vector<std::int64_t>;
using RationalVector = std::vector<Rational>;

/// Raised when an input violates a mathematical precondition.
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline std::int64_t pairing(const LatticeVector& m, const LatticeVector& e) {
    if (m.size() != e.size())
        throw DomainError("pairing of vectors with different lengths");
    std::int64_t s = 0;
    for (std::size_t i = 0; i < m.size(); ++i)
        s += m[i] * e[i];
    return s;
}

inline Rational pairing(const RationalVector& m, const LatticeVector& e) {
    if (m.size() != e.size())
        throw DomainError("pairing of vectors with different lengths");
    Rational s = 0;
    for (std::size_t i = 0; i < m.size(); ++i)
        s += m[i] * Rational(static_cast<long>(e[i]));
    return s;
}

inline Integer to_integer(std::int64_t v) { return Integer(static_cast<long>(v)); }

inline std::int64_t to_int64(const Integer& v) {
    if (!v.fits_slong_p())
        throw DomainError("integer does not fit in 64 bits: " + v.get_str());
    return v.get_si();
}

inline Integer floor_div(const Integer& a, const Integer& b) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline Integer floor_of(const Rational& q) {
    Integer r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

/// n/d in lowest terms (the two-argument mpq_class constructor does not reduce).
inline Rational fraction(const Integer& n, const Integer& d) {
    Rational r(n, d);
    r.canonicalize();
    return r;
}

inline Integer ceil_of(const Rational& q) {
    Integer r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

inline int sign_of(const Integer& v) { return sgn(v); }
inline int sign_of(const Rational& v) { return sgn(v); }

std::string to_string(const LatticeVector& v);
std::string to_string(const RationalVector& v);

} // namespace toric
