#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>

#include "torsionlink/errors.hpp"

namespace torsionlink {

// Arbitrary-precision scalars. mpq_class keeps rationals gcd-reduced with a
// positive denominator, which is exactly the canonical shape we rely on for
// structural equality.
using BigInt = mpz_class;
using Rational = mpq_class;

inline BigInt big_gcd(const BigInt& a, const BigInt& b) {
    BigInt r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline BigInt big_lcm(const BigInt& a, const BigInt& b) {
    BigInt r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

// Floor division (rounds toward -infinity), b != 0.
inline BigInt floor_div(const BigInt& a, const BigInt& b) {
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

// Exact division; the caller guarantees b | a.
inline BigInt exact_div(const BigInt& a, const BigInt& b) {
    BigInt q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

// Inverse of a modulo m, if gcd(a, m) = 1. For m = 1 the inverse is 0.
inline std::optional<BigInt> mod_inverse(const BigInt& a, const BigInt& m) {
    BigInt r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
        return std::nullopt;
    return r;
}

inline BigInt floor_rat(const Rational& r) {
    return floor_div(r.get_num(), r.get_den());
}

inline BigInt parse_bigint(const std::string& s) {
    BigInt v;
    if (s.empty() || mpz_set_str(v.get_mpz_t(), s.c_str(), 10) != 0)
        throw ParseError("not a decimal integer: \"" + s + "\"");
    return v;
}

// Accepts "a/b" and plain "a".
inline Rational parse_rational(const std::string& s) {
    Rational v;
    if (s.empty() || mpq_set_str(v.get_mpq_t(), s.c_str(), 10) != 0)
        throw ParseError("not a fraction: \"" + s + "\"");
    if (v.get_den() == 0)
        throw ParseError("zero denominator: \"" + s + "\"");
    v.canonicalize();
    return v;
}

// A residue in Q/Z, held as the canonical representative in [0, 1).
// Canonicalization makes operator== a structural comparison.
class QmodZ {
public:
    QmodZ() : value_(0) {}

    explicit QmodZ(const Rational& r) : value_(r) {
        value_.canonicalize();
        value_ -= Rational(floor_rat(value_));
    }

    QmodZ(const BigInt& num, const BigInt& den) : QmodZ(Rational(num, den)) {}

    const Rational& value() const { return value_; }
    bool is_zero() const { return value_ == 0; }

    QmodZ operator+(const QmodZ& o) const { return QmodZ(value_ + o.value_); }
    QmodZ operator-() const { return QmodZ(-value_); }
    QmodZ operator*(const BigInt& n) const { return QmodZ(value_ * Rational(n)); }

    friend bool operator==(const QmodZ&, const QmodZ&) = default;

    // Canonical text form: "0", "1/2", "6/7", ...
    std::string str() const { return value_.get_str(); }

private:
    Rational value_; // invariant: 0 <= value_ < 1, reduced
};

inline QmodZ qmodz_add(const QmodZ& a, const QmodZ& b) { return a + b; }

} // namespace torsionlink
