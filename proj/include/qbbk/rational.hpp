#pragma once

#include <gmpxx.h>

#include <string>

#include "qbbk/modp.hpp"

namespace qbbk {

using Integer = mpz_class;
using Rational = mpq_class;

/// Stateless field tag for exact rational coefficients. Mirrors the
/// interface of PrimeField so that series code can be written once.
class RationalField {
public:
    using Elem = Rational;

    Elem zero() const { return Rational(0); }
    Elem one() const { return Rational(1); }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem inv(const Elem& a) const;
    Elem from_int(long long v) const { return Rational(static_cast<long>(v)); }

    bool operator==(const RationalField&) const { return true; }
};

/// Residue of an integer mod p.
PrimeField::Elem reduce_mod(const Integer& x, const PrimeField& F);

/// Residue of a rational mod p; throws DomainError if p divides the
/// denominator.
PrimeField::Elem reduce_mod(const Rational& x, const PrimeField& F);

std::string to_string(const Rational& x);
Rational rational_from_string(const std::string& s);

}  // namespace qbbk
