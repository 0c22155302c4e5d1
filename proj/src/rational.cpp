#include "qbbk/rational.hpp"

namespace qbbk {

RationalField::Elem RationalField::inv(const Elem& a) const {
    if (a == 0) throw DomainError("division by zero in rational field");
    return 1 / a;
}

PrimeField::Elem reduce_mod(const Integer& x, const PrimeField& F) {
    unsigned long r = mpz_fdiv_ui(x.get_mpz_t(), F.prime());
    return static_cast<PrimeField::Elem>(r);
}

PrimeField::Elem reduce_mod(const Rational& x, const PrimeField& F) {
    PrimeField::Elem num = reduce_mod(Integer(x.get_num()), F);
    PrimeField::Elem den = reduce_mod(Integer(x.get_den()), F);
    if (den == 0)
        throw DomainError("denominator divisible by prime " +
                          std::to_string(F.prime()));
    return F.mul(num, F.inv(den));
}

std::string to_string(const Rational& x) {
    return x.get_str();
}

Rational rational_from_string(const std::string& s) {
    Rational r;
    if (r.set_str(s, 10) != 0)
        throw DomainError("malformed rational literal: " + s);
    r.canonicalize();
    return r;
}

}  // namespace qbbk
