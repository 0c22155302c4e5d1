#pragma once

#include <span>
#include <utility>
#include <vector>

#include "qbbk/ring.hpp"

namespace qbbk {

/// A q-series known exactly through q^N, with coefficients in an exact
/// ring (rationals or a prime field). Coefficients are indexed from q^0
/// so the empty bracket (the constant 1) and Eisenstein constant terms
/// are first-class. Arithmetic requires identical ring and identical
/// truncation order; there is no silent re-truncation.
template <class Field>
class TruncSeries {
public:
    using Elem = typename Field::Elem;

    TruncSeries(Field field, int order)
        : field_(std::move(field)) {
        if (order < 0) throw DomainError("truncation order must be >= 0");
        c_.assign(static_cast<std::size_t>(order) + 1, field_.zero());
    }

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const Field& field() const { return field_; }

    Elem& operator[](int i) { return c_[static_cast<std::size_t>(i)]; }
    const Elem& operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }

    std::span<const Elem> coeffs() const { return c_; }
    std::vector<Elem>& raw() { return c_; }

    TruncSeries& operator+=(const TruncSeries& o) {
        check_compatible(o);
        for (std::size_t i = 0; i < c_.size(); ++i)
            c_[i] = field_.add(c_[i], o.c_[i]);
        return *this;
    }

    TruncSeries& operator-=(const TruncSeries& o) {
        check_compatible(o);
        for (std::size_t i = 0; i < c_.size(); ++i)
            c_[i] = field_.sub(c_[i], o.c_[i]);
        return *this;
    }

    friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) {
        a += b;
        return a;
    }

    friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) {
        a -= b;
        return a;
    }

    /// Cauchy product truncated at q^N.
    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
        a.check_compatible(b);
        TruncSeries out(a.field_, a.order());
        const int n = a.order();
        for (int i = 0; i <= n; ++i) {
            if (a.c_[i] == a.field_.zero()) continue;
            for (int j = 0; i + j <= n; ++j)
                out.c_[i + j] =
                    a.field_.add(out.c_[i + j], a.field_.mul(a.c_[i], b.c_[j]));
        }
        return out;
    }

    TruncSeries& scale(const Elem& a) {
        for (auto& c : c_) c = field_.mul(c, a);
        return *this;
    }

    bool operator==(const TruncSeries& o) const {
        if (!(field_ == o.field_) || order() != o.order()) return false;
        return c_ == o.c_;
    }

private:
    void check_compatible(const TruncSeries& o) const {
        if (!(field_ == o.field_))
            throw RingMismatch("series live over different rings");
        if (order() != o.order())
            throw TruncationMismatch("series have truncation orders " +
                                     std::to_string(order()) + " and " +
                                     std::to_string(o.order()));
    }

    Field field_;
    std::vector<Elem> c_;
};

using SeriesQ = TruncSeries<RationalField>;
using SeriesP = TruncSeries<PrimeField>;

template <class Field>
TruncSeries<Field> one_series(const Field& f, int order) {
    TruncSeries<Field> s(f, order);
    s[0] = f.one();
    return s;
}

/// q d/dq: multiplies the coefficient of q^n by n. Kills constants and
/// preserves the truncation order.
template <class Field>
TruncSeries<Field> q_derivative(const TruncSeries<Field>& a) {
    TruncSeries<Field> out(a.field(), a.order());
    for (int n = 1; n <= a.order(); ++n)
        out[n] = a.field().mul(a[n], a.field().from_int(n));
    return out;
}

/// The depth-one bracket [k] = 1/(k-1)! * sum_n sigma_{k-1}(n) q^n,
/// computed by the double sum over (divisor, cofactor) pairs.
template <class Field>
TruncSeries<Field> sigma_series(int k, int N, const Field& f) {
    if (k < 1) throw DomainError("sigma_series needs k >= 1");
    TruncSeries<Field> out(f, N);
    typename Field::Elem inv_fact = f.inv(fact_elem(f, k - 1));
    for (int d = 1; d <= N; ++d) {
        typename Field::Elem w = f.one();
        for (int i = 0; i < k - 1; ++i) w = f.mul(w, f.from_int(d));
        w = f.mul(w, inv_fact);
        for (int n = d; n <= N; n += d) out[n] = f.add(out[n], w);
    }
    return out;
}

inline RationalField::Elem fact_elem(const RationalField& f, long long n) {
    Rational r = f.one();
    for (long long i = 2; i <= n; ++i) r *= i;
    return r;
}

inline PrimeField::Elem fact_elem(const PrimeField& f, long long n) {
    PrimeField::Elem e = f.factorial(static_cast<unsigned long long>(n));
    if (e == 0)
        throw FactorialNotInvertible("factorial " + std::to_string(n) +
                                     "! vanishes mod " +
                                     std::to_string(f.prime()));
    return e;
}

/// Reduce an exact rational series mod p.
inline SeriesP reduce_mod(const SeriesQ& a, const PrimeField& F) {
    SeriesP out(F, a.order());
    for (int i = 0; i <= a.order(); ++i) out[i] = reduce_mod(a[i], F);
    return out;
}

}  // namespace qbbk
