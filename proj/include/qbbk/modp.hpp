#pragma once

#include <cstdint>

#include "qbbk/errors.hpp"

namespace qbbk {

/// Deterministic Miller-Rabin for 64-bit inputs.
bool is_prime_u64(std::uint64_t n);

/// Default primes for rank computations. Both fit in 31 bits so that a
/// product of two residues plus a partially reduced accumulator stays
/// below 2^63.
inline constexpr std::uint64_t kDefaultPrime = 2147483647ull;  // 2^31 - 1
inline constexpr std::uint64_t kSecondPrime = 2147483629ull;

/// Arithmetic in F_p for a prime p < 2^31. Reduction of 63-bit values
/// uses a precomputed Barrett constant, which keeps the hot
/// accumulate-reduce loops free of hardware division.
class PrimeField {
public:
    using Elem = std::uint64_t;

    explicit PrimeField(std::uint64_t p);

    std::uint64_t prime() const { return p_; }

    /// Reduce x < 2^63 modulo p.
    Elem reduce(std::uint64_t x) const {
        std::uint64_t q = static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(x) * barrett_) >> 64);
        std::uint64_t r = x - q * p_;
        while (r >= p_) r -= p_;
        return r;
    }

    Elem zero() const { return 0; }
    Elem one() const { return 1; }

    Elem add(Elem a, Elem b) const {
        Elem s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p_ - b; }
    Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
    Elem mul(Elem a, Elem b) const { return reduce(a * b); }

    Elem pow(Elem a, std::uint64_t e) const;

    /// Multiplicative inverse; throws DomainError on zero.
    Elem inv(Elem a) const;

    Elem from_int(long long v) const;

    /// n! mod p. Zero whenever n >= p.
    Elem factorial(unsigned long long n) const;

    /// Inverse of n! mod p; throws FactorialNotInvertible for n >= p.
    Elem inv_factorial(unsigned long long n) const;

    bool operator==(const PrimeField& o) const { return p_ == o.p_; }

private:
    std::uint64_t p_;
    std::uint64_t barrett_;  // floor(2^64 / p)
};

}  // namespace qbbk
