#include "qbbk/modp.hpp"

namespace qbbk {

namespace {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(
        static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull,
                            19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // These witnesses are exact for all 64-bit integers.
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull,
                            19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 0; i < s - 1; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
    if (p < 2 || p >= (1ull << 31))
        throw DomainError("PrimeField modulus must satisfy 2 <= p < 2^31");
    barrett_ = static_cast<std::uint64_t>(~static_cast<unsigned __int128>(0) / p);
}

PrimeField::Elem PrimeField::pow(Elem a, std::uint64_t e) const {
    Elem r = 1;
    a %= p_;
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

PrimeField::Elem PrimeField::inv(Elem a) const {
    a %= p_;
    if (a == 0) throw DomainError("division by zero in prime field");
    return pow(a, p_ - 2);
}

PrimeField::Elem PrimeField::from_int(long long v) const {
    long long m = v % static_cast<long long>(p_);
    if (m < 0) m += static_cast<long long>(p_);
    return static_cast<Elem>(m);
}

PrimeField::Elem PrimeField::factorial(unsigned long long n) const {
    if (n >= p_) return 0;
    Elem r = 1;
    for (unsigned long long i = 2; i <= n; ++i) r = mul(r, i % p_);
    return r;
}

PrimeField::Elem PrimeField::inv_factorial(unsigned long long n) const {
    Elem f = factorial(n);
    if (f == 0)
        throw FactorialNotInvertible("factorial " + std::to_string(n) +
                                     "! is divisible by prime " +
                                     std::to_string(p_));
    return inv(f);
}

}  // namespace qbbk
