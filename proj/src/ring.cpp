#include "qbbk/ring.hpp"

namespace qbbk {

void RingSpec::validate() const {
    if (kind == RingKind::ExactRational) return;
    if (prime <= (1ull << 20))
        throw DomainError("prime must exceed 2^20, got " +
                          std::to_string(prime));
    if (prime >= (1ull << 31))
        throw DomainError("prime must be below 2^31, got " +
                          std::to_string(prime));
    if (!is_prime_u64(prime))
        throw DomainError(std::to_string(prime) + " is not prime");
}

}  // namespace qbbk
