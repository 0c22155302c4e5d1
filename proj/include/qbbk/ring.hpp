#pragma once

#include <cstdint>

#include "qbbk/modp.hpp"
#include "qbbk/rational.hpp"

namespace qbbk {

enum class RingKind { ExactRational, PrimeField };

/// Runtime description of a coefficient ring, used by the CLI and the
/// cache to dispatch between exact rational and mod-p computations.
struct RingSpec {
    RingKind kind = RingKind::ExactRational;
    std::uint64_t prime = 0;

    static RingSpec rational() { return {RingKind::ExactRational, 0}; }
    static RingSpec mod(std::uint64_t p) { return {RingKind::PrimeField, p}; }

    /// Prime-field specs must name a prime above 2^20 (so the small
    /// factorials occurring at desk-scale weights stay invertible and
    /// accidental rank collapse is improbable) and below 2^31.
    void validate() const;

    bool operator==(const RingSpec&) const = default;
};

}  // namespace qbbk
