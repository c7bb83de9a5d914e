#pragma once

#include <cstdint>
#include <string>

namespace nongauss {

struct VerifyResult {
    std::string report;
    double max_deviation = 0.0;
    bool ok = true;
};

/// Randomized comparison of the closed-form Wigner evaluation against the
/// truncated-Fock oracle (single mode, at the origin) and the
/// Gaussian-operator oracle (multimode, at random phase-space points).
/// Deterministic for a fixed seed; ok iff every deviation is within 1e-8.
VerifyResult verify_closed_form(std::uint64_t seed, int draws);

}  // namespace nongauss
