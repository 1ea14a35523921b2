#pragma once

#include <cstdint>
#include <vector>

#include "qnrnp/residues.hpp"

namespace qnrnp::fixedpoint {

// A solved instance of g^x = x (mod p) built from a QNRNP x coprime to p-1:
// y inverts x mod p-1 and g = x^y, so g^x = x^(yx) = x.
struct FixedPointResult {
    std::uint64_t p = 0;
    residues::UnitResidue x;
    std::uint64_t y = 0; // x * y = 1 (mod p-1)
    residues::UnitResidue g;
    bool verified = false; // g^x = x (mod p) and both x and g are QNRNPs

    friend bool operator==(const FixedPointResult&, const FixedPointResult&) = default;
};

// Takes the smallest QNRNP x with gcd(x, p-1) = 1 and closes the
// construction above. NoWitnessError when no such x exists (small primes
// below the existence threshold, e.g. 5 and 7).
FixedPointResult construct_fixed_point(std::uint64_t p);

// All t in [1, p-1] with g^t = t (mod p), ascending, by direct enumeration.
std::vector<std::uint64_t> search_fixed_points(std::uint64_t p, std::uint64_t g);

} // namespace qnrnp::fixedpoint
