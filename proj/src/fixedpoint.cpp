#include "qnrnp/fixedpoint.hpp"

#include <numeric>

#include "qnrnp/arith.hpp"
#include "qnrnp/errors.hpp"

namespace qnrnp::fixedpoint {

FixedPointResult construct_fixed_point(std::uint64_t p) {
    if (p < 3 || !arith::is_prime(p))
        throw DomainError("construct_fixed_point: p must be an odd prime");
    const std::uint64_t n = p - 1;
    const arith::Factorization fn = arith::factorize(n);

    // Smallest QNRNP coprime to p-1. p-1 itself never qualifies
    // (gcd(p-1, p-1) > 1), so the scan stops at p-2.
    std::uint64_t x = 0;
    for (std::uint64_t c = 2; c <= p - 2; ++c) {
        if (std::gcd(c, n) != 1) continue;
        if (residues::classify_unit(residues::UnitResidue{p, c}, fn) ==
            residues::UnitClass::Qnrnp) {
            x = c;
            break;
        }
    }
    if (x == 0)
        throw NoWitnessError("construct_fixed_point: no qnrnp coprime to p-1 exists");

    FixedPointResult r;
    r.p = p;
    r.x = residues::UnitResidue{p, x};
    r.y = arith::mod_inverse(x, n);
    r.g = residues::UnitResidue{p, arith::mod_pow(x, r.y, p)};
    r.verified = arith::mod_pow(r.g.value, x, p) == x &&
                 residues::classify_unit(r.g, fn) == residues::UnitClass::Qnrnp;
    return r;
}

std::vector<std::uint64_t> search_fixed_points(std::uint64_t p, std::uint64_t g) {
    const residues::UnitResidue base = residues::unit(p, g);
    std::vector<std::uint64_t> out;
    std::uint64_t power = 1;
    for (std::uint64_t t = 1; t <= p - 1; ++t) {
        power = arith::mul_mod(power, base.value, p);
        if (power == t) out.push_back(t);
    }
    return out;
}

} // namespace qnrnp::fixedpoint
