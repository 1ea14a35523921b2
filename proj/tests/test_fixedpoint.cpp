#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <numeric>

#include "oracles.hpp"
#include "qnrnp/arith.hpp"
#include "qnrnp/errors.hpp"
#include "qnrnp/fixedpoint.hpp"
#include "qnrnp/serialize.hpp"

using namespace qnrnp;

TEST_CASE("construct_fixed_point at p = 13") {
    fixedpoint::FixedPointResult r = fixedpoint::construct_fixed_point(13);
    CHECK(r.p == 13);
    CHECK(r.x.value == 5);
    CHECK(r.y == 5);          // 5 * 5 = 25 = 1 (mod 12)
    CHECK(r.g.value == 5);    // 5^5 = 3125 = 5 (mod 13)
    CHECK(r.verified);
    CHECK(arith::mod_pow(r.g.value, r.x.value, 13) == r.x.value);
}

TEST_CASE("construct_fixed_point refuses when no usable residue exists") {
    CHECK_THROWS_AS(fixedpoint::construct_fixed_point(5), NoWitnessError);
    CHECK_THROWS_AS(fixedpoint::construct_fixed_point(7), NoWitnessError);
    CHECK_THROWS_AS(fixedpoint::construct_fixed_point(12), DomainError);
    CHECK_THROWS_AS(fixedpoint::construct_fixed_point(2), DomainError);
}

TEST_CASE("construction succeeds exactly when a coprime qnrnp exists") {
    for (std::uint64_t p : arith::primes_in_range(3, 2000)) {
        bool exists = false;
        std::uint64_t smallest = 0;
        for (std::uint64_t m = 2; m < p; ++m)
            if (std::gcd(m, p - 1) == 1 && oracle::unit_class(p, m) == 2) {
                exists = true;
                smallest = m;
                break;
            }
        if (!exists) {
            CHECK_THROWS_AS(fixedpoint::construct_fixed_point(p), NoWitnessError);
            continue;
        }
        fixedpoint::FixedPointResult r = fixedpoint::construct_fixed_point(p);
        CHECK(r.x.value == smallest);
        CHECK(r.verified);
        CHECK(arith::mod_pow(r.g.value, r.x.value, p) == r.x.value);
        CHECK(oracle::unit_class(p, r.g.value) == 2);
        CHECK(r.x.value * r.y % (p - 1) == 1);
    }
}

TEST_CASE("search_fixed_points by direct enumeration") {
    CHECK(fixedpoint::search_fixed_points(7, 3) == std::vector<std::uint64_t>{2, 4, 5});
    CHECK(fixedpoint::search_fixed_points(13, 1) == std::vector<std::uint64_t>{1});
    std::vector<std::uint64_t> at13 = fixedpoint::search_fixed_points(13, 5);
    CHECK(std::find(at13.begin(), at13.end(), 5) != at13.end());

    for (std::uint64_t p : arith::primes_in_range(3, 200))
        for (std::uint64_t g = 1; g < p; ++g) {
            std::vector<std::uint64_t> expect;
            for (std::uint64_t t = 1; t < p; ++t)
                if (oracle::pow_mod(g, t, p) == t) expect.push_back(t);
            CHECK(fixedpoint::search_fixed_points(p, g) == expect);
        }
}

TEST_CASE("search_fixed_points validates the base") {
    CHECK_THROWS_AS(fixedpoint::search_fixed_points(13, 0), DomainError);
    CHECK_THROWS_AS(fixedpoint::search_fixed_points(13, 13), DomainError);
    CHECK_THROWS_AS(fixedpoint::search_fixed_points(9, 2), DomainError);
}

TEST_CASE("fixed point json round trip") {
    fixedpoint::FixedPointResult r = fixedpoint::construct_fixed_point(13);
    CHECK(serialize::fixed_point_from_json(serialize::to_json(r)) == r);
}
