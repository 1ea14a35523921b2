#pragma once

#include <cstdint>
#include <vector>

#include "qnrnp/arith.hpp"
#include "qnrnp/errors.hpp"

namespace qnrnp::residues {

// A unit modulo an odd prime p: 1 <= value <= p-1.
struct UnitResidue {
    std::uint64_t p = 0;
    std::uint64_t value = 0;

    friend bool operator==(const UnitResidue&, const UnitResidue&) = default;
};

UnitResidue unit(std::uint64_t p, std::uint64_t value);

// Every unit mod p falls in exactly one class: quadratic residues have even
// index, primitive roots have index coprime to p-1, and what remains --
// quadratic non-residues that are not primitive roots -- have odd index with
// gcd(index, p-1) > 1.
enum class UnitClass { QuadraticResidue, PrimitiveRoot, Qnrnp };

const char* to_string(UnitClass c);

// Discrete-log table for a fixed primitive root: index[v] = k with
// root^k = v (mod p). index[1] = 0, index[root] = 1, and the index map is a
// bijection from the units onto [0, p-2].
struct IndexTable {
    std::uint64_t p = 0;
    std::uint64_t root = 0;
    std::vector<std::uint32_t> index; // size p; slot 0 unused

    std::uint64_t n() const { return p - 1; }
    std::uint32_t ind(std::uint64_t value) const { return index[value]; }
};

inline constexpr std::uint64_t kDefaultIndexTableLimit = 10'000'000;

// Order of a in (Z/p)^*, computed by dividing prime factors out of p-1.
std::uint64_t multiplicative_order(const UnitResidue& a, const arith::Factorization& p_minus_1);

// Euler criterion: a^((p-1)/2) == 1 (mod p).
bool is_quadratic_residue(const UnitResidue& a);

// Jacobi symbol (a/n) for odd n >= 1; independent route to residue status.
int jacobi(std::uint64_t a, std::uint64_t n);

UnitResidue smallest_primitive_root(std::uint64_t p, const arith::Factorization& p_minus_1);

// Builds the discrete-log table for the smallest primitive root (or a chosen
// one). Cost is O(p) time and memory; p above `limit` raises ResourceError.
IndexTable build_index_table(std::uint64_t p, std::uint64_t limit = kDefaultIndexTableLimit);
IndexTable build_index_table_with_root(std::uint64_t p, std::uint64_t root,
                                       std::uint64_t limit = kDefaultIndexTableLimit);

UnitClass classify_unit(const UnitResidue& a, const arith::Factorization& p_minus_1);
UnitClass classify_unit(std::uint64_t p, std::uint64_t value);

// Classification in index space: k even -> QuadraticResidue,
// gcd(k, n) == 1 -> PrimitiveRoot, else Qnrnp (n = p-1).
UnitClass classify_index(std::uint64_t k, std::uint64_t n);

// Ascending values of the quadratic non-residues mod p that are not
// primitive roots. Size is (p-1)/2 - phi(p-1).
std::vector<std::uint64_t> qnrnp_set(std::uint64_t p, std::uint64_t limit = kDefaultIndexTableLimit);

} // namespace qnrnp::residues
