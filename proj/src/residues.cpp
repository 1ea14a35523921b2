#include "qnrnp/residues.hpp"

#include <numeric>

namespace qnrnp::residues {

using arith::Factorization;
using arith::mod_pow;
using arith::mul_mod;

namespace {

void require_odd_prime(std::uint64_t p, const char* who) {
    if (p < 3 || !arith::is_prime(p))
        throw DomainError(std::string(who) + ": p must be an odd prime");
}

} // namespace

UnitResidue unit(std::uint64_t p, std::uint64_t value) {
    require_odd_prime(p, "unit");
    if (value == 0 || value >= p) throw DomainError("unit: value must lie in [1, p-1]");
    return UnitResidue{p, value};
}

const char* to_string(UnitClass c) {
    switch (c) {
        case UnitClass::QuadraticResidue: return "quadratic_residue";
        case UnitClass::PrimitiveRoot: return "primitive_root";
        case UnitClass::Qnrnp: return "qnrnp";
    }
    return "?";
}

std::uint64_t multiplicative_order(const UnitResidue& a, const Factorization& p_minus_1) {
    const std::uint64_t p = a.p;
    std::uint64_t order = p - 1;
    for (const auto& [q, e] : p_minus_1.factors) {
        for (int i = 0; i < e; ++i) {
            if (order % q != 0) break;
            const std::uint64_t candidate = order / q;
            if (mod_pow(a.value, candidate, p) == 1)
                order = candidate;
            else
                break;
        }
    }
    return order;
}

bool is_quadratic_residue(const UnitResidue& a) {
    return mod_pow(a.value, (a.p - 1) / 2, a.p) == 1;
}

int jacobi(std::uint64_t a, std::uint64_t n) {
    if (n == 0 || (n & 1) == 0) throw DomainError("jacobi: n must be odd and positive");
    a %= n;
    int result = 1;
    while (a != 0) {
        while ((a & 1) == 0) {
            a >>= 1;
            const std::uint64_t r = n % 8;
            if (r == 3 || r == 5) result = -result;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3) result = -result;
        a %= n;
    }
    return n == 1 ? result : 0;
}

UnitResidue smallest_primitive_root(std::uint64_t p, const Factorization& p_minus_1) {
    require_odd_prime(p, "smallest_primitive_root");
    const std::uint64_t n = p - 1;
    for (std::uint64_t g = 2; g < p; ++g) {
        bool primitive = true;
        for (const auto& [q, e] : p_minus_1.factors) {
            (void)e;
            if (mod_pow(g, n / q, p) == 1) {
                primitive = false;
                break;
            }
        }
        if (primitive) return UnitResidue{p, g};
    }
    throw DomainError("smallest_primitive_root: no primitive root found (p not prime?)");
}

namespace {

IndexTable build_table(std::uint64_t p, std::uint64_t root, std::uint64_t limit) {
    if (p > limit) throw ResourceError("build_index_table: p exceeds the index table limit");
    IndexTable t;
    t.p = p;
    t.root = root;
    t.index.assign(p, 0);
    std::uint64_t value = 1;
    for (std::uint64_t k = 0; k < p - 1; ++k) {
        t.index[value] = static_cast<std::uint32_t>(k);
        value = mul_mod(value, root, p);
        // value cycles back to 1 only at k+1 == ord(root); earlier means the
        // root's order is a proper divisor of p-1 and the table is garbage.
        if (value == 1 && k + 2 < p)
            throw DomainError("build_index_table: root is not a primitive root");
    }
    return t;
}

} // namespace

IndexTable build_index_table(std::uint64_t p, std::uint64_t limit) {
    require_odd_prime(p, "build_index_table");
    const Factorization f = arith::factorize(p - 1);
    return build_table(p, smallest_primitive_root(p, f).value, limit);
}

IndexTable build_index_table_with_root(std::uint64_t p, std::uint64_t root, std::uint64_t limit) {
    require_odd_prime(p, "build_index_table");
    if (root == 0 || root >= p) throw DomainError("build_index_table: root must lie in [1, p-1]");
    const Factorization f = arith::factorize(p - 1);
    if (multiplicative_order(UnitResidue{p, root}, f) != p - 1)
        throw DomainError("build_index_table: root is not a primitive root");
    return build_table(p, root, limit);
}

UnitClass classify_unit(const UnitResidue& a, const Factorization& p_minus_1) {
    if (is_quadratic_residue(a)) return UnitClass::QuadraticResidue;
    if (multiplicative_order(a, p_minus_1) == a.p - 1) return UnitClass::PrimitiveRoot;
    return UnitClass::Qnrnp;
}

UnitClass classify_unit(std::uint64_t p, std::uint64_t value) {
    return classify_unit(unit(p, value), arith::factorize(p - 1));
}

UnitClass classify_index(std::uint64_t k, std::uint64_t n) {
    if (k % 2 == 0) return UnitClass::QuadraticResidue;
    if (std::gcd(k, n) == 1) return UnitClass::PrimitiveRoot;
    return UnitClass::Qnrnp;
}

std::vector<std::uint64_t> qnrnp_set(std::uint64_t p, std::uint64_t limit) {
    require_odd_prime(p, "qnrnp_set");
    std::vector<std::uint64_t> result;
    if (p <= limit) {
        // One table build, then O(1) per unit.
        const IndexTable t = build_index_table(p, limit);
        for (std::uint64_t v = 1; v < p; ++v)
            if (classify_index(t.ind(v), p - 1) == UnitClass::Qnrnp) result.push_back(v);
    } else {
        const Factorization f = arith::factorize(p - 1);
        for (std::uint64_t v = 1; v < p; ++v)
            if (classify_unit(UnitResidue{p, v}, f) == UnitClass::Qnrnp) result.push_back(v);
    }
    return result;
}

} // namespace qnrnp::residues
