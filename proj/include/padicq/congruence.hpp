#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace padicq {

using u64 = std::uint64_t;
using i64 = std::int64_t;

struct Factor {
    u64 prime;
    unsigned exponent;
};

/// Trial-division factorization, primes ascending. factorize(1) is empty.
std::vector<Factor> factorize(u64 n);

bool is_prime(u64 n);

/// p-adic valuation of a nonzero integer.
unsigned valuation(u64 n, u64 p);

u64 mul_mod(u64 a, u64 b, u64 m);

/// b^e mod m for any signed base; mod_pow(b, 0, m) == 1 % m.
u64 mod_pow(i64 b, u64 e, u64 m);

/// Least nonnegative residue of a modulo m (m >= 1).
u64 reduce(i64 a, u64 m);

std::optional<u64> inverse_mod(i64 a, u64 m);

u64 euler_phi(u64 n);

/// True when the unit group modulo m is cyclic: m in {1, 2, 4, p^k, 2p^k}.
bool has_primitive_root(u64 m);

/// Order of a in the unit group modulo m; a must be coprime to m.
u64 multiplicative_order(i64 a, u64 m);

bool is_primitive_root(i64 r, u64 m);

/// Smallest primitive root modulo m (m >= 2), or nullopt when the unit group
/// is not cyclic. By convention the primitive root modulo 2 is 1.
std::optional<u64> find_primitive_root(u64 m);

/// Memoized find_primitive_root. Safe to call from several threads.
std::optional<u64> cached_primitive_root(u64 m);

/// Discrete logarithm ind_r(a) modulo m, normalized to [0, phi(m) - 1].
struct IndexValue {
    u64 base_r;
    u64 value;
    u64 modulus_phi;
};

/// Throws InputError when r is not a primitive root modulo m or a is not a
/// unit modulo m. Baby-step/giant-step above a small exhaustive threshold.
IndexValue index(i64 r, i64 a, u64 m);

/// A congruence's full solution set as sorted residues modulo `modulus`.
struct CongruenceSolution {
    std::vector<u64> representatives;
    u64 modulus = 1;

    std::size_t count() const { return representatives.size(); }
    bool empty() const { return representatives.empty(); }
};

/// a*x = b (mod n), n != 0. Solvable iff gcd(a, n) | b, in which case there are
/// exactly gcd(a, n) residues x0 + t*n/gcd(a, n).
CongruenceSolution solve_linear(i64 a, i64 b, i64 n);

/// True iff m = p^k or 2p^k with p an odd prime.
bool is_odd_prime_power_family(u64 m);

/// Decides x^n = a (mod m) through indices: solvable iff gcd(n, phi(m))
/// divides ind_r(a). Same preconditions as power_residue_solve.
bool power_residue_solvable(u64 n, i64 a, u64 m);

/// All solutions of x^n = a (mod m) for m = p^k or 2p^k, p odd, gcd(a, m) = 1.
/// When solvable there are exactly gcd(n, phi(m)) of them.
CongruenceSolution power_residue_solve(u64 n, i64 a, u64 m);

/// Whether x^q = a0 (mod p) has a solution; 1 <= a0 <= p - 1 after reduction.
bool is_qth_residue(i64 a0, u64 q, u64 p);

}  // namespace padicq
