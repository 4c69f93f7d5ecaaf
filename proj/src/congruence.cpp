#include "padicq/congruence.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <string>
#include <unordered_map>

#include "padicq/errors.hpp"

namespace padicq {

namespace {

using u128 = unsigned __int128;

// Below this group order a linear scan beats building the baby-step table.
constexpr u64 kExhaustiveLogLimit = 64;

u64 gcd_signed(i64 a, u64 m) {
    const u64 abs_a = a < 0 ? u64(0) - u64(a) : u64(a);
    return std::gcd(abs_a, m);
}

}  // namespace

std::vector<Factor> factorize(u64 n) {
    std::vector<Factor> out;
    for (u64 d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
        if (n % d != 0) continue;
        unsigned e = 0;
        while (n % d == 0) {
            n /= d;
            ++e;
        }
        out.push_back({d, e});
    }
    if (n > 1) out.push_back({n, 1});
    return out;
}

bool is_prime(u64 n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0) return false;
    for (u64 d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

unsigned valuation(u64 n, u64 p) {
    if (n == 0) throw InputError("valuation of zero is infinite");
    if (p < 2) throw InputError("valuation needs a base of at least 2");
    unsigned v = 0;
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

u64 mul_mod(u64 a, u64 b, u64 m) { return u64(u128(a) * b % m); }

u64 reduce(i64 a, u64 m) {
    if (m == 0) throw InputError("modulus must be positive");
    if (a >= 0) return u64(a) % m;
    const u64 r = (u64(0) - u64(a)) % m;
    return r == 0 ? 0 : m - r;
}

u64 mod_pow(i64 b, u64 e, u64 m) {
    if (m == 0) throw InputError("modulus must be positive");
    u64 base = reduce(b, m);
    u64 result = 1 % m;
    while (e != 0) {
        if (e & 1) result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        e >>= 1;
    }
    return result;
}

std::optional<u64> inverse_mod(i64 a, u64 m) {
    if (m == 0) throw InputError("modulus must be positive");
    // extended Euclid on (a mod m, m) with signed 128-bit cofactors
    __int128 old_r = reduce(a, m), r = m;
    __int128 old_s = 1, s = 0;
    while (r != 0) {
        const __int128 quot = old_r / r;
        std::swap(old_r, r);
        r -= quot * old_r;
        std::swap(old_s, s);
        s -= quot * old_s;
    }
    if (old_r != 1) {
        if (m == 1) return 0;
        return std::nullopt;
    }
    __int128 inv = old_s % __int128(m);
    if (inv < 0) inv += m;
    return u64(inv);
}

u64 euler_phi(u64 n) {
    if (n == 0) throw InputError("euler_phi requires n >= 1");
    u64 phi = n;
    for (const auto& f : factorize(n)) phi = phi / f.prime * (f.prime - 1);
    return phi;
}

bool has_primitive_root(u64 m) {
    if (m == 0) return false;
    if (m == 1 || m == 2 || m == 4) return true;
    if (m % 2 == 0) m /= 2;
    if (m % 2 == 0) return false;
    return factorize(m).size() == 1;
}

u64 multiplicative_order(i64 a, u64 m) {
    if (gcd_signed(a, m) != 1) throw InputError("order is defined only for units");
    const u64 phi = euler_phi(m);
    u64 order = phi;
    for (const auto& f : factorize(phi)) {
        for (unsigned i = 0; i < f.exponent; ++i) {
            if (mod_pow(a, order / f.prime, m) == 1 % m)
                order /= f.prime;
            else
                break;
        }
    }
    return order;
}

bool is_primitive_root(i64 r, u64 m) {
    if (m == 0 || gcd_signed(r, m) != 1) return false;
    const u64 phi = euler_phi(m);
    for (const auto& f : factorize(phi))
        if (mod_pow(r, phi / f.prime, m) == 1 % m) return false;
    return true;
}

std::optional<u64> find_primitive_root(u64 m) {
    if (m < 2) throw InputError("find_primitive_root requires m >= 2");
    if (!has_primitive_root(m)) return std::nullopt;
    const u64 phi = euler_phi(m);
    const auto phi_factors = factorize(phi);
    for (u64 g = 1; g < m; ++g) {
        if (std::gcd(g, m) != 1) continue;
        bool primitive = true;
        for (const auto& f : phi_factors) {
            if (mod_pow(i64(g), phi / f.prime, m) == 1) {
                primitive = false;
                break;
            }
        }
        if (primitive) return g;
    }
    return std::nullopt;  // unreachable for cyclic groups
}

std::optional<u64> cached_primitive_root(u64 m) {
    static std::shared_mutex mutex;
    static std::unordered_map<u64, std::optional<u64>> memo;
    {
        std::shared_lock lock(mutex);
        if (auto it = memo.find(m); it != memo.end()) return it->second;
    }
    auto root = find_primitive_root(m);
    std::unique_lock lock(mutex);
    memo.emplace(m, root);
    return root;
}

IndexValue index(i64 r, i64 a, u64 m) {
    if (m == 0) throw InputError("index: modulus must be positive");
    if (gcd_signed(a, m) != 1)
        throw InputError("index: " + std::to_string(a) + " is not a unit modulo " +
                         std::to_string(m));
    if (!is_primitive_root(r, m))
        throw InputError("index: " + std::to_string(r) + " is not a primitive root modulo " +
                         std::to_string(m));
    const u64 phi = euler_phi(m);
    const u64 target = reduce(a, m);
    const u64 base = reduce(r, m);

    if (phi <= kExhaustiveLogLimit) {
        u64 acc = 1 % m;
        for (u64 x = 0; x < phi; ++x) {
            if (acc == target) return {base, x, phi};
            acc = mul_mod(acc, base, m);
        }
        throw InternalError("index: exhaustive search found no logarithm");
    }

    // baby steps r^j, giant steps target * r^(-step*i)
    const u64 step = u64(std::ceil(std::sqrt(double(phi))));
    std::unordered_map<u64, u64> baby;
    baby.reserve(step * 2);
    u64 acc = 1;
    for (u64 j = 0; j < step; ++j) {
        baby.emplace(acc, j);
        acc = mul_mod(acc, base, m);
    }
    const u64 giant = mod_pow(i64(*inverse_mod(i64(base), m)), step, m);
    u64 gamma = target;
    for (u64 i = 0; i <= step; ++i) {
        if (auto it = baby.find(gamma); it != baby.end()) {
            return {base, (i * step + it->second) % phi, phi};
        }
        gamma = mul_mod(gamma, giant, m);
    }
    throw InternalError("index: baby-step/giant-step found no logarithm");
}

CongruenceSolution solve_linear(i64 a, i64 b, i64 n) {
    if (n == 0) throw InputError("solve_linear: modulus must be nonzero");
    const u64 mod = n < 0 ? u64(0) - u64(n) : u64(n);
    CongruenceSolution out;
    out.modulus = mod;
    const u64 ar = reduce(a, mod);
    const u64 br = reduce(b, mod);
    const u64 g = std::gcd(ar, mod);  // gcd(0, n) = n
    if (br % g != 0) return out;
    const u64 reduced_mod = mod / g;
    const u64 inv = *inverse_mod(i64(ar / g), reduced_mod);
    const u64 x0 = mul_mod(br / g, inv, reduced_mod);
    out.representatives.reserve(g);
    for (u64 t = 0; t < g; ++t) out.representatives.push_back(x0 + t * reduced_mod);
    return out;
}

bool is_odd_prime_power_family(u64 m) {
    if (m < 3) return false;
    if (m % 2 == 0) m /= 2;
    if (m % 2 == 0 || m < 3) return false;
    return factorize(m).size() == 1;
}

namespace {

void check_power_residue_args(u64 n, i64 a, u64 m) {
    if (n == 0) throw InputError("power residue: exponent must be positive");
    if (!is_odd_prime_power_family(m))
        throw InputError("power residue: modulus " + std::to_string(m) +
                         " is not of the form p^k or 2p^k with p an odd prime");
    if (gcd_signed(a, m) != 1)
        throw InputError("power residue: " + std::to_string(a) + " is not a unit modulo " +
                         std::to_string(m));
}

}  // namespace

bool power_residue_solvable(u64 n, i64 a, u64 m) {
    check_power_residue_args(n, a, m);
    const u64 r = *cached_primitive_root(m);
    const IndexValue ind = index(i64(r), a, m);
    const u64 d = std::gcd(n, ind.modulus_phi);
    return ind.value % d == 0;
}

CongruenceSolution power_residue_solve(u64 n, i64 a, u64 m) {
    check_power_residue_args(n, a, m);
    const u64 r = *cached_primitive_root(m);
    const IndexValue ind = index(i64(r), a, m);
    const u64 phi = ind.modulus_phi;

    // x = r^y with n*y = ind(a) (mod phi)
    const auto exponents = solve_linear(i64(n % phi), i64(ind.value), i64(phi));
    CongruenceSolution out;
    out.modulus = m;
    for (u64 y : exponents.representatives) out.representatives.push_back(mod_pow(i64(r), y, m));
    std::sort(out.representatives.begin(), out.representatives.end());
    return out;
}

bool is_qth_residue(i64 a0, u64 q, u64 p) {
    if (!is_prime(p)) throw InputError("is_qth_residue: " + std::to_string(p) + " is not prime");
    if (q == 0) throw InputError("is_qth_residue: q must be positive");
    const u64 residue = reduce(a0, p);
    if (residue == 0) throw InputError("is_qth_residue: a0 is divisible by p");
    if (p == 2) {
        for (u64 x = 1; x < p; ++x)
            if (mod_pow(i64(x), q, p) == residue) return true;
        return false;
    }
    return power_residue_solvable(q, i64(residue), p);
}

}  // namespace padicq
