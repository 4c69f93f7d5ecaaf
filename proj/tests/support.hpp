#pragma once

// Shared helpers for the test binaries: seeded random p-adics and
// machine-word brute force that does not touch the library's algorithms.

#include <cstdint>
#include <random>
#include <vector>

#include "padicq/padic.hpp"

namespace testsupport {

using Rng = std::mt19937_64;

inline std::uint32_t random_digit(Rng& rng, std::uint32_t p, bool nonzero = false) {
    std::uniform_int_distribution<std::uint32_t> d(nonzero ? 1 : 0, p - 1);
    return d(rng);
}

inline std::vector<std::uint32_t> random_digits(Rng& rng, std::uint32_t p, int n) {
    std::vector<std::uint32_t> out(n);
    for (auto& d : out) d = random_digit(rng, p);
    out[0] = random_digit(rng, p, true);
    return out;
}

inline padicq::PAdic random_unit(Rng& rng, std::uint32_t p, int n) {
    const auto d = random_digits(rng, p, n);
    return padicq::PAdic::from_digits(p, 0, d);
}

inline padicq::PAdic random_padic(Rng& rng, std::uint32_t p, int n, int gamma_lo, int gamma_hi) {
    std::uniform_int_distribution<int> g(gamma_lo, gamma_hi);
    const auto d = random_digits(rng, p, n);
    return padicq::PAdic::from_digits(p, g(rng), d);
}

/// b^e mod m with every intermediate below 2^64; needs m < 2^32.
inline std::uint64_t small_pow(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    b %= m;
    while (e) {
        if (e & 1) r = r * b % m;
        b = b * b % m;
        e >>= 1;
    }
    return r;
}

inline std::uint64_t ipow(std::uint64_t b, unsigned e) {
    std::uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

inline std::uint64_t gcd(std::uint64_t a, std::uint64_t b) {
    while (b) {
        a %= b;
        std::swap(a, b);
    }
    return a;
}

/// Every x in [0, m) with x^q = a (mod m), by scanning.
inline std::vector<std::uint64_t> scan_roots(std::uint64_t a, std::uint64_t q, std::uint64_t m) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t x = 0; x < m; ++x)
        if (small_pow(x, q, m) == a % m) out.push_back(x);
    return out;
}

}  // namespace testsupport
