#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "padicq/congruence.hpp"
#include "padicq/errors.hpp"
#include "support.hpp"

using namespace padicq;
using testsupport::small_pow;

namespace {

u64 brute_phi(u64 n) {
    u64 c = 0;
    for (u64 k = 1; k <= n; ++k) c += std::gcd(k, n) == 1;
    return c;
}

u64 brute_order(u64 a, u64 m) {
    u64 x = a % m, k = 1;
    while (x != 1 % m) {
        x = x * a % m;
        ++k;
    }
    return k;
}

}  // namespace

TEST_CASE("euler_phi examples") {
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(9) == 6);
    CHECK(euler_phi(13) == 12);
    CHECK(euler_phi(1000003) == 1000002);
}

TEST_CASE("euler_phi matches counting up to 2000") {
    for (u64 n = 1; n <= 2000; ++n) REQUIRE(euler_phi(n) == brute_phi(n));
}

TEST_CASE("find_primitive_root examples") {
    CHECK(find_primitive_root(7) == 3u);
    CHECK_FALSE(find_primitive_root(8).has_value());
    CHECK(find_primitive_root(9) == 2u);
    CHECK(find_primitive_root(2) == 1u);
    CHECK_THROWS_AS(find_primitive_root(1), InputError);
}

TEST_CASE("primitive roots exist exactly for 2, 4, p^k, 2p^k and have full order") {
    for (u64 m = 2; m <= 1500; ++m) {
        const auto r = find_primitive_root(m);
        REQUIRE(r.has_value() == has_primitive_root(m));
        if (!r) continue;
        REQUIRE(brute_order(*r, m) == brute_phi(m));
        for (u64 s = 1; s < *r; ++s)
            if (std::gcd(s, m) == 1) REQUIRE(brute_order(s, m) != brute_phi(m));
        REQUIRE(cached_primitive_root(m) == r);
    }
}

TEST_CASE("index examples") {
    CHECK(index(3, 2, 7).value == 2);
    CHECK(index(3, 6, 7).value == 3);
    CHECK(index(3, 1, 7).value == 0);
    CHECK(index(3, 6, 7).modulus_phi == 6);
    CHECK_THROWS_AS(index(2, 3, 7), InputError);  // 2 has order 3
    CHECK_THROWS_AS(index(3, 7, 7), InputError);
}

TEST_CASE("index laws over small moduli") {
    for (u64 m : {7u, 9u, 25u, 27u, 49u, 50u, 98u, 121u, 125u, 169u, 243u, 4u, 2u}) {
        const u64 r = *find_primitive_root(m);
        const u64 phi = euler_phi(m);
        for (u64 a = 1; a < m; ++a) {
            if (std::gcd(a, m) != 1) continue;
            const auto ia = index(i64(r), i64(a), m);
            REQUIRE(small_pow(r, ia.value, m) == a % m);
            REQUIRE(ia.value < phi);
            for (u64 b = 1; b < m; b += 7) {
                if (std::gcd(b, m) != 1) continue;
                const auto ib = index(i64(r), i64(b), m).value;
                // ind(ab) = ind a + ind b (mod phi)
                REQUIRE(index(i64(r), i64(a * b % m), m).value == (ia.value + ib) % phi);
            }
            // ind(a^n) = n ind a (mod phi)
            REQUIRE(index(i64(r), i64(small_pow(a, 5, m)), m).value == 5 * ia.value % phi);
        }
    }
}

TEST_CASE("index above the exhaustive threshold uses baby-step giant-step correctly") {
    for (u64 m : {1000003u, 7u * 7u * 7u * 7u * 7u, 2u * 3u * 3u * 3u * 3u * 3u * 3u * 3u}) {
        const u64 r = *find_primitive_root(m);
        for (u64 a : {2u, 3u, 10u, 12345u, 999u}) {
            if (std::gcd(a, m) != 1) continue;
            const auto v = index(i64(r), i64(a), m);
            CHECK(small_pow(r, v.value, m) == a % m);
        }
    }
    CHECK(index(i64(*find_primitive_root(1000003)), -1, 1000003).value == 500001);
}

TEST_CASE("solve_linear examples") {
    CHECK(solve_linear(6, 9, 15).representatives == std::vector<u64>{4, 9, 14});
    CHECK(solve_linear(2, 1, 4).empty());
    CHECK(solve_linear(1, 11, 7).representatives == std::vector<u64>{4});
    CHECK(solve_linear(-3, 3, 9).count() == 3);
    CHECK_THROWS_AS(solve_linear(1, 1, 0), InputError);
}

TEST_CASE("solve_linear matches exhaustive search") {
    for (i64 n = 1; n <= 36; ++n)
        for (i64 a = -12; a <= 40; ++a)
            for (i64 b = -5; b <= 40; b += 3) {
                std::vector<u64> want;
                for (u64 x = 0; x < u64(n); ++x)
                    if (reduce(a * i64(x) - b, u64(n)) == 0) want.push_back(x);
                const auto got = solve_linear(a, b, n);
                REQUIRE(got.representatives == want);
                REQUIRE(got.modulus == u64(n));
            }
}

TEST_CASE("power_residue_solve examples") {
    CHECK(power_residue_solve(3, 6, 7).representatives == std::vector<u64>{3, 5, 6});
    CHECK(power_residue_solve(3, 2, 7).empty());
    CHECK(power_residue_solve(2, 7, 9).representatives == std::vector<u64>{4, 5});
    CHECK_THROWS_AS(power_residue_solve(2, 1, 15), InputError);
    CHECK_THROWS_AS(power_residue_solve(2, 3, 9), InputError);
}

TEST_CASE("power_residue_solve matches exhaustive search with gcd(n, phi) solutions") {
    for (u64 m = 3; m <= 400; ++m) {
        if (!is_odd_prime_power_family(m)) continue;
        const u64 phi = euler_phi(m);
        for (u64 n = 1; n <= 12; ++n) {
            for (u64 a = 1; a < m; ++a) {
                if (std::gcd(a, m) != 1) continue;
                std::vector<u64> want;
                for (u64 x = 0; x < m; ++x)
                    if (small_pow(x, n, m) == a) want.push_back(x);
                const auto got = power_residue_solve(n, i64(a), m);
                REQUIRE(got.representatives == want);
                REQUIRE(power_residue_solvable(n, i64(a), m) == !want.empty());
                if (!want.empty()) REQUIRE(want.size() == std::gcd(n, phi));
            }
        }
    }
}

TEST_CASE("is_qth_residue") {
    CHECK(is_qth_residue(2, 3, 5));
    CHECK_FALSE(is_qth_residue(2, 3, 7));
    CHECK(is_qth_residue(1, 9, 13));
    CHECK(is_qth_residue(1, 4, 2));
    CHECK_THROWS_AS(is_qth_residue(7, 3, 7), InputError);
    for (u64 p : {2u, 3u, 5u, 7u, 11u, 13u, 31u})
        for (u64 q = 1; q <= 12; ++q)
            for (i64 a = 1; a < i64(p); ++a) {
                bool want = false;
                for (u64 x = 1; x < p; ++x) want = want || small_pow(x, q, p) == u64(a);
                REQUIRE(is_qth_residue(a, q, p) == want);
                REQUIRE(is_qth_residue(a - i64(p), q, p) == want);
            }
}

TEST_CASE("mod_pow, inverse_mod and reduce") {
    CHECK(mod_pow(3, 6, 7) == 1);
    CHECK(mod_pow(2, 0, 11) == 1);
    CHECK(mod_pow(-2, 3, 11) == 3);
    CHECK(mod_pow(5, 0, 1) == 0);
    for (u64 p : {5u, 7u, 101u})
        for (i64 a = 1; a < i64(p); ++a) CHECK(mod_pow(a, p - 1, p) == 1);
    CHECK(mod_pow(123456789, 1000000007 - 1, 1000000007) == 1);
    CHECK(mul_mod(~0ull - 1, ~0ull - 1, ~0ull) == 1);

    CHECK(inverse_mod(3, 7) == 5u);
    CHECK_FALSE(inverse_mod(6, 9).has_value());
    CHECK(reduce(-1, 7) == 6);
    CHECK(reduce(14, 7) == 0);
}

TEST_CASE("factorize, is_prime, valuation") {
    CHECK(factorize(1).empty());
    const auto f = factorize(360);
    REQUIRE(f.size() == 3);
    CHECK((f[0].prime == 2 && f[0].exponent == 3));
    CHECK((f[1].prime == 3 && f[1].exponent == 2));
    CHECK((f[2].prime == 5 && f[2].exponent == 1));
    CHECK(is_prime(2));
    CHECK(is_prime(1000003));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(1001));
    CHECK(valuation(96, 2) == 5);
    CHECK(valuation(7, 3) == 0);
    CHECK_THROWS_AS(valuation(0, 3), InputError);
    CHECK(is_odd_prime_power_family(2 * 27));
    CHECK_FALSE(is_odd_prime_power_family(4 * 27));
    CHECK_FALSE(is_odd_prime_power_family(8));
}
