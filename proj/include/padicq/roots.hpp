#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "padicq/padic.hpp"

namespace padicq {

/// Which criterion decided x^q = a.
enum class RootCase {
    square,         ///< q = 2
    coprime,        ///< gcd(q, p) = 1, q > 2
    q_equals_p,     ///< q = p, p odd
    general_chain,  ///< q = m p^s otherwise: an m-th root followed by s p-th roots
};

enum class FailedCondition {
    valuation_not_divisible,  ///< q does not divide gamma(a)
    residue_condition,        ///< a_0 is not a q-th power residue mod p
    digit_condition_p2,       ///< a_0^p != a_0 + a_1 p (mod p^2), or a_1, a_2 != 0 for p = 2
    chain_step,               ///< a link of the m p^s reduction has no solution
};

struct Failure {
    FailedCondition condition;
    /// 1-based link of the reduction chain; 0 outside general_chain.
    unsigned chain_step = 0;
};

struct Verdict {
    bool solvable = false;
    RootCase case_used = RootCase::coprime;
    std::optional<Failure> failed;
    std::string details;
};

struct RootSet {
    /// Sorted by integer residue of the unit part; the first is the canonical root.
    std::vector<PAdic> roots;
    /// gcd(q, p - 1) when gcd(q, p) = 1; unset when no count is asserted.
    std::optional<unsigned> expected_count;
    /// Relative precision of every root.
    int precision = 0;
};

struct Solution {
    Verdict verdict;
    std::optional<RootSet> roots;
};

std::string_view to_string(RootCase c);
std::string_view to_string(FailedCondition c);
std::string describe(const Failure& f);

/// x^2 = a: gamma(a) even and a_0 a quadratic residue (p odd), or
/// gamma(a) even and a_1 = a_2 = 0 (p = 2).
Verdict check_square(const PAdic& a);

/// gcd(q, p) = 1, q >= 2: q | gamma(a) and a_0 a q-th power residue mod p.
Verdict check_coprime(const PAdic& a, std::uint64_t q);

/// q = p for odd p: p | gamma(a) and a_0^p = a_0 + a_1 p (mod p^2).
/// Throws InputError for p = 2.
Verdict check_qp(const PAdic& a);

/// Runs the criterion that applies to (p, q). For q = m p^s outside the three
/// direct cases the chain y^m = a, then s successive p-th roots, is followed
/// across every branch; p-th roots for p = 2 use the square criterion.
Verdict decide(const PAdic& a, std::uint64_t q);

/// All q-th roots of a to N digits by breadth-first digit search. Keeps every
/// residue r mod p^k with r^q = u (mod p^(k+c)), c = v_p(q), and extends it by
/// one base-p digit per step. The achieved precision is min(N, N(a) - c).
/// Throws NotSolvableError when decide() rejects a, and InternalError when the
/// search dies or miscounts.
RootSet lift_roots(const PAdic& a, std::uint64_t q, int N);

/// decide() followed by lift_roots() when solvable.
Solution solve(const PAdic& a, std::uint64_t q, int N);

/// gcd(q, p - 1) when gcd(q, p) = 1; nullopt otherwise.
std::optional<unsigned> root_count(std::uint32_t p, std::uint64_t q);

/// Digits of a needed (beyond the derivative slack) to decide x^q = a.
int digits_needed(std::uint32_t p, std::uint64_t q);

}  // namespace padicq
