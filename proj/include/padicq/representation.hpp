#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "padicq/padic.hpp"

namespace padicq {

enum class DecompositionForm {
    coprime_with_eta,  ///< q prime, p = 1 (mod q): x = eta^j p^i y^q
    coprime_plain,     ///< q prime, p != 1 (mod q): x = p^i y^q
    q_equals_p,        ///< q = p odd: x = eps p^j y^p, eps = 1 or x_0 + x_1 p
};

std::string_view to_string(DecompositionForm f);

/// x = epsilon * p^delta_exponent * y^q.
struct Decomposition {
    DecompositionForm form;
    std::uint64_t q;
    PAdic epsilon;
    std::uint32_t delta_exponent;
    PAdic y;
    /// The fixed non-q-th-power unit, for coprime_with_eta.
    std::optional<PAdic> eta;
    /// epsilon = eta^eta_power in coprime_with_eta; 0 otherwise.
    std::uint32_t eta_power = 0;

    PAdic delta() const;
    PAdic recompose() const;
};

/// The smallest primitive root modulo p as a p-adic unit: not a q-th power
/// whenever q is a prime with q < p and p = 1 (mod q). Throws InputError
/// otherwise, since then every unit is a q-th power.
PAdic find_nonresidue_unit(std::uint32_t p, std::uint32_t q, int precision = 16);

/// Checks that none of p^i eta^j, 0 <= i, j < q, (i, j) != (0, 0), is a q-th
/// power.
bool verify_power_classes(std::uint32_t p, std::uint32_t q);

/// Decomposition for a prime q < p.
Decomposition classify_coprime(const PAdic& x, std::uint32_t q);

/// Decomposition with q = p for odd p.
Decomposition classify_p(const PAdic& x);

/// {1} together with every i + j p (1 <= i < p, 0 <= j < p) for which
/// i^p != i + j p (mod p^2). Sorted.
std::vector<std::uint64_t> epsilon_set(std::uint32_t p);

/// j in [0, p) such that no i in [1, p) has i^p = i + j p (mod p^2), found by
/// scanning every pair (i, j).
std::vector<std::uint32_t> j_no_solution(std::uint32_t p);

/// Same set from the group structure: the p-th powers modulo p^2 are the
/// subgroup r^(p t) for a primitive root r; each hits exactly one j.
std::vector<std::uint32_t> j_no_solution_via_index(std::uint32_t p);

/// {1} together with i + j p for j in j_no_solution(p), 1 <= i < p.
std::vector<std::uint64_t> restricted_epsilon_set(std::uint32_t p);

struct JTableRow {
    std::uint32_t p;
    std::vector<std::uint32_t> j_values;
};

constexpr std::uint32_t kMaxTablePrime = 20000;

/// One row per odd prime p <= p_max (p_max <= kMaxTablePrime).
std::vector<JTableRow> j_no_solution_table(std::uint32_t p_max);

/// "p=<p>: j1, j2, ..." per row, newline terminated.
std::string format_j_table(const std::vector<JTableRow>& rows);

}  // namespace padicq
