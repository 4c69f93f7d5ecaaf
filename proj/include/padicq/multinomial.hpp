#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <vector>

namespace padicq {

// Expanding a power of a base-p digit series,
//
//   (x_0 + x_1 p + x_2 p^2 + ...)^q
//       = x_0^q + sum_{k>=1} (q x_0^{q-1} x_k + N_k(x_0, ..., x_{k-1})) p^k,
//
// where N_k collects the multinomial terms
//
//   q! / (m_0! ... m_{k-1}!) * x_0^{m_0} ... x_{k-1}^{m_{k-1}}
//
// over all exponent tuples with sum m_i = q and sum i*m_i = k. N_1 = 0.

/// One exponent tuple (m_0, ..., m_{k-1}) of N_k with its multinomial
/// coefficient.
struct NkTerm {
    std::vector<unsigned> exponents;
    mpz_class coefficient;
};

/// q! / (parts[0]! parts[1]! ...), computed as the telescoping product
/// C(m_0, m_0) C(m_0 + m_1, m_1) ... . Throws InputError unless the parts sum to q.
mpz_class multinomial_coeff(unsigned q, std::span<const unsigned> parts);

/// Every term of N_k for exponent q, enumerated by backtracking over
/// m_{k-1}, ..., m_1 with m_0 inferred. Ordered lexicographically by
/// (m_{k-1}, ..., m_1) descending.
std::vector<NkTerm> nk_terms(unsigned q, unsigned k);

/// Evaluates a term list at the digits x (at least k of them).
mpz_class evaluate_nk(std::span<const NkTerm> terms, std::span<const std::uint32_t> x);

/// N_k(x_0, ..., x_{k-1}) for exponent q. Digits may be zero or exceed p.
mpz_class compute_nk(unsigned q, std::span<const std::uint32_t> x, unsigned k);

struct NkDichotomy {
    bool p_divides_nk;
    bool p_divides_k;

    /// p | N_k exactly when p does not divide k.
    bool consistent() const { return p_divides_nk != p_divides_k; }
};

/// Both sides of the N_k divisibility dichotomy for q = p.
NkDichotomy nk_dichotomy(unsigned p, unsigned k, std::span<const std::uint32_t> x);

/// Carries when m and n are added in base p; equals v_p(C(m + n, m)).
unsigned binom_valuation_kummer(std::uint64_t m, std::uint64_t n, std::uint64_t p);

/// N_{pk} minus its only term that involves x_{pk-1}, namely
/// p (p - 1) x_0^{p-2} x_1 x_{pk-1}. Needs pk >= 3 and at least pk - 1 digits;
/// a supplied x_{pk-1} does not affect the result.
mpz_class ntilde_pk(unsigned p, std::span<const std::uint32_t> x, unsigned k);

}  // namespace padicq
