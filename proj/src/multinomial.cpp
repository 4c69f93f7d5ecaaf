#include "padicq/multinomial.hpp"

#include <numeric>
#include <string>

#include "padicq/congruence.hpp"
#include "padicq/errors.hpp"

namespace padicq {

mpz_class multinomial_coeff(unsigned q, std::span<const unsigned> parts) {
    const unsigned long total = std::accumulate(parts.begin(), parts.end(), 0UL);
    if (total != q)
        throw InputError("multinomial parts sum to " + std::to_string(total) + ", expected " +
                         std::to_string(q));
    mpz_class result = 1;
    mpz_class binom;
    unsigned long running = 0;
    for (unsigned m : parts) {
        running += m;
        mpz_bin_uiui(binom.get_mpz_t(), running, m);
        result *= binom;
    }
    return result;
}

namespace {

struct TermCollector {
    unsigned q;
    std::vector<unsigned> exponents;
    std::vector<NkTerm>& out;

    // Chooses m_i for position i given the weight and count still to place.
    void place(unsigned i, unsigned weight, unsigned count) {
        if (i == 0) {
            if (weight != 0) return;
            exponents[0] = count;
            out.push_back({exponents, multinomial_coeff(q, exponents)});
            return;
        }
        if (weight > std::uint64_t(i) * count) return;
        const unsigned top = std::min(weight / i, count);
        for (unsigned m = top + 1; m-- > 0;) {
            exponents[i] = m;
            place(i - 1, weight - m * i, count - m);
        }
        exponents[i] = 0;
    }
};

}  // namespace

std::vector<NkTerm> nk_terms(unsigned q, unsigned k) {
    if (q == 0) throw InputError("N_k needs an exponent q >= 1");
    if (k == 0) throw InputError("N_k is defined for k >= 1");
    std::vector<NkTerm> out;
    TermCollector collector{q, std::vector<unsigned>(k, 0), out};
    collector.place(k - 1, k, q);
    return out;
}

mpz_class evaluate_nk(std::span<const NkTerm> terms, std::span<const std::uint32_t> x) {
    mpz_class sum = 0;
    mpz_class monomial, power;
    for (const auto& term : terms) {
        if (term.exponents.size() > x.size())
            throw InputError("N_k needs " + std::to_string(term.exponents.size()) +
                             " digits, got " + std::to_string(x.size()));
        monomial = 1;
        for (std::size_t i = 0; i < term.exponents.size() && monomial != 0; ++i) {
            const unsigned m = term.exponents[i];
            if (m == 0) continue;
            mpz_ui_pow_ui(power.get_mpz_t(), x[i], m);
            monomial *= power;
        }
        mpz_addmul(sum.get_mpz_t(), term.coefficient.get_mpz_t(), monomial.get_mpz_t());
    }
    return sum;
}

mpz_class compute_nk(unsigned q, std::span<const std::uint32_t> x, unsigned k) {
    if (k == 0) throw InputError("N_k is defined for k >= 1");
    if (x.size() < k)
        throw InputError("N_" + std::to_string(k) + " needs digits x_0..x_" +
                         std::to_string(k - 1) + ", got " + std::to_string(x.size()));
    const auto terms = nk_terms(q, k);
    return evaluate_nk(terms, x);
}

NkDichotomy nk_dichotomy(unsigned p, unsigned k, std::span<const std::uint32_t> x) {
    if (!is_prime(p)) throw InputError(std::to_string(p) + " is not a prime");
    const mpz_class nk = compute_nk(p, x, k);
    return {mpz_divisible_ui_p(nk.get_mpz_t(), p) != 0, k % p == 0};
}

unsigned binom_valuation_kummer(std::uint64_t m, std::uint64_t n, std::uint64_t p) {
    if (!is_prime(p)) throw InputError(std::to_string(p) + " is not a prime");
    unsigned carries = 0;
    std::uint64_t carry = 0;
    while (m != 0 || n != 0 || carry != 0) {
        const std::uint64_t column = m % p + n % p + carry;
        carry = column >= p ? 1 : 0;
        carries += unsigned(carry);
        m /= p;
        n /= p;
    }
    return carries;
}

mpz_class ntilde_pk(unsigned p, std::span<const std::uint32_t> x, unsigned k) {
    if (!is_prime(p)) throw InputError(std::to_string(p) + " is not a prime");
    if (k == 0) throw InputError("ntilde_pk needs k >= 1");
    const unsigned pk = p * k;
    if (pk < 3) throw InputError("ntilde_pk needs p*k >= 3 (x_1 and x_{pk-1} must differ)");
    if (x.size() < pk - 1)
        throw InputError("ntilde_pk needs at least " + std::to_string(pk - 1) + " digits");

    std::vector<std::uint32_t> digits(x.begin(), x.begin() + std::min<std::size_t>(x.size(), pk));
    digits.resize(pk, 0);  // x_{pk-1} reads as 0 when not supplied
    const mpz_class npk = compute_nk(p, digits, pk);

    mpz_class pivot;
    mpz_ui_pow_ui(pivot.get_mpz_t(), digits[0], p - 2);
    pivot *= std::uint64_t(p) * (p - 1);
    pivot *= digits[1];
    pivot *= digits[pk - 1];
    return npk - pivot;
}

}  // namespace padicq
