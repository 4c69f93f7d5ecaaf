#include "padicq/roots.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "padicq/congruence.hpp"
#include "padicq/errors.hpp"

namespace padicq {

std::string_view to_string(RootCase c) {
    switch (c) {
        case RootCase::square: return "square";
        case RootCase::coprime: return "coprime";
        case RootCase::q_equals_p: return "q_equals_p";
        case RootCase::general_chain: return "general_chain";
    }
    return "?";
}

std::string_view to_string(FailedCondition c) {
    switch (c) {
        case FailedCondition::valuation_not_divisible: return "valuation_not_divisible";
        case FailedCondition::residue_condition: return "residue_condition";
        case FailedCondition::digit_condition_p2: return "digit_condition_p2";
        case FailedCondition::chain_step: return "chain_step";
    }
    return "?";
}

std::string describe(const Failure& f) {
    std::string out(to_string(f.condition));
    if (f.condition == FailedCondition::chain_step) out += " " + std::to_string(f.chain_step);
    return out;
}

namespace {

void require_nonzero(const PAdic& a) {
    if (a.is_zero()) throw InputError("x^q = a needs a nonzero a");
}

void require_digits(const PAdic& a, int k, std::string_view why) {
    if (a.precision() < k)
        throw PrecisionError(std::string(why) + " needs " + std::to_string(k) +
                             " known digits, the value has " + std::to_string(a.precision()));
}

Verdict fail(RootCase c, FailedCondition cond, std::string details) {
    return Verdict{false, c, Failure{cond, 0}, std::move(details)};
}

Verdict pass(RootCase c, std::string details) {
    return Verdict{true, c, std::nullopt, std::move(details)};
}

// Residues r mod p^N, unit, with r^q = u (mod p^(N+c)), built one digit at a
// time from every digit candidate.
std::vector<mpz_class> lift_unit_residues(const mpz_class& u, std::uint32_t p, std::uint64_t q,
                                          unsigned c, int n) {
    std::vector<mpz_class> level;
    mpz_class modulus = prime_power(p, 1 + c);
    mpz_class target, power, candidate;
    mpz_mod(target.get_mpz_t(), u.get_mpz_t(), modulus.get_mpz_t());
    for (std::uint32_t x0 = 1; x0 < p; ++x0) {
        candidate = x0;
        mpz_powm_ui(power.get_mpz_t(), candidate.get_mpz_t(), q, modulus.get_mpz_t());
        if (power == target) level.push_back(candidate);
    }

    mpz_class step = p;  // p^k
    for (int k = 1; k < n && !level.empty(); ++k) {
        modulus *= p;
        mpz_mod(target.get_mpz_t(), u.get_mpz_t(), modulus.get_mpz_t());
        std::vector<mpz_class> next;
        for (const auto& r : level) {
            candidate = r;
            for (std::uint32_t t = 0; t < p; ++t) {
                mpz_powm_ui(power.get_mpz_t(), candidate.get_mpz_t(), q, modulus.get_mpz_t());
                if (power == target) next.push_back(candidate);
                candidate += step;
            }
        }
        level = std::move(next);
        step *= p;
    }
    std::sort(level.begin(), level.end());
    return level;
}

RootSet lift_after_verdict(const PAdic& a, std::uint64_t q, int n) {
    if (n < 1) throw InputError("root precision must be at least 1 digit");
    const std::uint32_t p = a.prime();
    const unsigned c = valuation(q, p);
    const int available = a.precision() - int(c);
    if (available < 1)
        throw PrecisionError("q-th roots need more than " + std::to_string(c) +
                             " known digits of a");
    n = std::min(n, available);

    const auto residues = lift_unit_residues(a.unit_residue(), p, q, c, n);
    if (residues.empty()) {
        throw InternalError("criteria accept x^" + std::to_string(q) + " = " + to_string(a) +
                            " in Q_" + std::to_string(p) + " but digit lifting found no root");
    }

    RootSet out;
    out.precision = n;
    out.expected_count = root_count(p, q);
    if (out.expected_count && residues.size() != *out.expected_count) {
        throw InternalError("digit lifting found " + std::to_string(residues.size()) +
                            " roots, expected " + std::to_string(*out.expected_count));
    }
    const std::int64_t gamma_x = a.valuation() / std::int64_t(q);
    out.roots.reserve(residues.size());
    for (const auto& r : residues) out.roots.push_back(PAdic::from_residue(p, gamma_x, r, n));
    return out;
}

std::uint64_t digit_pair(const PAdic& a) {
    return std::uint64_t(a.digit(0)) + std::uint64_t(a.digit(1)) * a.prime();
}

Verdict decide_chain(const PAdic& a, std::uint64_t q, std::uint64_t m, unsigned s) {
    const std::uint32_t p = a.prime();
    const std::int64_t gamma = a.valuation();
    if (gamma % std::int64_t(q) != 0) {
        Verdict v = fail(RootCase::general_chain, FailedCondition::valuation_not_divisible,
                         "q = " + std::to_string(q) + " does not divide gamma(a) = " +
                             std::to_string(gamma));
        return v;
    }

    std::vector<std::uint64_t> links;
    if (m > 1) links.push_back(m);
    links.insert(links.end(), s, p);

    std::vector<PAdic> frontier{a};
    for (std::size_t i = 0; i < links.size(); ++i) {
        const std::uint64_t e = links[i];
        const bool last = i + 1 == links.size();
        std::vector<PAdic> next;
        std::optional<Verdict> first_failure;
        for (const auto& b : frontier) {
            Verdict v = decide(b, e);
            if (!v.solvable) {
                if (!first_failure) first_failure = std::move(v);
                continue;
            }
            if (last) {
                std::ostringstream msg;
                msg << "q = " << q << " = " << m << " * " << p << "^" << s
                    << "; every link of the chain is solvable on some branch";
                return pass(RootCase::general_chain, msg.str());
            }
            const int n = b.precision() - int(valuation(e, p));
            auto roots = lift_after_verdict(b, e, n);
            for (auto& r : roots.roots) next.push_back(std::move(r));
        }
        if (next.empty()) {
            std::ostringstream msg;
            msg << "link " << (i + 1) << " of " << links.size() << " (x^" << e
                << " = y) has no solution on any branch";
            if (first_failure && first_failure->failed)
                msg << ": " << describe(*first_failure->failed) << ", "
                    << first_failure->details;
            Verdict v = fail(RootCase::general_chain, FailedCondition::chain_step, msg.str());
            v.failed->chain_step = unsigned(i + 1);
            return v;
        }
        frontier = std::move(next);
    }
    throw InternalError("empty reduction chain");
}

}  // namespace

Verdict check_square(const PAdic& a) {
    require_nonzero(a);
    const std::uint32_t p = a.prime();
    const std::int64_t gamma = a.valuation();
    if (gamma % 2 != 0)
        return fail(RootCase::square, FailedCondition::valuation_not_divisible,
                    "gamma(a) = " + std::to_string(gamma) + " is odd");
    if (p == 2) {
        require_digits(a, 3, "the square criterion for p = 2");
        const auto a1 = a.digit(1), a2 = a.digit(2);
        if (a1 != 0 || a2 != 0)
            return fail(RootCase::square, FailedCondition::digit_condition_p2,
                        "a_1 = " + std::to_string(a1) + ", a_2 = " + std::to_string(a2) +
                            "; p = 2 needs a_1 = a_2 = 0");
        return pass(RootCase::square,
                    "gamma(a) = " + std::to_string(gamma) + " is even and a_1 = a_2 = 0");
    }
    const auto a0 = a.digit(0);
    if (!is_qth_residue(a0, 2, p))
        return fail(RootCase::square, FailedCondition::residue_condition,
                    "a_0 = " + std::to_string(a0) + " is not a quadratic residue mod " +
                        std::to_string(p));
    return pass(RootCase::square, "gamma(a) = " + std::to_string(gamma) +
                                      " is even and a_0 = " + std::to_string(a0) +
                                      " is a quadratic residue mod " + std::to_string(p));
}

Verdict check_coprime(const PAdic& a, std::uint64_t q) {
    require_nonzero(a);
    const std::uint32_t p = a.prime();
    if (q < 2) throw InputError("q must be at least 2");
    if (std::gcd(q, std::uint64_t(p)) != 1)
        throw InputError("q = " + std::to_string(q) + " is not coprime to p = " +
                         std::to_string(p));
    const std::int64_t gamma = a.valuation();
    if (gamma % std::int64_t(q) != 0)
        return fail(RootCase::coprime, FailedCondition::valuation_not_divisible,
                    "q = " + std::to_string(q) + " does not divide gamma(a) = " +
                        std::to_string(gamma));
    const auto a0 = a.digit(0);
    if (!is_qth_residue(a0, q, p))
        return fail(RootCase::coprime, FailedCondition::residue_condition,
                    "a_0 = " + std::to_string(a0) + " is not a residue of degree " + std::to_string(q) + " mod " + std::to_string(p));
    return pass(RootCase::coprime, "q = " + std::to_string(q) + " divides gamma(a) = " +
                                       std::to_string(gamma) + " and a_0 = " +
                                       std::to_string(a0) + " is a residue of degree " + std::to_string(q) + " mod " + std::to_string(p));
}

Verdict check_qp(const PAdic& a) {
    require_nonzero(a);
    const std::uint32_t p = a.prime();
    if (p == 2)
        throw InputError("the q = p criterion is used for odd p only; p = 2 goes through the "
                         "square criterion");
    const std::int64_t gamma = a.valuation();
    if (gamma % std::int64_t(p) != 0)
        return fail(RootCase::q_equals_p, FailedCondition::valuation_not_divisible,
                    "p = " + std::to_string(p) + " does not divide gamma(a) = " +
                        std::to_string(gamma));
    require_digits(a, 2, "the q = p criterion");
    const std::uint64_t p2 = std::uint64_t(p) * p;
    const std::uint64_t a0 = a.digit(0);
    const std::uint64_t lhs = mod_pow(std::int64_t(a0), p, p2);
    const std::uint64_t rhs = digit_pair(a);
    std::ostringstream msg;
    msg << "a_0^p = " << lhs << ", a_0 + a_1 p = " << rhs << " (mod " << p2 << ")";
    if (lhs != rhs) return fail(RootCase::q_equals_p, FailedCondition::digit_condition_p2, msg.str());
    return pass(RootCase::q_equals_p, msg.str());
}

Verdict decide(const PAdic& a, std::uint64_t q) {
    require_nonzero(a);
    if (q < 2) throw InputError("q must be at least 2");
    const std::uint32_t p = a.prime();
    if (q == 2) return check_square(a);
    unsigned s = 0;
    std::uint64_t m = q;
    while (m % p == 0) {
        m /= p;
        ++s;
    }
    if (s == 0) return check_coprime(a, q);
    if (m == 1 && s == 1 && p != 2) return check_qp(a);
    return decide_chain(a, q, m, s);
}

RootSet lift_roots(const PAdic& a, std::uint64_t q, int N) {
    Verdict v = decide(a, q);
    if (!v.solvable)
        throw NotSolvableError("x^" + std::to_string(q) + " = " + to_string(a) + " in Q_" +
                               std::to_string(a.prime()) + " has no solution: " +
                               describe(*v.failed) + ", " + v.details);
    return lift_after_verdict(a, q, N);
}

Solution solve(const PAdic& a, std::uint64_t q, int N) {
    Solution out{decide(a, q), std::nullopt};
    if (out.verdict.solvable) out.roots = lift_after_verdict(a, q, N);
    return out;
}

std::optional<unsigned> root_count(std::uint32_t p, std::uint64_t q) {
    if (std::gcd(q, std::uint64_t(p)) != 1) return std::nullopt;
    return unsigned(std::gcd(q, std::uint64_t(p) - 1));
}

int digits_needed(std::uint32_t p, std::uint64_t q) {
    if (q < 2) throw InputError("q must be at least 2");
    if (p == 2) {
        const unsigned s = valuation(q, 2);
        return s == 0 ? 1 : int(s) + 2;
    }
    const unsigned s = valuation(q, p);
    return s == 0 ? 1 : int(s) + 1;
}

}  // namespace padicq
