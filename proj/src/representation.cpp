#include "padicq/representation.hpp"

#include <algorithm>
#include <sstream>

#include "padicq/congruence.hpp"
#include "padicq/errors.hpp"
#include "padicq/roots.hpp"

namespace padicq {

std::string_view to_string(DecompositionForm f) {
    switch (f) {
        case DecompositionForm::coprime_with_eta: return "coprime_with_eta";
        case DecompositionForm::coprime_plain: return "coprime_plain";
        case DecompositionForm::q_equals_p: return "q_equals_p";
    }
    return "?";
}

PAdic Decomposition::delta() const {
    return PAdic::from_integer(1, epsilon.prime(), epsilon.precision()).shifted(delta_exponent);
}

PAdic Decomposition::recompose() const {
    return (epsilon * pow_nat(y, q)).shifted(delta_exponent);
}

namespace {

void require_odd_prime(std::uint32_t p) {
    if (p == 2 || !is_prime(p)) throw InputError(std::to_string(p) + " is not an odd prime");
}

void require_c1_hypothesis(std::uint32_t p, std::uint32_t q) {
    if (!is_prime(p)) throw InputError(std::to_string(p) + " is not a prime");
    if (!is_prime(q)) throw InputError("q = " + std::to_string(q) + " is not a prime");
    if (q >= p) throw InputError("q = " + std::to_string(q) + " must be below p = " + std::to_string(p));
    if (p % q != 1)
        throw InputError("p = " + std::to_string(p) + " is not 1 mod q = " + std::to_string(q) +
                         ", so every unit is a q-th power");
}

std::uint32_t floor_mod(std::int64_t a, std::uint32_t m) {
    const std::int64_t r = a % std::int64_t(m);
    return std::uint32_t(r < 0 ? r + m : r);
}

PAdic canonical_root(const PAdic& a, std::uint64_t q) {
    const auto roots = lift_roots(a, q, a.precision());
    return roots.roots.front();
}

std::vector<std::uint32_t> complement(std::uint32_t p, const std::vector<bool>& hit) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t j = 0; j < p; ++j)
        if (!hit[j]) out.push_back(j);
    return out;
}

}  // namespace

PAdic find_nonresidue_unit(std::uint32_t p, std::uint32_t q, int precision) {
    require_c1_hypothesis(p, q);
    const auto root = cached_primitive_root(p);
    PAdic eta = PAdic::from_integer(mpz_class(static_cast<unsigned long>(*root)), p, precision);
    if (check_coprime(eta, q).solvable)
        throw InternalError("primitive root " + std::to_string(*root) + " is a " +
                            "power of degree " + std::to_string(q) + " in Q_" + std::to_string(p));
    return eta;
}

bool verify_power_classes(std::uint32_t p, std::uint32_t q) {
    require_c1_hypothesis(p, q);
    constexpr int kDigits = 8;
    const PAdic eta = find_nonresidue_unit(p, q, kDigits);
    PAdic eta_power = PAdic::from_integer(1, p, kDigits);
    for (std::uint32_t j = 0; j < q; ++j) {
        for (std::uint32_t i = 0; i < q; ++i) {
            if (i == 0 && j == 0) continue;
            if (decide(eta_power.shifted(i), q).solvable) return false;
        }
        eta_power = eta_power * eta;
    }
    return true;
}

Decomposition classify_coprime(const PAdic& x, std::uint32_t q) {
    if (x.is_zero()) throw InputError("cannot classify zero");
    const std::uint32_t p = x.prime();
    if (!is_prime(q)) throw InputError("q = " + std::to_string(q) + " is not a prime");
    if (q >= p) throw InputError("q = " + std::to_string(q) + " must be below p = " + std::to_string(p));

    const int n = x.precision();
    const std::uint32_t i = floor_mod(x.valuation(), q);
    const PAdic rest = x.shifted(-std::int64_t(i));  // valuation divisible by q
    const PAdic one = PAdic::from_integer(1, p, n);

    if (p % q != 1) {
        return Decomposition{DecompositionForm::coprime_plain, q, one, i, canonical_root(rest, q),
                             std::nullopt, 0};
    }

    const PAdic eta = find_nonresidue_unit(p, q, n);
    const PAdic eta_inv = inv(eta);
    PAdic candidate = rest.unit_part();
    PAdic epsilon = one;
    for (std::uint32_t j = 0; j < q; ++j) {
        if (decide(candidate, q).solvable) {
            return Decomposition{DecompositionForm::coprime_with_eta, q, epsilon, i,
                                 canonical_root(rest / epsilon, q), eta, j};
        }
        candidate = candidate * eta_inv;
        epsilon = epsilon * eta;
    }
    throw InternalError("no power of eta = " + to_string(eta) + " makes " + to_string(x) +
                        " a power of degree " + std::to_string(q));
}

Decomposition classify_p(const PAdic& x) {
    if (x.is_zero()) throw InputError("cannot classify zero");
    const std::uint32_t p = x.prime();
    if (p == 2) throw InputError("the q = p decomposition is defined for odd p");
    const int n = x.precision();
    if (n < 2) throw PrecisionError("the q = p decomposition needs two known digits");

    const std::uint32_t j = floor_mod(x.valuation(), p);
    const bool unit_is_power = check_qp(x.unit_part()).solvable;
    const PAdic epsilon =
        unit_is_power
            ? PAdic::from_integer(1, p, n)
            : PAdic::from_integer(mpz_class(static_cast<unsigned long>(x.digit(0))) +
                                      mpz_class(static_cast<unsigned long>(x.digit(1))) * p,
                                  p, n);
    const PAdic rest = x.shifted(-std::int64_t(j)) / epsilon;
    return Decomposition{DecompositionForm::q_equals_p, p, epsilon, j, canonical_root(rest, p),
                         std::nullopt, 0};
}

std::vector<std::uint64_t> epsilon_set(std::uint32_t p) {
    require_odd_prime(p);
    const std::uint64_t p2 = std::uint64_t(p) * p;
    std::vector<std::uint64_t> out{1};
    for (std::uint64_t i = 1; i < p; ++i) {
        const std::uint64_t power = mod_pow(std::int64_t(i), p, p2);
        for (std::uint64_t j = 0; j < p; ++j)
            if (power != i + j * p) out.push_back(i + j * p);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<std::uint32_t> j_no_solution(std::uint32_t p) {
    require_odd_prime(p);
    const std::uint64_t p2 = std::uint64_t(p) * p;
    // i^p = i (mod p), so each i pins exactly one j
    std::vector<bool> hit(p, false);
    for (std::uint64_t i = 1; i < p; ++i) {
        const std::uint64_t power = mod_pow(std::int64_t(i), p, p2);
        hit[((power + p2 - i) % p2) / p] = true;
    }
    return complement(p, hit);
}

std::vector<std::uint32_t> j_no_solution_via_index(std::uint32_t p) {
    require_odd_prime(p);
    const std::uint64_t p2 = std::uint64_t(p) * p;
    const std::uint64_t r = *cached_primitive_root(p2);
    const std::uint64_t generator = mod_pow(std::int64_t(r), p, p2);  // order p - 1
    std::vector<bool> hit(p, false);
    std::uint64_t h = 1;
    for (std::uint64_t t = 0; t + 1 < p; ++t) {
        hit[(h - h % p) / p] = true;
        h = mul_mod(h, generator, p2);
    }
    return complement(p, hit);
}

std::vector<std::uint64_t> restricted_epsilon_set(std::uint32_t p) {
    std::vector<std::uint64_t> out{1};
    for (std::uint32_t j : j_no_solution(p))
        for (std::uint64_t i = 1; i < p; ++i) out.push_back(i + std::uint64_t(j) * p);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<JTableRow> j_no_solution_table(std::uint32_t p_max) {
    if (p_max > kMaxTablePrime)
        throw InputError("p_max is capped at " + std::to_string(kMaxTablePrime));
    std::vector<JTableRow> rows;
    for (std::uint32_t p = 3; p <= p_max; p += 2)
        if (is_prime(p)) rows.push_back({p, j_no_solution(p)});
    return rows;
}

std::string format_j_table(const std::vector<JTableRow>& rows) {
    std::ostringstream out;
    for (const auto& row : rows) {
        out << "p=" << row.p << ":";
        for (std::size_t k = 0; k < row.j_values.size(); ++k)
            out << (k ? ", " : " ") << row.j_values[k];
        out << '\n';
    }
    return out.str();
}

}  // namespace padicq
