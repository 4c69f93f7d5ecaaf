#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace padicq {

/// A p-adic number p^gamma * (x_0 + x_1 p + ... + x_{N-1} p^{N-1} + O(p^N)),
/// with 0 <= x_j < p and x_0 != 0.
///
/// The unit part is stored as one exact residue modulo p^N, so comparisons
/// modulo p^k never go through a digit vector. N is the relative precision:
/// the number of unit-part digits that are known. Values are immutable.
///
/// Zero is a separate state. An exact zero comes only from exact inputs such
/// as from_rational(0, 1); arithmetic that cancels every known digit yields a
/// zero that is only known modulo p^k (see absolute_precision()).
///
/// Precision guarantees:
///   x * y, x / y, inv(x)  min of the operands' relative precisions
///   pow_nat(x, q)         N(x) + v_p(q)
///   x + y, x - y          known up to min(gamma_x + N_x, gamma_y + N_y); the
///                         relative precision drops by the cancellation depth
class PAdic {
public:
    static constexpr std::int64_t kExact = std::numeric_limits<std::int64_t>::max();

    /// Exact zero.
    static PAdic zero(std::uint32_t p);
    /// Zero known only modulo p^abs_precision.
    static PAdic zero_to(std::uint32_t p, std::int64_t abs_precision);

    static PAdic from_rational(const mpz_class& num, const mpz_class& den, std::uint32_t p,
                               int precision);
    static PAdic from_integer(const mpz_class& n, std::uint32_t p, int precision);

    /// Canonical digits, d[0] != 0, each d[i] < p. Precision = digits.size().
    static PAdic from_digits(std::uint32_t p, std::int64_t gamma,
                             std::span<const std::uint32_t> digits);

    /// p^gamma * sum raw[i] p^i with arbitrary nonnegative entries, carries
    /// propagated. The result keeps raw.size() digits of absolute precision
    /// past p^gamma; leading zero digits move into the valuation.
    static PAdic normalize(std::uint32_t p, std::int64_t gamma, std::span<const mpz_class> raw);

    /// p^gamma * residue, where residue is known modulo p^precision. The
    /// residue may be divisible by p; it is renormalized.
    static PAdic from_residue(std::uint32_t p, std::int64_t gamma, const mpz_class& residue,
                              int precision);

    std::uint32_t prime() const { return p_; }
    bool is_zero() const { return zero_; }
    bool is_exact_zero() const { return zero_ && abs_precision_ == kExact; }

    /// gamma(x). Throws InputError for zero.
    std::int64_t valuation() const;
    /// Number of known unit-part digits. 0 for zero values.
    int precision() const { return precision_; }
    /// gamma + N for nonzero values; the known bound for zero values.
    std::int64_t absolute_precision() const;

    /// Unit part as a residue in [1, p^N), not divisible by p.
    const mpz_class& unit_residue() const { return unit_; }

    std::uint32_t digit(int i) const;
    /// All N known unit-part digits, least significant first.
    std::vector<std::uint32_t> digits() const;
    /// The first k digits; k must not exceed precision().
    std::vector<std::uint32_t> digits_to(int k) const;

    PAdic unit_part() const;
    /// |x|_p = p^(-gamma) as an exact rational; 0 for zero values.
    mpq_class norm() const;

    /// Truncates to n <= precision() relative digits.
    PAdic with_precision(int n) const;
    /// Multiplies by p^k.
    PAdic shifted(std::int64_t k) const;

    /// The value as an integer in [0, p^k) when it lies in Z_p and is known
    /// modulo p^k.
    mpz_class residue(std::int64_t k) const;

    PAdic operator-() const;

    friend PAdic operator+(const PAdic& x, const PAdic& y);
    friend PAdic operator-(const PAdic& x, const PAdic& y);
    friend PAdic operator*(const PAdic& x, const PAdic& y);
    friend PAdic operator/(const PAdic& x, const PAdic& y);

    /// Representation equality: same prime, valuation, precision and digits.
    friend bool operator==(const PAdic& x, const PAdic& y);

private:
    PAdic(std::uint32_t p, std::int64_t gamma, mpz_class unit, int precision);
    explicit PAdic(std::uint32_t p, std::int64_t zero_abs);

    std::uint32_t p_;
    std::int64_t gamma_ = 0;
    mpz_class unit_;
    int precision_ = 0;
    bool zero_ = false;
    std::int64_t abs_precision_ = kExact;  // meaningful for zero values
};

PAdic add(const PAdic& x, const PAdic& y);
PAdic mul(const PAdic& x, const PAdic& y);
PAdic inv(const PAdic& x);
PAdic pow_nat(const PAdic& x, std::uint64_t q);

/// Whether x and y agree modulo p^k. Throws PrecisionError when either value
/// is not known that far.
bool eq_mod(const PAdic& x, const PAdic& y, std::int64_t k);

/// p^k as an mpz.
mpz_class prime_power(std::uint32_t p, std::uint64_t k);

/// "g;d0,d1,...". Zero prints as "0" when exact and "O(p^k)" otherwise.
std::string to_string(const PAdic& x);

/// Parses a rational literal `n/d` (or `n`) at the given precision, or an
/// explicit form `g;d0,d1,...` whose precision is its digit count.
PAdic parse_value(std::string_view text, std::uint32_t p, int precision);

}  // namespace padicq
