#include "padicq/padic.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "padicq/congruence.hpp"
#include "padicq/errors.hpp"

namespace padicq {

namespace {

void require_prime(std::uint32_t p) {
    if (!is_prime(p)) throw InputError(std::to_string(p) + " is not a prime");
}

void require_precision(int n) {
    if (n < 1) throw InputError("precision must be at least 1 digit");
}

void require_same_prime(const PAdic& x, const PAdic& y) {
    if (x.prime() != y.prime())
        throw InputError("mismatched primes: " + std::to_string(x.prime()) + " and " +
                         std::to_string(y.prime()));
}

// Removes every factor p from v (v != 0) and returns how many there were.
std::int64_t strip_prime(mpz_class& v, std::uint32_t p) {
    mpz_class pz = p;
    return std::int64_t(mpz_remove(v.get_mpz_t(), v.get_mpz_t(), pz.get_mpz_t()));
}

mpz_class mod_nonneg(const mpz_class& v, const mpz_class& m) {
    mpz_class r;
    mpz_mod(r.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
    return r;
}

std::uint32_t digit_value(char c) {
    if (c >= '0' && c <= '9') return std::uint32_t(c - '0');
    if (c >= 'a' && c <= 'z') return std::uint32_t(c - 'a' + 10);
    return std::uint32_t(c - 'A' + 10);
}

std::uint32_t digit_value_base62(char c) {
    if (c >= '0' && c <= '9') return std::uint32_t(c - '0');
    if (c >= 'A' && c <= 'Z') return std::uint32_t(c - 'A' + 10);
    return std::uint32_t(c - 'a' + 36);
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

mpz_class parse_integer(std::string_view text) {
    text = trim(text);
    std::string s(text);
    if (!s.empty() && s.front() == '+') s.erase(0, 1);
    const bool digits_only =
        !s.empty() &&
        std::all_of(s.begin() + (s.front() == '-' ? 1 : 0), s.end(),
                    [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }) &&
        s != "-";
    if (!digits_only) throw InputError("not an integer: '" + std::string(text) + "'");
    return mpz_class(s, 10);
}

}  // namespace

mpz_class prime_power(std::uint32_t p, std::uint64_t k) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), p, k);
    return r;
}

PAdic::PAdic(std::uint32_t p, std::int64_t gamma, mpz_class unit, int precision)
    : p_(p), gamma_(gamma), unit_(std::move(unit)), precision_(precision) {}

PAdic::PAdic(std::uint32_t p, std::int64_t zero_abs)
    : p_(p), zero_(true), abs_precision_(zero_abs) {}

PAdic PAdic::zero(std::uint32_t p) {
    require_prime(p);
    return PAdic(p, kExact);
}

PAdic PAdic::zero_to(std::uint32_t p, std::int64_t abs_precision) {
    require_prime(p);
    return PAdic(p, abs_precision);
}

PAdic PAdic::from_residue(std::uint32_t p, std::int64_t gamma, const mpz_class& residue,
                          int precision) {
    require_prime(p);
    require_precision(precision);
    mpz_class v = mod_nonneg(residue, prime_power(p, precision));
    if (v == 0) return PAdic(p, gamma + precision);
    const std::int64_t shift = strip_prime(v, p);
    return PAdic(p, gamma + shift, std::move(v), precision - int(shift));
}

PAdic PAdic::from_rational(const mpz_class& num, const mpz_class& den, std::uint32_t p,
                           int precision) {
    require_prime(p);
    require_precision(precision);
    if (den == 0) throw InputError("zero denominator");
    if (num == 0) return PAdic(p, kExact);
    mpz_class n = num, d = den;
    const std::int64_t gamma = strip_prime(n, p) - strip_prime(d, p);
    const mpz_class modulus = prime_power(p, precision);
    mpz_class d_inv;
    mpz_class d_red = mod_nonneg(d, modulus);
    mpz_invert(d_inv.get_mpz_t(), d_red.get_mpz_t(), modulus.get_mpz_t());
    mpz_class unit = mod_nonneg(n * d_inv, modulus);
    return PAdic(p, gamma, std::move(unit), precision);
}

PAdic PAdic::from_integer(const mpz_class& n, std::uint32_t p, int precision) {
    return from_rational(n, 1, p, precision);
}

PAdic PAdic::from_digits(std::uint32_t p, std::int64_t gamma,
                         std::span<const std::uint32_t> digits) {
    require_prime(p);
    if (digits.empty()) throw InputError("digit list is empty");
    if (digits[0] == 0) throw InputError("leading digit d0 must be nonzero");
    mpz_class unit = 0;
    for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
        if (*it >= p)
            throw InputError("digit " + std::to_string(*it) + " is not below p = " +
                             std::to_string(p));
        unit = unit * p + *it;
    }
    return PAdic(p, gamma, std::move(unit), int(digits.size()));
}

PAdic PAdic::normalize(std::uint32_t p, std::int64_t gamma, std::span<const mpz_class> raw) {
    if (raw.empty()) throw InputError("digit list is empty");
    mpz_class value = 0;
    for (auto it = raw.rbegin(); it != raw.rend(); ++it) {
        if (*it < 0) throw InputError("raw digits must be nonnegative");
        value = value * p + *it;
    }
    return from_residue(p, gamma, value, int(raw.size()));
}

std::int64_t PAdic::valuation() const {
    if (zero_) throw InputError("the valuation of zero is not defined");
    return gamma_;
}

std::int64_t PAdic::absolute_precision() const {
    return zero_ ? abs_precision_ : gamma_ + precision_;
}

std::uint32_t PAdic::digit(int i) const {
    if (zero_) throw InputError("zero has no digits");
    if (i < 0 || i >= precision_)
        throw PrecisionError("digit " + std::to_string(i) + " is beyond the known precision " +
                             std::to_string(precision_));
    if (i == 0) return std::uint32_t(mpz_fdiv_ui(unit_.get_mpz_t(), p_));
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), unit_.get_mpz_t(), prime_power(p_, std::uint64_t(i)).get_mpz_t());
    return std::uint32_t(mpz_fdiv_ui(q.get_mpz_t(), p_));
}

std::vector<std::uint32_t> PAdic::digits() const {
    if (zero_) return {};
    std::vector<std::uint32_t> out;
    out.reserve(std::size_t(precision_));
    if (p_ <= 62) {
        const std::string s = unit_.get_str(int(p_));
        for (auto it = s.rbegin(); it != s.rend(); ++it)
            out.push_back(p_ <= 36 ? digit_value(*it) : digit_value_base62(*it));
    } else {
        mpz_class v = unit_;
        while (v != 0) {
            out.push_back(std::uint32_t(mpz_fdiv_q_ui(v.get_mpz_t(), v.get_mpz_t(), p_)));
        }
    }
    out.resize(std::size_t(precision_), 0);
    return out;
}

std::vector<std::uint32_t> PAdic::digits_to(int k) const {
    if (k < 0 || k > precision_)
        throw PrecisionError("requested " + std::to_string(k) + " digits but only " +
                             std::to_string(precision_) + " are known");
    auto d = digits();
    d.resize(std::size_t(k));
    return d;
}

PAdic PAdic::unit_part() const {
    if (zero_) throw InputError("zero has no unit part");
    return PAdic(p_, 0, unit_, precision_);
}

mpq_class PAdic::norm() const {
    if (zero_) return mpq_class(0);
    if (gamma_ >= 0) return mpq_class(mpz_class(1), prime_power(p_, std::uint64_t(gamma_)));
    return mpq_class(prime_power(p_, std::uint64_t(-gamma_)), mpz_class(1));
}

PAdic PAdic::with_precision(int n) const {
    if (zero_) return *this;
    require_precision(n);
    if (n > precision_)
        throw PrecisionError("cannot extend precision from " + std::to_string(precision_) +
                             " to " + std::to_string(n));
    if (n == precision_) return *this;
    return PAdic(p_, gamma_, mod_nonneg(unit_, prime_power(p_, n)), n);
}

PAdic PAdic::shifted(std::int64_t k) const {
    if (zero_) return abs_precision_ == kExact ? *this : PAdic(p_, abs_precision_ + k);
    return PAdic(p_, gamma_ + k, unit_, precision_);
}

mpz_class PAdic::residue(std::int64_t k) const {
    if (k < 0) throw InputError("residue modulus exponent must be nonnegative");
    if (zero_) {
        if (abs_precision_ < k)
            throw PrecisionError("zero is only known modulo p^" + std::to_string(abs_precision_));
        return 0;
    }
    if (gamma_ < 0) throw InputError("value is not a p-adic integer");
    if (gamma_ >= k) return 0;
    if (gamma_ + precision_ < k)
        throw PrecisionError("value is only known modulo p^" +
                             std::to_string(gamma_ + precision_));
    return mod_nonneg(unit_ * prime_power(p_, std::uint64_t(gamma_)),
                      prime_power(p_, std::uint64_t(k)));
}

PAdic PAdic::operator-() const {
    if (zero_) return *this;
    return PAdic(p_, gamma_, mod_nonneg(-unit_, prime_power(p_, precision_)), precision_);
}

PAdic add(const PAdic& x, const PAdic& y) {
    require_same_prime(x, y);
    const std::uint32_t p = x.prime();
    if (x.is_exact_zero()) return y;
    if (y.is_exact_zero()) return x;

    const std::int64_t abs = std::min(x.absolute_precision(), y.absolute_precision());
    if (x.is_zero() && y.is_zero()) return PAdic::zero_to(p, abs);
    if (x.is_zero() || y.is_zero()) {
        const PAdic& v = x.is_zero() ? y : x;
        if (v.valuation() >= abs) return PAdic::zero_to(p, abs);
        return v.with_precision(int(abs - v.valuation()));
    }

    const std::int64_t base = std::min(x.valuation(), y.valuation());
    if (abs <= base) return PAdic::zero_to(p, abs);
    const mpz_class sum = x.unit_residue() * prime_power(p, std::uint64_t(x.valuation() - base)) +
                          y.unit_residue() * prime_power(p, std::uint64_t(y.valuation() - base));
    return PAdic::from_residue(p, base, sum, int(abs - base));
}

PAdic mul(const PAdic& x, const PAdic& y) {
    require_same_prime(x, y);
    const std::uint32_t p = x.prime();
    if (x.is_exact_zero() || y.is_exact_zero()) return PAdic::zero(p);
    if (x.is_zero() && y.is_zero())
        return PAdic::zero_to(p, x.absolute_precision() + y.absolute_precision());
    if (x.is_zero() || y.is_zero()) {
        const PAdic& z = x.is_zero() ? x : y;
        const PAdic& v = x.is_zero() ? y : x;
        return PAdic::zero_to(p, z.absolute_precision() + v.valuation());
    }
    const int n = std::min(x.precision(), y.precision());
    const mpz_class modulus = prime_power(p, n);
    mpz_class unit = x.unit_residue() * y.unit_residue();
    mpz_mod(unit.get_mpz_t(), unit.get_mpz_t(), modulus.get_mpz_t());
    return PAdic::from_residue(p, x.valuation() + y.valuation(), unit, n);
}

PAdic inv(const PAdic& x) {
    if (x.is_zero()) throw InputError("zero has no inverse");
    const mpz_class modulus = prime_power(x.prime(), x.precision());
    mpz_class r;
    mpz_invert(r.get_mpz_t(), x.unit_residue().get_mpz_t(), modulus.get_mpz_t());
    return PAdic::from_residue(x.prime(), -x.valuation(), r, x.precision());
}

PAdic pow_nat(const PAdic& x, std::uint64_t q) {
    if (q == 0) throw InputError("pow_nat requires an exponent q >= 1");
    const std::uint32_t p = x.prime();
    if (x.is_exact_zero()) return x;
    if (x.is_zero()) return PAdic::zero_to(p, x.absolute_precision() * std::int64_t(q));
    const int n = x.precision() + int(valuation(q, p));
    const mpz_class modulus = prime_power(p, n);
    mpz_class r;
    mpz_powm_ui(r.get_mpz_t(), x.unit_residue().get_mpz_t(), q, modulus.get_mpz_t());
    return PAdic::from_residue(p, x.valuation() * std::int64_t(q), r, n);
}

PAdic operator+(const PAdic& x, const PAdic& y) { return add(x, y); }
PAdic operator-(const PAdic& x, const PAdic& y) { return add(x, -y); }
PAdic operator*(const PAdic& x, const PAdic& y) { return mul(x, y); }
PAdic operator/(const PAdic& x, const PAdic& y) { return mul(x, inv(y)); }

bool operator==(const PAdic& x, const PAdic& y) {
    if (x.p_ != y.p_ || x.zero_ != y.zero_) return false;
    if (x.zero_) return x.abs_precision_ == y.abs_precision_;
    return x.gamma_ == y.gamma_ && x.precision_ == y.precision_ && x.unit_ == y.unit_;
}

bool eq_mod(const PAdic& x, const PAdic& y, std::int64_t k) {
    const PAdic d = x - y;
    if (d.is_zero()) {
        if (d.absolute_precision() >= k) return true;
        throw PrecisionError("values are only known modulo p^" +
                             std::to_string(d.absolute_precision()) + ", asked for p^" +
                             std::to_string(k));
    }
    return d.valuation() >= k;
}

std::string to_string(const PAdic& x) {
    if (x.is_zero()) {
        if (x.is_exact_zero()) return "0";
        return "O(" + std::to_string(x.prime()) + "^" + std::to_string(x.absolute_precision()) +
               ")";
    }
    std::ostringstream out;
    out << x.valuation() << ';';
    const auto d = x.digits();
    for (std::size_t i = 0; i < d.size(); ++i) out << (i ? "," : "") << d[i];
    return out.str();
}

PAdic parse_value(std::string_view text, std::uint32_t p, int precision) {
    text = trim(text);
    if (text.empty()) throw InputError("empty value");
    if (const auto semi = text.find(';'); semi != std::string_view::npos) {
        const mpz_class g = parse_integer(text.substr(0, semi));
        if (!g.fits_slong_p()) throw InputError("valuation out of range");
        std::vector<std::uint32_t> digits;
        std::string_view rest = text.substr(semi + 1);
        while (true) {
            const auto comma = rest.find(',');
            const mpz_class d = parse_integer(rest.substr(0, comma));
            if (d < 0 || !d.fits_ulong_p() || d >= p)
                throw InputError("digit " + d.get_str() + " is not in [0, " +
                                 std::to_string(p - 1) + "]");
            digits.push_back(std::uint32_t(d.get_ui()));
            if (comma == std::string_view::npos) break;
            rest.remove_prefix(comma + 1);
        }
        return PAdic::from_digits(p, g.get_si(), digits);
    }
    if (const auto slash = text.find('/'); slash != std::string_view::npos) {
        const mpz_class num = parse_integer(text.substr(0, slash));
        const mpz_class den = parse_integer(text.substr(slash + 1));
        return PAdic::from_rational(num, den, p, precision);
    }
    return PAdic::from_integer(parse_integer(text), p, precision);
}

}  // namespace padicq
