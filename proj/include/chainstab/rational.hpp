#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include "chainstab/errors.hpp"

namespace chainstab {

// Arbitrary-precision integer used where intermediate values may exceed int64.
using BigInt = mpz_class;

// Exact rational number, always in lowest terms with a positive denominator.
//
// Thin value wrapper around mpq_class. The wrapper exists so that every
// result is canonicalized and evaluated eagerly (no GMP expression templates
// leak out) and so that the textual form is fixed to "p/q" or "p".
class Rational {
public:
    Rational() = default;

    Rational(std::int64_t value) : value_(static_cast<long>(value)) {}  // NOLINT(implicit)

    Rational(std::int64_t numerator, std::int64_t denominator) {
        if (denominator == 0) {
            throw InputError("rational with zero denominator");
        }
        value_ = mpq_class(BigInt(static_cast<long>(numerator)), BigInt(static_cast<long>(denominator)));
        value_.canonicalize();
    }

    Rational(const BigInt& numerator, const BigInt& denominator) {
        if (denominator == 0) {
            throw InputError("rational with zero denominator");
        }
        value_ = mpq_class(numerator, denominator);
        value_.canonicalize();
    }

    explicit Rational(const BigInt& integer) : value_(integer) {}

    explicit Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

    // Accepts "p", "-p", "p/q" with q != 0. Whitespace is not allowed.
    static Rational parse(std::string_view text) {
        auto is_integer_text = [](std::string_view s) {
            if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
                s.remove_prefix(1);
            }
            if (s.empty()) {
                return false;
            }
            for (char c : s) {
                if (c < '0' || c > '9') {
                    return false;
                }
            }
            return true;
        };
        auto strip_plus = [](std::string_view s) {
            if (!s.empty() && s.front() == '+') {
                s.remove_prefix(1);
            }
            return std::string(s);
        };
        const auto slash = text.find('/');
        const std::string_view num_text = text.substr(0, slash);
        const std::string_view den_text =
            slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
        if (!is_integer_text(num_text) || !is_integer_text(den_text)) {
            throw InputError("cannot parse rational '" + std::string(text) + "'");
        }
        return Rational(BigInt(strip_plus(num_text)), BigInt(strip_plus(den_text)));
    }

    BigInt numerator() const { return value_.get_num(); }
    BigInt denominator() const { return value_.get_den(); }
    const mpq_class& raw() const { return value_; }

    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }
    bool is_zero() const { return sign() == 0; }

    // Largest integer <= value / smallest integer >= value.
    BigInt floor() const {
        BigInt q;
        mpz_fdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
        return q;
    }
    BigInt ceil() const {
        BigInt q;
        mpz_cdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
        return q;
    }

    std::string to_string() const {
        if (is_integer()) {
            return value_.get_num().get_str();
        }
        return value_.get_num().get_str() + "/" + value_.get_den().get_str();
    }

    Rational operator-() const { return Rational(mpq_class(-value_)); }

    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) {
            throw InputError("division by zero");
        }
        value_ /= o.value_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

private:
    mpq_class value_{0};
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

// Converts an integer-valued big number to int64, failing loudly on overflow.
inline std::int64_t to_int64(const BigInt& value) {
    if (!value.fits_slong_p()) {
        throw EnumerationOverflow("integer value " + value.get_str() + " exceeds 64-bit range");
    }
    return static_cast<std::int64_t>(value.get_si());
}

}  // namespace chainstab
