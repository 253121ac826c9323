#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "symploc/errors.hpp"

namespace symploc {

using Integer = mpz_class;

/// Arbitrary-precision rational, always kept in canonical form
/// (positive denominator, coprime numerator/denominator).
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}  // NOLINT: implicit from integer literals
    Rational(const Integer& n) : v_(n) {}
    Rational(const Integer& num, const Integer& den);

    Integer num() const { return v_.get_num(); }
    Integer den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }
    Rational abs() const;

    /// "p" when integral, "p/q" otherwise.
    std::string str() const;

    /// Accepts "p" or "p/q" with q != 0; the result is canonicalized.
    static std::optional<Rational> parse(std::string_view s);

    /// Strict form used by the JSON schemas: optional minus, no leading
    /// zeros, q >= 2, gcd(|p|, q) = 1; integers are written bare.
    /// On rejection *why (if non-null) receives a one-line reason.
    static std::optional<Rational> parse_canonical(std::string_view s,
                                                   std::string* why = nullptr);

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);
    Rational operator-() const;

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

private:
    mpq_class v_;  // invariant: canonical
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

Rational pow(const Rational& base, long e);

}  // namespace symploc
