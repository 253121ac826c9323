#include "symploc/rational.hpp"

#include <cctype>
#include <ostream>

namespace symploc {

Rational::Rational(const Integer& num, const Integer& den) : v_(num, den) {
    if (den == 0)
        throw ZeroDenominator("rational with zero denominator");
    v_.canonicalize();
}

Rational Rational::abs() const {
    Rational r;
    r.v_ = ::abs(v_);
    return r;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero())
        throw DivisionByZero("rational division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::operator-() const {
    Rational r;
    r.v_ = -v_;
    return r;
}

std::string Rational::str() const {
    return v_.get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

}  // namespace

std::optional<Rational> Rational::parse(std::string_view s) {
    std::string_view num = s, den = "1";
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        num = s.substr(0, slash);
        den = s.substr(slash + 1);
    }
    std::string_view mag = num;
    if (!mag.empty() && mag.front() == '-')
        mag.remove_prefix(1);
    if (!all_digits(mag) || !all_digits(den))
        return std::nullopt;
    Integer p(std::string(num), 10), q(std::string(den), 10);
    if (q == 0)
        return std::nullopt;
    return Rational(p, q);
}

std::optional<Rational> Rational::parse_canonical(std::string_view s, std::string* why) {
    auto reject = [&](const char* reason) -> std::optional<Rational> {
        if (why)
            *why = reason;
        return std::nullopt;
    };
    std::string_view num = s, den;
    bool has_den = false;
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        num = s.substr(0, slash);
        den = s.substr(slash + 1);
        has_den = true;
    }
    bool neg = !num.empty() && num.front() == '-';
    std::string_view mag = neg ? num.substr(1) : num;
    if (!all_digits(mag))
        return reject("expected an integer or \"p/q\"");
    if (mag.size() > 1 && mag.front() == '0')
        return reject("leading zeros are not canonical");
    if (neg && mag == "0")
        return reject("\"-0\" is not canonical");
    if (!has_den) {
        Integer p(std::string(num), 10);
        return Rational(p);
    }
    if (!all_digits(den))
        return reject("denominator must be a positive integer");
    if (den.front() == '0')
        return reject("denominator must be positive without leading zeros");
    if (den == "1")
        return reject("integers are written without \"/1\"");
    Integer p(std::string(num), 10), q(std::string(den), 10);
    Integer g;
    mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
    if (g != 1)
        return reject("numerator and denominator are not coprime");
    return Rational(p, q);
}

Rational pow(const Rational& base, long e) {
    if (e < 0) {
        if (base.is_zero())
            throw DivisionByZero("0 raised to a negative power");
        return Rational(1) / pow(base, -e);
    }
    Rational acc = 1, b = base;
    while (e > 0) {
        if (e & 1)
            acc *= b;
        b *= b;
        e >>= 1;
    }
    return acc;
}

}  // namespace symploc
