#include "symploc/series.hpp"

#include <algorithm>
#include <cstddef>

namespace symploc {

TruncatedSeries::TruncatedSeries(int order) {
    if (order < 0)
        throw Error("series order must be non-negative");
    coeffs_.assign(static_cast<std::size_t>(order) + 1, Rational(0));
}

TruncatedSeries::TruncatedSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty())
        throw Error("series needs at least the constant coefficient");
}

TruncatedSeries TruncatedSeries::constant(const Rational& c, int order) {
    TruncatedSeries s(order);
    s.coeffs_[0] = c;
    return s;
}

TruncatedSeries TruncatedSeries::linear(const Rational& c0, const Rational& c1, int order) {
    TruncatedSeries s(order);
    s.coeffs_[0] = c0;
    if (order >= 1)
        s.coeffs_[1] = c1;
    return s;
}

TruncatedSeries TruncatedSeries::truncated(int new_order) const {
    if (new_order < 0 || new_order > order())
        throw Error("cannot truncate to that order");
    std::vector<Rational> c(coeffs_.begin(), coeffs_.begin() + new_order + 1);
    return TruncatedSeries(std::move(c));
}

bool TruncatedSeries::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const Rational& c) { return c.is_zero(); });
}

namespace {

int common_order(const TruncatedSeries& a, const TruncatedSeries& b) {
    return std::min(a.order(), b.order());
}

}  // namespace

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    int n = common_order(a, b);
    std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i)
        c[static_cast<std::size_t>(i)] = a.coeff(i) + b.coeff(i);
    return TruncatedSeries(std::move(c));
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
    int n = common_order(a, b);
    std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i)
        c[static_cast<std::size_t>(i)] = a.coeff(i) - b.coeff(i);
    return TruncatedSeries(std::move(c));
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    int n = common_order(a, b);
    std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i)
        for (int j = 0; i + j <= n; ++j)
            c[static_cast<std::size_t>(i + j)] += a.coeff(i) * b.coeff(j);
    return TruncatedSeries(std::move(c));
}

TruncatedSeries inverse(const TruncatedSeries& a) {
    if (a.coeff(0).is_zero())
        throw ZeroConstantTerm("cannot invert a series with zero constant term");
    int n = a.order();
    std::vector<Rational> b(static_cast<std::size_t>(n) + 1);
    Rational c0 = a.coeff(0);
    b[0] = Rational(1) / c0;
    for (int i = 1; i <= n; ++i) {
        Rational acc = 0;
        for (int j = 1; j <= i; ++j)
            acc += a.coeff(j) * b[static_cast<std::size_t>(i - j)];
        b[static_cast<std::size_t>(i)] = -acc / c0;
    }
    return TruncatedSeries(std::move(b));
}

TruncatedSeries int_pow(const TruncatedSeries& a, long e) {
    if (e < 0)
        return int_pow(inverse(a), -e);
    TruncatedSeries acc = TruncatedSeries::one(a.order());
    TruncatedSeries base = a;
    while (e > 0) {
        if (e & 1)
            acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

TruncatedSeries scale_variable(const TruncatedSeries& a, const Integer& d) {
    std::vector<Rational> c(a.coeffs());
    Rational p = 1;
    for (std::size_t i = 1; i < c.size(); ++i) {
        p *= Rational(d);
        c[i] *= p;
    }
    return TruncatedSeries(std::move(c));
}

namespace {

// exp(sign * x) through x^order.
TruncatedSeries exp_series(int order, int sign) {
    std::vector<Rational> c(static_cast<std::size_t>(order) + 1);
    Integer fact = 1;
    Integer s = 1;
    c[0] = 1;
    for (int i = 1; i <= order; ++i) {
        fact *= i;
        s *= sign;
        c[static_cast<std::size_t>(i)] = Rational(s, fact);
    }
    return TruncatedSeries(std::move(c));
}

// sinh(x)/x and cosh(x) at the requested order, from (e^x -+ e^{-x})/2.
TruncatedSeries sinh_over_x(int order) {
    TruncatedSeries diff = exp_series(order + 1, +1) - exp_series(order + 1, -1);
    std::vector<Rational> c(static_cast<std::size_t>(order) + 1);
    for (int i = 0; i <= order; ++i)
        c[static_cast<std::size_t>(i)] = diff.coeff(i + 1) / Rational(2);
    return TruncatedSeries(std::move(c));
}

TruncatedSeries cosh_x(int order) {
    TruncatedSeries sum = exp_series(order, +1) + exp_series(order, -1);
    std::vector<Rational> c(static_cast<std::size_t>(order) + 1);
    for (int i = 0; i <= order; ++i)
        c[static_cast<std::size_t>(i)] = sum.coeff(i) / Rational(2);
    return TruncatedSeries(std::move(c));
}

}  // namespace

TruncatedSeries tanh_x_over_x(int order) {
    return sinh_over_x(order) * inverse(cosh_x(order));
}

TruncatedSeries x_over_tanh_x(int order) {
    return cosh_x(order) * inverse(sinh_over_x(order));
}

}  // namespace symploc
