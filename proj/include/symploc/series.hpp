#pragma once

#include <vector>

#include "symploc/rational.hpp"

namespace symploc {

/// One-variable formal power series over Rational, truncated at a fixed
/// order: coeff(i) is the coefficient of h^i for i = 0..order, and the
/// series is only known mod h^{order+1}. Operations never extend
/// precision; binary operations truncate to the smaller operand order.
/// Immutable after construction.
class TruncatedSeries {
public:
    explicit TruncatedSeries(int order);  // zero series
    explicit TruncatedSeries(std::vector<Rational> coeffs);

    static TruncatedSeries constant(const Rational& c, int order);
    static TruncatedSeries one(int order) { return constant(1, order); }
    /// c0 + c1*h, truncated at `order`.
    static TruncatedSeries linear(const Rational& c0, const Rational& c1, int order);

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Rational& coeff(int i) const { return coeffs_.at(static_cast<std::size_t>(i)); }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    TruncatedSeries truncated(int new_order) const;
    bool is_zero() const;

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
        return a.coeffs_ == b.coeffs_;
    }

private:
    std::vector<Rational> coeffs_;  // size == order + 1
};

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);

/// Cauchy product truncated at min(order(a), order(b)).
TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);

/// Multiplicative inverse to the order of `a`; throws ZeroConstantTerm
/// when coeff(0) == 0.
TruncatedSeries inverse(const TruncatedSeries& a);

/// a^e by repeated squaring; negative e inverts first (ZeroConstantTerm
/// when that is impossible).
TruncatedSeries int_pow(const TruncatedSeries& a, long e);

/// Substitution h -> d*h: coeff(i) becomes d^i * coeff(i).
TruncatedSeries scale_variable(const TruncatedSeries& a, const Integer& d);

/// Taylor series of x/tanh(x) resp. tanh(x)/x, derived from the
/// exponential series by division. Both are even with constant term 1.
TruncatedSeries x_over_tanh_x(int order);
TruncatedSeries tanh_x_over_x(int order);

}  // namespace symploc
