#include "symploc/ci.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace symploc::ci {

Multidegree::Multidegree(int n, std::vector<int> degrees) : n_(n), degrees_(std::move(degrees)) {
    if (n_ < 1)
        throw Error("complex dimension must be positive");
    for (int d : degrees_)
        if (d < 1)
            throw Error("hypersurface degrees must be >= 1");
    std::erase(degrees_, 1);
    std::sort(degrees_.begin(), degrees_.end());
}

Integer Multidegree::degree_product() const {
    Integer p = 1;
    for (int d : degrees_)
        p *= d;
    return p;
}

std::string Multidegree::degrees_str() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < degrees_.size(); ++i) {
        if (i)
            os << ',';
        os << degrees_[i];
    }
    os << ')';
    return os.str();
}

std::string Multidegree::str() const {
    return "X_" + std::to_string(n_) + degrees_str();
}

namespace {

Integer integer_coeff(const TruncatedSeries& s, int i) {
    const Rational& c = s.coeff(i);
    if (!c.is_integer())
        throw Error("expected an integer series coefficient");
    return c.num();
}

}  // namespace

TruncatedSeries total_chern_series(const Multidegree& md) {
    int n = md.n();
    long power = n + md.codim() + 1;
    TruncatedSeries s = int_pow(TruncatedSeries::linear(1, 1, n), power);
    for (int d : md.degrees())
        s = s * inverse(TruncatedSeries::linear(1, d, n));
    return s;
}

Integer euler_characteristic(const Multidegree& md) {
    return md.degree_product() * integer_coeff(total_chern_series(md), md.n());
}

std::vector<Integer> betti_numbers(const Multidegree& md) {
    int n = md.n();
    std::vector<Integer> b(static_cast<std::size_t>(2 * n) + 1, 0);
    for (int i = 0; i <= 2 * n; i += 2)
        b[static_cast<std::size_t>(i)] = 1;
    Integer chi = euler_characteristic(md);
    Integer middle = (n % 2 == 0) ? Integer(chi - n) : Integer((n + 1) - chi);
    if (middle < 0)
        throw NegativeBetti("middle Betti number came out negative for " + md.str());
    b[static_cast<std::size_t>(n)] = middle;
    return b;
}

Integer signature(const Multidegree& md) {
    int n = md.n();
    if (n % 2 != 0)
        return 0;
    long power = n + md.codim() + 1;
    TruncatedSeries l = int_pow(x_over_tanh_x(n), power);
    for (int d : md.degrees())
        l = l * scale_variable(tanh_x_over_x(n), d);
    return md.degree_product() * integer_coeff(l, n);
}

namespace {

// sum_i (b_{4i} - b_{4i+2}) over the indices present in the list.
Integer alternating_even_sum(const std::vector<Integer>& betti) {
    Integer acc = 0;
    for (std::size_t i = 0; i < betti.size(); i += 2) {
        if (i % 4 == 0)
            acc += betti[i];
        else
            acc -= betti[i];
    }
    return acc;
}

}  // namespace

Integer i_jr(const Multidegree& md) {
    return signature(md) - alternating_even_sum(betti_numbers(md));
}

std::pair<Integer, Integer> b_plus_minus(const Multidegree& md) {
    if (md.n() % 2 != 0)
        throw OddDimension("b_n^+/- undefined for odd complex dimension");
    Integer bn = betti_numbers(md)[static_cast<std::size_t>(md.n())];
    Integer sigma = signature(md);
    if ((bn + sigma) % 2 != 0)
        throw ParityViolation("b_n and signature have different parity for " + md.str());
    return {(bn + sigma) / 2, (bn - sigma) / 2};
}

Integer c1_cnm1(const Multidegree& md) {
    if (md.n() < 2)
        throw DimensionMismatch("c_1 c_{n-1} needs complex dimension >= 2");
    TruncatedSeries c = total_chern_series(md);
    return md.degree_product() * integer_coeff(c, 1) * integer_coeff(c, md.n() - 1);
}

Integer c2_squared(const Multidegree& md) {
    if (md.n() != 4)
        throw DimensionMismatch("c_2^2 is computed for complex dimension 4 only");
    Integer c2 = integer_coeff(total_chern_series(md), 2);
    return md.degree_product() * c2 * c2;
}

Rational gs_chern_sum(const std::vector<Integer>& betti) {
    if (betti.size() % 2 == 0)
        throw BadLength("Betti list must have odd length 2n+1");
    long n = static_cast<long>(betti.size() / 2);
    Rational shift(Integer(5 * n - 3 * n * n), Integer(2));
    Rational acc = 0;
    for (long p = 0; p <= n; ++p)
        acc += Rational(betti[static_cast<std::size_t>(2 * p)]) * (Rational(6 * p * (p - 1)) + shift);
    return acc;
}

namespace {

std::vector<Multidegree> scan(int n, int max_degree_sum,
                              const std::function<bool(const Multidegree&)>& keep) {
    std::vector<Multidegree> out;
    std::vector<int> degs;
    // Depth-first with children after the node itself yields the
    // lexicographic order on degree lists directly.
    std::function<void(int, int)> visit = [&](int min_deg, int budget) {
        Multidegree md(n, degs);
        if (keep(md))
            out.push_back(md);
        for (int d = min_deg; d <= budget; ++d) {
            degs.push_back(d);
            visit(d, budget - d);
            degs.pop_back();
        }
    };
    visit(2, max_degree_sum);
    return out;
}

}  // namespace

std::vector<Multidegree> scan_jr_null(int n, int max_degree_sum) {
    if (n % 2 != 0 || n < 2)
        throw DimensionMismatch("jr-null scan needs even complex dimension");
    return scan(n, max_degree_sum, [](const Multidegree& md) { return i_jr(md) == 0; });
}

std::vector<Multidegree> scan_chi_linear(int n, int max_degree_sum) {
    if (n % 2 != 1 || n < 3)
        throw DimensionMismatch("chi-linear scan needs odd complex dimension >= 3");
    return scan(n, max_degree_sum,
                [n](const Multidegree& md) { return euler_characteristic(md) == n + 1; });
}

InvariantReport invariant_report(const Multidegree& md) {
    InvariantReport r{md, euler_characteristic(md), betti_numbers(md), signature(md),
                      std::nullopt, std::nullopt, i_jr(md), std::nullopt, std::nullopt};
    if (md.n() % 2 == 0) {
        auto [bp, bm] = b_plus_minus(md);
        r.b_plus = bp;
        r.b_minus = bm;
    }
    if (md.n() >= 2)
        r.c1_cnm1 = c1_cnm1(md);
    if (md.n() == 4)
        r.c2_squared = c2_squared(md);
    return r;
}

}  // namespace symploc::ci
