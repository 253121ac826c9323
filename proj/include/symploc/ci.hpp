#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "symploc/multidegree.hpp"
#include "symploc/series.hpp"

namespace symploc::ci {

/// Total Chern class (1+h)^{n+k+1} * prod_i (1+d_i h)^{-1} truncated at
/// order n; coeff(i) is the integer c_i(X) against the i-th power of the
/// restricted hyperplane class.
TruncatedSeries total_chern_series(const Multidegree& md);

/// Topological Euler characteristic: (prod d_i) * [h^n] of the total
/// Chern series.
Integer euler_characteristic(const Multidegree& md);

/// b_0..b_{2n}. Off-middle entries are those of CP^n; the middle one is
/// chi - n (n even) resp. (n+1) - chi (n odd). Throws NegativeBetti if
/// the middle entry comes out negative (an internal bug, not bad input).
std::vector<Integer> betti_numbers(const Multidegree& md);

/// Hirzebruch signature via the L-genus; 0 when n is odd.
Integer signature(const Multidegree& md);

/// signature - sum_i (b_{4i} - b_{4i+2}).
Integer i_jr(const Multidegree& md);

/// ((b_n + sigma)/2, (b_n - sigma)/2) for n even.
/// Throws OddDimension / ParityViolation.
std::pair<Integer, Integer> b_plus_minus(const Multidegree& md);

/// (prod d_i) * c_1 * c_{n-1}; requires n >= 2 (DimensionMismatch).
Integer c1_cnm1(const Multidegree& md);

/// (prod d_i) * c_2^2; requires n == 4 (DimensionMismatch).
Integer c2_squared(const Multidegree& md);

/// sum_{p=0..n} b_{2p} * (6p(p-1) + (5n-3n^2)/2) for a Betti list
/// b_0..b_{2n}; throws BadLength for even-length input.
Rational gs_chern_sum(const std::vector<Integer>& betti);

/// All normalized multidegrees with every d_i >= 2 and sum d_i <=
/// max_degree_sum (plus the empty one) whose i_jr vanishes, in
/// lexicographic order. n must be even.
std::vector<Multidegree> scan_jr_null(int n, int max_degree_sum);

/// Same search space, keeping multidegrees with chi = n+1. n must be odd
/// and >= 3.
std::vector<Multidegree> scan_chi_linear(int n, int max_degree_sum);

struct InvariantReport {
    Multidegree md;
    Integer euler;
    std::vector<Integer> betti;
    Integer signature;
    std::optional<Integer> b_plus;      // n even only
    std::optional<Integer> b_minus;     // n even only
    Integer i_jr;
    std::optional<Integer> c1_cnm1;     // n >= 2 only
    std::optional<Integer> c2_squared;  // n == 4 only
};

InvariantReport invariant_report(const Multidegree& md);

}  // namespace symploc::ci
