#pragma once

#include <string>
#include <vector>

#include "symploc/rational.hpp"

namespace symploc::ci {

/// A complete intersection X_n(d_1,...,d_k): complex dimension n plus the
/// multiset of hypersurface degrees, kept sorted non-decreasing. Degrees
/// equal to 1 are dropped on construction (a linear section just shrinks
/// the ambient projective space); the empty multiset is X_n(1) = CP^n.
class Multidegree {
public:
    Multidegree(int n, std::vector<int> degrees);

    static Multidegree projective_space(int n) { return Multidegree(n, {}); }

    int n() const { return n_; }
    const std::vector<int>& degrees() const { return degrees_; }
    int codim() const { return static_cast<int>(degrees_.size()); }
    Integer degree_product() const;

    /// "X_4(2,2)"; the degree list alone prints as "(2,2)" / "()".
    std::string str() const;
    std::string degrees_str() const;

    friend bool operator==(const Multidegree& a, const Multidegree& b) {
        return a.n_ == b.n_ && a.degrees_ == b.degrees_;
    }
    /// Lexicographic on the normalized degree lists (same n assumed).
    friend bool operator<(const Multidegree& a, const Multidegree& b) {
        return a.degrees_ < b.degrees_;
    }

private:
    int n_;
    std::vector<int> degrees_;
};

}  // namespace symploc::ci
