#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace symploc {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// series
struct ZeroDenominator : Error { using Error::Error; };
struct DivisionByZero : Error { using Error::Error; };
struct ZeroConstantTerm : Error { using Error::Error; };

// ci
struct NegativeBetti : Error { using Error::Error; };
struct OddDimension : Error { using Error::Error; };
struct ParityViolation : Error { using Error::Error; };
struct DimensionMismatch : Error { using Error::Error; };
struct BadLength : Error { using Error::Error; };

// fixloc
struct NonPositiveWeight : Error { using Error::Error; };
struct NonPositiveLevel : Error { using Error::Error; };

// gkm
struct BadDimension : Error { using Error::Error; };
struct ZeroWeight : Error { using Error::Error; };

struct NonGenericDirection : Error {
    NonGenericDirection(const std::string& msg, std::vector<std::size_t> bad_edges)
        : Error(msg), edges(std::move(bad_edges)) {}
    std::vector<std::size_t> edges;
};

struct DegenerateEdge : Error {
    DegenerateEdge(const std::string& msg, std::vector<std::size_t> bad_edges)
        : Error(msg), edges(std::move(bad_edges)) {}
    std::vector<std::size_t> edges;
};

// json_io
struct ParseError : Error { using Error::Error; };

}  // namespace symploc
