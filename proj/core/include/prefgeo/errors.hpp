#pragma once

#include <stdexcept>
#include <string>

namespace prefgeo {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IdenticalCandidates : Error {
    IdenticalCandidates() : Error("candidates coincide") {}
};

struct DuplicateCandidates : Error {
    DuplicateCandidates() : Error("duplicate candidate positions") {}
};

struct DegenerateInput : Error {
    using Error::Error;
    DegenerateInput() : Error("degenerate input") {}
};

struct DegenerateDiagonal : Error {
    DegenerateDiagonal() : Error("candidates share a +/-1 diagonal") {}
};

struct DegenerateEmbedding : Error {
    DegenerateEmbedding() : Error("embedding is not generic; perturb first") {}
};

/// Thrown when a query point is equidistant from two candidates.
struct TieError : Error {
    int first;
    int second;
    int voter = -1;  // set when raised while processing a voter list
    TieError(int a, int b)
        : Error("tie between candidates " + std::to_string(a) + " and " + std::to_string(b)),
          first(a), second(b) {}
};

struct NoStrictGap : Error {
    NoStrictGap() : Error("a voter is equidistant from every candidate pair") {}
};

struct UnsupportedNorm : Error {
    UnsupportedNorm() : Error("operation not defined for this norm") {}
};

struct SizeMismatch : Error {
    SizeMismatch() : Error("profiles have different candidate counts") {}
};

struct ComplexityGuard : Error {
    ComplexityGuard() : Error("isomorphism search refused for m > 8") {}
};

struct WrongArity : Error {
    WrongArity() : Error("operation requires exactly 4 candidates") {}
};

}  // namespace prefgeo
