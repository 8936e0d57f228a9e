#pragma once

#include <stdexcept>
#include <string>

namespace lcf {

// Base class for every error this library throws on purpose.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct VertexOutOfRange : Error {
    using Error::Error;
};

// A triple with a repeated vertex. Not silently dropped: the input is malformed.
struct DegenerateEdge : Error {
    using Error::Error;
};

struct SeedNotInActive : Error {
    using Error::Error;
};

struct VertexNotInTree : Error {
    using Error::Error;
};

struct NotAnOppositePair : Error {
    using Error::Error;
};

// An exact search ran past its node budget. Distinct from a negative answer:
// "no cycle" is a mathematical claim, "gave up" is not.
struct SearchBudgetExceeded : Error {
    using Error::Error;
};

// An oracle was asked for an instance beyond its configured size cap.
struct CapExceeded : Error {
    using Error::Error;
};

// The Case-1 analysis of the 2n/5 construction met a configuration the
// underlying argument proves impossible; signals a cycle-bearing input or a
// non-maximum skeleton.
struct CaseContradiction : Error {
    using Error::Error;
};

struct IndependenceViolation : Error {
    using Error::Error;
};

struct ColoringViolation : Error {
    using Error::Error;
};

struct KMustBeOdd : Error {
    using Error::Error;
};

struct BadLength : Error {
    using Error::Error;
};

struct TooManyEdges : Error {
    using Error::Error;
};

struct ParseError : Error {
    int line;
    ParseError(int line_, const std::string& what_)
        : Error("line " + std::to_string(line_) + ": " + what_), line(line_) {}
};

} // namespace lcf
