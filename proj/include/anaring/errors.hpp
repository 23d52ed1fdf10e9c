// Error types shared across the library.
#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace anaring {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised by parse(); carries the byte offset of the offending token and the
// token classes that would have been accepted there.
struct SyntaxError : Error {
    SyntaxError(std::size_t offset, std::vector<std::string> expected, std::string found);
    std::size_t offset;
    std::vector<std::string> expected;
    std::string found;
};

// A constant denominator folded to exactly zero during normalization.
struct DivisionByZeroConstant : Error {
    DivisionByZeroConstant() : Error("constant denominator is exactly zero") {}
};

// A denominator's enclosure contains 0 somewhere on [0,1] at the precision cap.
// lo/hi are decimal renderings of the witness interval.
struct NotAnalyticError : Error {
    NotAnalyticError(std::string lo, std::string hi)
        : Error("expression is not analytic on [0,1]; denominator enclosure contains 0 on ["
                + lo + ", " + hi + "]"),
          witness_lo(std::move(lo)), witness_hi(std::move(hi)) {}
    std::string witness_lo, witness_hi;
};

struct PrecisionExhausted : Error {
    PrecisionExhausted() : Error("requested width is below the precision cap") {}
};

// Two divisor points overlap and the refinement ladder can neither merge nor
// separate them.
struct PointIdentityUndecidable : Error {
    PointIdentityUndecidable() : Error("point identity undecidable after refinement ladder") {}
};

struct ZeroDivisorArgument : Error {
    ZeroDivisorArgument() : Error("quotient by the zero ideal") {}
};

struct ZeroIdealNotFactorable : Error {
    ZeroIdealNotFactorable() : Error("the zero ideal has no maximal factorization") {}
};

struct DivisionByZeroPoly : Error {
    DivisionByZeroPoly() : Error("polynomial division by zero") {}
};

struct BothZero : Error {
    BothZero() : Error("gcd of two zero polynomials") {}
};

}  // namespace anaring
