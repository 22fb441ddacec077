#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace consim {

// Base class of every error thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero") {}
};

struct ShapeMismatch : Error {
    explicit ShapeMismatch(const std::string& what) : Error("shape mismatch: " + what) {}
};

struct NotSquare : Error {
    NotSquare() : Error("matrix is not square") {}
};

struct SingularMatrix : Error {
    SingularMatrix() : Error("matrix is singular") {}
};

// The characteristic polynomial does not split over Q(i); carries the
// residual factor so callers can report it.
struct EigenvaluesNotGaussianRational : Error {
    explicit EigenvaluesNotGaussianRational(const std::string& residual)
        : Error("eigenvalues are not Gaussian rational; residual factor " + residual),
          residual_factor(residual) {}
    std::string residual_factor;
};

struct ExactFrameUnavailable : Error {
    explicit ExactFrameUnavailable(const std::string& what)
        : Error("no exact rational frame: " + what) {}
};

struct NotInvolutive : Error {
    explicit NotInvolutive(const std::string& what)
        : Error("not an involutive automorphism: " + what) {}
};

struct ParseError : Error {
    ParseError(std::size_t line, std::size_t column, const std::string& what)
        : Error("parse error at " + std::to_string(line) + ":" + std::to_string(column) +
                ": " + what),
          line(line),
          column(column) {}
    std::size_t line;
    std::size_t column;
};

struct IoError : Error {
    explicit IoError(const std::string& what) : Error("io error: " + what) {}
};

}  // namespace consim
