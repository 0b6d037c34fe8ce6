#pragma once

#include <stdexcept>
#include <string>

namespace triality {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
public:
    DivisionByZero() : Error("division by zero") {}
};

/// Inverse of the zero octonion was requested.
class ZeroDivisor : public Error {
public:
    ZeroDivisor() : Error("zero octonion has no inverse") {}
};

class NotUnit : public Error {
public:
    explicit NotUnit(const std::string& what) : Error("not a unit octonion: " + what) {}
};

class NotImaginaryUnit : public Error {
public:
    explicit NotImaginaryUnit(const std::string& what)
        : Error("not a unit imaginary octonion: " + what) {}
};

class NotOrthogonal : public Error {
public:
    explicit NotOrthogonal(const std::string& what) : Error(what) {}
};

class DimensionMismatch : public Error {
public:
    explicit DimensionMismatch(const std::string& what) : Error(what) {}
};

class NotVectorShaped : public Error {
public:
    explicit NotVectorShaped(const std::string& what) : Error(what) {}
};

/// Raised when B(xy) = (Cx)(Ay) fails; carries the worst basis pair (1-based) and its residual.
class TrialityViolated : public Error {
public:
    TrialityViolated(int x_index, int y_index, double residual)
        : Error("triality violated at (e" + std::to_string(x_index) + ", e" +
                std::to_string(y_index) + "), residual " + std::to_string(residual)),
          x_index_(x_index), y_index_(y_index), residual_(residual) {}

    int x_index() const noexcept { return x_index_; }
    int y_index() const noexcept { return y_index_; }
    double residual() const noexcept { return residual_; }

private:
    int x_index_;
    int y_index_;
    double residual_;
};

class AntipodalityViolated : public Error {
public:
    explicit AntipodalityViolated(const std::string& what) : Error(what) {}
};

class ParseError : public Error {
public:
    explicit ParseError(const std::string& what) : Error("parse error: " + what) {}
};

}  // namespace triality
