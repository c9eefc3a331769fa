#pragma once

#include <stdexcept>
#include <string>

namespace cylrad {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DomainError : public Error {
public:
    using Error::Error;
};

// Unscaled result would leave the double range; use a ratio form instead.
class OverflowRisk : public Error {
public:
    using Error::Error;
};

// Argument within tolerance of a zero of J_n.
class PoleError : public Error {
public:
    using Error::Error;
};

class SingularMatrix : public Error {
public:
    SingularMatrix(const std::string& what, double condition)
        : Error(what), condition_(condition) {}
    double condition() const { return condition_; }

private:
    double condition_;
};

class DegenerateDenominator : public Error {
public:
    using Error::Error;
};

class BranchDegeneracy : public Error {
public:
    using Error::Error;
};

class MaterialWindowError : public Error {
public:
    MaterialWindowError(const std::string& what, double omega_ev, double lo, double hi)
        : Error(what), omega_(omega_ev), lo_(lo), hi_(hi) {}
    double omega() const { return omega_; }
    double lower() const { return lo_; }
    double upper() const { return hi_; }

private:
    double omega_, lo_, hi_;
};

class TabulatedDataError : public Error {
public:
    enum class Kind { Parse, Monotonicity, NegativeImaginary, TooFewSamples, Io };
    TabulatedDataError(Kind kind, const std::string& what, int line = 0)
        : Error(what), kind_(kind), line_(line) {}
    Kind kind() const { return kind_; }
    int line() const { return line_; }

private:
    Kind kind_;
    int line_;
};

class ConvergenceError : public Error {
public:
    ConvergenceError(const std::string& what, double achieved)
        : Error(what), achieved_(achieved) {}
    double achieved() const { return achieved_; }

private:
    double achieved_;
};

class TruncationFailure : public ConvergenceError {
public:
    TruncationFailure(const std::string& what, double achieved, int n_cap)
        : ConvergenceError(what, achieved), n_cap_(n_cap) {}
    int n_cap() const { return n_cap_; }

private:
    int n_cap_;
};

class RegimeError : public Error {
public:
    using Error::Error;
};

}  // namespace cylrad
