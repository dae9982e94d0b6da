#pragma once

#include <stdexcept>
#include <string>

namespace dilat {

// Quadrature or series refinement ran out of budget before reaching the
// requested tolerance. Carries the last a-posteriori error estimate.
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& what, double last_estimate)
        : std::runtime_error(what), last_estimate_(last_estimate) {}
    double last_estimate() const { return last_estimate_; }

private:
    double last_estimate_;
};

// Amplitude reached the truncation boundary of a finite-window propagation.
// Carries the first propagation distance at which the check failed.
class WindowTooSmallError : public std::runtime_error {
public:
    WindowTooSmallError(const std::string& what, double z)
        : std::runtime_error(what), z_(z) {}
    double z() const { return z_; }

private:
    double z_;
};

// Filesystem-level failure: open, write, flush, or rename.
class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input file. line() is 1-based.
class CsvParseError : public std::runtime_error {
public:
    CsvParseError(const std::string& what, long line)
        : std::runtime_error(what), line_(line) {}
    long line() const { return line_; }

private:
    long line_;
};

} // namespace dilat
