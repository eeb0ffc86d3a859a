#pragma once

#include <stdexcept>
#include <string>

namespace leafcurve {

/// Non-finite input or an argument outside a function's mathematical domain.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Malformed call: bad counts, inverted ranges, queries outside a curve's span.
class ArgumentError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// The model parameters describe a degenerate shape (e.g. zero-length chord).
class GeometryError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A computation produced a non-finite value.
class NumericError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The projected coordinate reverses direction between `s_lo` and `s_hi`,
/// so the page folds over itself and no single-valued inverse exists.
class NonMonotoneError : public std::runtime_error {
public:
    NonMonotoneError(double s_lo, double s_hi);

    double s_lo() const noexcept { return s_lo_; }
    double s_hi() const noexcept { return s_hi_; }

private:
    double s_lo_;
    double s_hi_;
};

/// Lookup query outside the table's range.
class OutOfDomainError : public std::out_of_range {
public:
    OutOfDomainError(double query, double lo, double hi);

    double query() const noexcept { return query_; }
    double lo() const noexcept { return lo_; }
    double hi() const noexcept { return hi_; }

private:
    double query_;
    double lo_;
    double hi_;
};

/// Unreadable or malformed file contents (PNM, CSV, JSON).
class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// File could not be opened, read or written.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace leafcurve
