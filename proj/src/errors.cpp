#include "leafcurve/errors.hpp"

#include "leafcurve/format.hpp"

namespace leafcurve {

NonMonotoneError::NonMonotoneError(double s_lo, double s_hi)
    : std::runtime_error("projected coordinate is not monotone: direction reverses in s-interval [" +
                         format_number(s_lo) + ", " + format_number(s_hi) + "]"),
      s_lo_(s_lo),
      s_hi_(s_hi) {}

OutOfDomainError::OutOfDomainError(double query, double lo, double hi)
    : std::out_of_range("query " + format_number(query) + " outside [" + format_number(lo) + ", " +
                        format_number(hi) + "]"),
      query_(query),
      lo_(lo),
      hi_(hi) {}

}  // namespace leafcurve
