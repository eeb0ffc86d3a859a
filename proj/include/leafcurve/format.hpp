#pragma once

#include <string>

namespace leafcurve {

/// Locale-independent shortest-general decimal with `digits` significant digits.
std::string format_number(double value, int digits = 9);

/// Parses a decimal in the "C" locale; throws FormatError on trailing garbage.
double parse_number(const std::string& text);

}  // namespace leafcurve
