#include "leafcurve/format.hpp"

#include <charconv>
#include <system_error>

#include "leafcurve/errors.hpp"

namespace leafcurve {

std::string format_number(double value, int digits) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::general, digits);
    if (ec != std::errc{}) {
        throw FormatError("cannot format number");
    }
    return std::string(buf, end);
}

double parse_number(const std::string& text) {
    std::size_t begin = text.find_first_not_of(" \t\r");
    std::size_t last = text.find_last_not_of(" \t\r");
    if (begin == std::string::npos) {
        throw FormatError("empty numeric field");
    }
    const char* first = text.data() + begin;
    const char* end = text.data() + last + 1;
    if (*first == '+') {
        ++first;
    }
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(first, end, value);
    if (ec != std::errc{} || ptr != end) {
        throw FormatError("not a number: '" + text + "'");
    }
    return value;
}

}  // namespace leafcurve
