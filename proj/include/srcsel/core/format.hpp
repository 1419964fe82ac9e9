#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace srcsel {

// Decimal rendering with 17 significant digits; parses back bit-exactly.
std::string format_real(double v);
// Throws InvalidArgument unless the whole string is a real number.
double parse_real(std::string_view text);
long long parse_integer(std::string_view text);

std::string_view trim(std::string_view s);
std::vector<std::string> split(std::string_view s, char sep);

}  // namespace srcsel
