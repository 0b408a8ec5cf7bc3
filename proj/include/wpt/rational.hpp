#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace wpt {

using Rat = boost::multiprecision::cpp_rational;
using Int = boost::multiprecision::cpp_int;

// Parses "p/q" or plain "p" (optional leading '-'). Throws std::invalid_argument
// on malformed input or zero denominator.
Rat parse_rat(const std::string& text);

// Formats canonically: "p" when the denominator is 1, otherwise "p/q" with q > 0.
std::string format_rat(const Rat& value);

}  // namespace wpt
