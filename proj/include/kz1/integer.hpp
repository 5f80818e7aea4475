#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace kz1 {

using Integer = boost::multiprecision::cpp_int;

/// Parses an optionally signed decimal integer. Throws ParseError.
Integer parse_integer(std::string_view text);

std::string to_string(const Integer& value);

/// Number of bits in |value|; 0 for 0.
std::size_t bit_length(const Integer& value);

bool is_power_of_two(const Integer& value);

}  // namespace kz1
