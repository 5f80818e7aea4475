#include "kz1/integer.hpp"

#include <cctype>

#include "kz1/errors.hpp"

namespace kz1 {

Integer parse_integer(std::string_view text) {
    std::size_t pos = 0;
    bool negative = false;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
        negative = text[pos] == '-';
        ++pos;
    }
    if (pos == text.size()) {
        throw ParseError("expected an integer, got '" + std::string(text) + "'");
    }
    Integer value = 0;
    for (; pos < text.size(); ++pos) {
        const char c = text[pos];
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            throw ParseError("invalid digit in integer '" + std::string(text) + "'");
        }
        value *= 10;
        value += c - '0';
    }
    return negative ? Integer(-value) : value;
}

std::string to_string(const Integer& value) { return value.str(); }

std::size_t bit_length(const Integer& value) {
    if (value == 0) {
        return 0;
    }
    return static_cast<std::size_t>(boost::multiprecision::msb(abs(value))) + 1;
}

bool is_power_of_two(const Integer& value) {
    if (value <= 0) {
        return false;
    }
    return boost::multiprecision::lsb(value) == boost::multiprecision::msb(value);
}

}  // namespace kz1
