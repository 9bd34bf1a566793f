#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace rmclass {

// Exact integer used for group orders, cell sizes and class counts.
using BigInt = boost::multiprecision::cpp_int;

inline BigInt pow2(std::size_t exponent)
{
    BigInt v = 1;
    v <<= exponent;
    return v;
}

inline std::string to_decimal(const BigInt& v)
{
    return v.str();
}

// Throws ParseError on anything but an optional sign followed by digits.
BigInt parse_decimal(const std::string& text);

}  // namespace rmclass
