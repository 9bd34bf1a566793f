#include "rmclass/bigint.hpp"

#include <algorithm>

#include "rmclass/errors.hpp"

namespace rmclass {

BigInt parse_decimal(const std::string& text)
{
    std::size_t start = (!text.empty() && (text[0] == '-' || text[0] == '+')) ? 1 : 0;
    if (start == text.size() ||
        !std::all_of(text.begin() + static_cast<std::ptrdiff_t>(start), text.end(),
                     [](char c) { return c >= '0' && c <= '9'; }))
        throw ParseError("not a decimal integer: '" + text + "'");
    return BigInt(text);
}

}  // namespace rmclass
