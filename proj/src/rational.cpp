#include "mdrg/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace mdrg {

namespace {

BigInt parse_integer(std::string_view text, std::string_view whole)
{
    std::size_t pos = 0;
    bool negative = false;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
        negative = text[pos] == '-';
        ++pos;
    }
    if (pos == text.size())
        throw std::invalid_argument("malformed rational '" + std::string(whole) + "'");
    BigInt value = 0;
    for (; pos < text.size(); ++pos) {
        const char c = text[pos];
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw std::invalid_argument("malformed rational '" + std::string(whole) + "'");
        value = value * 10 + (c - '0');
    }
    return negative ? BigInt(-value) : value;
}

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

} // namespace

Rational parse_rational(std::string_view text)
{
    const auto whole = trim(text);
    const auto slash = whole.find('/');
    if (slash == std::string_view::npos)
        return Rational(parse_integer(whole, whole));
    const BigInt num = parse_integer(trim(whole.substr(0, slash)), whole);
    const BigInt den = parse_integer(trim(whole.substr(slash + 1)), whole);
    if (den == 0)
        throw std::invalid_argument("zero denominator in '" + std::string(whole) + "'");
    return Rational(num, den);
}

std::string format_rational(const Rational& value)
{
    return boost::multiprecision::numerator(value).str() + "/" +
           boost::multiprecision::denominator(value).str();
}

bool is_integer(const Rational& value)
{
    return boost::multiprecision::denominator(value) == 1;
}

std::string format_rational_short(const Rational& value)
{
    return is_integer(value) ? boost::multiprecision::numerator(value).str() : format_rational(value);
}

} // namespace mdrg
