#include "twistkit/rational.hpp"

#include "twistkit/error.hpp"

#include <cctype>

namespace twistkit
{

const char* ring_name(Ring ring) noexcept
{
    switch (ring)
    {
    case Ring::GF2: return "GF2";
    case Ring::Int: return "Int";
    case Ring::Rational: return "Rational";
    }
    return "?";
}

Ring parse_ring(std::string_view tag)
{
    if (tag == "GF2" || tag == "Z2")
        return Ring::GF2;
    if (tag == "Int" || tag == "Z")
        return Ring::Int;
    if (tag == "Rational" || tag == "Q")
        return Ring::Rational;
    throw Error(ErrorKind::InvalidInput, "unknown coefficient ring '" + std::string(tag) + "'");
}

bool is_field(Ring ring) noexcept
{
    return ring != Ring::Int;
}

Rational normalize(const Rational& value, Ring ring)
{
    switch (ring)
    {
    case Ring::GF2:
    {
        if (denominator(value) != 1)
        {
            // 1/d lives in GF2 only for odd d, where it equals 1.
            if (denominator(value) % 2 == 0)
                throw Error(ErrorKind::InvalidInput, "coefficient " + to_string(value) + " has no image in GF2");
        }
        Integer n = numerator(value) % 2;
        return Rational(n == 0 ? 0 : 1);
    }
    case Ring::Int:
        if (denominator(value) != 1)
            throw Error(ErrorKind::InvalidInput, "coefficient " + to_string(value) + " is not an integer");
        return value;
    case Ring::Rational:
        return value;
    }
    return value;
}

bool is_unit(const Rational& value, Ring ring)
{
    if (value == 0)
        return false;
    if (ring == Ring::Int)
        return value == 1 || value == -1;
    return true;
}

Rational parse_rational(std::string_view text)
{
    auto trim = [](std::string_view s) {
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
            s.remove_prefix(1);
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
            s.remove_suffix(1);
        return s;
    };
    auto parse_int = [&](std::string_view s) {
        s = trim(s);
        std::size_t i = 0;
        if (i < s.size() && (s[i] == '-' || s[i] == '+'))
            ++i;
        if (i == s.size())
            throw Error(ErrorKind::InvalidInput, "malformed rational '" + std::string(text) + "'");
        for (std::size_t j = i; j < s.size(); ++j)
            if (!std::isdigit(static_cast<unsigned char>(s[j])))
                throw Error(ErrorKind::InvalidInput, "malformed rational '" + std::string(text) + "'");
        std::string digits(s.substr(s[0] == '+' ? 1 : 0));
        return Integer(digits);
    };
    auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return Rational(parse_int(text));
    Integer num = parse_int(text.substr(0, slash));
    Integer den = parse_int(text.substr(slash + 1));
    if (den == 0)
        throw Error(ErrorKind::InvalidInput, "zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
}

std::string to_string(const Rational& value)
{
    if (denominator(value) == 1)
        return numerator(value).str();
    return numerator(value).str() + "/" + denominator(value).str();
}

Integer floor_of(const Rational& value)
{
    Integer q = numerator(value) / denominator(value);
    if (numerator(value) < 0 && q * denominator(value) != numerator(value))
        q -= 1;
    return q;
}

Integer ceil_of(const Rational& value)
{
    return -floor_of(-value);
}

} // namespace twistkit
