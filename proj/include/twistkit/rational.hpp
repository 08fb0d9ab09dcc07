#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace twistkit
{

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Coefficient ring of the group-ring algebra. GF2 is the default for
/// pearl computations since it needs no orientation signs.
enum class Ring
{
    GF2,
    Int,
    Rational,
};

const char* ring_name(Ring ring) noexcept;
Ring parse_ring(std::string_view tag);

bool is_field(Ring ring) noexcept;

/// Reduces a value into the ring: mod 2 for GF2, rejects fractions for Int.
Rational normalize(const Rational& value, Ring ring);

/// Whether `value` is invertible in `ring` (nonzero for fields, +-1 for Int).
bool is_unit(const Rational& value, Ring ring);

Rational parse_rational(std::string_view text);
std::string to_string(const Rational& value);

Integer floor_of(const Rational& value);
Integer ceil_of(const Rational& value);

} // namespace twistkit
