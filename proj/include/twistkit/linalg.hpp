#pragma once

#include "twistkit/rational.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace twistkit
{

using IntVector = std::vector<std::int64_t>;
using IntMatrix = std::vector<IntVector>; // row-major
using RationalMatrix = std::vector<std::vector<Rational>>;

RationalMatrix to_rational(const IntMatrix& m);

/// Exact Gaussian elimination helpers for the small dense matrices that
/// appear in boundary maps and germ witnesses.
Rational determinant(RationalMatrix m);
std::size_t rank(RationalMatrix m);
std::optional<RationalMatrix> inverse(const RationalMatrix& m);

RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix transpose(const RationalMatrix& m);
IntMatrix transpose(const IntMatrix& m);
IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);
IntVector multiply(const IntMatrix& a, const IntVector& x);

/// Returns the integer matrix when every entry is integral.
std::optional<IntMatrix> to_integer(const RationalMatrix& m);

std::int64_t dot(const IntVector& a, const IntVector& b);

} // namespace twistkit
