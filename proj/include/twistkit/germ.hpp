#pragma once

#include "twistkit/linalg.hpp"
#include "twistkit/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace twistkit
{

/// Displacement-energy germ of the form constant + min_a <a, xi> over a set
/// of integer covectors. The formula says nothing at xi = 0.
struct Germ
{
    std::size_t dim = 0;
    Rational constant;
    std::vector<IntVector> covectors;
    std::string note;

    /// Nonempty, distinct covectors of length `dim`.
    void validate() const;
};

/// nullopt at the origin.
std::optional<Rational> germ_value(const Germ& g, const std::vector<Rational>& xi);

/// The germ g o A: same constant, covectors A^T a.
Germ transform(const Germ& g, const IntMatrix& a);

enum class Equivalence
{
    Equivalent,
    NotEquivalent,
    Indeterminate,
};

const char* equivalence_name(Equivalence e) noexcept;

struct EquivalenceResult
{
    Equivalence status = Equivalence::Indeterminate;
    /// Integral A with det +-1 and {A^T a : a in g1} == g2's covectors.
    std::optional<IntMatrix> witness;
    std::string reason;
};

/// Exact search: fixes a spanning subset of g1's covectors and tries every
/// ordered tuple of g2's covectors as its image. Indeterminate when either
/// covector set fails to span.
EquivalenceResult germ_equivalent(const Germ& g1, const Germ& g2);

} // namespace twistkit
