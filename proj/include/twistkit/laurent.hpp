#pragma once

#include "twistkit/kernels.hpp"
#include "twistkit/rational.hpp"

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace twistkit
{

using VariableList = std::vector<std::string>;

/// Multivariate Laurent polynomial with exact coefficients. Used both for the
/// group ring of H2(M, T) (multiplicative notation) and for its images.
/// Zero coefficients are never stored.
class LaurentPoly
{
public:
    LaurentPoly() = default;
    LaurentPoly(VariableList variables, Ring ring);

    static LaurentPoly constant(VariableList variables, Ring ring, const Rational& value);
    static LaurentPoly monomial(VariableList variables, Ring ring, Exponent exponent, const Rational& coeff = 1);
    static LaurentPoly variable(VariableList variables, Ring ring, std::string_view name);

    /// Parses sums of terms such as "R + R^-1*T^-1*S1 - 2/3*z1^2".
    static LaurentPoly parse(std::string_view text, VariableList variables, Ring ring);

    const VariableList& variables() const noexcept { return variables_; }
    Ring ring() const noexcept { return ring_; }
    const TermMap& terms() const noexcept { return terms_; }
    std::size_t variable_index(std::string_view name) const;

    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_monomial() const noexcept { return terms_.size() == 1; }
    /// A single term with a unit coefficient: exactly the units of the ring
    /// of Laurent polynomials over a domain.
    bool is_unit() const;
    bool is_constant() const;

    void add_term(const Exponent& exponent, const Rational& coeff);

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& other);
    LaurentPoly& operator-=(const LaurentPoly& other);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    LaurentPoly scaled(const Rational& factor) const;
    /// Integer powers; negative exponents need a unit.
    LaurentPoly pow(int exponent) const;
    /// Multiplies by the monomial with exponent `shift`.
    LaurentPoly shifted(const Exponent& shift) const;

    /// Ordinary partial derivative; only defined over Int and Rational.
    LaurentPoly partial_derivative(std::size_t variable) const;
    /// x_k * d/dx_k computed termwise as exponent * term, with the integer
    /// multiplier reduced into the ring (so it is well defined over GF2).
    LaurentPoly log_derivative(std::size_t variable) const;

    /// Same polynomial over another ring (reduce, or lift 0/1 from GF2).
    LaurentPoly with_ring(Ring ring) const;

    /// Componentwise minimum / maximum of the exponents (zero vector for 0).
    Exponent min_exponents() const;
    Exponent max_exponents() const;

    std::string to_string() const;

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);

private:
    VariableList variables_;
    Ring ring_ = Ring::Rational;
    TermMap terms_;

    void require_compatible(const LaurentPoly& other) const;
};

/// Ring homomorphism from the group ring on `source` generators. Each
/// generator goes to a unit monomial of the target, which makes the
/// homomorphism property automatic.
class RingHom
{
public:
    RingHom() = default;
    RingHom(VariableList source, std::map<std::string, LaurentPoly> images);

    /// Builds from textual images, e.g. {"R": "R", "S1": "1"}.
    static RingHom parse(const VariableList& source, const std::map<std::string, std::string>& images,
                         const VariableList& target, Ring target_ring);
    static RingHom identity(const VariableList& variables, Ring ring);

    const VariableList& source() const noexcept { return source_; }
    const VariableList& target() const noexcept { return target_; }
    Ring target_ring() const noexcept { return target_ring_; }
    const LaurentPoly& image(std::string_view generator) const;

    LaurentPoly apply(const LaurentPoly& p) const;
    bool is_identity() const;

private:
    VariableList source_;
    VariableList target_;
    Ring target_ring_ = Ring::Rational;
    std::vector<LaurentPoly> images_; // in source order
};

} // namespace twistkit
