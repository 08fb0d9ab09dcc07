#pragma once

#include "twistkit/laurent.hpp"
#include "twistkit/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace twistkit
{

using Monomial = std::vector<std::int32_t>;

/// Degree reverse lexicographic order with the first variable largest.
/// Orders "greater first" so that map::begin() is the leading term.
struct GrevlexGreater
{
    bool operator()(const Monomial& a, const Monomial& b) const noexcept;
};

bool divides(const Monomial& a, const Monomial& b) noexcept;

/// Ordinary polynomial over GF2 or Q, used by Buchberger's algorithm.
class Polynomial
{
public:
    using Terms = std::map<Monomial, Rational, GrevlexGreater>;

    Polynomial() = default;
    Polynomial(std::size_t variables, Ring ring) : variables_(variables), ring_(ring) {}

    static Polynomial constant(std::size_t variables, Ring ring, const Rational& value);
    static Polynomial monomial(std::size_t variables, Ring ring, Monomial m, const Rational& coeff = 1);

    std::size_t variables() const noexcept { return variables_; }
    Ring ring() const noexcept { return ring_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const;

    const Monomial& leading_monomial() const { return terms_.begin()->first; }
    const Rational& leading_coeff() const { return terms_.begin()->second; }

    void add_term(const Monomial& m, const Rational& coeff);
    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    /// this * coeff * x^m
    Polynomial times_term(const Monomial& m, const Rational& coeff) const;
    Polynomial scaled(const Rational& factor) const;

    std::string to_string(const VariableList& names) const;

    friend bool operator==(const Polynomial& a, const Polynomial& b)
    {
        return a.variables_ == b.variables_ && a.ring_ == b.ring_ && a.terms_ == b.terms_;
    }

private:
    std::size_t variables_ = 0;
    Ring ring_ = Ring::Rational;
    Terms terms_;
};

struct GroebnerBasis
{
    /// Reduced, monic, sorted by leading monomial (largest first): the
    /// unique reduced basis of the ideal for grevlex.
    std::vector<Polynomial> basis;
    /// When tracked: basis[i] = sum_j cofactors[i][j] * generators[j].
    std::optional<std::vector<std::vector<Polynomial>>> cofactors;

    bool is_unit_ideal() const { return basis.size() == 1 && basis[0].is_constant() && !basis[0].is_zero(); }
};

/// Buchberger's algorithm with the coprime-leading-monomial criterion.
/// Requires a field (GF2 or Rational).
GroebnerBasis groebner_basis(const std::vector<Polynomial>& generators, bool track_cofactors = false);

/// Normal form of `p` with respect to a Groebner basis.
Polynomial normal_form(const Polynomial& p, const std::vector<Polynomial>& basis);

/// Monomials not divisible by any leading monomial; nullopt when infinitely
/// many (some variable has no pure-power leading monomial).
std::optional<std::vector<Monomial>> standard_monomials(const std::vector<Polynomial>& basis);

// --- Laurent ideals ----------------------------------------------------------

enum class MembershipMethod
{
    Auto,
    UnivariateGcd,
    Groebner,
};

struct MembershipResult
{
    bool contains_one = false;
    MembershipMethod method = MembershipMethod::Auto; // method actually used
    /// Univariate path: monic generator of the ideal with its monomial factor
    /// stripped (e.g. R^2 + R + 1).
    std::optional<LaurentPoly> generator;
    /// Groebner path: reduced basis in the auxiliary polynomial ring whose
    /// variables are `polynomial_variables` (last one is the inverter w).
    std::vector<Polynomial> groebner;
    VariableList polynomial_variables;
    /// When contains_one: sum_i cofactors[i] * gens[i] == 1 in the Laurent ring.
    std::optional<std::vector<LaurentPoly>> cofactors;
};

/// Decides 1 in (gens) inside the Laurent ring over a field. The
/// multivariate path adjoins w with w * (product of variables) - 1.
MembershipResult ideal_contains_one(const std::vector<LaurentPoly>& gens, Ring ring,
                                    MembershipMethod method = MembershipMethod::Auto);

/// Clears denominators: returns p * x^(-min exponents) as a polynomial in
/// the selected Laurent variables, plus one trailing slot for w.
Polynomial to_polynomial(const LaurentPoly& p, const std::vector<std::size_t>& variables);

} // namespace twistkit
