#pragma once

#include "twistkit/disc_enumeration.hpp"
#include "twistkit/groebner.hpp"
#include "twistkit/laurent.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace twistkit
{

struct PotentialTerm
{
    DiscClass disc;
    Rational sign = 1; // always 1 over GF2
};

/// Signed sum of the group-ring monomials of Maslov-2 disc classes.
struct Potential
{
    Ring ring = Ring::GF2;
    HomologyBasis basis;
    LaurentPoly poly;
    std::vector<PotentialTerm> provenance;

    /// Over Int and Rational one sign per class is required; over GF2 signs
    /// are ignored.
    static Potential from_classes(const HomologyBasis& basis, const std::vector<DiscClass>& classes, Ring ring,
                                  const std::vector<Rational>& signs = {});
    /// Wraps a polynomial in the basis generators; provenance is read off
    /// the terms.
    static Potential from_poly(const HomologyBasis& basis, const LaurentPoly& poly);

    VariableList variables() const;
};

/// v_k = R_k dU/dR_k for each boundary-carrying generator, in basis order.
std::vector<LaurentPoly> toric_differential(const Potential& u);

/// Element of the exterior algebra on H^1(T) with Laurent coefficients.
/// Bit j of a component key stands for the dual coordinate e_j^* of H1(T).
class PearlElement
{
public:
    using Mask = std::uint32_t;

    PearlElement() = default;
    PearlElement(std::size_t rank, VariableList variables, Ring ring);

    static PearlElement basis_element(std::size_t rank, const VariableList& variables, Ring ring, Mask mask,
                                      const LaurentPoly* coeff = nullptr);

    std::size_t rank() const noexcept { return rank_; }
    const VariableList& variables() const noexcept { return variables_; }
    Ring ring() const noexcept { return ring_; }
    const std::map<Mask, LaurentPoly>& components() const noexcept { return components_; }
    LaurentPoly component(Mask mask) const;
    bool is_zero() const noexcept { return components_.empty(); }

    void add(Mask mask, const LaurentPoly& coeff);
    PearlElement& operator+=(const PearlElement& other);
    PearlElement times(const LaurentPoly& coeff) const;

    /// Interior product with the j-th coordinate of H1(T): removes e_j^*
    /// with sign (-1)^(number of earlier factors).
    PearlElement contract(std::size_t j) const;
    PearlElement apply(const RingHom& hom) const;

    std::string to_string(const std::vector<std::string>& labels) const;

    friend bool operator==(const PearlElement& a, const PearlElement& b)
    {
        return a.rank_ == b.rank_ && a.components_ == b.components_;
    }

private:
    std::size_t rank_ = 0;
    VariableList variables_;
    Ring ring_ = Ring::GF2;
    std::map<Mask, LaurentPoly> components_;
};

/// Coefficients w_j of d2 in the H1 coordinates of the boundary matrix:
/// d2 alpha = sum_j w_j contract_j(alpha), with w_j = sum_k B_jk v_k.
std::vector<LaurentPoly> d2_coefficients(const Potential& u);

PearlElement pearl_d2(const PearlElement& alpha, const Potential& u);

/// Labels for the dual coordinates: "<name>*" when the boundary map sends
/// the carrying classes to the standard basis in order, otherwise "e<j>*".
std::vector<std::string> dual_labels(const HomologyBasis& basis);

// --- regularity -----------------------------------------------------------------

struct RegularityReport
{
    bool regular = false;
    std::vector<LaurentPoly> sequence;
    /// Dimension of the Laurent quotient by the sequence when finite.
    std::optional<std::size_t> quotient_dimension;
    std::vector<Polynomial> groebner;
    VariableList polynomial_variables;
    std::string reason;
};

/// n elements of an n-variable Laurent ring over a field form a regular
/// sequence iff their quotient is finite dimensional. An identically zero
/// element is a zero divisor and fails immediately.
RegularityReport regular_sequence_check(const std::vector<LaurentPoly>& sequence);

/// Uses the critical ideal (z_k dU/dz_k) of an image potential.
RegularityReport regular_sequence_check(const LaurentPoly& u_img);

/// The homomorphism must send surface generators to nonzero constants and
/// boundary-carrying generators to distinct target variables, over a field;
/// otherwise NonGenericHom.
RegularityReport regular_sequence_check(const Potential& u, const RingHom& phi);

// --- certificates -----------------------------------------------------------------

enum class Verdict
{
    Certified,
    H0Only,
    RegularityOnly,
    H0Vanishes,
    Inconclusive,
};

const char* verdict_name(Verdict v) noexcept;
/// Human-readable verdict line, e.g. "non-displaceability certified".
const char* verdict_text(Verdict v) noexcept;
std::optional<Verdict> parse_verdict(std::string_view text);

struct NamedHom
{
    std::string name;
    RingHom hom;
};

struct H0Attempt
{
    std::string hom;
    std::vector<LaurentPoly> images; // phi(d2 e_j^*)
    MembershipResult membership;
    bool evidence = false; // proper image ideal
};

struct RegularityAttempt
{
    std::string hom;
    LaurentPoly image_potential;
    RegularityReport report;
};

struct CertificateReport
{
    Verdict verdict = Verdict::Inconclusive;
    std::vector<std::string> labels;
    std::vector<LaurentPoly> differentials; // d2 e_j^* in degree 0
    std::vector<H0Attempt> h0;
    std::vector<RegularityAttempt> regularity;
    std::vector<std::string> notes;
};

CertificateReport certify_nondisplaceable(const Potential& u, const std::vector<NamedHom>& h0_homs,
                                          const std::vector<NamedHom>& regularity_homs);

/// Brute-force search for a homomorphism into coefficients[t, t^-1] with
/// each generator sent to t^e, e in [-bound, bound], whose image of d2 is a
/// proper ideal. The first hit in a fixed enumeration order is returned.
std::optional<RingHom> find_h0_hom(const Potential& u, int bound = 2, const std::string& target = "t");

} // namespace twistkit
