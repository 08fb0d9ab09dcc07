#include "twistkit/pearl.hpp"

#include "twistkit/error.hpp"
#include "twistkit/kernels.hpp"

#include <algorithm>
#include <bit>
#include <set>

namespace twistkit
{

// --- Potential ---------------------------------------------------------------

VariableList Potential::variables() const
{
    VariableList out;
    for (std::size_t i = 0; i < basis.size(); ++i)
        out.push_back(basis.generator(i));
    return out;
}

Potential Potential::from_classes(const HomologyBasis& basis, const std::vector<DiscClass>& classes, Ring ring,
                                  const std::vector<Rational>& signs)
{
    basis.validate();
    if (ring != Ring::GF2 && signs.size() != classes.size())
        throw Error(ErrorKind::InvalidInput, std::string("coefficients over ") + ring_name(ring) +
                                                 " need one user-supplied sign per disc class");
    Potential u;
    u.ring = ring;
    u.basis = basis;
    u.poly = LaurentPoly(u.variables(), ring);
    for (std::size_t i = 0; i < classes.size(); ++i)
    {
        const auto& d = classes[i];
        if (d.coefficients.size() != basis.size())
            throw Error(ErrorKind::DimensionMismatch, "disc class length differs from basis size");
        Exponent e(d.coefficients.begin(), d.coefficients.end());
        Rational sign = ring == Ring::GF2 ? Rational(1) : normalize(signs[i], ring);
        if (sign == 0)
            throw Error(ErrorKind::InvalidInput, "disc class sign must be nonzero");
        u.poly.add_term(e, sign);
        DiscClass full{d.coefficients, basis.boundary_of(d.coefficients)};
        u.provenance.push_back({std::move(full), sign});
    }
    return u;
}

Potential Potential::from_poly(const HomologyBasis& basis, const LaurentPoly& poly)
{
    basis.validate();
    Potential u;
    u.ring = poly.ring();
    u.basis = basis;
    if (poly.variables() != u.variables())
        throw Error(ErrorKind::VariableMismatch, "potential variables must be the basis generators in order");
    u.poly = poly;
    for (const auto& [e, c] : poly.terms())
    {
        IntVector coeffs(e.begin(), e.end());
        u.provenance.push_back({DiscClass{coeffs, basis.boundary_of(coeffs)}, c});
    }
    return u;
}

std::vector<LaurentPoly> toric_differential(const Potential& u)
{
    std::vector<LaurentPoly> out;
    for (auto k : u.basis.boundary_carrying())
        out.push_back(u.poly.log_derivative(k));
    return out;
}

// --- PearlElement --------------------------------------------------------------

PearlElement::PearlElement(std::size_t rank, VariableList variables, Ring ring)
    : rank_(rank), variables_(std::move(variables)), ring_(ring)
{
    if (rank > 31)
        throw Error(ErrorKind::InvalidInput, "torus rank above 31 is not supported");
}

PearlElement PearlElement::basis_element(std::size_t rank, const VariableList& variables, Ring ring, Mask mask,
                                         const LaurentPoly* coeff)
{
    PearlElement p(rank, variables, ring);
    p.add(mask, coeff ? *coeff : LaurentPoly::constant(variables, ring, 1));
    return p;
}

LaurentPoly PearlElement::component(Mask mask) const
{
    auto it = components_.find(mask);
    return it == components_.end() ? LaurentPoly(variables_, ring_) : it->second;
}

void PearlElement::add(Mask mask, const LaurentPoly& coeff)
{
    if (rank_ < 32 && (mask >> rank_) != 0)
        throw Error(ErrorKind::DimensionMismatch, "exterior monomial uses a coordinate beyond the torus rank");
    if (coeff.variables() != variables_ || coeff.ring() != ring_)
        throw Error(ErrorKind::VariableMismatch, "pearl coefficient lives in a different ring");
    auto it = components_.find(mask);
    if (it == components_.end())
    {
        if (!coeff.is_zero())
            components_.emplace(mask, coeff);
        return;
    }
    it->second += coeff;
    if (it->second.is_zero())
        components_.erase(it);
}

PearlElement& PearlElement::operator+=(const PearlElement& other)
{
    if (other.rank_ != rank_)
        throw Error(ErrorKind::DimensionMismatch, "pearl elements of different torus rank");
    for (const auto& [m, c] : other.components_)
        add(m, c);
    return *this;
}

PearlElement PearlElement::times(const LaurentPoly& coeff) const
{
    PearlElement out(rank_, variables_, ring_);
    for (const auto& [m, c] : components_)
        out.add(m, c * coeff);
    return out;
}

PearlElement PearlElement::contract(std::size_t j) const
{
    if (j >= rank_)
        throw Error(ErrorKind::DimensionMismatch, "contraction index beyond the torus rank");
    const Mask bit = Mask{1} << j;
    PearlElement out(rank_, variables_, ring_);
    for (const auto& [m, c] : components_)
    {
        if (!(m & bit))
            continue;
        int before = std::popcount(m & (bit - 1));
        out.add(m ^ bit, before % 2 ? -c : c);
    }
    return out;
}

PearlElement PearlElement::apply(const RingHom& hom) const
{
    PearlElement out(rank_, hom.target(), hom.target_ring());
    for (const auto& [m, c] : components_)
        out.add(m, hom.apply(c));
    return out;
}

std::string PearlElement::to_string(const std::vector<std::string>& labels) const
{
    if (components_.empty())
        return "0";
    std::string out;
    for (const auto& [m, c] : components_)
    {
        if (!out.empty())
            out += " + ";
        if (m == 0)
        {
            out += c.to_string();
            continue;
        }
        out += "(" + c.to_string() + ")";
        for (std::size_t j = 0; j < rank_; ++j)
            if (m & (Mask{1} << j))
                out += (out.back() == ')' ? " " : "^") + labels.at(j);
    }
    return out;
}

// --- d2 -----------------------------------------------------------------------------

std::vector<LaurentPoly> d2_coefficients(const Potential& u)
{
    const std::size_t n = u.basis.torus_rank();
    std::vector<LaurentPoly> w(n, LaurentPoly(u.variables(), u.ring));
    for (const auto& [e, c] : u.poly.terms())
    {
        IntVector coeffs(e.begin(), e.end());
        IntVector boundary = u.basis.boundary_of(coeffs);
        for (std::size_t j = 0; j < n; ++j)
            if (boundary[j] != 0)
                w[j].add_term(e, c * boundary[j]);
    }
    return w;
}

PearlElement pearl_d2(const PearlElement& alpha, const Potential& u)
{
    if (alpha.rank() != u.basis.torus_rank())
        throw Error(ErrorKind::DimensionMismatch, "pearl element rank differs from the torus rank");
    if (alpha.variables() != u.variables() || alpha.ring() != u.ring)
        throw Error(ErrorKind::VariableMismatch, "pearl element and potential live over different rings");
    auto w = d2_coefficients(u);
    PearlElement out(alpha.rank(), alpha.variables(), alpha.ring());
    for (std::size_t j = 0; j < w.size(); ++j)
        if (!w[j].is_zero())
            out += alpha.contract(j).times(w[j]);
    return out;
}

std::vector<std::string> dual_labels(const HomologyBasis& basis)
{
    auto carrying = basis.boundary_carrying();
    bool standard = carrying.size() == basis.torus_rank();
    for (std::size_t i = 0; standard && i < carrying.size(); ++i)
        for (std::size_t j = 0; j < basis.torus_rank(); ++j)
            if (basis.boundary[j][carrying[i]] != (i == j ? 1 : 0))
                standard = false;
    std::vector<std::string> out;
    for (std::size_t j = 0; j < basis.torus_rank(); ++j)
        out.push_back(standard ? basis.names[carrying[j]] + "*" : "e" + std::to_string(j + 1) + "*");
    return out;
}

// --- regularity -------------------------------------------------------------------

RegularityReport regular_sequence_check(const std::vector<LaurentPoly>& sequence)
{
    RegularityReport report;
    report.sequence = sequence;
    if (sequence.empty())
    {
        report.regular = true;
        report.reason = "empty sequence";
        return report;
    }
    const auto& vars = sequence[0].variables();
    const Ring ring = sequence[0].ring();
    if (!is_field(ring))
        throw Error(ErrorKind::UnsupportedRing, "regularity check needs a field coefficient ring");
    if (sequence.size() != vars.size())
        throw Error(ErrorKind::DimensionMismatch, "regularity check needs one element per Laurent variable");
    for (std::size_t k = 0; k < sequence.size(); ++k)
    {
        if (sequence[k].variables() != vars || sequence[k].ring() != ring)
            throw Error(ErrorKind::VariableMismatch, "sequence elements live in different rings");
        if (sequence[k].is_zero())
        {
            report.reason = "element " + std::to_string(k + 1) + " is identically zero";
            return report;
        }
    }

    std::vector<std::size_t> all(vars.size());
    for (std::size_t i = 0; i < all.size(); ++i)
        all[i] = i;
    std::vector<Polynomial> polys;
    for (const auto& s : sequence)
        polys.push_back(to_polynomial(s, all));
    const std::size_t m = vars.size() + 1;
    Polynomial relation = Polynomial::monomial(m, ring, Monomial(m, 1));
    relation.add_term(Monomial(m, 0), -1);
    polys.push_back(relation);

    report.polynomial_variables = vars;
    report.polynomial_variables.push_back("w");
    report.groebner = groebner_basis(polys).basis;
    auto standard = standard_monomials(report.groebner);
    if (!standard)
    {
        report.reason = "quotient is infinite dimensional (positive-dimensional critical locus)";
        return report;
    }
    report.regular = true;
    report.quotient_dimension = standard->size();
    report.reason = standard->empty() ? "unit ideal: no critical points in the torus"
                                      : "finite-dimensional quotient: isolated critical points";
    return report;
}

RegularityReport regular_sequence_check(const LaurentPoly& u_img)
{
    std::vector<LaurentPoly> seq;
    for (std::size_t k = 0; k < u_img.variables().size(); ++k)
        seq.push_back(u_img.log_derivative(k));
    return regular_sequence_check(seq);
}

namespace
{

LaurentPoly image_potential(const Potential& u, const RingHom& phi)
{
    if (phi.source() != u.variables())
        throw Error(ErrorKind::VariableMismatch, "homomorphism source differs from the potential's generators");
    if (!is_field(phi.target_ring()))
        throw Error(ErrorKind::NonGenericHom, "regularity homomorphism must land in a field coefficient ring");
    const auto carrying = u.basis.boundary_carrying();
    if (phi.target().size() != carrying.size())
        throw Error(ErrorKind::NonGenericHom, "regularity homomorphism needs one target variable per boundary class");
    std::set<std::size_t> used;
    for (std::size_t i = 0; i < u.basis.size(); ++i)
    {
        const auto& img = phi.image(u.basis.generator(i));
        const auto& [e, c] = *img.terms().begin();
        if (u.basis.is_surface(i))
        {
            if (!img.is_constant())
                throw Error(ErrorKind::NonGenericHom, "surface generator " + u.basis.generator(i) +
                                                          " must map to a nonzero constant");
            continue;
        }
        std::size_t nonzero = 0, where = 0;
        for (std::size_t j = 0; j < e.size(); ++j)
            if (e[j] != 0)
            {
                ++nonzero;
                where = j;
            }
        if (nonzero != 1 || e[where] != 1 || c != 1 || !used.insert(where).second)
            throw Error(ErrorKind::NonGenericHom, "generator " + u.basis.generator(i) +
                                                      " must map to its own target variable");
    }
    return phi.apply(u.poly.with_ring(phi.target_ring()));
}

} // namespace

RegularityReport regular_sequence_check(const Potential& u, const RingHom& phi)
{
    return regular_sequence_check(image_potential(u, phi));
}

// --- certificates --------------------------------------------------------------------

const char* verdict_name(Verdict v) noexcept
{
    switch (v)
    {
    case Verdict::Certified: return "certified";
    case Verdict::H0Only: return "h0-only";
    case Verdict::RegularityOnly: return "regularity-only";
    case Verdict::H0Vanishes: return "h0-vanishes";
    case Verdict::Inconclusive: return "inconclusive";
    }
    return "?";
}

const char* verdict_text(Verdict v) noexcept
{
    switch (v)
    {
    case Verdict::Certified: return "non-displaceability certified";
    case Verdict::H0Only: return "HP0 nonzero, regularity not established";
    case Verdict::RegularityOnly: return "regularity established, HP0 not certified";
    case Verdict::H0Vanishes: return "HP0 vanishes over this coefficient ring";
    case Verdict::Inconclusive: return "inconclusive";
    }
    return "?";
}

std::optional<Verdict> parse_verdict(std::string_view text)
{
    for (auto v : {Verdict::Certified, Verdict::H0Only, Verdict::RegularityOnly, Verdict::H0Vanishes,
                   Verdict::Inconclusive})
        if (text == verdict_name(v))
            return v;
    return std::nullopt;
}

CertificateReport certify_nondisplaceable(const Potential& u, const std::vector<NamedHom>& h0_homs,
                                          const std::vector<NamedHom>& regularity_homs)
{
    if (h0_homs.empty() || regularity_homs.empty())
        throw Error(ErrorKind::InvalidInput, "certification needs at least one homomorphism for each sub-check");

    CertificateReport report;
    report.labels = dual_labels(u.basis);
    report.differentials = d2_coefficients(u);

    bool h0 = false, vanishes = false, regular = false;
    for (const auto& [name, hom] : h0_homs)
    {
        if (hom.source() != u.variables())
            throw Error(ErrorKind::VariableMismatch, "homomorphism '" + name + "' has the wrong source generators");
        H0Attempt a;
        a.hom = name;
        for (const auto& w : report.differentials)
            a.images.push_back(hom.apply(w));
        a.membership = ideal_contains_one(a.images, hom.target_ring());
        a.evidence = !a.membership.contains_one;
        if (a.evidence)
            h0 = true;
        else if (hom.is_identity() && hom.target_ring() == u.ring)
            vanishes = true;
        else
            report.notes.push_back("inconclusive: '" + name + "' sends the image of d2 onto the unit ideal");
        report.h0.push_back(std::move(a));
    }

    for (const auto& [name, hom] : regularity_homs)
    {
        RegularityAttempt a;
        a.hom = name;
        a.image_potential = image_potential(u, hom);
        a.report = regular_sequence_check(a.image_potential);
        if (a.report.regular)
            regular = true;
        else
            report.notes.push_back("inconclusive: sequence is not regular through '" + name + "'");
        report.regularity.push_back(std::move(a));
    }
    if (u.ring == Ring::GF2)
        report.notes.push_back("regularity uses the GF2 potential lifted to Rational with every sign +1");
    report.notes.push_back("regularity criterion: finite-dimensional quotient of the Laurent ring "
                           "(isolated critical points in the complex torus)");

    if (vanishes)
        report.verdict = Verdict::H0Vanishes;
    else if (h0 && regular)
        report.verdict = Verdict::Certified;
    else if (h0)
        report.verdict = Verdict::H0Only;
    else if (regular)
        report.verdict = Verdict::RegularityOnly;
    else
        report.verdict = Verdict::Inconclusive;
    return report;
}

std::optional<RingHom> find_h0_hom(const Potential& u, int bound, const std::string& target)
{
    if (!is_field(u.ring))
        throw Error(ErrorKind::UnsupportedRing, "homomorphism search needs a field coefficient ring");
    if (bound < 0)
        throw Error(ErrorKind::InvalidInput, "exponent bound must be nonnegative");
    const VariableList source = u.variables();
    const VariableList tvars{target};
    const std::size_t radix = static_cast<std::size_t>(2 * bound + 1);
    std::size_t total = 1;
    for (std::size_t i = 0; i < source.size(); ++i)
    {
        if (total > 10'000'000 / radix)
            throw Error(ErrorKind::InvalidInput, "homomorphism search space is too large");
        total *= radix;
    }
    // digit order 0, 1, -1, 2, -2, ...
    auto exponent_of = [](std::size_t digit) {
        auto k = static_cast<std::int32_t>((digit + 1) / 2);
        return digit % 2 ? k : -k;
    };
    auto build = [&](std::size_t index) {
        std::map<std::string, LaurentPoly> images;
        for (const auto& g : source)
        {
            images.emplace(g, LaurentPoly::monomial(tvars, u.ring, Exponent{exponent_of(index % radix)}));
            index /= radix;
        }
        return RingHom(source, std::move(images));
    };
    const auto w = d2_coefficients(u);
    auto hit = first_match(total, [&](std::size_t index) {
        RingHom hom = build(index);
        std::vector<LaurentPoly> images;
        for (const auto& x : w)
            images.push_back(hom.apply(x));
        return !ideal_contains_one(images, u.ring).contains_one;
    });
    if (!hit)
        return std::nullopt;
    return build(*hit);
}

} // namespace twistkit
