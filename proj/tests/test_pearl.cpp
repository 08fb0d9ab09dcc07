#include "oracles.hpp"
#include "twistkit/error.hpp"
#include "twistkit/pearl.hpp"
#include "twistkit/presets.hpp"

#include <doctest.h>

#include <bit>
#include <random>

using namespace twistkit;

namespace
{

const VariableList theta_vars{"R", "T", "S1", "S2"};

LaurentPoly P(const std::string& s, const VariableList& v = theta_vars, Ring r = Ring::GF2)
{
    return LaurentPoly::parse(s, v, r);
}

/// Random potential: `rank` boundary classes R1.. with a random unimodular
/// boundary, plus `surfaces` sphere classes.
Potential random_potential(std::mt19937_64& rng, Ring ring, std::size_t rank, std::size_t surfaces, int terms)
{
    HomologyBasis basis;
    for (std::size_t i = 0; i < rank; ++i)
        basis.names.push_back("R" + std::to_string(i + 1));
    for (std::size_t i = 0; i < surfaces; ++i)
        basis.names.push_back("S" + std::to_string(i + 1));
    IntMatrix b = oracle::random_unimodular(rng, rank);
    basis.boundary.assign(rank, IntVector(rank + surfaces, 0));
    for (std::size_t i = 0; i < rank; ++i)
        for (std::size_t j = 0; j < rank; ++j)
            basis.boundary[i][j] = b[i][j];
    auto poly = oracle::random_laurent(rng, basis.names, ring, terms);
    return Potential::from_poly(basis, poly);
}

PearlElement full_element(std::mt19937_64& rng, const Potential& u)
{
    const std::size_t n = u.basis.torus_rank();
    PearlElement a(n, u.variables(), u.ring);
    for (PearlElement::Mask m = 0; m < (PearlElement::Mask{1} << n); ++m)
        a.add(m, oracle::random_laurent(rng, u.variables(), u.ring, 2));
    return a;
}

} // namespace

TEST_CASE("toric differential of the theta potential")
{
    auto u = presets::theta_s2xs2_potential();
    CHECK(u.poly == P("R + R^-1*T^-1*S1 + R^-1*S1 + R^-1*S2 + R^-1*T*S2"));
    auto v = toric_differential(u);
    REQUIRE(v.size() == 2);
    CHECK(v[0] == P("R + R^-1*(T^-1*S1 + S1 + S2 + T*S2)"));
    CHECK(v[1] == P("R^-1*(T^-1*S1 + T*S2)"));
    CHECK(u.provenance.size() == 5);
}

TEST_CASE("toric differential in characteristic two")
{
    HomologyBasis basis{{"R", "T"}, {}, {{1, 0}, {0, 1}}};
    auto u = Potential::from_poly(basis, P("R^2*T", {"R", "T"}));
    auto v = toric_differential(u);
    CHECK(v[0].is_zero());
    CHECK(v[1] == P("R^2*T", {"R", "T"}));
}

TEST_CASE("d2 of the dual generators")
{
    auto u = presets::theta_s2xs2_potential();
    CHECK(dual_labels(u.basis) == std::vector<std::string>{"D_Gamma*", "D_tau*"});
    auto gamma = PearlElement::basis_element(2, u.variables(), u.ring, 0b01);
    auto tau = PearlElement::basis_element(2, u.variables(), u.ring, 0b10);
    CHECK(pearl_d2(gamma, u).component(0) == P("R + R^-1*(T^-1*S1 + S1 + S2 + T*S2)"));
    CHECK(pearl_d2(tau, u).component(0) == P("R^-1*(T^-1*S1 + T*S2)"));
    auto unit = PearlElement::basis_element(2, u.variables(), u.ring, 0, nullptr);
    CHECK(pearl_d2(unit.times(P("R + S1")), u).is_zero());
    auto top = PearlElement::basis_element(2, u.variables(), u.ring, 0b11);
    CHECK(pearl_d2(pearl_d2(top, u), u).is_zero());
    CHECK(pearl_d2(top, u).components().size() == 2);
}

TEST_CASE("d2 squares to zero on random potentials")
{
    std::mt19937_64 rng(21);
    for (Ring ring : {Ring::GF2, Ring::Rational})
        for (int i = 0; i < 100; ++i)
        {
            std::size_t n = 1 + rng() % 3;
            auto u = random_potential(rng, ring, n, rng() % 2, 1 + static_cast<int>(rng() % 6));
            auto a = full_element(rng, u);
            CHECK(pearl_d2(pearl_d2(a, u), u).is_zero());
            // degree drops by exactly one
            for (PearlElement::Mask m = 0; m < (PearlElement::Mask{1} << n); ++m)
            {
                auto e = PearlElement::basis_element(n, u.variables(), ring, m);
                const auto d = pearl_d2(e, u);
                for (const auto& [mask, c] : d.components())
                    CHECK(std::popcount(mask) + 1 == std::popcount(m));
            }
        }
}

TEST_CASE("d2 coefficients are the toric differential pushed through the boundary")
{
    std::mt19937_64 rng(22);
    for (int i = 0; i < 50; ++i)
    {
        std::size_t n = 1 + rng() % 3;
        auto u = random_potential(rng, Ring::Rational, n, 1, 5);
        auto v = toric_differential(u);
        auto w = d2_coefficients(u);
        for (std::size_t j = 0; j < n; ++j)
        {
            LaurentPoly expect(u.variables(), u.ring);
            for (std::size_t k = 0; k < n; ++k)
                expect += v[k].scaled(u.basis.boundary[j][k]);
            CHECK(w[j] == expect);
        }
    }
    // with the identity boundary this is the Koszul differential
    auto u = presets::theta_s2xs2_potential();
    CHECK(d2_coefficients(u) == toric_differential(u));
}

TEST_CASE("naturality under homomorphisms")
{
    std::mt19937_64 rng(23);
    for (int i = 0; i < 50; ++i)
    {
        auto u = random_potential(rng, Ring::GF2, 2, 1, 5);
        VariableList target{"a", "b"};
        std::map<std::string, LaurentPoly> images;
        std::uniform_int_distribution<int> ex(-2, 2);
        for (const auto& g : u.variables())
            images.emplace(g, LaurentPoly::monomial(target, Ring::GF2, {ex(rng), ex(rng)}));
        RingHom phi(u.variables(), images);
        auto alpha = full_element(rng, u);
        auto lhs = pearl_d2(alpha, u).apply(phi);
        auto w = d2_coefficients(u);
        auto mapped = alpha.apply(phi);
        PearlElement rhs(2, target, Ring::GF2);
        for (std::size_t j = 0; j < 2; ++j)
            rhs += mapped.contract(j).times(phi.apply(w[j]));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("toric differential: additivity, Leibniz and parity")
{
    std::mt19937_64 rng(24);
    HomologyBasis basis{{"R1", "R2", "S"}, {}, {{1, 0, 0}, {0, 1, 0}}};
    for (int i = 0; i < 100; ++i)
    {
        auto a = oracle::random_laurent(rng, basis.names, Ring::Rational, 4);
        auto b = oracle::random_laurent(rng, basis.names, Ring::Rational, 4);
        auto m = oracle::random_laurent(rng, basis.names, Ring::Rational, 1);
        auto va = toric_differential(Potential::from_poly(basis, a));
        auto vb = toric_differential(Potential::from_poly(basis, b));
        auto vsum = toric_differential(Potential::from_poly(basis, a + b));
        auto vm = toric_differential(Potential::from_poly(basis, m));
        auto vam = toric_differential(Potential::from_poly(basis, a * m));
        for (std::size_t k = 0; k < 2; ++k)
        {
            CHECK(vsum[k] == va[k] + vb[k]);
            CHECK(vam[k] == va[k] * m + a * vm[k]);
        }

        auto g = oracle::random_laurent(rng, basis.names, Ring::GF2, 6, 3);
        auto vg = toric_differential(Potential::from_poly(basis, g));
        for (std::size_t k = 0; k < 2; ++k)
        {
            LaurentPoly odd(basis.names, Ring::GF2);
            for (const auto& [e, c] : g.terms())
                if (e[k] % 2 != 0)
                    odd.add_term(e, c);
            CHECK(vg[k] == odd);
        }
    }
}

TEST_CASE("potentials need signs outside GF2")
{
    auto t = presets::theta_s2xs2_table();
    auto classes = enumerate_candidate_classes(t);
    CHECK_THROWS_AS(Potential::from_classes(t.basis, classes, Ring::Int), Error);
    auto u = Potential::from_classes(t.basis, classes, Ring::Int, {1, -1, 1, -1, 1});
    CHECK(u.poly.terms().size() == 5);
}

TEST_CASE("regularity of the theta critical system")
{
    auto u = presets::theta_s2xs2_potential();
    auto r = regular_sequence_check(u, presets::theta_regularity().hom);
    CHECK(r.regular);
    REQUIRE(r.quotient_dimension);
    CHECK(*r.quotient_dimension == 2);

    // Fixture: the critical points in the torus solved by hand are
    // (z1, z2) = (2, 1) and (-2, 1); z2 = -1 forces z1^2 = 0.
    for (auto [z1, z2] : {std::pair<Rational, Rational>{2, 1}, {-2, 1}})
        for (const auto& s : r.sequence)
        {
            Rational value = 0;
            for (const auto& [e, c] : s.terms())
            {
                Rational term = c;
                for (int k = 0; k < std::abs(e[0]); ++k)
                    term = e[0] > 0 ? Rational(term * z1) : Rational(term / z1);
                for (int k = 0; k < std::abs(e[1]); ++k)
                    term = e[1] > 0 ? Rational(term * z2) : Rational(term / z2);
                value += term;
            }
            CHECK(value == 0);
        }
}

TEST_CASE("regularity small cases")
{
    VariableList z{"z1", "z2"};
    auto sum = regular_sequence_check(P("z1 + z2", z, Ring::Rational));
    CHECK(sum.regular);
    CHECK(sum.quotient_dimension == std::optional<std::size_t>(0));
    auto line = regular_sequence_check(P("z1", z, Ring::Rational));
    CHECK_FALSE(line.regular);
    // a positive-dimensional critical locus that is not identically zero
    auto curve = regular_sequence_check(P("z1*z2 + z1^-1*z2^-1", z, Ring::Rational));
    CHECK_FALSE(curve.regular);
    CHECK_FALSE(curve.quotient_dimension);
}

TEST_CASE("regularity homomorphisms must be generic")
{
    auto u = presets::theta_s2xs2_potential();
    auto bad = RingHom::parse(theta_vars, {{"R", "z1"}, {"T", "z1"}, {"S1", "1"}, {"S2", "1"}}, {"z1", "z2"},
                              Ring::Rational);
    try
    {
        regular_sequence_check(u, bad);
        FAIL("expected NonGenericHom");
    }
    catch (const Error& e)
    {
        CHECK(e.kind() == ErrorKind::NonGenericHom);
    }
    auto surface = RingHom::parse(theta_vars, {{"R", "z1"}, {"T", "z2"}, {"S1", "z1"}, {"S2", "1"}}, {"z1", "z2"},
                                  Ring::Rational);
    CHECK_THROWS_AS(regular_sequence_check(u, surface), Error);
}

TEST_CASE("certificate for the theta torus")
{
    auto u = presets::theta_s2xs2_potential();
    auto r = certify_nondisplaceable(u, {presets::theta_phi()}, {presets::theta_regularity()});
    CHECK(r.verdict == Verdict::Certified);
    CHECK(std::string(verdict_text(r.verdict)) == "non-displaceability certified");
    REQUIRE(r.h0.size() == 1);
    VariableList rv{"R"};
    CHECK(r.h0[0].images[0] == P("R^-2*(1 + R + R^2)", rv));
    CHECK(r.h0[0].images[1] == P("R^-2*(R + 1)*(R^2 + R + 1)", rv));
    CHECK(*r.h0[0].membership.generator == P("R^2 + R + 1", rv));
    CHECK(r.regularity[0].report.regular);
}

TEST_CASE("collapsing the coefficients kills the H0 evidence")
{
    auto u = presets::theta_s2xs2_potential();
    auto r = certify_nondisplaceable(u, {presets::theta_collapse()}, {presets::theta_regularity()});
    CHECK(r.h0[0].membership.contains_one);
    CHECK(r.verdict == Verdict::RegularityOnly);
    CHECK_THROWS_AS(certify_nondisplaceable(u, {}, {presets::theta_regularity()}), Error);
}

TEST_CASE("a single unit disc: HP0 vanishes")
{
    HomologyBasis basis{{"R"}, {}, {{1}}};
    auto u = Potential::from_poly(basis, P("R", {"R"}));
    auto id = RingHom::identity({"R"}, Ring::GF2);
    auto reg = RingHom::parse({"R"}, {{"R", "z"}}, {"z"}, Ring::Rational);
    auto r = certify_nondisplaceable(u, {{"identity", id}}, {{"z", reg}});
    CHECK(r.verdict == Verdict::H0Vanishes);
}

TEST_CASE("homomorphism search finds a proper image")
{
    auto u = presets::theta_s2xs2_potential();
    auto h = find_h0_hom(u);
    REQUIRE(h);
    auto r = certify_nondisplaceable(u, {{"search", *h}}, {presets::theta_regularity()});
    CHECK(r.verdict == Verdict::Certified);
    HomologyBasis basis{{"R"}, {}, {{1}}};
    CHECK_FALSE(find_h0_hom(Potential::from_poly(basis, P("R", {"R"}))));
}
