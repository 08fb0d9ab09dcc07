#include "twistkit/presets.hpp"

namespace twistkit::presets
{

ConstraintTable theta_s2xs2_table()
{
    ConstraintTable t;
    t.basis.names = {"D_Gamma", "D_tau", "S1", "S2"};
    t.basis.generators = {"R", "T", "S1", "S2"};
    t.basis.boundary = {{1, 0, 0, 0}, {0, 1, 0, 0}};
    t.rows = {
        {"S2x0", {0, -1, 0, 1}},
        {"S2xinf", {0, 0, 0, 1}},
        {"0xS2", {0, 1, 1, 0}},
        {"infxS2", {0, 0, 1, 0}},
        {"z1z2=w2", {1, 0, 1, 1}},
    };
    t.maslov = {2, 0, 4, 4};
    t.target_maslov = 2;
    return t;
}

Potential theta_s2xs2_potential()
{
    ConstraintTable t = theta_s2xs2_table();
    return Potential::from_classes(t.basis, enumerate_candidate_classes(t), Ring::GF2);
}

namespace
{

VariableList theta_generators()
{
    return {"R", "T", "S1", "S2"};
}

} // namespace

NamedHom theta_phi()
{
    return {"phi", RingHom::parse(theta_generators(), {{"R", "R"}, {"T", "R"}, {"S1", "1"}, {"S2", "R"}}, {"R"},
                                  Ring::GF2)};
}

NamedHom theta_collapse()
{
    return {"maslov-collapse",
            RingHom::parse(theta_generators(), {{"R", "t"}, {"T", "1"}, {"S1", "t^2"}, {"S2", "t^2"}}, {"t"},
                           Ring::GF2)};
}

NamedHom theta_regularity()
{
    return {"torus", RingHom::parse(theta_generators(), {{"R", "z1"}, {"T", "z2"}, {"S1", "1"}, {"S2", "1"}},
                                    {"z1", "z2"}, Ring::Rational)};
}

Germ clifford_2()
{
    return {2, 1, {{1, 0}, {-1, 0}, {0, 1}, {0, -1}}, "1 - max(|x|, |y|)"};
}

Germ theta()
{
    return {2, 1, {{1, 0}, {-1, 1}, {-1, -1}}, "valid away from a line through the origin"};
}

Germ theta_s0(const Rational& s)
{
    return {2, 1 + s, {{1, -1}}, "single covector; formula valid for t != 0"};
}

std::vector<std::string> table_names()
{
    return {"theta_s2xs2"};
}

std::vector<std::string> germ_names()
{
    return {"clifford_2", "theta", "theta_s0"};
}

std::optional<Germ> germ(const std::string& name, const Rational& s)
{
    if (name == "clifford_2")
        return clifford_2();
    if (name == "theta")
        return theta();
    if (name == "theta_s0")
        return theta_s0(s);
    return std::nullopt;
}

} // namespace twistkit::presets
