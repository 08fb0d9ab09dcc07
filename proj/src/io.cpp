#include "twistkit/io.hpp"

#include "twistkit/error.hpp"

#include <fstream>
#include <sstream>

namespace twistkit::io
{

namespace
{

[[noreturn]] void bad(const std::string& message)
{
    throw Error(ErrorKind::InvalidInput, message);
}

const json& require(const json& j, const char* key)
{
    if (!j.is_object())
        bad("expected a JSON object");
    auto it = j.find(key);
    if (it == j.end())
        bad(std::string("missing field '") + key + "'");
    return *it;
}

template <class T>
T as(const json& j, const char* what)
{
    try
    {
        return j.get<T>();
    }
    catch (const json::exception&)
    {
        bad(std::string("field '") + what + "' has the wrong type");
    }
}

Rational rational_of(const json& j, const char* what)
{
    if (j.is_number_integer())
        return Rational(j.get<std::int64_t>());
    if (j.is_string())
        return parse_rational(j.get<std::string>());
    bad(std::string("field '") + what + "' must be an integer or a \"p/q\" string");
}

json rational_json(const Rational& r)
{
    return to_string(r);
}

std::optional<IntegerBox> bounds_of(const json& j, std::size_t n)
{
    auto pairs = as<std::vector<std::vector<std::int64_t>>>(j, "bounds");
    if (pairs.size() != n)
        bad("bounds need one [lo, hi] pair per basis class");
    IntegerBox box{IntVector(n), IntVector(n)};
    for (std::size_t i = 0; i < n; ++i)
    {
        if (pairs[i].size() != 2)
            bad("each bound must be a [lo, hi] pair");
        box.lower[i] = pairs[i][0];
        box.upper[i] = pairs[i][1];
    }
    return box;
}

} // namespace

ProblemFile problem_from_json(const json& j)
{
    ProblemFile p;
    auto& t = p.table;
    t.basis.names = as<std::vector<std::string>>(require(j, "basis"), "basis");
    if (j.contains("generators"))
        t.basis.generators = as<std::vector<std::string>>(j["generators"], "generators");
    t.basis.boundary = as<IntMatrix>(require(j, "boundary"), "boundary");
    for (const auto& row : as<std::vector<json>>(require(j, "rows"), "rows"))
        t.rows.push_back({as<std::string>(require(row, "label"), "label"), as<IntVector>(require(row, "v"), "v")});
    t.maslov = as<IntVector>(require(j, "maslov"), "maslov");
    if (j.contains("target"))
        t.target_maslov = as<std::int64_t>(j["target"], "target");
    if (j.contains("bounds") && !j["bounds"].is_null())
        p.bounds = bounds_of(j["bounds"], t.basis.size());
    t.validate();
    return p;
}

json problem_to_json(const ProblemFile& p)
{
    const auto& t = p.table;
    json rows = json::array();
    for (const auto& r : t.rows)
        rows.push_back({{"label", r.label}, {"v", r.intersections}});
    json j = {{"basis", t.basis.names}, {"boundary", t.basis.boundary}, {"rows", rows},
              {"maslov", t.maslov},     {"target", t.target_maslov}};
    if (!t.basis.generators.empty())
        j["generators"] = t.basis.generators;
    if (p.bounds)
    {
        json b = json::array();
        for (std::size_t i = 0; i < p.bounds->dimension(); ++i)
            b.push_back({p.bounds->lower[i], p.bounds->upper[i]});
        j["bounds"] = b;
    }
    return j;
}

NamedHom hom_from_json(const json& j, const VariableList& source)
{
    NamedHom h;
    h.name = j.contains("name") ? as<std::string>(j["name"], "name") : "hom";
    auto target = as<VariableList>(require(j, "target"), "target");
    Ring ring = parse_ring(as<std::string>(require(j, "ring"), "ring"));
    auto images = as<std::map<std::string, std::string>>(require(j, "images"), "images");
    h.hom = RingHom::parse(source, images, target, ring);
    return h;
}

json hom_to_json(const NamedHom& h)
{
    json images = json::object();
    for (const auto& g : h.hom.source())
        images[g] = h.hom.image(g).to_string();
    return {{"name", h.name}, {"target", h.hom.target()}, {"ring", ring_name(h.hom.target_ring())}, {"images", images}};
}

PotentialFile potential_from_json(const json& j)
{
    HomologyBasis basis;
    basis.generators = as<VariableList>(require(j, "generators"), "generators");
    basis.names = j.contains("names") ? as<std::vector<std::string>>(j["names"], "names") : basis.generators;
    basis.boundary = as<IntMatrix>(require(j, "boundary"), "boundary");
    Ring ring = j.contains("ring") ? parse_ring(as<std::string>(j["ring"], "ring")) : Ring::GF2;
    basis.validate();

    LaurentPoly poly(basis.generators, ring);
    for (const auto& term : as<std::vector<json>>(require(j, "terms"), "terms"))
    {
        auto e = as<Exponent>(require(term, "exponent"), "exponent");
        if (e.size() != basis.size())
            throw Error(ErrorKind::DimensionMismatch, "term exponent length differs from generator count");
        Rational c = term.contains("coeff") ? rational_of(term["coeff"], "coeff") : Rational(1);
        poly.add_term(e, c);
    }

    PotentialFile p;
    p.potential = Potential::from_poly(basis, poly);
    if (j.contains("homs"))
    {
        const auto& homs = j["homs"];
        if (homs.contains("h0"))
            for (const auto& h : as<std::vector<json>>(homs["h0"], "h0"))
                p.h0_homs.push_back(hom_from_json(h, basis.generators));
        if (homs.contains("regularity"))
            for (const auto& h : as<std::vector<json>>(homs["regularity"], "regularity"))
                p.regularity_homs.push_back(hom_from_json(h, basis.generators));
    }
    return p;
}

json potential_to_json(const PotentialFile& p)
{
    const auto& u = p.potential;
    json terms = json::array();
    for (const auto& [e, c] : u.poly.terms())
        terms.push_back({{"exponent", e}, {"coeff", rational_json(c)}});
    json h0 = json::array(), reg = json::array();
    for (const auto& h : p.h0_homs)
        h0.push_back(hom_to_json(h));
    for (const auto& h : p.regularity_homs)
        reg.push_back(hom_to_json(h));
    return {{"generators", u.variables()},
            {"names", u.basis.names},
            {"ring", ring_name(u.ring)},
            {"boundary", u.basis.boundary},
            {"terms", terms},
            {"homs", {{"h0", h0}, {"regularity", reg}}}};
}

Germ germ_from_json(const json& j)
{
    Germ g;
    g.dim = as<std::size_t>(require(j, "dim"), "dim");
    g.constant = rational_of(require(j, "constant"), "constant");
    g.covectors = as<std::vector<IntVector>>(require(j, "covectors"), "covectors");
    if (j.contains("note") && !j["note"].is_null())
        g.note = as<std::string>(j["note"], "note");
    g.validate();
    return g;
}

json germ_to_json(const Germ& g)
{
    json j = {{"dim", g.dim}, {"constant", rational_json(g.constant)}, {"covectors", g.covectors}};
    if (!g.note.empty())
        j["note"] = g.note;
    return j;
}

json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        bad("cannot open '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    try
    {
        return json::parse(buffer.str());
    }
    catch (const json::parse_error& e)
    {
        bad("'" + path + "' is not valid JSON: " + e.what());
    }
}

} // namespace twistkit::io
