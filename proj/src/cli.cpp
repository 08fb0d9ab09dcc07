#include "twistkit/cli.hpp"

#include "twistkit/error.hpp"
#include "twistkit/forest.hpp"
#include "twistkit/io.hpp"
#include "twistkit/presets.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

namespace twistkit::cli
{

namespace
{

using io::json;

struct Config
{
    std::string format = "text";
    std::string out_path;
    std::int64_t seed = 20240229;
    std::string expect;
    bool color = false;

    // command arguments
    int leaves = 0;
    int cap = default_enumeration_cap;
    std::vector<std::string> positional;
    std::string preset;
    std::string in_path;
    std::string bounds;
    std::string param = "1";
    std::string at;
    bool search = false;
};

struct Outcome
{
    json report;
    std::string text;
    std::string observed; // compared against --expect
};

std::string paint(const Config& cfg, const std::string& s, bool good)
{
    if (!cfg.color)
        return s;
    return (good ? "\x1b[32m" : "\x1b[31m") + s + "\x1b[0m";
}

json header(const Config& cfg, const std::string& command)
{
    return {{"schema", "1"}, {"command", command}, {"seed", cfg.seed}};
}

std::vector<std::string> split(const std::string& s, char sep)
{
    std::vector<std::string> out;
    std::string cur;
    for (char c : s)
    {
        if (c == sep)
        {
            out.push_back(cur);
            cur.clear();
        }
        else if (c != ' ')
            cur += c;
    }
    out.push_back(cur);
    return out;
}

std::int64_t parse_int(const std::string& s, const char* what)
{
    std::int64_t v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size())
        throw Error(ErrorKind::InvalidInput, std::string("invalid integer '") + s + "' in " + what);
    return v;
}

std::string monomial_text(const VariableList& generators, const IntVector& coefficients)
{
    Exponent e(coefficients.begin(), coefficients.end());
    return LaurentPoly::monomial(generators, Ring::GF2, e).to_string();
}

std::string join(const std::vector<std::string>& parts, const std::string& sep)
{
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i)
        out += (i ? sep : "") + parts[i];
    return out;
}

std::string vector_text(const IntVector& v)
{
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i)
        out += (i ? "," : "") + std::to_string(v[i]);
    return out + ")";
}

// --- trees / iso -------------------------------------------------------------------

Outcome cmd_trees(const Config& cfg)
{
    auto trees = enumerate_ample_trees(cfg.leaves, cfg.cap);
    Outcome o;
    o.report = header(cfg, "trees");
    o.report["leaves"] = cfg.leaves;
    o.report["count"] = trees.size();
    json list = json::array();
    std::ostringstream text;
    text << "ample trees with " << cfg.leaves << " leaves: " << trees.size() << "\n";
    for (const auto& t : trees)
    {
        list.push_back({{"canonical", canonical_form(t)}, {"tree", print_tree(t)}});
        text << "  " << print_tree(t) << "\n";
    }
    o.report["trees"] = list;
    o.text = text.str();
    o.observed = std::to_string(trees.size());
    return o;
}

Outcome cmd_iso(const Config& cfg)
{
    if (cfg.positional.size() != 2)
        throw Error(ErrorKind::InvalidInput, "iso needs exactly two forests");
    RootedForest a = parse_forest(cfg.positional[0]);
    RootedForest b = parse_forest(cfg.positional[1]);
    bool iso = is_isomorphic(a, b);
    Outcome o;
    o.report = header(cfg, "iso");
    o.report["isomorphic"] = iso;
    o.report["forests"] = {{{"input", cfg.positional[0]}, {"forest", print_forest(a)}, {"canonical", canonical_form(a)}},
                           {{"input", cfg.positional[1]}, {"forest", print_forest(b)}, {"canonical", canonical_form(b)}}};
    o.text = paint(cfg, std::string("isomorphic: ") + (iso ? "true" : "false"), iso) + "\n" +
             "  " + canonical_form(a) + "\n  " + canonical_form(b) + "\n";
    o.observed = iso ? "true" : "false";
    return o;
}

// --- classes ----------------------------------------------------------------------

io::ProblemFile load_problem(const Config& cfg)
{
    if (!cfg.in_path.empty())
        return io::problem_from_json(io::read_json_file(cfg.in_path));
    std::string name = cfg.preset.empty() ? "theta_s2xs2" : cfg.preset;
    if (name != "theta_s2xs2")
        throw Error(ErrorKind::InvalidInput, "unknown preset '" + name + "'");
    return {presets::theta_s2xs2_table(), std::nullopt};
}

Outcome cmd_classes(const Config& cfg)
{
    io::ProblemFile p = load_problem(cfg);
    const auto& t = p.table;
    if (!cfg.bounds.empty())
    {
        auto parts = split(cfg.bounds, ',');
        if (parts.size() != 2)
            throw Error(ErrorKind::InvalidInput, "--bounds expects a,b");
        std::int64_t lo = parse_int(parts[0], "--bounds"), hi = parse_int(parts[1], "--bounds");
        p.bounds = IntegerBox{IntVector(t.basis.size(), lo), IntVector(t.basis.size(), hi)};
    }
    Boundedness b = feasible_region_bounded(t);
    auto classes = enumerate_candidate_classes(t, p.bounds);

    VariableList gens;
    for (std::size_t i = 0; i < t.basis.size(); ++i)
        gens.push_back(t.basis.generator(i));

    Outcome o;
    o.report = header(cfg, "classes");
    o.report["basis"] = t.basis.names;
    o.report["target"] = t.target_maslov;
    o.report["bounded"] = b.bounded;
    if (b.ray)
        o.report["ray"] = *b.ray;
    o.report["warnings"] = t.warnings();
    json list = json::array();
    std::ostringstream text;
    text << classes.size() << " candidate classes (Maslov " << t.target_maslov << ")\n";
    text << "  " << join(t.basis.names, " ") << "  | boundary | monomial\n";
    for (const auto& d : classes)
    {
        std::string mono = monomial_text(gens, d.coefficients);
        list.push_back({{"coefficients", d.coefficients}, {"boundary", d.boundary_class}, {"monomial", mono}});
        text << "  " << vector_text(d.coefficients) << "  | " << vector_text(d.boundary_class) << " | " << mono << "\n";
    }
    for (const auto& w : t.warnings())
        text << "warning: " << w << "\n";
    o.report["classes"] = list;
    o.text = text.str();
    o.observed = std::to_string(classes.size());
    return o;
}

// --- pearl / certify ------------------------------------------------------------------

io::PotentialFile load_potential(const Config& cfg)
{
    if (!cfg.in_path.empty())
        return io::potential_from_json(io::read_json_file(cfg.in_path));
    std::string name = cfg.preset.empty() ? "theta_s2xs2" : cfg.preset;
    if (name != "theta_s2xs2")
        throw Error(ErrorKind::InvalidInput, "unknown preset '" + name + "'");
    return {presets::theta_s2xs2_potential(), {presets::theta_phi()}, {presets::theta_regularity()}};
}

Outcome cmd_pearl(const Config& cfg)
{
    const Potential u = load_potential(cfg).potential;
    const auto labels = dual_labels(u.basis);
    const auto carrying = u.basis.boundary_carrying();
    const std::size_t n = u.basis.torus_rank();

    Outcome o;
    o.report = header(cfg, "pearl");
    o.report["ring"] = ring_name(u.ring);
    o.report["potential"] = u.poly.to_string();
    std::ostringstream text;
    text << "U = " << u.poly.to_string() << "  [" << ring_name(u.ring) << "]\n";

    json toric = json::array();
    auto v = toric_differential(u);
    for (std::size_t k = 0; k < v.size(); ++k)
    {
        const std::string& g = u.basis.generator(carrying[k]);
        toric.push_back({{"generator", g}, {"value", v[k].to_string()}});
        text << "v_" << g << " = " << v[k].to_string() << "\n";
    }
    o.report["toric_differential"] = toric;

    json d2 = json::array();
    for (std::size_t j = 0; j < n; ++j)
    {
        auto e = PearlElement::basis_element(n, u.variables(), u.ring, PearlElement::Mask{1} << j);
        auto image = pearl_d2(e, u);
        d2.push_back({{"element", labels[j]}, {"d2", image.to_string(labels)}});
        text << "d2 " << labels[j] << " = " << image.to_string(labels) << "\n";
    }
    o.report["d2"] = d2;

    PearlElement::Mask top = n >= 32 ? ~PearlElement::Mask{0} : (PearlElement::Mask{1} << n) - 1;
    auto top_element = PearlElement::basis_element(n, u.variables(), u.ring, top);
    bool squared_zero = pearl_d2(pearl_d2(top_element, u), u).is_zero();
    o.report["d2_squared_zero"] = squared_zero;
    text << "d2^2 (top element) = " << (squared_zero ? "0" : "nonzero") << "\n";
    o.text = text.str();
    o.observed = squared_zero ? "true" : "false";
    return o;
}

json membership_json(const MembershipResult& m)
{
    json j = {{"contains_one", m.contains_one},
              {"method", m.method == MembershipMethod::Groebner ? "groebner" : "univariate-gcd"}};
    if (m.generator)
        j["generator"] = m.generator->to_string();
    if (!m.groebner.empty())
    {
        json g = json::array();
        for (const auto& p : m.groebner)
            g.push_back(p.to_string(m.polynomial_variables));
        j["groebner"] = g;
        j["polynomial_variables"] = m.polynomial_variables;
    }
    if (m.cofactors)
    {
        json c = json::array();
        for (const auto& p : *m.cofactors)
            c.push_back(p.to_string());
        j["cofactors"] = c;
    }
    return j;
}

Outcome cmd_certify(const Config& cfg)
{
    io::PotentialFile file = load_potential(cfg);
    const Potential& u = file.potential;
    if (cfg.search)
    {
        if (auto h = find_h0_hom(u))
            file.h0_homs.push_back({"search", *h});
    }
    CertificateReport r = certify_nondisplaceable(u, file.h0_homs, file.regularity_homs);

    Outcome o;
    o.report = header(cfg, "certify");
    o.report["potential"] = u.poly.to_string();
    o.report["ring"] = ring_name(u.ring);
    o.report["verdict"] = verdict_name(r.verdict);
    o.report["verdict_text"] = verdict_text(r.verdict);
    std::ostringstream text;
    text << "U = " << u.poly.to_string() << "  [" << ring_name(u.ring) << "]\n";

    json diffs = json::array();
    for (std::size_t j = 0; j < r.differentials.size(); ++j)
    {
        diffs.push_back({{"element", r.labels[j]}, {"d2", r.differentials[j].to_string()}});
        text << "d2 " << r.labels[j] << " = " << r.differentials[j].to_string() << "\n";
    }
    o.report["differentials"] = diffs;

    std::vector<NamedHom> all_h0 = file.h0_homs;
    json h0 = json::array();
    for (std::size_t i = 0; i < r.h0.size(); ++i)
    {
        const auto& a = r.h0[i];
        json images = json::array();
        text << "H0 check via " << a.hom << ":\n";
        for (std::size_t j = 0; j < a.images.size(); ++j)
        {
            images.push_back(a.images[j].to_string());
            text << "  " << a.hom << "(d2 " << r.labels[j] << ") = " << a.images[j].to_string() << "\n";
        }
        if (a.membership.generator)
            text << "  ideal generated by " << a.membership.generator->to_string() << "\n";
        text << "  1 in image ideal: " << (a.membership.contains_one ? "yes" : "no") << "\n";
        h0.push_back({{"hom", io::hom_to_json(all_h0[i])},
                      {"images", images},
                      {"membership", membership_json(a.membership)},
                      {"evidence", a.evidence}});
    }
    o.report["h0"] = h0;

    json reg = json::array();
    for (std::size_t i = 0; i < r.regularity.size(); ++i)
    {
        const auto& a = r.regularity[i];
        json seq = json::array(), gb = json::array();
        for (const auto& s : a.report.sequence)
            seq.push_back(s.to_string());
        for (const auto& g : a.report.groebner)
            gb.push_back(g.to_string(a.report.polynomial_variables));
        json entry = {{"hom", io::hom_to_json(file.regularity_homs[i])},
                      {"image_potential", a.image_potential.to_string()},
                      {"sequence", seq},
                      {"groebner", gb},
                      {"polynomial_variables", a.report.polynomial_variables},
                      {"regular", a.report.regular},
                      {"reason", a.report.reason}};
        if (a.report.quotient_dimension)
            entry["quotient_dimension"] = *a.report.quotient_dimension;
        reg.push_back(entry);
        text << "regularity via " << a.hom << ": " << (a.report.regular ? "regular" : "not regular") << " ("
             << a.report.reason;
        if (a.report.quotient_dimension)
            text << ", quotient dimension " << *a.report.quotient_dimension;
        text << ")\n";
    }
    o.report["regularity"] = reg;
    o.report["notes"] = r.notes;
    for (const auto& n : r.notes)
        text << "note: " << n << "\n";
    text << paint(cfg, verdict_text(r.verdict), r.verdict == Verdict::Certified) << "\n";
    o.text = text.str();
    o.observed = verdict_name(r.verdict);
    return o;
}

// --- germ ----------------------------------------------------------------------------

Germ load_germ(const std::string& spec, const Rational& s)
{
    if (auto g = presets::germ(spec, s))
        return *g;
    return io::germ_from_json(io::read_json_file(spec));
}

std::string covectors_text(const Germ& g)
{
    std::vector<std::string> parts;
    for (const auto& a : g.covectors)
        parts.push_back(vector_text(a));
    return "{" + join(parts, ", ") + "}";
}

Outcome cmd_germ(const Config& cfg)
{
    if (cfg.positional.empty() || cfg.positional.size() > 2)
        throw Error(ErrorKind::InvalidInput, "germ needs one or two germs (preset names or JSON files)");
    Rational s = parse_rational(cfg.param);
    std::vector<Germ> germs;
    for (const auto& spec : cfg.positional)
        germs.push_back(load_germ(spec, s));

    Outcome o;
    o.report = header(cfg, "germ");
    std::ostringstream text;
    json list = json::array();
    for (std::size_t i = 0; i < germs.size(); ++i)
    {
        germs[i].validate();
        list.push_back(io::germ_to_json(germs[i]));
        text << cfg.positional[i] << ": " << to_string(germs[i].constant) << " + min " << covectors_text(germs[i])
             << "\n";
    }
    o.report["germs"] = list;

    if (!cfg.at.empty())
    {
        std::vector<Rational> xi;
        for (const auto& part : split(cfg.at, ','))
            xi.push_back(parse_rational(part));
        auto value = germ_value(germs[0], xi);
        o.report["value"] = value ? json(to_string(*value)) : json("undefined-at-origin");
        text << "value at (" << cfg.at << ") = " << (value ? to_string(*value) : "undefined-at-origin") << "\n";
        o.observed = value ? to_string(*value) : "undefined-at-origin";
    }
    if (germs.size() == 2)
    {
        auto r = germ_equivalent(germs[0], germs[1]);
        json e = {{"status", equivalence_name(r.status)}, {"reason", r.reason},
                  {"note", "equivalence requires equal constants"}};
        if (r.witness)
            e["witness"] = *r.witness;
        o.report["equivalence"] = e;
        text << paint(cfg, equivalence_name(r.status), r.status == Equivalence::Equivalent) << ": " << r.reason
             << "\n";
        if (r.witness)
        {
            std::vector<std::string> rows;
            for (const auto& row : *r.witness)
                rows.push_back(vector_text(row));
            text << "witness A = [" << join(rows, ", ") << "]\n";
        }
        o.observed = equivalence_name(r.status);
    }
    o.text = text.str();
    return o;
}

void emit(const Config& cfg, const Outcome& o, std::ostream& out)
{
    std::string body = cfg.format == "json" ? o.report.dump(2) + "\n" : o.text;
    if (cfg.out_path.empty())
    {
        out << body;
        return;
    }
    std::ofstream file(cfg.out_path, std::ios::binary);
    if (!file)
        throw Error(ErrorKind::InvalidInput, "cannot write '" + cfg.out_path + "'");
    file << body;
}

void diagnose(const Config& cfg, const char* kind, const std::string& message, std::ostream& err)
{
    if (cfg.format == "json")
        err << json{{"schema", "1"}, {"error", {{"kind", kind}, {"message", message}}}}.dump() << "\n";
    else
        err << "error: " << kind << ": " << message << "\n";
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, bool terminal)
{
    Config cfg;
    cfg.color = terminal && std::getenv("TWISTKIT_NO_COLOR") == nullptr;

    CLI::App app{"Exact computations for Lagrangian twist tori", "twist-kit"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--format", cfg.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--out", cfg.out_path, "write the report to FILE");
    app.add_option("--seed", cfg.seed, "seed recorded in reports");
    app.add_option("--expect", cfg.expect, "exit 1 unless the result matches");

    auto* trees = app.add_subcommand("trees", "enumerate ample rooted trees");
    trees->add_option("leaves", cfg.leaves, "number of leaves")->required();
    trees->add_option("--cap", cfg.cap, "largest leaf count allowed");

    auto* iso = app.add_subcommand("iso", "decide isomorphism of two forests");
    iso->add_option("forests", cfg.positional, "two forest or twist-word literals")->required()->expected(2);

    auto* classes = app.add_subcommand("classes", "enumerate candidate Maslov-2 disc classes");
    auto* pearl = app.add_subcommand("pearl", "potential, toric differential and d2");
    auto* certify = app.add_subcommand("certify", "non-displaceability certificate");
    for (auto* sub : {classes, pearl, certify})
    {
        sub->add_option("--preset", cfg.preset, "built-in data set (theta_s2xs2)");
        sub->add_option("--in", cfg.in_path, "JSON input file");
    }
    classes->add_option("--bounds", cfg.bounds, "scan box a,b in every coordinate");
    certify->add_flag("--search", cfg.search, "also try a brute-force homomorphism for the H0 check");

    auto* germ = app.add_subcommand("germ", "evaluate or compare displacement-energy germs");
    germ->add_option("germs", cfg.positional, "preset names or JSON files")->required()->expected(1, 2);
    germ->add_option("--param", cfg.param, "parameter s of theta_s0");
    germ->add_option("--at", cfg.at, "evaluate the first germ at x,y,...");

    try
    {
        app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
    }
    catch (const CLI::ParseError& e)
    {
        int code = app.exit(e, out, err);
        return code == 0 ? Success : InputError;
    }

    try
    {
        Outcome o;
        if (*trees)
            o = cmd_trees(cfg);
        else if (*iso)
            o = cmd_iso(cfg);
        else if (*classes)
            o = cmd_classes(cfg);
        else if (*pearl)
            o = cmd_pearl(cfg);
        else if (*certify)
            o = cmd_certify(cfg);
        else
            o = cmd_germ(cfg);
        emit(cfg, o, out);
        if (!cfg.expect.empty() && cfg.expect != o.observed)
        {
            err << "expectation failed: expected " << cfg.expect << ", got " << o.observed << "\n";
            return ExpectationFailed;
        }
        return Success;
    }
    catch (const Error& e)
    {
        diagnose(cfg, e.name(), e.what(), err);
        return InputError;
    }
    catch (const std::exception& e)
    {
        diagnose(cfg, "InternalError", e.what(), err);
        return InputError;
    }
}

} // namespace twistkit::cli
