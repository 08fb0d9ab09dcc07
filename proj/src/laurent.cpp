#include "twistkit/laurent.hpp"

#include "twistkit/error.hpp"

#include <algorithm>
#include <cctype>

namespace twistkit
{

LaurentPoly::LaurentPoly(VariableList variables, Ring ring) : variables_(std::move(variables)), ring_(ring) {}

LaurentPoly LaurentPoly::constant(VariableList variables, Ring ring, const Rational& value)
{
    LaurentPoly p(std::move(variables), ring);
    p.add_term(Exponent(p.variables_.size(), 0), value);
    return p;
}

LaurentPoly LaurentPoly::monomial(VariableList variables, Ring ring, Exponent exponent, const Rational& coeff)
{
    LaurentPoly p(std::move(variables), ring);
    if (exponent.size() != p.variables_.size())
        throw Error(ErrorKind::DimensionMismatch, "exponent vector length differs from variable count");
    p.add_term(exponent, coeff);
    return p;
}

LaurentPoly LaurentPoly::variable(VariableList variables, Ring ring, std::string_view name)
{
    LaurentPoly p(std::move(variables), ring);
    Exponent e(p.variables_.size(), 0);
    e[p.variable_index(name)] = 1;
    p.add_term(e, 1);
    return p;
}

std::size_t LaurentPoly::variable_index(std::string_view name) const
{
    auto it = std::find(variables_.begin(), variables_.end(), name);
    if (it == variables_.end())
        throw Error(ErrorKind::VariableMismatch, "unknown variable '" + std::string(name) + "'");
    return static_cast<std::size_t>(it - variables_.begin());
}

bool LaurentPoly::is_unit() const
{
    return terms_.size() == 1 && twistkit::is_unit(terms_.begin()->second, ring_);
}

bool LaurentPoly::is_constant() const
{
    if (terms_.empty())
        return true;
    if (terms_.size() != 1)
        return false;
    const auto& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](auto x) { return x == 0; });
}

void LaurentPoly::add_term(const Exponent& exponent, const Rational& coeff)
{
    Rational c = normalize(coeff, ring_);
    if (c == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(exponent, c);
    if (!inserted)
    {
        it->second = normalize(it->second + c, ring_);
        if (it->second == 0)
            terms_.erase(it);
    }
}

void LaurentPoly::require_compatible(const LaurentPoly& other) const
{
    if (variables_ != other.variables_)
        throw Error(ErrorKind::VariableMismatch, "Laurent polynomials live in different variable sets");
    if (ring_ != other.ring_)
        throw Error(ErrorKind::VariableMismatch, std::string("coefficient rings differ: ") + ring_name(ring_) +
                                                     " vs " + ring_name(other.ring_));
}

LaurentPoly LaurentPoly::operator-() const
{
    LaurentPoly p(variables_, ring_);
    for (const auto& [e, c] : terms_)
        p.add_term(e, -c);
    return p;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other)
{
    require_compatible(other);
    for (const auto& [e, c] : other.terms_)
        add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other)
{
    require_compatible(other);
    for (const auto& [e, c] : other.terms_)
        add_term(e, -c);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b)
{
    a.require_compatible(b);
    LaurentPoly p(a.variables_, a.ring_);
    p.terms_ = multiply_terms(a.terms_, b.terms_, a.ring_);
    return p;
}

LaurentPoly LaurentPoly::scaled(const Rational& factor) const
{
    LaurentPoly p(variables_, ring_);
    for (const auto& [e, c] : terms_)
        p.add_term(e, c * factor);
    return p;
}

LaurentPoly LaurentPoly::pow(int exponent) const
{
    if (exponent < 0)
    {
        if (!is_unit())
            throw Error(ErrorKind::InvalidInput, "negative power of the non-unit " + to_string());
        const auto& [e, c] = *terms_.begin();
        Exponent inv(e.size());
        for (std::size_t i = 0; i < e.size(); ++i)
            inv[i] = -e[i];
        return monomial(variables_, ring_, inv, 1 / c).pow(-exponent);
    }
    LaurentPoly result = constant(variables_, ring_, 1);
    LaurentPoly base = *this;
    for (int k = exponent; k > 0; k >>= 1)
    {
        if (k & 1)
            result = result * base;
        if (k > 1)
            base = base * base;
    }
    return result;
}

LaurentPoly LaurentPoly::shifted(const Exponent& shift) const
{
    if (shift.size() != variables_.size())
        throw Error(ErrorKind::DimensionMismatch, "shift length differs from variable count");
    LaurentPoly p(variables_, ring_);
    for (const auto& [e, c] : terms_)
    {
        Exponent s(e.size());
        for (std::size_t i = 0; i < e.size(); ++i)
            s[i] = e[i] + shift[i];
        p.terms_.emplace(std::move(s), c);
    }
    return p;
}

LaurentPoly LaurentPoly::partial_derivative(std::size_t variable) const
{
    if (ring_ == Ring::GF2)
        throw Error(ErrorKind::UnsupportedRing, "use log_derivative over GF2");
    if (variable >= variables_.size())
        throw Error(ErrorKind::VariableMismatch, "variable index out of range");
    LaurentPoly p(variables_, ring_);
    for (const auto& [e, c] : terms_)
    {
        if (e[variable] == 0)
            continue;
        Exponent d = e;
        d[variable] -= 1;
        p.add_term(d, c * e[variable]);
    }
    return p;
}

LaurentPoly LaurentPoly::log_derivative(std::size_t variable) const
{
    if (variable >= variables_.size())
        throw Error(ErrorKind::VariableMismatch, "variable index out of range");
    LaurentPoly p(variables_, ring_);
    for (const auto& [e, c] : terms_)
        p.add_term(e, c * e[variable]);
    return p;
}

LaurentPoly LaurentPoly::with_ring(Ring ring) const
{
    LaurentPoly p(variables_, ring);
    for (const auto& [e, c] : terms_)
        p.add_term(e, c);
    return p;
}

Exponent LaurentPoly::min_exponents() const
{
    Exponent m(variables_.size(), 0);
    bool first = true;
    for (const auto& [e, c] : terms_)
    {
        for (std::size_t i = 0; i < e.size(); ++i)
            m[i] = first ? e[i] : std::min(m[i], e[i]);
        first = false;
    }
    return m;
}

Exponent LaurentPoly::max_exponents() const
{
    Exponent m(variables_.size(), 0);
    bool first = true;
    for (const auto& [e, c] : terms_)
    {
        for (std::size_t i = 0; i < e.size(); ++i)
            m[i] = first ? e[i] : std::max(m[i], e[i]);
        first = false;
    }
    return m;
}

std::string LaurentPoly::to_string() const
{
    if (terms_.empty())
        return "0";
    std::string out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it)
    {
        const auto& [e, c] = *it;
        Rational mag = c < 0 ? Rational(-c) : c;
        if (first)
            out += c < 0 ? "-" : "";
        else
            out += c < 0 ? " - " : " + ";
        first = false;

        std::string mono;
        for (std::size_t i = 0; i < e.size(); ++i)
        {
            if (e[i] == 0)
                continue;
            if (!mono.empty())
                mono += '*';
            mono += variables_[i];
            if (e[i] != 1)
                mono += '^' + std::to_string(e[i]);
        }
        if (mono.empty())
            out += twistkit::to_string(mag);
        else if (mag == 1)
            out += mono;
        else
            out += twistkit::to_string(mag) + '*' + mono;
    }
    return out;
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b)
{
    return a.variables_ == b.variables_ && a.ring_ == b.ring_ && a.terms_ == b.terms_;
}

// --- parsing ---------------------------------------------------------------

namespace
{

class LaurentParser
{
public:
    LaurentParser(std::string_view text, const VariableList& vars, Ring ring) : text_(text), vars_(vars), ring_(ring)
    {
    }

    LaurentPoly parse()
    {
        LaurentPoly p = expression();
        skip_space();
        if (pos_ != text_.size())
            fail({"'+'", "'-'", "'*'", "end of input"});
        return p;
    }

private:
    std::string_view text_;
    const VariableList& vars_;
    Ring ring_;
    std::size_t pos_ = 0;

    char peek()
    {
        skip_space();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    void skip_space()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    [[noreturn]] void fail(std::vector<std::string> expected)
    {
        throw ParseError(pos_, std::move(expected), pos_ < text_.size() ? std::string(1, text_[pos_]) : "");
    }

    static bool starts_factor(char c)
    {
        return c == '(' || std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    }

    LaurentPoly expression()
    {
        LaurentPoly sum(vars_, ring_);
        bool negate = false;
        if (peek() == '+' || peek() == '-')
            negate = text_[pos_++] == '-';
        LaurentPoly t = term();
        sum += negate ? -t : t;
        while (peek() == '+' || peek() == '-')
        {
            negate = text_[pos_++] == '-';
            t = term();
            sum += negate ? -t : t;
        }
        return sum;
    }

    LaurentPoly term()
    {
        LaurentPoly p = factor();
        for (;;)
        {
            char c = peek();
            if (c == '*')
            {
                ++pos_;
                p = p * factor();
            }
            else if (starts_factor(c))
                p = p * factor();
            else
                return p;
        }
    }

    int exponent()
    {
        bool paren = peek() == '(';
        if (paren)
            ++pos_;
        bool negative = false;
        if (peek() == '-' || peek() == '+')
            negative = text_[pos_++] == '-';
        skip_space();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (start == pos_ || pos_ - start > 6)
            fail({"integer exponent"});
        int e = std::stoi(std::string(text_.substr(start, pos_ - start)));
        if (paren)
        {
            if (peek() != ')')
                fail({"')'"});
            ++pos_;
        }
        return negative ? -e : e;
    }

    LaurentPoly factor()
    {
        char c = peek();
        LaurentPoly base(vars_, ring_);
        if (c == '(')
        {
            ++pos_;
            base = expression();
            if (peek() != ')')
                fail({"')'"});
            ++pos_;
        }
        else if (std::isdigit(static_cast<unsigned char>(c)))
        {
            std::size_t start = pos_;
            while (pos_ < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '/'))
                ++pos_;
            base = LaurentPoly::constant(vars_, ring_, parse_rational(text_.substr(start, pos_ - start)));
        }
        else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_')
        {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            auto name = text_.substr(start, pos_ - start);
            if (std::find(vars_.begin(), vars_.end(), name) == vars_.end())
            {
                pos_ = start;
                fail({"one of the declared variables"});
            }
            base = LaurentPoly::variable(vars_, ring_, name);
        }
        else
            fail({"number", "variable", "'('"});

        if (peek() == '^')
        {
            ++pos_;
            base = base.pow(exponent());
        }
        return base;
    }
};

} // namespace

LaurentPoly LaurentPoly::parse(std::string_view text, VariableList variables, Ring ring)
{
    return LaurentParser(text, variables, ring).parse();
}

// --- homomorphisms ---------------------------------------------------------

RingHom::RingHom(VariableList source, std::map<std::string, LaurentPoly> images) : source_(std::move(source))
{
    if (images.empty() && !source_.empty())
        throw Error(ErrorKind::InvalidInput, "homomorphism needs an image for every generator");
    bool first = true;
    for (const auto& name : source_)
    {
        auto it = images.find(name);
        if (it == images.end())
            throw Error(ErrorKind::InvalidInput, "no image given for generator '" + name + "'");
        if (first)
        {
            target_ = it->second.variables();
            target_ring_ = it->second.ring();
            first = false;
        }
        if (it->second.variables() != target_ || it->second.ring() != target_ring_)
            throw Error(ErrorKind::VariableMismatch, "images of a homomorphism must share one target ring");
        if (!it->second.is_unit())
            throw Error(ErrorKind::NonUnitImage, "generator '" + name + "' maps to the non-unit " +
                                                     it->second.to_string());
        images_.push_back(it->second);
    }
    for (const auto& [name, img] : images)
        if (std::find(source_.begin(), source_.end(), name) == source_.end())
            throw Error(ErrorKind::VariableMismatch, "image given for unknown generator '" + name + "'");
}

RingHom RingHom::parse(const VariableList& source, const std::map<std::string, std::string>& images,
                       const VariableList& target, Ring target_ring)
{
    std::map<std::string, LaurentPoly> parsed;
    for (const auto& [name, text] : images)
        parsed.emplace(name, LaurentPoly::parse(text, target, target_ring));
    return RingHom(source, std::move(parsed));
}

RingHom RingHom::identity(const VariableList& variables, Ring ring)
{
    std::map<std::string, LaurentPoly> images;
    for (const auto& v : variables)
        images.emplace(v, LaurentPoly::variable(variables, ring, v));
    return RingHom(variables, std::move(images));
}

const LaurentPoly& RingHom::image(std::string_view generator) const
{
    auto it = std::find(source_.begin(), source_.end(), generator);
    if (it == source_.end())
        throw Error(ErrorKind::VariableMismatch, "unknown generator '" + std::string(generator) + "'");
    return images_[static_cast<std::size_t>(it - source_.begin())];
}

LaurentPoly RingHom::apply(const LaurentPoly& p) const
{
    if (p.variables() != source_)
        throw Error(ErrorKind::VariableMismatch, "homomorphism source differs from the polynomial's variables");
    LaurentPoly out(target_, target_ring_);
    for (const auto& [e, c] : p.terms())
    {
        Rational coeff = c;
        Exponent img(target_.size(), 0);
        for (std::size_t i = 0; i < e.size(); ++i)
        {
            if (e[i] == 0)
                continue;
            const auto& [ie, ic] = *images_[i].terms().begin();
            for (std::size_t j = 0; j < img.size(); ++j)
                img[j] += e[i] * ie[j];
            Rational factor = e[i] > 0 ? ic : Rational(1) / ic;
            for (int k = 0; k < std::abs(e[i]); ++k)
                coeff *= factor;
        }
        out.add_term(img, coeff);
    }
    return out;
}

bool RingHom::is_identity() const
{
    if (source_ != target_)
        return false;
    for (std::size_t i = 0; i < source_.size(); ++i)
        if (!(images_[i] == LaurentPoly::variable(target_, target_ring_, source_[i])))
            return false;
    return true;
}

} // namespace twistkit
