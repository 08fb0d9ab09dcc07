#include "twistkit/groebner.hpp"

#include "twistkit/error.hpp"

#include <algorithm>
#include <stdexcept>

namespace twistkit
{

bool GrevlexGreater::operator()(const Monomial& a, const Monomial& b) const noexcept
{
    std::int64_t da = 0, db = 0;
    for (auto x : a)
        da += x;
    for (auto x : b)
        db += x;
    if (da != db)
        return da > db;
    for (std::size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i])
            return a[i] < b[i];
    return false;
}

bool divides(const Monomial& a, const Monomial& b) noexcept
{
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i])
            return false;
    return true;
}

namespace
{

Monomial lcm_of(const Monomial& a, const Monomial& b)
{
    Monomial m(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        m[i] = std::max(a[i], b[i]);
    return m;
}

Monomial quotient(const Monomial& a, const Monomial& b)
{
    Monomial m(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        m[i] = a[i] - b[i];
    return m;
}

bool coprime(const Monomial& a, const Monomial& b)
{
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0 && b[i] != 0)
            return false;
    return true;
}

} // namespace

// --- Polynomial --------------------------------------------------------------

Polynomial Polynomial::constant(std::size_t variables, Ring ring, const Rational& value)
{
    Polynomial p(variables, ring);
    p.add_term(Monomial(variables, 0), value);
    return p;
}

Polynomial Polynomial::monomial(std::size_t variables, Ring ring, Monomial m, const Rational& coeff)
{
    Polynomial p(variables, ring);
    p.add_term(m, coeff);
    return p;
}

bool Polynomial::is_constant() const
{
    if (terms_.empty())
        return true;
    if (terms_.size() != 1)
        return false;
    const auto& m = terms_.begin()->first;
    return std::all_of(m.begin(), m.end(), [](auto x) { return x == 0; });
}

void Polynomial::add_term(const Monomial& m, const Rational& coeff)
{
    Rational c = normalize(coeff, ring_);
    if (c == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted)
    {
        it->second = normalize(it->second + c, ring_);
        if (it->second == 0)
            terms_.erase(it);
    }
}

Polynomial& Polynomial::operator+=(const Polynomial& other)
{
    for (const auto& [m, c] : other.terms_)
        add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other)
{
    for (const auto& [m, c] : other.terms_)
        add_term(m, -c);
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b)
{
    Polynomial p(a.variables_, a.ring_);
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_)
        {
            Monomial m(ma.size());
            for (std::size_t i = 0; i < m.size(); ++i)
                m[i] = ma[i] + mb[i];
            p.add_term(m, ca * cb);
        }
    return p;
}

Polynomial Polynomial::times_term(const Monomial& m, const Rational& coeff) const
{
    Polynomial p(variables_, ring_);
    for (const auto& [mm, c] : terms_)
    {
        Monomial s(mm.size());
        for (std::size_t i = 0; i < s.size(); ++i)
            s[i] = mm[i] + m[i];
        p.add_term(s, c * coeff);
    }
    return p;
}

Polynomial Polynomial::scaled(const Rational& factor) const
{
    Polynomial p(variables_, ring_);
    for (const auto& [m, c] : terms_)
        p.add_term(m, c * factor);
    return p;
}

std::string Polynomial::to_string(const VariableList& names) const
{
    if (terms_.empty())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_)
    {
        Rational mag = c < 0 ? Rational(-c) : c;
        out += first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
        first = false;
        std::string mono;
        for (std::size_t i = 0; i < m.size(); ++i)
        {
            if (m[i] == 0)
                continue;
            if (!mono.empty())
                mono += '*';
            mono += names.at(i);
            if (m[i] != 1)
                mono += '^' + std::to_string(m[i]);
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

// --- Buchberger ----------------------------------------------------------------

namespace
{

struct Entry
{
    Polynomial p;
    std::vector<Polynomial> cof; // empty when not tracking
};

class Buchberger
{
public:
    Buchberger(const std::vector<Polynomial>& gens, bool track) : track_(track)
    {
        if (gens.empty())
            return;
        vars_ = gens[0].variables();
        ring_ = gens[0].ring();
        if (!is_field(ring_))
            throw Error(ErrorKind::UnsupportedRing, "Groebner bases need a field; Int is not supported");
        for (std::size_t j = 0; j < gens.size(); ++j)
        {
            if (gens[j].variables() != vars_ || gens[j].ring() != ring_)
                throw Error(ErrorKind::VariableMismatch, "generators live in different polynomial rings");
            if (gens[j].is_zero())
                continue;
            Entry e{gens[j], {}};
            if (track_)
            {
                e.cof.assign(gens.size(), Polynomial(vars_, ring_));
                e.cof[j] = Polynomial::constant(vars_, ring_, 1);
            }
            make_monic(e);
            basis_.push_back(std::move(e));
        }
        generator_count_ = gens.size();
    }

    GroebnerBasis run()
    {
        GroebnerBasis out;
        if (basis_.empty())
        {
            if (track_)
                out.cofactors.emplace();
            return out;
        }
        for (const auto& e : basis_)
            if (e.p.is_constant())
                return unit_result(e);

        std::vector<std::pair<std::size_t, std::size_t>> pairs;
        for (std::size_t j = 1; j < basis_.size(); ++j)
            for (std::size_t i = 0; i < j; ++i)
                pairs.emplace_back(i, j);

        while (!pairs.empty())
        {
            // normal selection strategy: smallest lcm first
            auto best = pairs.begin();
            Monomial best_lcm = lcm_of(basis_[best->first].p.leading_monomial(), basis_[best->second].p.leading_monomial());
            for (auto it = pairs.begin() + 1; it != pairs.end(); ++it)
            {
                Monomial l = lcm_of(basis_[it->first].p.leading_monomial(), basis_[it->second].p.leading_monomial());
                if (GrevlexGreater{}(best_lcm, l))
                {
                    best = it;
                    best_lcm = std::move(l);
                }
            }
            auto [i, j] = *best;
            pairs.erase(best);

            const auto& li = basis_[i].p.leading_monomial();
            const auto& lj = basis_[j].p.leading_monomial();
            if (coprime(li, lj))
                continue;

            Entry s = s_polynomial(basis_[i], basis_[j], best_lcm);
            reduce_fully(s, basis_.size());
            if (s.p.is_zero())
                continue;
            make_monic(s);
            if (s.p.is_constant())
                return unit_result(s);
            basis_.push_back(std::move(s));
            for (std::size_t k = 0; k + 1 < basis_.size(); ++k)
                pairs.emplace_back(k, basis_.size() - 1);
        }
        return reduced_result();
    }

private:
    bool track_;
    std::size_t vars_ = 0;
    Ring ring_ = Ring::Rational;
    std::size_t generator_count_ = 0;
    std::vector<Entry> basis_;

    void make_monic(Entry& e) const
    {
        Rational lc = e.p.leading_coeff();
        if (lc == 1)
            return;
        Rational inv = 1 / lc;
        e.p = e.p.scaled(inv);
        for (auto& c : e.cof)
            c = c.scaled(inv);
    }

    Entry s_polynomial(const Entry& a, const Entry& b, const Monomial& l) const
    {
        Monomial qa = quotient(l, a.p.leading_monomial());
        Monomial qb = quotient(l, b.p.leading_monomial());
        Entry s{a.p.times_term(qa, 1), {}};
        s.p -= b.p.times_term(qb, 1);
        if (track_)
        {
            s.cof.resize(generator_count_, Polynomial(vars_, ring_));
            for (std::size_t k = 0; k < generator_count_; ++k)
            {
                s.cof[k] = a.cof[k].times_term(qa, 1);
                s.cof[k] -= b.cof[k].times_term(qb, 1);
            }
        }
        return s;
    }

    // Reduces every term of `h` by basis_[0..count) except index `skip`.
    void reduce_fully(Entry& h, std::size_t count, std::size_t skip = static_cast<std::size_t>(-1)) const
    {
        Polynomial remainder(vars_, ring_);
        while (!h.p.is_zero())
        {
            const Monomial lm = h.p.leading_monomial();
            const Rational lc = h.p.leading_coeff();
            const Entry* divisor = nullptr;
            for (std::size_t k = 0; k < count; ++k)
            {
                if (k == skip)
                    continue;
                if (divides(basis_[k].p.leading_monomial(), lm))
                {
                    divisor = &basis_[k];
                    break;
                }
            }
            if (!divisor)
            {
                remainder.add_term(lm, lc);
                h.p.add_term(lm, -lc);
                continue;
            }
            Monomial q = quotient(lm, divisor->p.leading_monomial());
            Rational c = lc / divisor->p.leading_coeff();
            h.p -= divisor->p.times_term(q, c);
            if (track_)
                for (std::size_t k = 0; k < generator_count_; ++k)
                    h.cof[k] -= divisor->cof[k].times_term(q, c);
        }
        h.p = std::move(remainder);
    }

    GroebnerBasis unit_result(const Entry& e) const
    {
        GroebnerBasis out;
        out.basis.push_back(Polynomial::constant(vars_, ring_, 1));
        if (track_)
        {
            Rational inv = 1 / e.p.leading_coeff();
            std::vector<Polynomial> cof;
            for (const auto& c : e.cof)
                cof.push_back(c.scaled(inv));
            out.cofactors.emplace();
            out.cofactors->push_back(std::move(cof));
        }
        return out;
    }

    GroebnerBasis reduced_result()
    {
        // minimal basis: drop entries whose leading monomial another divides
        std::vector<Entry> minimal;
        for (std::size_t i = 0; i < basis_.size(); ++i)
        {
            bool redundant = false;
            for (std::size_t j = 0; j < basis_.size() && !redundant; ++j)
            {
                if (i == j)
                    continue;
                const auto& mi = basis_[i].p.leading_monomial();
                const auto& mj = basis_[j].p.leading_monomial();
                if (divides(mj, mi) && (mi != mj || j < i))
                    redundant = true;
            }
            if (!redundant)
                minimal.push_back(basis_[i]);
        }
        basis_ = std::move(minimal);
        for (std::size_t i = 0; i < basis_.size(); ++i)
        {
            Entry e = basis_[i];
            reduce_fully(e, basis_.size(), i);
            basis_[i] = std::move(e);
        }
        std::sort(basis_.begin(), basis_.end(), [](const Entry& a, const Entry& b) {
            return GrevlexGreater{}(a.p.leading_monomial(), b.p.leading_monomial());
        });
        GroebnerBasis out;
        for (auto& e : basis_)
            out.basis.push_back(e.p);
        if (track_)
        {
            out.cofactors.emplace();
            for (auto& e : basis_)
                out.cofactors->push_back(e.cof);
        }
        return out;
    }
};

} // namespace

GroebnerBasis groebner_basis(const std::vector<Polynomial>& generators, bool track_cofactors)
{
    return Buchberger(generators, track_cofactors).run();
}

Polynomial normal_form(const Polynomial& p, const std::vector<Polynomial>& basis)
{
    Polynomial h = p;
    Polynomial remainder(p.variables(), p.ring());
    while (!h.is_zero())
    {
        const Monomial lm = h.leading_monomial();
        const Rational lc = h.leading_coeff();
        auto it = std::find_if(basis.begin(), basis.end(),
                               [&](const Polynomial& g) { return divides(g.leading_monomial(), lm); });
        if (it == basis.end())
        {
            remainder.add_term(lm, lc);
            h.add_term(lm, -lc);
            continue;
        }
        h -= it->times_term(quotient(lm, it->leading_monomial()), lc / it->leading_coeff());
    }
    return remainder;
}

std::optional<std::vector<Monomial>> standard_monomials(const std::vector<Polynomial>& basis)
{
    if (basis.empty())
        return std::nullopt;
    const std::size_t n = basis[0].variables();
    std::vector<std::int32_t> bound(n, -1);
    for (const auto& g : basis)
    {
        const auto& m = g.leading_monomial();
        std::size_t nonzero = 0, where = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (m[i] != 0)
            {
                ++nonzero;
                where = i;
            }
        if (nonzero == 0)
            return std::vector<Monomial>{}; // unit ideal
        if (nonzero == 1 && (bound[where] < 0 || m[where] < bound[where]))
            bound[where] = m[where];
    }
    for (auto b : bound)
        if (b < 0)
            return std::nullopt;

    std::vector<Monomial> out;
    Monomial m(n, 0);
    for (;;)
    {
        bool standard = std::none_of(basis.begin(), basis.end(),
                                     [&](const Polynomial& g) { return divides(g.leading_monomial(), m); });
        if (standard)
            out.push_back(m);
        std::size_t i = 0;
        while (i < n && ++m[i] >= bound[i])
        {
            m[i] = 0;
            ++i;
        }
        if (i == n)
            break;
    }
    std::sort(out.begin(), out.end(), GrevlexGreater{});
    return out;
}

// --- Laurent ideal membership ----------------------------------------------------

namespace
{

// Dense univariate polynomials, index = degree.
using Dense = std::vector<Rational>;

void trim(Dense& p)
{
    while (!p.empty() && p.back() == 0)
        p.pop_back();
}

Dense dense_sub(const Dense& a, const Dense& b, Ring ring)
{
    Dense r(std::max(a.size(), b.size()), Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i)
        r[i] -= b[i];
    for (auto& x : r)
        x = normalize(x, ring);
    trim(r);
    return r;
}

Dense dense_mul(const Dense& a, const Dense& b, Ring ring)
{
    if (a.empty() || b.empty())
        return {};
    Dense r(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] += a[i] * b[j];
    for (auto& x : r)
        x = normalize(x, ring);
    trim(r);
    return r;
}

// a = q*b + r
std::pair<Dense, Dense> dense_divmod(Dense a, const Dense& b, Ring ring)
{
    Dense q;
    if (a.size() >= b.size())
        q.assign(a.size() - b.size() + 1, Rational(0));
    while (a.size() >= b.size() && !a.empty())
    {
        std::size_t shift = a.size() - b.size();
        Rational c = normalize(a.back() / b.back(), ring);
        q[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i)
            a[i + shift] = normalize(a[i + shift] - c * b[i], ring);
        trim(a);
    }
    trim(q);
    return {q, a};
}

// Returns (g, s, t) with g = s*a + t*b.
std::tuple<Dense, Dense, Dense> dense_xgcd(Dense a, Dense b, Ring ring)
{
    Dense s0{Rational(1)}, s1{}, t0{}, t1{Rational(1)};
    while (!b.empty())
    {
        auto [q, r] = dense_divmod(a, b, ring);
        a = std::move(b);
        b = std::move(r);
        Dense s2 = dense_sub(s0, dense_mul(q, s1, ring), ring);
        Dense t2 = dense_sub(t0, dense_mul(q, t1, ring), ring);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    return {a, s0, t0};
}

LaurentPoly dense_to_laurent(const Dense& p, const VariableList& vars, Ring ring, std::optional<std::size_t> var,
                             std::int32_t shift)
{
    LaurentPoly out(vars, ring);
    for (std::size_t i = 0; i < p.size(); ++i)
    {
        Exponent e(vars.size(), 0);
        if (var)
            e[*var] = static_cast<std::int32_t>(i) + shift;
        out.add_term(e, p[i]);
    }
    return out;
}

void verify_cofactors(const std::vector<LaurentPoly>& gens, const std::vector<LaurentPoly>& cofactors)
{
    LaurentPoly sum(gens[0].variables(), gens[0].ring());
    for (std::size_t i = 0; i < gens.size(); ++i)
        sum += cofactors[i] * gens[i];
    if (!(sum == LaurentPoly::constant(gens[0].variables(), gens[0].ring(), 1)))
        throw std::logic_error("ideal membership certificate failed to verify: sum is " + sum.to_string());
}

MembershipResult univariate_membership(const std::vector<LaurentPoly>& gens, Ring ring,
                                       std::optional<std::size_t> var)
{
    const auto& vars = gens[0].variables();
    std::vector<Dense> stripped;
    std::vector<std::int32_t> shifts;
    for (const auto& g : gens)
    {
        std::int32_t lo = var ? g.min_exponents()[*var] : 0;
        std::int32_t hi = var ? g.max_exponents()[*var] : 0;
        Dense d(static_cast<std::size_t>(hi - lo) + 1, Rational(0));
        for (const auto& [e, c] : g.terms())
            d[static_cast<std::size_t>((var ? e[*var] : 0) - lo)] = c;
        trim(d);
        stripped.push_back(std::move(d));
        shifts.push_back(lo);
    }

    Dense gcd = stripped[0];
    std::vector<Dense> cof(gens.size());
    cof[0] = Dense{Rational(1)};
    for (std::size_t i = 1; i < stripped.size(); ++i)
    {
        auto [g, s, t] = dense_xgcd(gcd, stripped[i], ring);
        for (std::size_t k = 0; k < i; ++k)
            cof[k] = dense_mul(cof[k], s, ring);
        cof[i] = t;
        gcd = std::move(g);
        // keep cofactors short: reduce modulo the multiples they may carry
    }
    Rational lead = gcd.back();
    for (auto& x : gcd)
        x = normalize(x / lead, ring);
    for (auto& c : cof)
        for (auto& x : c)
            x = normalize(x / lead, ring);

    MembershipResult result;
    result.method = MembershipMethod::UnivariateGcd;
    result.generator = dense_to_laurent(gcd, vars, ring, var, 0);
    result.contains_one = gcd.size() == 1;
    if (result.contains_one)
    {
        std::vector<LaurentPoly> cofactors;
        for (std::size_t i = 0; i < gens.size(); ++i)
            cofactors.push_back(dense_to_laurent(cof[i], vars, ring, var, -shifts[i]));
        verify_cofactors(gens, cofactors);
        result.cofactors = std::move(cofactors);
    }
    return result;
}

MembershipResult groebner_membership(const std::vector<LaurentPoly>& gens, Ring ring,
                                     const std::vector<std::size_t>& effective)
{
    const auto& vars = gens[0].variables();
    const std::size_t m = effective.size();
    std::vector<Polynomial> polys;
    for (const auto& g : gens)
        polys.push_back(to_polynomial(g, effective));
    Polynomial relation = Polynomial::monomial(m + 1, ring, Monomial(m + 1, 1));
    relation.add_term(Monomial(m + 1, 0), -1);
    polys.push_back(relation);

    MembershipResult result;
    result.method = MembershipMethod::Groebner;
    for (auto i : effective)
        result.polynomial_variables.push_back(vars[i]);
    result.polynomial_variables.push_back("w");

    GroebnerBasis gb = groebner_basis(polys, false);
    result.contains_one = gb.is_unit_ideal();
    result.groebner = gb.basis;
    if (!result.contains_one)
        return result;

    GroebnerBasis tracked = groebner_basis(polys, true);
    const auto& cof = tracked.cofactors->at(0);
    std::vector<LaurentPoly> cofactors;
    for (std::size_t i = 0; i < gens.size(); ++i)
    {
        LaurentPoly c(vars, ring);
        for (const auto& [mono, coeff] : cof[i].terms())
        {
            Exponent e(vars.size(), 0);
            for (std::size_t k = 0; k < m; ++k)
                e[effective[k]] = mono[k] - mono[m];
            c.add_term(e, coeff);
        }
        Exponent shift(vars.size(), 0);
        Exponent lo = gens[i].min_exponents();
        for (auto k : effective)
            shift[k] = -lo[k];
        cofactors.push_back(c.shifted(shift));
    }
    verify_cofactors(gens, cofactors);
    result.cofactors = std::move(cofactors);
    return result;
}

} // namespace

Polynomial to_polynomial(const LaurentPoly& p, const std::vector<std::size_t>& variables)
{
    Exponent lo = p.min_exponents();
    Polynomial out(variables.size() + 1, p.ring());
    for (const auto& [e, c] : p.terms())
    {
        Monomial m(variables.size() + 1, 0);
        for (std::size_t k = 0; k < variables.size(); ++k)
            m[k] = e[variables[k]] - lo[variables[k]];
        out.add_term(m, c);
    }
    return out;
}

MembershipResult ideal_contains_one(const std::vector<LaurentPoly>& gens, Ring ring, MembershipMethod method)
{
    if (!is_field(ring))
        throw Error(ErrorKind::UnsupportedRing, "ideal membership needs a field coefficient ring (GF2 or Rational)");
    std::vector<LaurentPoly> nonzero;
    for (const auto& g : gens)
    {
        if (!nonzero.empty() && g.variables() != nonzero[0].variables())
            throw Error(ErrorKind::VariableMismatch, "generators live in different Laurent rings");
        LaurentPoly r = g.with_ring(ring);
        if (!r.is_zero())
            nonzero.push_back(std::move(r));
    }
    if (nonzero.empty())
    {
        MembershipResult zero;
        zero.method = method == MembershipMethod::Auto ? MembershipMethod::UnivariateGcd : method;
        if (!gens.empty())
            zero.generator = LaurentPoly(gens[0].variables(), ring);
        return zero;
    }

    const std::size_t n = nonzero[0].variables().size();
    std::vector<std::size_t> effective;
    for (std::size_t i = 0; i < n; ++i)
    {
        bool used = std::any_of(nonzero.begin(), nonzero.end(), [&](const LaurentPoly& g) {
            return std::any_of(g.terms().begin(), g.terms().end(), [&](const auto& t) { return t.first[i] != 0; });
        });
        if (used)
            effective.push_back(i);
    }

    if (method == MembershipMethod::Auto)
        method = effective.size() <= 1 ? MembershipMethod::UnivariateGcd : MembershipMethod::Groebner;
    if (method == MembershipMethod::UnivariateGcd)
    {
        if (effective.size() > 1)
            throw Error(ErrorKind::InvalidInput, "gcd method needs generators in a single variable");
        std::optional<std::size_t> var;
        if (!effective.empty())
            var = effective[0];
        return univariate_membership(nonzero, ring, var);
    }
    return groebner_membership(nonzero, ring, effective);
}

} // namespace twistkit
