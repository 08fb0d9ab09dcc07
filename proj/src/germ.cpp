#include "twistkit/germ.hpp"

#include "twistkit/error.hpp"
#include "twistkit/kernels.hpp"

#include <algorithm>
#include <set>

namespace twistkit
{

void Germ::validate() const
{
    if (dim == 0)
        throw Error(ErrorKind::InvalidInput, "germ dimension must be positive");
    if (covectors.empty())
        throw Error(ErrorKind::InvalidInput, "germ needs at least one covector");
    for (const auto& a : covectors)
        if (a.size() != dim)
            throw Error(ErrorKind::DimensionMismatch, "covector length differs from germ dimension");
    std::set<IntVector> seen(covectors.begin(), covectors.end());
    if (seen.size() != covectors.size())
        throw Error(ErrorKind::InvalidInput, "germ covectors must be distinct");
}

std::optional<Rational> germ_value(const Germ& g, const std::vector<Rational>& xi)
{
    if (xi.size() != g.dim)
        throw Error(ErrorKind::DimensionMismatch, "point has " + std::to_string(xi.size()) +
                                                      " coordinates, germ dimension is " + std::to_string(g.dim));
    if (std::all_of(xi.begin(), xi.end(), [](const Rational& x) { return x == 0; }))
        return std::nullopt;
    std::optional<Rational> best;
    for (const auto& a : g.covectors)
    {
        Rational s = 0;
        for (std::size_t i = 0; i < g.dim; ++i)
            s += a[i] * xi[i];
        if (!best || s < *best)
            best = s;
    }
    return g.constant + *best;
}

Germ transform(const Germ& g, const IntMatrix& a)
{
    Germ out = g;
    IntMatrix at = transpose(a);
    for (auto& c : out.covectors)
        c = multiply(at, c);
    return out;
}

const char* equivalence_name(Equivalence e) noexcept
{
    switch (e)
    {
    case Equivalence::Equivalent: return "Equivalent";
    case Equivalence::NotEquivalent: return "NotEquivalent";
    case Equivalence::Indeterminate: return "Indeterminate";
    }
    return "?";
}

namespace
{

// Indices of the first linearly independent covectors, greedily.
std::vector<std::size_t> spanning_subset(const Germ& g)
{
    std::vector<std::size_t> picked;
    RationalMatrix rows;
    for (std::size_t i = 0; i < g.covectors.size() && picked.size() < g.dim; ++i)
    {
        RationalMatrix trial = rows;
        trial.emplace_back(g.covectors[i].begin(), g.covectors[i].end());
        if (rank(trial) == trial.size())
        {
            rows = std::move(trial);
            picked.push_back(i);
        }
    }
    return picked;
}

} // namespace

EquivalenceResult germ_equivalent(const Germ& g1, const Germ& g2)
{
    g1.validate();
    g2.validate();
    if (g1.dim != g2.dim)
        throw Error(ErrorKind::DimensionMismatch, "germs have different dimensions");
    const std::size_t n = g1.dim;
    const std::size_t m = g1.covectors.size();

    EquivalenceResult result;
    if (m != g2.covectors.size())
    {
        result.status = Equivalence::NotEquivalent;
        result.reason = "covector counts " + std::to_string(m) + " ≠ " + std::to_string(g2.covectors.size());
        return result;
    }
    if (g1.constant != g2.constant)
    {
        result.status = Equivalence::NotEquivalent;
        result.reason = "constants " + to_string(g1.constant) + " ≠ " + to_string(g2.constant);
        return result;
    }
    auto span1 = spanning_subset(g1);
    auto span2 = spanning_subset(g2);
    if (span1.size() < n || span2.size() < n)
    {
        result.status = Equivalence::Indeterminate;
        result.reason = std::string(error_name(ErrorKind::DegenerateSpan)) + ": covectors do not span";
        return result;
    }

    RationalMatrix m1;
    for (auto i : span1)
        m1.emplace_back(g1.covectors[i].begin(), g1.covectors[i].end());
    const RationalMatrix m1_inv = *inverse(m1);
    const std::set<IntVector> target(g2.covectors.begin(), g2.covectors.end());

    std::size_t total = 1;
    for (std::size_t k = 0; k < n; ++k)
    {
        if (total > 50'000'000 / m)
            throw Error(ErrorKind::InvalidInput, "germ equivalence search space is too large");
        total *= m;
    }

    // Tuple index -> (b_1..b_n) in mixed radix m; rows of B are g2 covectors.
    auto candidate = [&](std::size_t index) -> std::optional<IntMatrix> {
        std::vector<std::size_t> pick(n);
        for (std::size_t k = 0; k < n; ++k)
        {
            pick[k] = index % m;
            index /= m;
        }
        std::vector<std::size_t> sorted = pick;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            return std::nullopt;
        RationalMatrix b;
        for (auto p : pick)
            b.emplace_back(g2.covectors[p].begin(), g2.covectors[p].end());
        auto a = to_integer(multiply(m1_inv, b));
        if (!a)
            return std::nullopt;
        Rational det = determinant(to_rational(*a));
        if (det != 1 && det != -1)
            return std::nullopt;
        Germ image = transform(g1, *a);
        std::set<IntVector> got(image.covectors.begin(), image.covectors.end());
        if (got != target)
            return std::nullopt;
        return a;
    };

    auto hit = first_match(total, [&](std::size_t index) { return candidate(index).has_value(); });
    if (!hit)
    {
        result.status = Equivalence::NotEquivalent;
        result.reason = "no unimodular integer matrix maps the covector sets onto each other";
        return result;
    }
    result.status = Equivalence::Equivalent;
    result.witness = candidate(*hit);
    result.reason = "unimodular witness found";
    return result;
}

} // namespace twistkit
