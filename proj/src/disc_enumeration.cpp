#include "twistkit/disc_enumeration.hpp"

#include "twistkit/lp.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace twistkit
{

bool HomologyBasis::is_surface(std::size_t index) const
{
    for (const auto& row : boundary)
        if (row.at(index) != 0)
            return false;
    return true;
}

std::vector<std::size_t> HomologyBasis::boundary_carrying() const
{
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < size(); ++j)
        if (!is_surface(j))
            out.push_back(j);
    return out;
}

const std::string& HomologyBasis::generator(std::size_t index) const
{
    return generators.empty() ? names.at(index) : generators.at(index);
}

IntVector HomologyBasis::boundary_of(const IntVector& coefficients) const
{
    if (coefficients.size() != size())
        throw Error(ErrorKind::DimensionMismatch, "class has " + std::to_string(coefficients.size()) +
                                                      " coefficients, basis has " + std::to_string(size()));
    return multiply(boundary, coefficients);
}

void HomologyBasis::validate() const
{
    std::set<std::string> seen(names.begin(), names.end());
    if (seen.size() != names.size())
        throw Error(ErrorKind::InvalidInput, "basis names must be distinct");
    if (!generators.empty())
    {
        if (generators.size() != names.size())
            throw Error(ErrorKind::InvalidInput, "generator names must match the basis size");
        std::set<std::string> gen(generators.begin(), generators.end());
        if (gen.size() != generators.size())
            throw Error(ErrorKind::InvalidInput, "generator names must be distinct");
    }
    for (const auto& row : boundary)
        if (row.size() != size())
            throw Error(ErrorKind::DimensionMismatch, "boundary matrix rows must have one entry per basis class");

    auto carrying = boundary_carrying();
    if (carrying.size() != torus_rank())
        throw Error(ErrorKind::InvalidInput, "boundary map needs exactly " + std::to_string(torus_rank()) +
                                                 " boundary-carrying classes, found " +
                                                 std::to_string(carrying.size()));
    RationalMatrix sub(torus_rank());
    for (std::size_t i = 0; i < torus_rank(); ++i)
        for (auto j : carrying)
            sub[i].emplace_back(boundary[i][j]);
    Rational det = determinant(sub);
    if (det != 1 && det != -1)
        throw Error(ErrorKind::InvalidInput, "boundary submatrix has determinant " + to_string(det) +
                                                 "; a unimodular boundary map is required");
}

void ConstraintTable::validate() const
{
    basis.validate();
    if (maslov.size() != basis.size())
        throw Error(ErrorKind::DimensionMismatch, "Maslov row length differs from basis size");
    for (const auto& r : rows)
        if (r.intersections.size() != basis.size())
            throw Error(ErrorKind::DimensionMismatch, "row '" + r.label + "' length differs from basis size");
}

std::vector<std::string> ConstraintTable::warnings() const
{
    std::vector<std::string> out;
    for (std::size_t j = 0; j < maslov.size(); ++j)
        if (maslov[j] % 2 != 0)
            out.push_back("Maslov index of " + basis.names[j] + " is odd; orientable tori have even Maslov classes");
    return out;
}

IntMatrix ConstraintTable::row_matrix() const
{
    IntMatrix m;
    for (const auto& r : rows)
        m.push_back(r.intersections);
    return m;
}

namespace
{

std::string describe_ray(const IntVector& ray)
{
    std::ostringstream os;
    os << "feasible region is unbounded along ray (";
    for (std::size_t i = 0; i < ray.size(); ++i)
        os << (i ? "," : "") << ray[i];
    os << "); supply bounds";
    return os.str();
}

LinearSystem region_system(const ConstraintTable& table, std::int64_t target)
{
    LinearSystem sys;
    sys.variables = table.basis.size();
    for (const auto& r : table.rows)
    {
        LinearConstraint c;
        for (auto v : r.intersections)
            c.coeffs.emplace_back(v);
        c.relation = Relation::GreaterEqual;
        c.rhs = 0;
        sys.constraints.push_back(std::move(c));
    }
    LinearConstraint eq;
    for (auto v : table.maslov)
        eq.coeffs.emplace_back(v);
    eq.relation = Relation::Equal;
    eq.rhs = target;
    sys.constraints.push_back(std::move(eq));
    return sys;
}

IntVector primitive_integer(const std::vector<Rational>& v)
{
    Integer lcm = 1;
    for (const auto& x : v)
        lcm = boost::multiprecision::lcm(lcm, denominator(x));
    std::vector<Integer> ints;
    Integer g = 0;
    for (const auto& x : v)
    {
        ints.push_back(numerator(x) * (lcm / denominator(x)));
        g = boost::multiprecision::gcd(g, ints.back());
    }
    IntVector out;
    for (auto& x : ints)
        out.push_back(static_cast<std::int64_t>(g == 0 ? x : x / g));
    return out;
}

} // namespace

UnboundedRegionError::UnboundedRegionError(IntVector ray)
    : Error(ErrorKind::UnboundedRegion, describe_ray(ray)), ray_(std::move(ray))
{
}

Boundedness feasible_region_bounded(const ConstraintTable& table)
{
    table.validate();
    if (!feasible_point(region_system(table, table.target_maslov)))
        return {true, std::nullopt};

    // Recession cone {y : rows y >= 0, maslov . y = 0}; it is nonzero iff
    // some coordinate can be normalised to +-1 inside it.
    const std::size_t n = table.basis.size();
    for (std::size_t i = 0; i < n; ++i)
    {
        for (int sign : {1, -1})
        {
            LinearSystem cone = region_system(table, 0);
            LinearConstraint pin;
            pin.coeffs.assign(n, Rational(0));
            pin.coeffs[i] = sign;
            pin.relation = Relation::Equal;
            pin.rhs = 1;
            cone.constraints.push_back(std::move(pin));
            if (auto y = feasible_point(cone))
                return {false, primitive_integer(*y)};
        }
    }
    return {true, std::nullopt};
}

std::optional<IntegerBox> bounding_box(const ConstraintTable& table)
{
    const std::size_t n = table.basis.size();
    LinearSystem sys = region_system(table, table.target_maslov);
    if (!feasible_point(sys))
        return std::nullopt;
    IntegerBox box{IntVector(n), IntVector(n)};
    for (std::size_t i = 0; i < n; ++i)
    {
        std::vector<Rational> objective(n, Rational(0));
        objective[i] = 1;
        LpResult lo = minimize(sys, objective);
        objective[i] = -1;
        LpResult hi = minimize(sys, objective);
        if (lo.status != LpStatus::Optimal || hi.status != LpStatus::Optimal)
            throw UnboundedRegionError(feasible_region_bounded(table).ray.value_or(IntVector(n, 0)));
        box.lower[i] = static_cast<std::int64_t>(ceil_of(lo.value));
        box.upper[i] = static_cast<std::int64_t>(floor_of(-hi.value));
    }
    return box;
}

bool satisfies(const ConstraintTable& table, const IntVector& coefficients)
{
    if (dot(table.maslov, coefficients) != table.target_maslov)
        return false;
    return std::all_of(table.rows.begin(), table.rows.end(),
                       [&](const ConstraintRow& r) { return dot(r.intersections, coefficients) >= 0; });
}

std::vector<DiscClass> enumerate_candidate_classes(const ConstraintTable& table, const std::optional<IntegerBox>& bounds)
{
    table.validate();
    const std::size_t n = table.basis.size();
    if (bounds && bounds->dimension() != n)
        throw Error(ErrorKind::DimensionMismatch, "bounds box dimension differs from basis size");

    std::optional<IntegerBox> box;
    Boundedness b = feasible_region_bounded(table);
    if (b.bounded)
    {
        box = bounding_box(table);
        if (!box)
            return {};
        if (bounds)
        {
            for (std::size_t i = 0; i < n; ++i)
            {
                box->lower[i] = std::max(box->lower[i], bounds->lower[i]);
                box->upper[i] = std::min(box->upper[i], bounds->upper[i]);
            }
        }
    }
    else if (bounds)
        box = bounds;
    else
        throw UnboundedRegionError(*b.ray);

    if (box->volume() > max_scan_volume)
        throw Error(ErrorKind::BoxTooLarge, "scan box holds " + std::to_string(box->volume()) +
                                                " lattice points, limit is " + std::to_string(max_scan_volume));

    IntMatrix rows = table.row_matrix();
    LatticeFilter filter{rows, table.maslov, table.target_maslov};
    std::vector<DiscClass> out;
    for (auto& x : scan_box(filter, *box))
    {
        DiscClass d;
        d.boundary_class = table.basis.boundary_of(x);
        d.coefficients = std::move(x);
        out.push_back(std::move(d));
    }
    return out;
}

} // namespace twistkit
