#pragma once

#include "twistkit/rational.hpp"

#include <optional>
#include <vector>

namespace twistkit
{

enum class Relation
{
    GreaterEqual,
    Equal,
    LessEqual,
};

struct LinearConstraint
{
    std::vector<Rational> coeffs;
    Relation relation = Relation::GreaterEqual;
    Rational rhs = 0;
};

/// A system of linear constraints over free rational variables.
struct LinearSystem
{
    std::size_t variables = 0;
    std::vector<LinearConstraint> constraints;
};

enum class LpStatus
{
    Optimal,
    Infeasible,
    Unbounded,
};

struct LpResult
{
    LpStatus status = LpStatus::Infeasible;
    Rational value = 0;
    std::vector<Rational> point; // an optimal (or, for Unbounded, feasible) point
};

/// Exact two-phase simplex with Bland's rule. Small dense problems only.
LpResult minimize(const LinearSystem& system, const std::vector<Rational>& objective);

std::optional<std::vector<Rational>> feasible_point(const LinearSystem& system);

} // namespace twistkit
