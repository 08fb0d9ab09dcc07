#include "oracles.hpp"
#include "twistkit/lp.hpp"

#include <doctest.h>

#include <random>

using namespace twistkit;

namespace
{

LinearConstraint row(std::vector<Rational> c, Relation r, Rational rhs)
{
    return {std::move(c), r, std::move(rhs)};
}

} // namespace

TEST_CASE("minimize on a triangle")
{
    // x >= 0, y >= 0, x + y <= 4; minimize -x - 2y -> -8 at (0, 4)
    LinearSystem s{2, {row({1, 0}, Relation::GreaterEqual, 0), row({0, 1}, Relation::GreaterEqual, 0),
                       row({1, 1}, Relation::LessEqual, 4)}};
    auto r = minimize(s, {-1, -2});
    REQUIRE(r.status == LpStatus::Optimal);
    CHECK(r.value == -8);
    CHECK(r.point == std::vector<Rational>{0, 4});
}

TEST_CASE("free variables, equalities and fractional optima")
{
    // 2x + 3y = 1, x - y >= 0, x <= 5 ; minimize y
    LinearSystem s{2, {row({2, 3}, Relation::Equal, 1), row({1, -1}, Relation::GreaterEqual, 0),
                       row({1, 0}, Relation::LessEqual, 5)}};
    auto r = minimize(s, {0, 1});
    REQUIRE(r.status == LpStatus::Optimal);
    CHECK(r.value == -3);
    auto up = minimize(s, {0, -1});
    REQUIRE(up.status == LpStatus::Optimal);
    CHECK(up.value == Rational(-1, 5));
}

TEST_CASE("infeasible and unbounded")
{
    LinearSystem infeasible{1, {row({1}, Relation::GreaterEqual, 2), row({1}, Relation::LessEqual, 1)}};
    CHECK(minimize(infeasible, {1}).status == LpStatus::Infeasible);
    CHECK_FALSE(feasible_point(infeasible));
    LinearSystem open{1, {row({1}, Relation::GreaterEqual, 2)}};
    CHECK(minimize(open, {-1}).status == LpStatus::Unbounded);
    CHECK(minimize(open, {1}).value == 2);
}

TEST_CASE("redundant equalities")
{
    LinearSystem s{2, {row({1, 1}, Relation::Equal, 2), row({2, 2}, Relation::Equal, 4),
                       row({1, 0}, Relation::GreaterEqual, 0), row({0, 1}, Relation::GreaterEqual, 0)}};
    auto r = minimize(s, {1, 0});
    REQUIRE(r.status == LpStatus::Optimal);
    CHECK(r.value == 0);
}

TEST_CASE("optimum equals the best vertex on random bounded polytopes")
{
    std::mt19937_64 rng(3);
    int compared = 0;
    while (compared < 60)
    {
        ConstraintTable t = oracle::random_table(rng, 3, 5);
        auto verts = oracle::vertices(t);
        if (verts.empty() || !feasible_region_bounded(t).bounded)
            continue;
        LinearSystem s{3, {}};
        for (const auto& r : t.rows)
            s.constraints.push_back(row({r.intersections.begin(), r.intersections.end()}, Relation::GreaterEqual, 0));
        s.constraints.push_back(row({t.maslov.begin(), t.maslov.end()}, Relation::Equal, t.target_maslov));
        std::uniform_int_distribution<int> co(-3, 3);
        std::vector<Rational> obj{co(rng), co(rng), co(rng)};
        auto r = minimize(s, obj);
        REQUIRE(r.status == LpStatus::Optimal);
        Rational best = 0;
        for (std::size_t v = 0; v < verts.size(); ++v)
        {
            Rational val = obj[0] * verts[v][0] + obj[1] * verts[v][1] + obj[2] * verts[v][2];
            if (v == 0 || val < best)
                best = val;
        }
        CHECK(r.value == best);
        ++compared;
    }
}
