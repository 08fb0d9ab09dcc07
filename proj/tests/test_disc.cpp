#include "oracles.hpp"
#include "twistkit/disc_enumeration.hpp"
#include "twistkit/presets.hpp"

#include <doctest.h>

#include <random>

using namespace twistkit;

namespace
{

std::vector<IntVector> coefficients(const std::vector<DiscClass>& classes)
{
    std::vector<IntVector> out;
    for (const auto& d : classes)
        out.push_back(d.coefficients);
    return out;
}

ConstraintTable simple_table(IntMatrix rows, IntVector maslov, std::int64_t target = 2)
{
    ConstraintTable t;
    for (std::size_t i = 0; i < maslov.size(); ++i)
        t.basis.names.push_back("x" + std::to_string(i));
    t.basis.boundary = {IntVector(maslov.size(), 0)};
    t.basis.boundary[0][0] = 1;
    for (std::size_t r = 0; r < rows.size(); ++r)
        t.rows.push_back({"r" + std::to_string(r), rows[r]});
    t.maslov = std::move(maslov);
    t.target_maslov = target;
    return t;
}

} // namespace

TEST_CASE("theta preset yields the five candidate classes")
{
    auto t = presets::theta_s2xs2_table();
    CHECK(feasible_region_bounded(t).bounded);
    auto classes = enumerate_candidate_classes(t);
    std::vector<IntVector> expected{{-1, -1, 1, 0}, {-1, 0, 0, 1}, {-1, 0, 1, 0}, {-1, 1, 0, 1}, {1, 0, 0, 0}};
    CHECK(coefficients(classes) == expected);
    for (const auto& d : classes)
    {
        CHECK(satisfies(t, d.coefficients));
        CHECK(d.boundary_class == IntVector{d.coefficients[0], d.coefficients[1]});
    }
    CHECK(t.warnings().empty());
}

TEST_CASE("theta preset symmetry: swapping S1 and S2 data flips a_tau")
{
    auto t = presets::theta_s2xs2_table();
    // Swap columns S1 <-> S2 and negate D_tau; rows are permuted accordingly.
    ConstraintTable s = t;
    for (auto& r : s.rows)
    {
        std::swap(r.intersections[2], r.intersections[3]);
        r.intersections[1] = -r.intersections[1];
    }
    std::swap(s.maslov[2], s.maslov[3]);
    auto a = coefficients(enumerate_candidate_classes(t));
    auto b = coefficients(enumerate_candidate_classes(s));
    for (auto& x : b)
    {
        std::swap(x[2], x[3]);
        x[1] = -x[1];
    }
    std::sort(b.begin(), b.end());
    CHECK(a == b);
}

TEST_CASE("result does not depend on row order or generous bounds")
{
    auto t = presets::theta_s2xs2_table();
    auto base = enumerate_candidate_classes(t);
    std::reverse(t.rows.begin(), t.rows.end());
    CHECK(enumerate_candidate_classes(t) == base);
    CHECK(enumerate_candidate_classes(t, IntegerBox{{-5, -5, -5, -5}, {5, 5, 5, 5}}) == base);
}

TEST_CASE("small tables")
{
    auto single = simple_table({{1}}, {2});
    CHECK(coefficients(enumerate_candidate_classes(single)) == std::vector<IntVector>{{1}});

    auto open = simple_table({}, {2, 0});
    auto b = feasible_region_bounded(open);
    CHECK_FALSE(b.bounded);
    REQUIRE(b.ray);
    CHECK(*b.ray == IntVector{0, 1});
    try
    {
        enumerate_candidate_classes(open);
        FAIL("expected UnboundedRegion");
    }
    catch (const UnboundedRegionError& e)
    {
        CHECK(e.kind() == ErrorKind::UnboundedRegion);
        CHECK(e.ray() == IntVector{0, 1});
    }
    auto boxed = enumerate_candidate_classes(open, IntegerBox{{-2, -2}, {2, 2}});
    CHECK(coefficients(boxed) == std::vector<IntVector>{{1, -2}, {1, -1}, {1, 0}, {1, 1}, {1, 2}});

    auto tri = simple_table({{1, 0}, {0, 1}, {-1, -1}}, {2, 2});
    CHECK(feasible_region_bounded(tri).bounded);

    auto empty = simple_table({{1}}, {-2});
    CHECK(feasible_region_bounded(empty).bounded);
    CHECK(enumerate_candidate_classes(empty).empty());
}

TEST_CASE("validation")
{
    auto t = presets::theta_s2xs2_table();
    t.maslov.pop_back();
    CHECK_THROWS_AS(t.validate(), Error);
    auto u = presets::theta_s2xs2_table();
    u.basis.boundary = {{2, 0, 0, 0}, {0, 1, 0, 0}};
    CHECK_THROWS_AS(u.validate(), Error);
    auto odd = presets::theta_s2xs2_table();
    odd.maslov[2] = 3;
    CHECK(odd.warnings().size() == 1);
}

TEST_CASE("bounding box matches vertex enumeration")
{
    std::mt19937_64 rng(5);
    int compared = 0;
    while (compared < 50)
    {
        auto t = oracle::random_table(rng);
        if (!feasible_region_bounded(t).bounded)
            continue;
        auto verts = oracle::vertices(t);
        auto box = bounding_box(t);
        CHECK(box.has_value() == !verts.empty());
        if (!box)
            continue;
        for (std::size_t i = 0; i < 3; ++i)
        {
            Rational lo = verts[0][i], hi = verts[0][i];
            for (const auto& v : verts)
            {
                lo = std::min(lo, v[i]);
                hi = std::max(hi, v[i]);
            }
            CHECK(box->lower[i] == ceil_of(lo));
            CHECK(box->upper[i] == floor_of(hi));
        }
        ++compared;
    }
}

TEST_CASE("enumerator agrees with the box-scan oracle on random tables")
{
    std::mt19937_64 rng(9);
    int bounded = 0, unbounded = 0;
    while (bounded < 50 || unbounded < 20)
    {
        auto t = oracle::random_table(rng);
        auto b = feasible_region_bounded(t);
        IntegerBox box{{-3, -3, -3}, {3, 3, 3}};
        if (b.bounded)
        {
            if (bounded >= 50)
                continue;
            ++bounded;
            auto got = enumerate_candidate_classes(t);
            // oracle box from the vertex hull, widened by one
            auto verts = oracle::vertices(t);
            if (verts.empty())
            {
                CHECK(got.empty());
                continue;
            }
            IntegerBox hull{{0, 0, 0}, {0, 0, 0}};
            for (std::size_t i = 0; i < 3; ++i)
            {
                Rational lo = verts[0][i], hi = verts[0][i];
                for (const auto& v : verts)
                {
                    lo = std::min(lo, v[i]);
                    hi = std::max(hi, v[i]);
                }
                hull.lower[i] = static_cast<std::int64_t>(floor_of(lo)) - 1;
                hull.upper[i] = static_cast<std::int64_t>(ceil_of(hi)) + 1;
            }
            CHECK(coefficients(got) == oracle::box_scan(t, hull));
            CHECK(coefficients(enumerate_candidate_classes(t, box)) == oracle::box_scan(t, box));
        }
        else
        {
            if (unbounded >= 20)
                continue;
            ++unbounded;
            REQUIRE(b.ray);
            // the ray lies in the recession cone
            CHECK(dot(t.maslov, *b.ray) == 0);
            for (const auto& r : t.rows)
                CHECK(dot(r.intersections, *b.ray) >= 0);
            CHECK_THROWS_AS(enumerate_candidate_classes(t), UnboundedRegionError);
            CHECK(coefficients(enumerate_candidate_classes(t, box)) == oracle::box_scan(t, box));
        }
    }
}
