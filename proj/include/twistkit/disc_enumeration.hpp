#pragma once

#include "twistkit/error.hpp"
#include "twistkit/kernels.hpp"
#include "twistkit/linalg.hpp"

#include <optional>
#include <string>
#include <vector>

namespace twistkit
{

/// Free basis of H2(M, T) together with the boundary map into H1(T).
/// Column j of `boundary` is the boundary of basis class j; absolute classes
/// (spheres) have a zero column.
struct HomologyBasis
{
    std::vector<std::string> names;
    std::vector<std::string> generators; // multiplicative names; defaults to `names`
    IntMatrix boundary;                  // torus_rank x size

    std::size_t size() const noexcept { return names.size(); }
    std::size_t torus_rank() const noexcept { return boundary.size(); }
    bool is_surface(std::size_t index) const;
    /// Indices of the classes with nonzero boundary, in basis order.
    std::vector<std::size_t> boundary_carrying() const;
    const std::string& generator(std::size_t index) const;

    IntVector boundary_of(const IntVector& coefficients) const;

    /// Distinct names, consistent shapes, and a unimodular boundary
    /// submatrix on the boundary-carrying classes.
    void validate() const;
};

struct ConstraintRow
{
    std::string label;
    IntVector intersections;
};

/// Positivity-of-intersection rows plus the Maslov row for one Lagrangian.
struct ConstraintTable
{
    HomologyBasis basis;
    std::vector<ConstraintRow> rows;
    IntVector maslov;
    std::int64_t target_maslov = 2;

    void validate() const;
    /// Non-fatal issues, e.g. odd Maslov entries.
    std::vector<std::string> warnings() const;
    IntMatrix row_matrix() const;
};

struct DiscClass
{
    IntVector coefficients;
    IntVector boundary_class;

    friend bool operator==(const DiscClass&, const DiscClass&) = default;
};

struct Boundedness
{
    bool bounded = true;
    /// Nonzero primitive integer y with rows * y >= 0 and maslov . y == 0.
    std::optional<IntVector> ray;
};

class UnboundedRegionError : public Error
{
public:
    explicit UnboundedRegionError(IntVector ray);
    const IntVector& ray() const noexcept { return ray_; }

private:
    IntVector ray_;
};

/// Decides boundedness of {x : rows x >= 0, maslov . x = target} exactly.
/// An empty region counts as bounded.
Boundedness feasible_region_bounded(const ConstraintTable& table);

/// Smallest integer box containing the feasible region (LP over each
/// coordinate); nullopt when the region is empty. Requires boundedness.
std::optional<IntegerBox> bounding_box(const ConstraintTable& table);

inline constexpr std::uint64_t max_scan_volume = 200'000'000;

/// All integer solutions, lexicographically sorted. Without `bounds` the
/// region must be bounded (else UnboundedRegionError); with `bounds` the scan
/// is limited to that box.
std::vector<DiscClass> enumerate_candidate_classes(const ConstraintTable& table,
                                                   const std::optional<IntegerBox>& bounds = std::nullopt);

bool satisfies(const ConstraintTable& table, const IntVector& coefficients);

} // namespace twistkit
