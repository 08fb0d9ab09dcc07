#pragma once

// Data-parallel inner loops. Each kernel has a plain serial version that is
// kept as the reference the OpenMP version is tested against; both return
// identical, deterministically ordered results.

#include "twistkit/linalg.hpp"
#include "twistkit/rational.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <vector>

namespace twistkit
{

using Exponent = std::vector<std::int32_t>;
using TermMap = std::map<Exponent, Rational>;

struct IntegerBox
{
    IntVector lower;
    IntVector upper;

    std::size_t dimension() const noexcept { return lower.size(); }
    /// Number of lattice points; 0 for an empty box. Saturates at UINT64_MAX.
    std::uint64_t volume() const noexcept;
};

/// Lattice points x in `box` with rows * x >= 0 and equation . x == target.
struct LatticeFilter
{
    const IntMatrix& rows;
    const IntVector& equation;
    std::int64_t target;
};

namespace kernels
{

std::vector<IntVector> scan_box_serial(const LatticeFilter& filter, const IntegerBox& box);
std::vector<IntVector> scan_box_parallel(const LatticeFilter& filter, const IntegerBox& box);

/// Product of two Laurent term maps with coefficients reduced into `ring`.
TermMap multiply_serial(const TermMap& a, const TermMap& b, Ring ring);
TermMap multiply_parallel(const TermMap& a, const TermMap& b, Ring ring);

/// Smallest i in [0, count) with predicate(i); the predicate must be safe to
/// call concurrently.
std::optional<std::size_t> first_match_serial(std::size_t count, const std::function<bool(std::size_t)>& predicate);
std::optional<std::size_t> first_match_parallel(std::size_t count, const std::function<bool(std::size_t)>& predicate);

int max_threads() noexcept;

} // namespace kernels

// Dispatchers used by the library: parallel above a work threshold.
std::vector<IntVector> scan_box(const LatticeFilter& filter, const IntegerBox& box);
TermMap multiply_terms(const TermMap& a, const TermMap& b, Ring ring);
std::optional<std::size_t> first_match(std::size_t count, const std::function<bool(std::size_t)>& predicate);

} // namespace twistkit
