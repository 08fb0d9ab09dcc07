#include "twistkit/kernels.hpp"

#include <algorithm>
#include <atomic>
#include <limits>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace twistkit
{

std::uint64_t IntegerBox::volume() const noexcept
{
    std::uint64_t v = 1;
    for (std::size_t i = 0; i < lower.size(); ++i)
    {
        if (upper[i] < lower[i])
            return 0;
        auto side = static_cast<std::uint64_t>(upper[i] - lower[i]) + 1;
        if (v > std::numeric_limits<std::uint64_t>::max() / side)
            return std::numeric_limits<std::uint64_t>::max();
        v *= side;
    }
    return v;
}

namespace
{

bool accepts(const LatticeFilter& f, const IntVector& x)
{
    std::int64_t eq = 0;
    for (std::size_t j = 0; j < x.size(); ++j)
        eq += f.equation[j] * x[j];
    if (eq != f.target)
        return false;
    for (const auto& row : f.rows)
    {
        std::int64_t s = 0;
        for (std::size_t j = 0; j < x.size(); ++j)
            s += row[j] * x[j];
        if (s < 0)
            return false;
    }
    return true;
}

void add_term(TermMap& out, const Exponent& e, const Rational& c, Ring ring)
{
    auto [it, inserted] = out.try_emplace(e, c);
    if (!inserted)
        it->second += c;
    if (ring == Ring::GF2)
        it->second = normalize(it->second, ring);
    if (it->second == 0)
        out.erase(it);
}

Exponent add_exponents(const Exponent& a, const Exponent& b)
{
    Exponent e(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        e[i] = a[i] + b[i];
    return e;
}

} // namespace

namespace kernels
{

int max_threads() noexcept
{
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

std::vector<IntVector> scan_box_serial(const LatticeFilter& filter, const IntegerBox& box)
{
    std::vector<IntVector> hits;
    const std::size_t n = box.dimension();
    if (box.volume() == 0)
        return hits;
    if (n == 0)
    {
        if (accepts(filter, {}))
            hits.emplace_back();
        return hits;
    }
    IntVector x = box.lower;
    for (;;)
    {
        if (accepts(filter, x))
            hits.push_back(x);
        std::size_t i = n;
        while (i > 0)
        {
            --i;
            if (x[i] < box.upper[i])
            {
                ++x[i];
                break;
            }
            x[i] = box.lower[i];
            if (i == 0)
                return hits; // odometer wrapped: hits are already lexicographic
        }
    }
}

std::vector<IntVector> scan_box_parallel(const LatticeFilter& filter, const IntegerBox& box)
{
    const std::size_t n = box.dimension();
    const std::uint64_t volume = box.volume();
    if (volume == 0 || n == 0)
        return scan_box_serial(filter, box);

    std::vector<std::vector<IntVector>> per_thread(static_cast<std::size_t>(max_threads()));
    const auto total = static_cast<std::int64_t>(volume);

#pragma omp parallel
    {
#ifdef _OPENMP
        auto& local = per_thread[static_cast<std::size_t>(omp_get_thread_num())];
#else
        auto& local = per_thread[0];
#endif
        IntVector x(n);
#pragma omp for schedule(static)
        for (std::int64_t idx = 0; idx < total; ++idx)
        {
            // mixed-radix decode, last coordinate fastest
            auto rem = static_cast<std::uint64_t>(idx);
            for (std::size_t i = n; i-- > 0;)
            {
                auto side = static_cast<std::uint64_t>(box.upper[i] - box.lower[i]) + 1;
                x[i] = box.lower[i] + static_cast<std::int64_t>(rem % side);
                rem /= side;
            }
            if (accepts(filter, x))
                local.push_back(x);
        }
    }

    std::vector<IntVector> hits;
    for (auto& part : per_thread)
        hits.insert(hits.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
    std::sort(hits.begin(), hits.end());
    return hits;
}

TermMap multiply_serial(const TermMap& a, const TermMap& b, Ring ring)
{
    TermMap out;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b)
            add_term(out, add_exponents(ea, eb), normalize(ca * cb, ring), ring);
    return out;
}

TermMap multiply_parallel(const TermMap& a, const TermMap& b, Ring ring)
{
    std::vector<std::pair<Exponent, Rational>> left(a.begin(), a.end());
    std::vector<std::pair<Exponent, Rational>> right(b.begin(), b.end());
    std::vector<TermMap> partial(static_cast<std::size_t>(max_threads()));
    const auto count = static_cast<std::int64_t>(left.size());

#pragma omp parallel
    {
#ifdef _OPENMP
        auto& local = partial[static_cast<std::size_t>(omp_get_thread_num())];
#else
        auto& local = partial[0];
#endif
#pragma omp for schedule(dynamic, 4)
        for (std::int64_t i = 0; i < count; ++i)
        {
            const auto& [ea, ca] = left[static_cast<std::size_t>(i)];
            for (const auto& [eb, cb] : right)
                add_term(local, add_exponents(ea, eb), normalize(ca * cb, ring), ring);
        }
    }

    TermMap out;
    for (auto& part : partial)
        for (auto& [e, c] : part)
            add_term(out, e, c, ring);
    return out;
}

std::optional<std::size_t> first_match_serial(std::size_t count, const std::function<bool(std::size_t)>& predicate)
{
    for (std::size_t i = 0; i < count; ++i)
        if (predicate(i))
            return i;
    return std::nullopt;
}

std::optional<std::size_t> first_match_parallel(std::size_t count, const std::function<bool(std::size_t)>& predicate)
{
    std::atomic<std::size_t> best{count};
    const auto total = static_cast<std::int64_t>(count);

#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t i = 0; i < total; ++i)
    {
        auto idx = static_cast<std::size_t>(i);
        if (idx >= best.load(std::memory_order_relaxed))
            continue;
        if (predicate(idx))
        {
            std::size_t current = best.load();
            while (idx < current && !best.compare_exchange_weak(current, idx))
            {
            }
        }
    }

    if (best.load() == count)
        return std::nullopt;
    return best.load();
}

} // namespace kernels

namespace
{
constexpr std::uint64_t parallel_scan_threshold = 1u << 14;
constexpr std::size_t parallel_multiply_threshold = 1u << 12; // term-pair count
constexpr std::size_t parallel_search_threshold = 64;
} // namespace

std::vector<IntVector> scan_box(const LatticeFilter& filter, const IntegerBox& box)
{
    if (kernels::max_threads() > 1 && box.volume() >= parallel_scan_threshold)
        return kernels::scan_box_parallel(filter, box);
    return kernels::scan_box_serial(filter, box);
}

TermMap multiply_terms(const TermMap& a, const TermMap& b, Ring ring)
{
    if (kernels::max_threads() > 1 && a.size() * b.size() >= parallel_multiply_threshold)
        return kernels::multiply_parallel(a, b, ring);
    return kernels::multiply_serial(a, b, ring);
}

std::optional<std::size_t> first_match(std::size_t count, const std::function<bool(std::size_t)>& predicate)
{
    if (kernels::max_threads() > 1 && count >= parallel_search_threshold)
        return kernels::first_match_parallel(count, predicate);
    return kernels::first_match_serial(count, predicate);
}

} // namespace twistkit
