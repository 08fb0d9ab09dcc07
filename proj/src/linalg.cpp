#include "twistkit/linalg.hpp"

#include "twistkit/error.hpp"

#include <utility>

namespace twistkit
{

RationalMatrix to_rational(const IntMatrix& m)
{
    RationalMatrix out(m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
        for (auto v : m[i])
            out[i].emplace_back(v);
    return out;
}

Rational determinant(RationalMatrix m)
{
    const std::size_t n = m.size();
    Rational det = 1;
    for (std::size_t col = 0; col < n; ++col)
    {
        std::size_t pivot = col;
        while (pivot < n && m[pivot][col] == 0)
            ++pivot;
        if (pivot == n)
            return 0;
        if (pivot != col)
        {
            std::swap(m[pivot], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (std::size_t r = col + 1; r < n; ++r)
        {
            if (m[r][col] == 0)
                continue;
            Rational f = m[r][col] / m[col][col];
            for (std::size_t c = col; c < n; ++c)
                m[r][c] -= f * m[col][c];
        }
    }
    return det;
}

std::size_t rank(RationalMatrix m)
{
    if (m.empty())
        return 0;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t col = 0; col < cols && r < rows; ++col)
    {
        std::size_t pivot = r;
        while (pivot < rows && m[pivot][col] == 0)
            ++pivot;
        if (pivot == rows)
            continue;
        std::swap(m[pivot], m[r]);
        for (std::size_t i = r + 1; i < rows; ++i)
        {
            if (m[i][col] == 0)
                continue;
            Rational f = m[i][col] / m[r][col];
            for (std::size_t c = col; c < cols; ++c)
                m[i][c] -= f * m[r][c];
        }
        ++r;
    }
    return r;
}

std::optional<RationalMatrix> inverse(const RationalMatrix& m)
{
    const std::size_t n = m.size();
    RationalMatrix a = m;
    RationalMatrix inv(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i)
    {
        if (a[i].size() != n)
            throw Error(ErrorKind::DimensionMismatch, "inverse of a non-square matrix");
        inv[i][i] = 1;
    }
    for (std::size_t col = 0; col < n; ++col)
    {
        std::size_t pivot = col;
        while (pivot < n && a[pivot][col] == 0)
            ++pivot;
        if (pivot == n)
            return std::nullopt;
        std::swap(a[pivot], a[col]);
        std::swap(inv[pivot], inv[col]);
        Rational p = a[col][col];
        for (std::size_t c = 0; c < n; ++c)
        {
            a[col][c] /= p;
            inv[col][c] /= p;
        }
        for (std::size_t r = 0; r < n; ++r)
        {
            if (r == col || a[r][col] == 0)
                continue;
            Rational f = a[r][col];
            for (std::size_t c = 0; c < n; ++c)
            {
                a[r][c] -= f * a[col][c];
                inv[r][c] -= f * inv[col][c];
            }
        }
    }
    return inv;
}

RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b)
{
    if (a.empty())
        return {};
    const std::size_t inner = b.size();
    const std::size_t cols = b.empty() ? 0 : b[0].size();
    RationalMatrix out(a.size(), std::vector<Rational>(cols, Rational(0)));
    for (std::size_t i = 0; i < a.size(); ++i)
    {
        if (a[i].size() != inner)
            throw Error(ErrorKind::DimensionMismatch, "matrix product shape mismatch");
        for (std::size_t k = 0; k < inner; ++k)
        {
            if (a[i][k] == 0)
                continue;
            for (std::size_t j = 0; j < cols; ++j)
                out[i][j] += a[i][k] * b[k][j];
        }
    }
    return out;
}

RationalMatrix transpose(const RationalMatrix& m)
{
    if (m.empty())
        return {};
    RationalMatrix t(m[0].size(), std::vector<Rational>(m.size()));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m[i].size(); ++j)
            t[j][i] = m[i][j];
    return t;
}

IntMatrix transpose(const IntMatrix& m)
{
    if (m.empty())
        return {};
    IntMatrix t(m[0].size(), IntVector(m.size()));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m[i].size(); ++j)
            t[j][i] = m[i][j];
    return t;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b)
{
    if (a.empty())
        return {};
    const std::size_t cols = b.empty() ? 0 : b[0].size();
    IntMatrix out(a.size(), IntVector(cols, 0));
    for (std::size_t i = 0; i < a.size(); ++i)
    {
        if (a[i].size() != b.size())
            throw Error(ErrorKind::DimensionMismatch, "matrix product shape mismatch");
        for (std::size_t k = 0; k < b.size(); ++k)
            for (std::size_t j = 0; j < cols; ++j)
                out[i][j] += a[i][k] * b[k][j];
    }
    return out;
}

IntVector multiply(const IntMatrix& a, const IntVector& x)
{
    IntVector out(a.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = dot(a[i], x);
    return out;
}

std::optional<IntMatrix> to_integer(const RationalMatrix& m)
{
    IntMatrix out(m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
    {
        for (const auto& v : m[i])
        {
            if (denominator(v) != 1)
                return std::nullopt;
            out[i].push_back(static_cast<std::int64_t>(numerator(v)));
        }
    }
    return out;
}

std::int64_t dot(const IntVector& a, const IntVector& b)
{
    if (a.size() != b.size())
        throw Error(ErrorKind::DimensionMismatch, "dot product of vectors with different lengths");
    std::int64_t s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return s;
}

} // namespace twistkit
