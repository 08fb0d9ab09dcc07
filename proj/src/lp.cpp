#include "twistkit/lp.hpp"

#include "twistkit/error.hpp"

namespace twistkit
{

namespace
{

class Tableau
{
public:
    // Columns: [x+ (n) | x- (n) | slack/surplus (one per inequality) | artificial (m) | rhs]
    explicit Tableau(const LinearSystem& sys) : n_(sys.variables)
    {
        const std::size_t m = sys.constraints.size();
        std::size_t inequalities = 0;
        for (const auto& c : sys.constraints)
            if (c.relation != Relation::Equal)
                ++inequalities;
        slack_begin_ = 2 * n_;
        artificial_begin_ = slack_begin_ + inequalities;
        columns_ = artificial_begin_ + m;
        rows_.assign(m, std::vector<Rational>(columns_ + 1, Rational(0)));
        basis_.assign(m, 0);

        std::size_t slack = slack_begin_;
        for (std::size_t r = 0; r < m; ++r)
        {
            const auto& c = sys.constraints[r];
            if (c.coeffs.size() != n_)
                throw Error(ErrorKind::DimensionMismatch, "constraint length differs from variable count");
            Rational sign = c.rhs < 0 ? -1 : 1;
            auto& row = rows_[r];
            for (std::size_t j = 0; j < n_; ++j)
            {
                row[j] = sign * c.coeffs[j];
                row[n_ + j] = -sign * c.coeffs[j];
            }
            if (c.relation == Relation::GreaterEqual)
                row[slack++] = -sign;
            else if (c.relation == Relation::LessEqual)
                row[slack++] = sign;
            row[artificial_begin_ + r] = 1;
            row[columns_] = sign * c.rhs;
            basis_[r] = artificial_begin_ + r;
        }
    }

    // Phase 1; returns false when infeasible.
    bool find_feasible_basis()
    {
        std::vector<Rational> cost(columns_, Rational(0));
        for (std::size_t j = artificial_begin_; j < columns_; ++j)
            cost[j] = 1;
        set_objective(cost);
        if (run(columns_) != LpStatus::Optimal)
            return false; // phase 1 is bounded below by 0
        if (objective_[columns_] != 0)
            return false;
        drive_out_artificials();
        return true;
    }

    LpStatus optimize(const std::vector<Rational>& objective)
    {
        std::vector<Rational> cost(columns_, Rational(0));
        for (std::size_t j = 0; j < n_; ++j)
        {
            cost[j] = objective[j];
            cost[n_ + j] = -objective[j];
        }
        set_objective(cost);
        return run(artificial_begin_);
    }

    Rational value() const { return -objective_[columns_]; }

    std::vector<Rational> point() const
    {
        std::vector<Rational> values(columns_, Rational(0));
        for (std::size_t r = 0; r < rows_.size(); ++r)
            values[basis_[r]] = rows_[r][columns_];
        std::vector<Rational> x(n_);
        for (std::size_t j = 0; j < n_; ++j)
            x[j] = values[j] - values[n_ + j];
        return x;
    }

private:
    std::size_t n_;
    std::size_t slack_begin_ = 0, artificial_begin_ = 0, columns_ = 0;
    std::vector<std::vector<Rational>> rows_;
    std::vector<std::size_t> basis_;
    std::vector<Rational> objective_;

    void set_objective(const std::vector<Rational>& cost)
    {
        objective_.assign(columns_ + 1, Rational(0));
        for (std::size_t j = 0; j < columns_; ++j)
            objective_[j] = cost[j];
        for (std::size_t r = 0; r < rows_.size(); ++r)
        {
            const Rational cb = cost[basis_[r]];
            if (cb == 0)
                continue;
            for (std::size_t j = 0; j <= columns_; ++j)
                objective_[j] -= cb * rows_[r][j];
        }
    }

    void pivot(std::size_t r, std::size_t c)
    {
        auto& prow = rows_[r];
        const Rational p = prow[c];
        for (auto& v : prow)
            v /= p;
        auto eliminate = [&](std::vector<Rational>& row) {
            const Rational f = row[c];
            if (f == 0)
                return;
            for (std::size_t j = 0; j <= columns_; ++j)
                if (prow[j] != 0)
                    row[j] -= f * prow[j];
        };
        for (std::size_t i = 0; i < rows_.size(); ++i)
            if (i != r)
                eliminate(rows_[i]);
        eliminate(objective_);
        basis_[r] = c;
    }

    // Bland's rule over columns [0, limit).
    LpStatus run(std::size_t limit)
    {
        for (;;)
        {
            std::size_t entering = limit;
            for (std::size_t j = 0; j < limit; ++j)
            {
                if (objective_[j] < 0)
                {
                    entering = j;
                    break;
                }
            }
            if (entering == limit)
                return LpStatus::Optimal;
            std::size_t leaving = rows_.size();
            Rational best;
            for (std::size_t r = 0; r < rows_.size(); ++r)
            {
                if (rows_[r][entering] <= 0)
                    continue;
                Rational ratio = rows_[r][columns_] / rows_[r][entering];
                if (leaving == rows_.size() || ratio < best ||
                    (ratio == best && basis_[r] < basis_[leaving]))
                {
                    leaving = r;
                    best = ratio;
                }
            }
            if (leaving == rows_.size())
                return LpStatus::Unbounded;
            pivot(leaving, entering);
        }
    }

    void drive_out_artificials()
    {
        for (std::size_t r = 0; r < rows_.size();)
        {
            if (basis_[r] < artificial_begin_)
            {
                ++r;
                continue;
            }
            std::size_t c = 0;
            while (c < artificial_begin_ && rows_[r][c] == 0)
                ++c;
            if (c < artificial_begin_)
            {
                pivot(r, c);
                ++r;
            }
            else
            {
                // redundant equality
                rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(r));
                basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
            }
        }
    }
};

} // namespace

LpResult minimize(const LinearSystem& system, const std::vector<Rational>& objective)
{
    if (objective.size() != system.variables)
        throw Error(ErrorKind::DimensionMismatch, "objective length differs from variable count");
    Tableau t(system);
    LpResult result;
    if (!t.find_feasible_basis())
    {
        result.status = LpStatus::Infeasible;
        return result;
    }
    result.status = t.optimize(objective);
    result.point = t.point();
    if (result.status == LpStatus::Optimal)
        result.value = t.value();
    return result;
}

std::optional<std::vector<Rational>> feasible_point(const LinearSystem& system)
{
    Tableau t(system);
    if (!t.find_feasible_basis())
        return std::nullopt;
    return t.point();
}

} // namespace twistkit
