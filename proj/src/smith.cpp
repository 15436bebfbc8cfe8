#include "z2coh/smith.hpp"

#include <optional>
#include <utility>

namespace z2coh {

namespace {

Integer abs_value(const Integer& x)
{
    return x < 0 ? Integer(-x) : x;
}

/// Working state: the matrix being diagonalized plus the four transforms.
class SmithState
{
    public:
        explicit SmithState(const IntegerMatrix& a)
            : d(a),
              u(IntegerMatrix::identity(a.rows())),
              u_inv(IntegerMatrix::identity(a.rows())),
              v(IntegerMatrix::identity(a.cols())),
              v_inv(IntegerMatrix::identity(a.cols()))
        {
        }

        void swap_rows(std::size_t a, std::size_t b)
        {
            d.swap_rows(a, b);
            u.swap_rows(a, b);
            u_inv.swap_cols(a, b);
        }

        void swap_cols(std::size_t a, std::size_t b)
        {
            d.swap_cols(a, b);
            v.swap_cols(a, b);
            v_inv.swap_rows(a, b);
        }

        // row[target] += c * row[source]
        void add_row(std::size_t target, std::size_t source, const Integer& c)
        {
            d.add_row_multiple(target, source, c);
            u.add_row_multiple(target, source, c);
            u_inv.add_col_multiple(source, target, -c);
        }

        // col[target] += c * col[source]
        void add_col(std::size_t target, std::size_t source, const Integer& c)
        {
            d.add_col_multiple(target, source, c);
            v.add_col_multiple(target, source, c);
            v_inv.add_row_multiple(source, target, -c);
        }

        void negate_row(std::size_t i)
        {
            d.negate_row(i);
            u.negate_row(i);
            u_inv.negate_col(i);
        }

        IntegerMatrix d;
        IntegerMatrix u;
        IntegerMatrix u_inv;
        IntegerMatrix v;
        IntegerMatrix v_inv;
};

struct Position
{
    std::size_t row;
    std::size_t col;
};

std::optional<Position> smallest_entry(const IntegerMatrix& d, std::size_t t)
{
    std::optional<Position> best;
    Integer best_abs;
    for (std::size_t i = t; i < d.rows(); ++i)
    {
        for (std::size_t j = t; j < d.cols(); ++j)
        {
            const Integer& x = d(i, j);
            if (x == 0)
                continue;
            Integer ax = abs_value(x);
            if (!best || ax < best_abs)
            {
                best = Position{i, j};
                best_abs = std::move(ax);
            }
        }
    }
    return best;
}

// Clears column t below the pivot. Returns the row holding the smallest
// nonzero remainder, if any remain.
std::optional<std::size_t> clear_column(SmithState& s, std::size_t t)
{
    std::optional<std::size_t> smallest;
    Integer smallest_abs;
    for (std::size_t i = t + 1; i < s.d.rows(); ++i)
    {
        if (s.d(i, t) == 0)
            continue;
        Integer q = s.d(i, t) / s.d(t, t);
        s.add_row(i, t, -q);
        if (s.d(i, t) != 0)
        {
            Integer a = abs_value(s.d(i, t));
            if (!smallest || a < smallest_abs)
            {
                smallest = i;
                smallest_abs = std::move(a);
            }
        }
    }
    return smallest;
}

std::optional<std::size_t> clear_row(SmithState& s, std::size_t t)
{
    std::optional<std::size_t> smallest;
    Integer smallest_abs;
    for (std::size_t j = t + 1; j < s.d.cols(); ++j)
    {
        if (s.d(t, j) == 0)
            continue;
        Integer q = s.d(t, j) / s.d(t, t);
        s.add_col(j, t, -q);
        if (s.d(t, j) != 0)
        {
            Integer a = abs_value(s.d(t, j));
            if (!smallest || a < smallest_abs)
            {
                smallest = j;
                smallest_abs = std::move(a);
            }
        }
    }
    return smallest;
}

std::optional<std::size_t> non_divisible_row(const IntegerMatrix& d, std::size_t t)
{
    const Integer& p = d(t, t);
    for (std::size_t i = t + 1; i < d.rows(); ++i)
    {
        for (std::size_t j = t + 1; j < d.cols(); ++j)
        {
            if (d(i, j) != 0 && d(i, j) % p != 0)
                return i;
        }
    }
    return std::nullopt;
}

}   // namespace

std::vector<Integer> SmithDecomposition::invariant_factors() const
{
    std::vector<Integer> out;
    out.reserve(rank);
    for (std::size_t i = 0; i < rank; ++i)
        out.push_back(d(i, i));
    return out;
}

SmithDecomposition smith_normal_form(const IntegerMatrix& a)
{
    SmithState s(a);
    const std::size_t limit = std::min(a.rows(), a.cols());
    std::size_t t = 0;
    for (; t < limit; ++t)
    {
        auto pivot = smallest_entry(s.d, t);
        if (!pivot)
            break;
        s.swap_rows(t, pivot->row);
        s.swap_cols(t, pivot->col);

        while (true)
        {
            if (auto r = clear_column(s, t))
            {
                s.swap_rows(t, *r);
                continue;
            }
            if (auto c = clear_row(s, t))
            {
                s.swap_cols(t, *c);
                continue;
            }
            // Pivot now isolated; enforce d_t | every remaining entry.
            if (auto i = non_divisible_row(s.d, t))
            {
                s.add_row(t, *i, 1);
                continue;
            }
            break;
        }
        if (s.d(t, t) < 0)
            s.negate_row(t);
    }

    SmithDecomposition out;
    out.rank = t;
    out.d = std::move(s.d);
    out.u = std::move(s.u);
    out.u_inv = std::move(s.u_inv);
    out.v = std::move(s.v);
    out.v_inv = std::move(s.v_inv);
    return out;
}

IntegerMatrix kernel_basis(const IntegerMatrix& a)
{
    SmithDecomposition snf = smith_normal_form(a);
    return snf.v.column_range(snf.rank, a.cols());
}

}   // namespace z2coh
