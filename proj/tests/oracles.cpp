#include "oracles.hpp"

#include "z2coh/borel.hpp"
#include "z2coh/smith.hpp"

namespace oracle {

using z2coh::Integer;

namespace {

// rows: (T^t - eps I) and one selector row per excluded cell
IntegerMatrix constraints(const Z2CwComplex& x, int k, int eps, const std::vector<std::vector<bool>>& excluded)
{
    const std::size_t m = x.num_cells(k);
    IntegerMatrix c = x.action_matrix(k).transpose() - eps * IntegerMatrix::identity(m);
    const auto uk = static_cast<std::size_t>(k);
    for (std::size_t i = 0; i < m; ++i)
    {
        if (uk < excluded.size() && excluded[uk][i])
        {
            IntegerMatrix row(1, m);
            row(0, i) = 1;
            c = c.vstack(row);
        }
    }
    return c;
}

IntegerMatrix delta(const Z2CwComplex& x, int k)
{
    return x.boundary(k + 1).transpose();
}

}   // namespace

FgAbGroup invariant_cochain_cohomology(const Z2CwComplex& x, int eps, const std::vector<std::vector<bool>>& excluded,
                                       int n)
{
    if (n < 0 || n > x.dimension())
        return FgAbGroup::trivial();
    const std::size_t m = x.num_cells(n);
    const IntegerMatrix cocycles = z2coh::kernel_basis(delta(x, n).vstack(constraints(x, n, eps, excluded)));
    IntegerMatrix coboundaries(m, 0);
    if (n > 0)
        coboundaries = delta(x, n - 1) * z2coh::kernel_basis(constraints(x, n - 1, eps, excluded));
    return z2coh::subquotient(cocycles, coboundaries);
}

std::vector<std::vector<bool>> fixed_mask(const Z2CwComplex& x)
{
    std::vector<std::vector<bool>> out;
    for (int k = 0; k <= x.dimension(); ++k)
    {
        std::vector<bool> row;
        for (std::size_t i = 0; i < x.num_cells(k); ++i)
            row.push_back(x.is_fixed(k, i));
        out.push_back(row);
    }
    return out;
}

std::vector<std::vector<bool>> no_cells(const Z2CwComplex& x)
{
    std::vector<std::vector<bool>> out;
    for (int k = 0; k <= x.dimension(); ++k)
        out.emplace_back(x.num_cells(k), false);
    return out;
}

FgAbGroup bredon_zero_system(const Z2CwComplex& x, int j, int n)
{
    return invariant_cochain_cohomology(x, j == 0 ? 1 : -1, fixed_mask(x), n);
}

FgAbGroup bredon_constant(const Z2CwComplex& x, int n)
{
    return invariant_cochain_cohomology(x, 1, no_cells(x), n);
}

FgAbGroup borel_via_product(const Z2CwComplex& x, int j, int n, const std::vector<std::vector<bool>>& rel, int level)
{
    const Z2CwComplex sphere = z2coh::ez2_skeleton(level);
    const Z2CwComplex p = z2coh::product(x, sphere);
    const auto cells = z2coh::product_cells(x, sphere);
    std::vector<std::vector<bool>> excluded;
    for (const auto& row : cells)
    {
        std::vector<bool> ex;
        for (const auto& c : row)
        {
            const auto d = static_cast<std::size_t>(c.left_dim);
            ex.push_back(d < rel.size() && rel[d][c.left]);
        }
        excluded.push_back(ex);
    }
    return invariant_cochain_cohomology(p, j == 0 ? 1 : -1, excluded, n);
}

IntegerMatrix random_unimodular(std::size_t n, int ops, std::mt19937& rng)
{
    IntegerMatrix u = IntegerMatrix::identity(n);
    if (n < 2)
        return u;
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    std::uniform_int_distribution<int> factor(-2, 2);
    for (int i = 0; i < ops; ++i)
    {
        const std::size_t a = pick(rng);
        const std::size_t b = pick(rng);
        if (a == b)
            u.negate_row(a);
        else
            u.add_row_multiple(a, b, Integer(factor(rng)));
    }
    return u;
}

IntegerMatrix random_matrix(std::size_t rows, std::size_t cols, int bound, std::mt19937& rng)
{
    std::uniform_int_distribution<int> dist(-bound, bound);
    IntegerMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            m(i, j) = dist(rng);
    return m;
}

}   // namespace oracle
