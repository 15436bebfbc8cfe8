#include "z2coh/bredon.hpp"

#include <algorithm>

#include "z2coh/errors.hpp"

namespace z2coh {

namespace {

struct CellRole
{
    enum Kind
    {
        Representative,
        Partner,
        Fixed,
    };
    Kind kind = Representative;
    std::size_t block = 0;
    int sign = 1;
};

std::vector<CellRole> cell_roles(const Z2CwComplex& x, int n, const BredonBasis& basis)
{
    std::vector<CellRole> roles(x.num_cells(n));
    for (std::size_t k = 0; k < basis.orbits.size(); ++k)
    {
        const FreeOrbit& o = basis.orbits[k];
        roles[o.rep] = CellRole{CellRole::Representative, k, 1};
        roles[o.partner] = CellRole{CellRole::Partner, k, o.sign};
    }
    for (std::size_t k = 0; k < basis.fixed.size(); ++k)
        roles[basis.fixed[k]] = CellRole{CellRole::Fixed, k, 1};
    return roles;
}

/**
 * Pull Bredon cochains on (p, degree a) back along the chain matrix `chain`
 * (rows = a-cells of p, columns = b-cells of q) to Bredon cochains on
 * (q, degree b).
 */
IntegerMatrix expand(const Z2CwComplex& p, int a, const Z2CwComplex& q, int b, const IntegerMatrix& chain,
                     const CoefficientSystem& m)
{
    const BredonBasis bp = bredon_basis(p, m, a);
    const BredonBasis bq = bredon_basis(q, m, b);
    const std::vector<CellRole> roles = cell_roles(p, a, bp);
    IntegerMatrix out(bq.rank(), bp.rank());

    for (std::size_t k = 0; k < bq.orbits.size(); ++k)
    {
        const std::size_t c = bq.orbits[k].rep;
        const std::size_t row = bq.orbit_offset(k);
        for (std::size_t r = 0; r < chain.rows(); ++r)
        {
            const Integer& coef = chain(r, c);
            if (coef == 0)
                continue;
            const CellRole& role = roles[r];
            switch (role.kind)
            {
                case CellRole::Representative:
                {
                    const std::size_t col = bp.orbit_offset(role.block);
                    for (std::size_t i = 0; i < m.m0_rank; ++i)
                        out(row + i, col + i) += coef;
                    break;
                }
                case CellRole::Partner:
                {
                    const std::size_t col = bp.orbit_offset(role.block);
                    for (std::size_t i = 0; i < m.m0_rank; ++i)
                    {
                        for (std::size_t j = 0; j < m.m0_rank; ++j)
                        {
                            if (m.action(i, j) != 0)
                                out(row + i, col + j) += role.sign * coef * m.action(i, j);
                        }
                    }
                    break;
                }
                case CellRole::Fixed:
                {
                    const std::size_t col = bp.fixed_offset(role.block);
                    for (std::size_t i = 0; i < m.m0_rank; ++i)
                    {
                        for (std::size_t j = 0; j < m.m1_rank; ++j)
                        {
                            if (m.structure_map(i, j) != 0)
                                out(row + i, col + j) += coef * m.structure_map(i, j);
                        }
                    }
                    break;
                }
            }
        }
    }

    for (std::size_t k = 0; k < bq.fixed.size(); ++k)
    {
        const std::size_t c = bq.fixed[k];
        const std::size_t row = bq.fixed_offset(k);
        for (std::size_t r = 0; r < chain.rows(); ++r)
        {
            const Integer& coef = chain(r, c);
            if (coef == 0)
                continue;
            if (roles[r].kind != CellRole::Fixed)
                throw NotChainMap("fixed cell '" + q.label(b, c) + "' meets free cell '" + p.label(a, r) + "'");
            const std::size_t col = bp.fixed_offset(roles[r].block);
            for (std::size_t i = 0; i < m.m1_rank; ++i)
                out(row + i, col + i) += coef;
        }
    }
    return out;
}

void require_valid_system(const CoefficientSystem& m)
{
    const auto violations = check_system(m);
    if (violations.empty())
        return;
    std::string msg = "invalid coefficient system '" + m.name + "':";
    for (const auto& v : violations)
        msg += " " + v + ";";
    throw InvalidSystem(msg);
}

}   // namespace

BredonBasis bredon_basis(const Z2CwComplex& x, const CoefficientSystem& m, int n)
{
    return BredonBasis{x.free_orbits(n), x.fixed_cells(n), m.m0_rank, m.m1_rank};
}

CochainComplex bredon_cochain_complex(const Z2CwComplex& x, const CoefficientSystem& m)
{
    require_valid(x);
    require_valid_system(m);
    const int top = x.dimension() + 1;
    std::vector<std::size_t> ranks;
    std::vector<IntegerMatrix> deltas;
    for (int n = 0; n <= top; ++n)
        ranks.push_back(bredon_basis(x, m, n).rank());
    for (int n = 0; n < top; ++n)
        deltas.push_back(expand(x, n, x, n + 1, x.boundary(n + 1), m));
    CochainComplex c(std::move(ranks), std::move(deltas), "bredon[" + m.name + "]");
    c.check_square_zero();
    return c;
}

FgAbGroup bredon_cohomology(const Z2CwComplex& x, const CoefficientSystem& m, int n)
{
    return cohomology_of_complex(bredon_cochain_complex(x, m), n);
}

IntegerMatrix bredon_pullback(const CellMap& f, const CoefficientSystem& m, int n)
{
    return expand(f.target, n, f.source, n, f.component(n), m);
}

GroupHom bredon_induced(const CellMap& f, const CoefficientSystem& m, int n)
{
    const auto problems = f.check();
    if (!problems.empty())
        throw NotChainMap("not an equivariant cellular map: " + problems.front());
    const CochainComplex target = bredon_cochain_complex(f.target, m);
    const CochainComplex source = bredon_cochain_complex(f.source, m);
    CochainMap pull{&target, &source, {}};
    const int top = std::max(f.source.dimension(), f.target.dimension()) + 1;
    for (int k = 0; k <= top; ++k)
        pull.components.push_back(bredon_pullback(f, m, k));
    return induced_hom(pull, n);
}

}   // namespace z2coh
