#include "z2coh/abelian.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "z2coh/errors.hpp"
#include "z2coh/smith.hpp"

namespace z2coh {

// ---------------------------------------------------------------------------
// FgAbGroup
// ---------------------------------------------------------------------------

FgAbGroup::FgAbGroup(std::size_t free_rank, std::vector<Integer> torsion)
    : free_rank_(free_rank), torsion_(std::move(torsion))
{
    for (std::size_t i = 0; i < torsion_.size(); ++i)
    {
        if (torsion_[i] < 2)
            throw Error("invariant factors must be >= 2");
        if (i > 0 && torsion_[i] % torsion_[i - 1] != 0)
            throw Error("invariant factors must form a divisibility chain");
    }
}

FgAbGroup FgAbGroup::cyclic(const Integer& order)
{
    if (order == 0)
        return free(1);
    return from_orders({order});
}

FgAbGroup FgAbGroup::from_orders(const std::vector<Integer>& orders)
{
    SmithDecomposition snf = smith_normal_form(IntegerMatrix::diagonal(orders));
    std::vector<Integer> torsion;
    for (const auto& d : snf.invariant_factors())
    {
        if (d != 1)
            torsion.push_back(d);
    }
    return FgAbGroup(orders.size() - snf.rank, std::move(torsion));
}

Integer FgAbGroup::order() const
{
    if (free_rank_ != 0)
        throw Error("order of an infinite group");
    Integer n = 1;
    for (const auto& d : torsion_)
        n *= d;
    return n;
}

Integer FgAbGroup::generator_order(std::size_t i) const
{
    return i < torsion_.size() ? torsion_[i] : Integer(0);
}

std::vector<Integer> FgAbGroup::generator_orders() const
{
    std::vector<Integer> out;
    for (std::size_t i = 0; i < num_generators(); ++i)
        out.push_back(generator_order(i));
    return out;
}

const FgAbGroup::Presentation& FgAbGroup::presentation() const
{
    if (!presentation_)
        throw Error("group carries no presentation");
    return *presentation_;
}

std::vector<Integer> FgAbGroup::generator(std::size_t i) const
{
    return presentation().generators.column(i);
}

std::vector<Integer> FgAbGroup::coordinates(const std::vector<Integer>& ambient) const
{
    const Presentation& p = presentation();
    std::vector<Integer> w = p.transform.apply(ambient);
    for (std::size_t i = 0; i < w.size(); ++i)
    {
        if (i < p.scale.size())
        {
            if (w[i] % p.scale[i] != 0)
                throw Error("vector does not lie in the numerator lattice");
            w[i] /= p.scale[i];
        }
        else if (w[i] != 0)
        {
            throw Error("vector does not lie in the numerator lattice");
        }
    }
    w.resize(p.scale.size());
    return reduce(p.relation_transform.apply(w));
}

bool FgAbGroup::contains(const std::vector<Integer>& ambient) const
{
    const Presentation& p = presentation();
    std::vector<Integer> w = p.transform.apply(ambient);
    for (std::size_t i = 0; i < w.size(); ++i)
    {
        if (i < p.scale.size() ? (w[i] % p.scale[i] != 0) : (w[i] != 0))
            return false;
    }
    return true;
}

std::vector<Integer> FgAbGroup::reduce(std::vector<Integer> coords) const
{
    for (std::size_t i = 0; i < coords.size() && i < torsion_.size(); ++i)
        coords[i] = reduce_mod(coords[i], torsion_[i]);
    return coords;
}

std::string FgAbGroup::to_string() const
{
    if (is_trivial())
        return "0";
    std::vector<std::string> parts;
    if (free_rank_ == 1)
        parts.emplace_back("Z");
    else if (free_rank_ > 1)
        parts.push_back("Z^" + std::to_string(free_rank_));
    for (const auto& d : torsion_)
        parts.push_back("Z/" + d.str());
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i)
        out += (i == 0 ? "" : " + ") + parts[i];
    return out;
}

FgAbGroup parse_group(const std::string& text)
{
    std::vector<Integer> orders;
    std::stringstream ss(text);
    std::string token;
    while (std::getline(ss, token, '+'))
    {
        token.erase(std::remove_if(token.begin(), token.end(), ::isspace), token.end());
        if (token.empty())
            throw ParseError("malformed group string: '" + text + "'");
        if (token == "0")
            continue;
        if (token == "Z")
        {
            orders.emplace_back(0);
        }
        else if (token.rfind("Z^", 0) == 0)
        {
            const std::size_t k = std::stoul(token.substr(2));
            for (std::size_t i = 0; i < k; ++i)
                orders.emplace_back(0);
        }
        else if (token.rfind("Z/", 0) == 0)
        {
            orders.emplace_back(Integer(token.substr(2)));
        }
        else
        {
            throw ParseError("malformed group string: '" + text + "'");
        }
    }
    return FgAbGroup::from_orders(orders);
}

// ---------------------------------------------------------------------------
// Subquotients
// ---------------------------------------------------------------------------

FgAbGroup subquotient(const IntegerMatrix& numerator, const IntegerMatrix& relations)
{
    const std::size_t m = numerator.rows();
    if (relations.rows() != m)
        throw DimensionMismatch("subquotient: ambient dimensions differ");

    // Basis of the numerator lattice: column i of U^{-1} scaled by d_i.
    SmithDecomposition outer = smith_normal_form(numerator);
    const std::size_t r = outer.rank;
    const std::vector<Integer> scale = outer.invariant_factors();
    IntegerMatrix basis = outer.u_inv.column_range(0, r);
    for (std::size_t i = 0; i < r; ++i)
    {
        for (std::size_t k = 0; k < m; ++k)
            basis(k, i) *= scale[i];
    }

    // Relations in numerator-basis coordinates.
    IntegerMatrix w = outer.u * relations;
    IntegerMatrix rel_coords(r, relations.cols());
    for (std::size_t j = 0; j < relations.cols(); ++j)
    {
        for (std::size_t i = 0; i < m; ++i)
        {
            if (i < r)
            {
                if (w(i, j) % scale[i] != 0)
                    throw Error("subquotient: relations not contained in numerator");
                rel_coords(i, j) = w(i, j) / scale[i];
            }
            else if (w(i, j) != 0)
            {
                throw Error("subquotient: relations not contained in numerator");
            }
        }
    }

    SmithDecomposition inner = smith_normal_form(rel_coords);
    std::vector<std::size_t> keep;
    std::vector<Integer> torsion;
    for (std::size_t i = 0; i < r; ++i)
    {
        if (i < inner.rank)
        {
            if (inner.d(i, i) == 1)
                continue;
            torsion.push_back(inner.d(i, i));
        }
        keep.push_back(i);
    }
    const std::size_t free_rank = r - inner.rank;

    FgAbGroup g(free_rank, std::move(torsion));
    FgAbGroup::Presentation p;
    p.ambient_dim = m;
    p.generators = basis * inner.u_inv.select_columns(keep);
    p.transform = std::move(outer.u);
    p.scale = scale;
    p.relation_transform = inner.u.select_rows(keep);
    g.set_presentation(std::move(p));
    return g;
}

IntegerMatrix relation_lattice(const FgAbGroup& g)
{
    const std::size_t t = g.torsion().size();
    IntegerMatrix e(g.num_generators(), t);
    for (std::size_t i = 0; i < t; ++i)
        e(i, i) = g.torsion()[i];
    return e;
}

// ---------------------------------------------------------------------------
// GroupHom
// ---------------------------------------------------------------------------

IntegerMatrix GroupHom::reduced_matrix() const
{
    IntegerMatrix m = matrix;
    for (std::size_t i = 0; i < m.rows(); ++i)
    {
        const Integer order = target.generator_order(i);
        for (std::size_t j = 0; j < m.cols(); ++j)
            m(i, j) = reduce_mod(m(i, j), order);
    }
    return m;
}

bool GroupHom::respects_relations() const
{
    if (matrix.rows() != target.num_generators() || matrix.cols() != source.num_generators())
        return false;
    for (std::size_t j = 0; j < source.torsion().size(); ++j)
    {
        const Integer& order = source.torsion()[j];
        for (std::size_t i = 0; i < matrix.rows(); ++i)
        {
            if (reduce_mod(order * matrix(i, j), target.generator_order(i)) != 0)
                return false;
        }
    }
    return true;
}

std::vector<Integer> GroupHom::apply(const std::vector<Integer>& coords) const
{
    return target.reduce(matrix.apply(coords));
}

bool GroupHom::is_zero() const
{
    return reduced_matrix().is_zero();
}

bool operator==(const GroupHom& a, const GroupHom& b)
{
    return a.source == b.source && a.target == b.target && a.reduced_matrix() == b.reduced_matrix();
}

GroupHom identity_hom(const FgAbGroup& g)
{
    return GroupHom{g, g, IntegerMatrix::identity(g.num_generators())};
}

GroupHom zero_hom(const FgAbGroup& source, const FgAbGroup& target)
{
    return GroupHom{source, target, IntegerMatrix(target.num_generators(), source.num_generators())};
}

GroupHom compose(const GroupHom& g, const GroupHom& f)
{
    if (!(f.target == g.source))
        throw DimensionMismatch("compose: target of f differs from source of g");
    GroupHom h{f.source, g.target, g.matrix * f.matrix};
    h.matrix = h.reduced_matrix();
    return h;
}

FgAbGroup kernel(const GroupHom& h)
{
    const std::size_t gs = h.source.num_generators();
    IntegerMatrix block = h.matrix.hstack(relation_lattice(h.target));
    IntegerMatrix solutions = kernel_basis(block);
    IntegerMatrix lattice = solutions.row_range(0, gs);
    return subquotient(lattice, relation_lattice(h.source));
}

FgAbGroup cokernel(const GroupHom& h)
{
    const std::size_t gt = h.target.num_generators();
    return subquotient(IntegerMatrix::identity(gt), h.matrix.hstack(relation_lattice(h.target)));
}

FgAbGroup image(const GroupHom& h)
{
    IntegerMatrix rel = relation_lattice(h.target);
    return subquotient(h.matrix.hstack(rel), rel);
}

bool is_injective(const GroupHom& h)
{
    return kernel(h).is_trivial();
}

bool is_surjective(const GroupHom& h)
{
    return cokernel(h).is_trivial();
}

// ---------------------------------------------------------------------------
// Cochain complexes
// ---------------------------------------------------------------------------

CochainComplex::CochainComplex(std::vector<std::size_t> ranks, std::vector<IntegerMatrix> differentials,
                               std::string provenance)
    : ranks_(std::move(ranks)), differentials_(std::move(differentials)), provenance_(std::move(provenance))
{
    if (!ranks_.empty() && differentials_.size() + 1 != ranks_.size())
        throw DimensionMismatch("cochain complex: need one differential between consecutive degrees");
    for (std::size_t n = 0; n < differentials_.size(); ++n)
    {
        if (differentials_[n].rows() != ranks_[n + 1] || differentials_[n].cols() != ranks_[n])
            throw DimensionMismatch("cochain complex: differential " + std::to_string(n) + " has wrong shape");
    }
}

std::size_t CochainComplex::rank(int n) const
{
    if (n < 0 || n >= static_cast<int>(ranks_.size()))
        return 0;
    return ranks_[static_cast<std::size_t>(n)];
}

IntegerMatrix CochainComplex::differential(int n) const
{
    if (n >= 0 && n < static_cast<int>(differentials_.size()))
        return differentials_[static_cast<std::size_t>(n)];
    return IntegerMatrix(rank(n + 1), rank(n));
}

bool CochainComplex::composition_is_zero(int n) const
{
    return (differential(n) * differential(n - 1)).is_zero();
}

void CochainComplex::check_square_zero() const
{
    for (int n = 0; n <= top_degree(); ++n)
    {
        if (!composition_is_zero(n))
            throw CompositionNotZero("delta_" + std::to_string(n) + " * delta_" + std::to_string(n - 1) +
                                     " != 0 (" + provenance_ + ")");
    }
}

IntegerMatrix CochainMap::component(int n) const
{
    if (n >= 0 && n < static_cast<int>(components.size()))
        return components[static_cast<std::size_t>(n)];
    return IntegerMatrix(target->rank(n), source->rank(n));
}

bool CochainMap::commutes(int n) const
{
    return target->differential(n) * component(n) == component(n + 1) * source->differential(n);
}

FgAbGroup cohomology_of_complex(const CochainComplex& c, int n)
{
    if (!c.composition_is_zero(n))
        throw CompositionNotZero("delta_" + std::to_string(n) + " * delta_" + std::to_string(n - 1) + " != 0");
    IntegerMatrix cycles = kernel_basis(c.differential(n));
    return subquotient(cycles, c.differential(n - 1));
}

GroupHom hom_from_cochains(const IntegerMatrix& m, const FgAbGroup& source_group, const FgAbGroup& target_group)
{
    IntegerMatrix out(target_group.num_generators(), source_group.num_generators());
    for (std::size_t i = 0; i < source_group.num_generators(); ++i)
        out.set_column(i, target_group.coordinates(m.apply(source_group.generator(i))));
    return GroupHom{source_group, target_group, std::move(out)};
}

GroupHom induced_hom(const CochainMap& f, int n, const FgAbGroup& source_group, const FgAbGroup& target_group)
{
    if (!f.commutes(n) || !f.commutes(n - 1))
        throw NotChainMap("map does not commute with differentials around degree " + std::to_string(n));
    return hom_from_cochains(f.component(n), source_group, target_group);
}

GroupHom induced_hom(const CochainMap& f, int n)
{
    if (!f.commutes(n) || !f.commutes(n - 1))
        throw NotChainMap("map does not commute with differentials around degree " + std::to_string(n));
    return induced_hom(f, n, cohomology_of_complex(*f.source, n), cohomology_of_complex(*f.target, n));
}

}   // namespace z2coh
