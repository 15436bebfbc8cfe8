#include "z2coh/borel.hpp"

#include <algorithm>

#include "z2coh/errors.hpp"

namespace z2coh {

Z2CwComplex ez2_skeleton(int n)
{
    std::vector<Z2CwComplex::Cells> cells;
    for (int k = 0; k <= n; ++k)
    {
        Z2CwComplex::Cells c;
        const std::string base = "s" + std::to_string(k);
        c.labels = {base + "+", base + "-"};
        c.action = {SignedCell{1, 1}, SignedCell{0, 1}};
        c.fixed = {false, false};
        if (k == 0)
        {
            c.boundary = IntegerMatrix(0, 2);
        }
        else
        {
            // d e+ = e+ + (-1)^k e-,  d e- = e- + (-1)^k e+  (one dimension down)
            const int s = k % 2 == 0 ? 1 : -1;
            c.boundary = IntegerMatrix{{1, s}, {s, 1}};
        }
        cells.push_back(std::move(c));
    }
    return Z2CwComplex(std::move(cells));
}

CellLabels labels_of(const Z2CwComplex& x)
{
    CellLabels out;
    for (int n = 0; n <= x.dimension(); ++n)
        out.emplace_back(x.labels(n).begin(), x.labels(n).end());
    return out;
}

CellLabels label_union(const CellLabels& a, const CellLabels& b)
{
    CellLabels out(std::max(a.size(), b.size()));
    for (std::size_t n = 0; n < a.size(); ++n)
        out[n].insert(a[n].begin(), a[n].end());
    for (std::size_t n = 0; n < b.size(); ++n)
        out[n].insert(b[n].begin(), b[n].end());
    return out;
}

void require_invariant_subcomplex(const Z2CwComplex& x, const CellLabels& rel)
{
    if (rel.empty())
        return;
    std::vector<std::vector<std::string>> labels;
    for (const auto& s : rel)
        labels.emplace_back(s.begin(), s.end());
    (void)subcomplex(x, labels);
}

// ---------------------------------------------------------------------------
// TwistedCochains
// ---------------------------------------------------------------------------

TwistedCochains::TwistedCochains(const Z2CwComplex& p, int twist, const std::vector<std::vector<bool>>& excluded)
    : twist_(twist)
{
    if (twist != 0 && twist != 1)
        throw Error("twist must be 0 or 1");
    if (!p.is_free())
        throw InvalidComplex("twisted cochains need a free complex");
    const int twist_sign = twist == 0 ? 1 : -1;
    const int top = p.dimension() + 1;
    auto is_excluded = [&](int k, std::size_t cell) {
        return k < static_cast<int>(excluded.size()) && excluded[static_cast<std::size_t>(k)][cell];
    };

    std::vector<std::size_t> ranks;
    std::vector<std::vector<std::size_t>> reps;
    for (int k = 0; k <= top; ++k)
    {
        std::vector<std::optional<std::pair<std::size_t, int>>> roles(p.num_cells(k));
        std::vector<std::string> labels;
        std::vector<std::size_t> rep_cells;
        for (const FreeOrbit& o : p.free_orbits(k))
        {
            if (is_excluded(k, o.rep) != is_excluded(k, o.partner))
                throw SubcomplexNotInvariant("relative subcomplex is not a union of orbits at '" + p.label(k, o.rep) +
                                             "'");
            if (is_excluded(k, o.rep))
                continue;
            const std::size_t idx = labels.size();
            roles[o.rep] = std::make_pair(idx, 1);
            roles[o.partner] = std::make_pair(idx, o.sign * twist_sign);
            labels.push_back(p.label(k, o.rep));
            rep_cells.push_back(o.rep);
        }
        ranks.push_back(labels.size());
        labels_.push_back(std::move(labels));
        roles_.push_back(std::move(roles));
        reps.push_back(std::move(rep_cells));
    }

    std::vector<IntegerMatrix> deltas;
    for (int k = 0; k < top; ++k)
    {
        const auto uk = static_cast<std::size_t>(k);
        const IntegerMatrix bd = p.boundary(k + 1);
        IntegerMatrix delta(ranks[uk + 1], ranks[uk]);
        for (std::size_t row = 0; row < reps[uk + 1].size(); ++row)
        {
            const std::size_t c = reps[uk + 1][row];
            for (std::size_t b = 0; b < bd.rows(); ++b)
            {
                if (bd(b, c) == 0 || !roles_[uk][b])
                    continue;
                const auto [col, factor] = *roles_[uk][b];
                delta(row, col) += factor * bd(b, c);
            }
        }
        deltas.push_back(std::move(delta));
    }
    cochains_ = CochainComplex(std::move(ranks), std::move(deltas), twist == 0 ? "borel[Z(0)]" : "borel[Z(1)]");
    cochains_.check_square_zero();
}

const std::vector<std::string>& TwistedCochains::basis_labels(int k) const
{
    static const std::vector<std::string> none;
    if (k < 0 || k >= static_cast<int>(labels_.size()))
        return none;
    return labels_[static_cast<std::size_t>(k)];
}

std::optional<std::pair<std::size_t, int>> TwistedCochains::evaluate(int k, std::size_t cell) const
{
    if (k < 0 || k >= static_cast<int>(roles_.size()))
        return std::nullopt;
    return roles_[static_cast<std::size_t>(k)][cell];
}

// ---------------------------------------------------------------------------
// BorelComplex
// ---------------------------------------------------------------------------

BorelComplex::BorelComplex(const Z2CwComplex& x, int twist, int level, const CellLabels& relative)
    : base_(x), twist_(twist), level_(level)
{
    require_valid(x);
    require_invariant_subcomplex(x, relative);
    const Z2CwComplex sphere = ez2_skeleton(level);
    total_ = product(x, sphere);
    cells_ = product_cells(x, sphere);

    std::vector<std::vector<bool>> excluded(cells_.size());
    for (std::size_t k = 0; k < cells_.size(); ++k)
    {
        excluded[k].reserve(cells_[k].size());
        for (const ProductCell& c : cells_[k])
        {
            const auto d = static_cast<std::size_t>(c.left_dim);
            const bool over_rel = d < relative.size() && relative[d].count(x.label(c.left_dim, c.left)) > 0;
            excluded[k].push_back(over_rel);
        }
    }
    twisted_ = std::make_shared<TwistedCochains>(total_, twist, excluded);
}

IntegerMatrix label_match(const BorelComplex& to, const BorelComplex& from, int k)
{
    const auto& rows = to.basis_labels(k);
    const auto& cols = from.basis_labels(k);
    std::map<std::string, std::size_t> where;
    for (std::size_t j = 0; j < cols.size(); ++j)
        where[cols[j]] = j;
    IntegerMatrix m(rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
    {
        auto it = where.find(rows[i]);
        if (it != where.end())
            m(i, it->second) = 1;
    }
    return m;
}

FgAbGroup borel_cohomology(const Z2CwComplex& x, int twist, int n, const CellLabels& relative, int level)
{
    return BorelComplex(x, twist, level, relative).cohomology(n);
}

FgAbGroup borel_cohomology(const Z2CwComplex& x, int twist, int n, const CellLabels& relative)
{
    return borel_cohomology(x, twist, n, relative, approximation_level(std::max(n, 0)));
}

FgAbGroup h_theory(const Z2CwComplex& x, const CellLabels& y, int twist, int n)
{
    const CellLabels fixed = labels_of(fixed_subcomplex(x).complex);
    return borel_cohomology(x, twist, n, label_union(y, fixed));
}

// ---------------------------------------------------------------------------
// Group cohomology of Z2
// ---------------------------------------------------------------------------

CochainComplex group_cochain_complex(std::size_t module_rank, const IntegerMatrix& action, int top)
{
    if (action.rows() != module_rank || action.cols() != module_rank)
        throw DimensionMismatch("group cohomology: action has the wrong shape");
    const IntegerMatrix id = IntegerMatrix::identity(module_rank);
    if (!(action * action == id))
        throw NotInvolution("group cohomology: action is not an involution");
    std::vector<std::size_t> ranks(static_cast<std::size_t>(std::max(top, 0)) + 1, module_rank);
    std::vector<IntegerMatrix> deltas;
    for (int p = 0; p < top; ++p)
        deltas.push_back(p % 2 == 0 ? action - id : action + id);
    return CochainComplex(std::move(ranks), std::move(deltas), "group-cohomology");
}

FgAbGroup group_cohomology_z2(std::size_t module_rank, const IntegerMatrix& action, int n)
{
    if (n < 0)
    {
        (void)group_cochain_complex(module_rank, action, 0);
        return FgAbGroup::trivial();
    }
    return cohomology_of_complex(group_cochain_complex(module_rank, action, n + 1), n);
}

// ---------------------------------------------------------------------------
// Forgetful map and stability
// ---------------------------------------------------------------------------

GroupHom forgetful_map(const Z2CwComplex& x, int n, int twist)
{
    const BorelComplex borel(x, twist, approximation_level(std::max(n, 0)));
    const CwComplex plain = x.underlying();
    const CochainComplex cellular = cellular_cochains(plain);

    CochainMap fiber{&borel.cochains(), &cellular, {}};
    const auto& cells = borel.provenance();
    for (int k = 0; k <= borel.cochains().top_degree(); ++k)
    {
        IntegerMatrix m(cellular.rank(k), borel.cochains().rank(k));
        if (k < static_cast<int>(cells.size()))
        {
            const auto& ck = cells[static_cast<std::size_t>(k)];
            for (std::size_t pos = 0; pos < ck.size(); ++pos)
            {
                // e x s0+ with e a k-cell of X; s0+ is cell 0 of the sphere.
                if (ck[pos].left_dim != k || ck[pos].right != 0)
                    continue;
                const auto role = borel.twisted().evaluate(k, pos);
                if (role)
                    m(ck[pos].left, role->first) += role->second;
            }
        }
        fiber.components.push_back(std::move(m));
    }
    return induced_hom(fiber, n);
}

StabilityReport stability_check(const Z2CwComplex& x, int twist, int n, const CellLabels& relative)
{
    StabilityReport r;
    r.level = approximation_level(std::max(n, 0));
    r.at_level = borel_cohomology(x, twist, n, relative, r.level);
    r.at_next_level = borel_cohomology(x, twist, n, relative, r.level + 1);
    r.stable = r.at_level == r.at_next_level;
    return r;
}

}   // namespace z2coh
