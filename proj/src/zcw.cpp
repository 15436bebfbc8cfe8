#include "z2coh/zcw.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <cstdint>
#include <optional>
#include <tuple>
#include <set>
#include <sstream>

#include "z2coh/errors.hpp"

namespace z2coh {

// ---------------------------------------------------------------------------
// CwComplex
// ---------------------------------------------------------------------------

std::size_t CwComplex::num_cells(int n) const
{
    if (n < 0 || n >= static_cast<int>(labels.size()))
        return 0;
    return labels[static_cast<std::size_t>(n)].size();
}

long long CwComplex::euler_characteristic() const
{
    long long chi = 0;
    for (int n = 0; n <= dimension(); ++n)
        chi += (n % 2 == 0 ? 1 : -1) * static_cast<long long>(num_cells(n));
    return chi;
}

CochainComplex cellular_cochains(const CwComplex& x)
{
    std::vector<std::size_t> ranks;
    std::vector<IntegerMatrix> deltas;
    for (int n = 0; n <= x.dimension(); ++n)
        ranks.push_back(x.num_cells(n));
    for (int n = 0; n < x.dimension(); ++n)
        deltas.push_back(x.boundary[static_cast<std::size_t>(n + 1)].transpose());
    return CochainComplex(std::move(ranks), std::move(deltas), "cellular");
}

FgAbGroup cellular_cohomology(const CwComplex& x, int n)
{
    return cohomology_of_complex(cellular_cochains(x), n);
}

// ---------------------------------------------------------------------------
// Z2CwComplex
// ---------------------------------------------------------------------------

namespace {

const Z2CwComplex::Cells& empty_cells()
{
    static const Z2CwComplex::Cells cells{};
    return cells;
}

}   // namespace

int Z2CwComplex::dimension() const
{
    for (int n = static_cast<int>(cells_.size()) - 1; n >= 0; --n)
    {
        if (!cells_[static_cast<std::size_t>(n)].labels.empty())
            return n;
    }
    return -1;
}

std::size_t Z2CwComplex::num_cells(int n) const
{
    return cells(n).labels.size();
}

std::size_t Z2CwComplex::total_cells() const
{
    std::size_t total = 0;
    for (const auto& c : cells_)
        total += c.labels.size();
    return total;
}

bool Z2CwComplex::is_free() const
{
    for (const auto& c : cells_)
    {
        if (std::any_of(c.fixed.begin(), c.fixed.end(), [](bool f) { return f; }))
            return false;
    }
    return true;
}

const Z2CwComplex::Cells& Z2CwComplex::cells(int n) const
{
    if (n < 0 || n >= static_cast<int>(cells_.size()))
        return empty_cells();
    return cells_[static_cast<std::size_t>(n)];
}

IntegerMatrix Z2CwComplex::boundary(int n) const
{
    if (n >= 0 && n < static_cast<int>(cells_.size()))
        return cells_[static_cast<std::size_t>(n)].boundary;
    return IntegerMatrix(num_cells(n - 1), num_cells(n));
}

std::size_t Z2CwComplex::find(int n, const std::string& label) const
{
    const auto& l = labels(n);
    return static_cast<std::size_t>(std::find(l.begin(), l.end(), label) - l.begin());
}

IntegerMatrix Z2CwComplex::action_matrix(int n) const
{
    const std::size_t k = num_cells(n);
    IntegerMatrix t(k, k);
    const auto& act = action(n);
    for (std::size_t i = 0; i < k; ++i)
        t(act[i].index, i) = act[i].sign;
    return t;
}

std::vector<FreeOrbit> Z2CwComplex::free_orbits(int n) const
{
    const Cells& c = cells(n);
    std::vector<FreeOrbit> orbits;
    for (std::size_t i = 0; i < c.labels.size(); ++i)
    {
        if (c.fixed[i])
            continue;
        const std::size_t j = c.action[i].index;
        if (c.labels[i] < c.labels[j])
            orbits.push_back(FreeOrbit{i, j, c.action[i].sign});
    }
    std::sort(orbits.begin(), orbits.end(),
              [&](const FreeOrbit& a, const FreeOrbit& b) { return c.labels[a.rep] < c.labels[b.rep]; });
    return orbits;
}

std::vector<std::size_t> Z2CwComplex::fixed_cells(int n) const
{
    const Cells& c = cells(n);
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < c.labels.size(); ++i)
    {
        if (c.fixed[i])
            out.push_back(i);
    }
    std::sort(out.begin(), out.end(), [&](std::size_t a, std::size_t b) { return c.labels[a] < c.labels[b]; });
    return out;
}

CwComplex Z2CwComplex::underlying() const
{
    CwComplex out;
    for (int n = 0; n <= dimension(); ++n)
    {
        out.labels.push_back(labels(n));
        out.boundary.push_back(boundary(n));
    }
    return out;
}

long long Z2CwComplex::euler_characteristic() const
{
    return underlying().euler_characteristic();
}

bool operator==(const Z2CwComplex& a, const Z2CwComplex& b)
{
    const int d = std::max(a.dimension(), b.dimension());
    for (int n = 0; n <= d; ++n)
    {
        if (!(a.cells(n) == b.cells(n)))
            return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Validation
// ---------------------------------------------------------------------------

std::vector<std::string> validate(const Z2CwComplex& x)
{
    std::vector<std::string> out;
    auto report = [&](int n, const std::string& what) {
        out.push_back("dimension " + std::to_string(n) + ": " + what);
    };

    for (int n = 0; n < static_cast<int>(x.num_dims()); ++n)
    {
        const auto& c = x.cells(n);
        const std::size_t k = c.labels.size();
        if (c.action.size() != k || c.fixed.size() != k)
        {
            report(n, "action/fixed arrays do not match the number of cells");
            continue;
        }
        if (c.boundary.rows() != x.num_cells(n - 1) || c.boundary.cols() != k)
        {
            report(n, "boundary matrix has shape " + std::to_string(c.boundary.rows()) + "x" +
                          std::to_string(c.boundary.cols()) + ", expected " + std::to_string(x.num_cells(n - 1)) +
                          "x" + std::to_string(k));
            continue;
        }
        std::set<std::string> seen;
        for (const auto& l : c.labels)
        {
            if (!seen.insert(l).second)
                report(n, "duplicate label '" + l + "'");
        }

        bool action_ok = true;
        for (std::size_t i = 0; i < k; ++i)
        {
            const SignedCell t = c.action[i];
            if (t.index >= k || (t.sign != 1 && t.sign != -1))
            {
                report(n, "action of cell '" + c.labels[i] + "' is not a signed permutation entry");
                action_ok = false;
                continue;
            }
            const SignedCell tt = c.action[t.index];
            if (tt.index != i || tt.sign * t.sign != 1)
            {
                report(n, "action is not an involution at cell '" + c.labels[i] + "'");
                action_ok = false;
            }
            if (t.index == i && t.sign == -1)
                report(n, "cell '" + c.labels[i] + "' is mapped to its own negative (subdivide it)");
            const bool fixed = t.index == i && t.sign == 1;
            if (fixed != c.fixed[i])
                report(n, "fixed mask of cell '" + c.labels[i] + "' disagrees with the action");
        }
        if (!action_ok)
            continue;

        if (n > 0)
        {
            const auto& below = x.cells(n - 1);
            bool below_ok = below.action.size() == below.labels.size();
            for (const auto& t : below.action)
                below_ok = below_ok && t.index < below.labels.size();
            if (below_ok)
            {
                const IntegerMatrix lhs = x.action_matrix(n - 1) * c.boundary;
                const IntegerMatrix rhs = c.boundary * x.action_matrix(n);
                for (std::size_t j = 0; j < k; ++j)
                {
                    if (lhs.column(j) != rhs.column(j))
                        report(n, "T*boundary != boundary*T at cell '" + c.labels[j] + "'");
                }
            }
            for (std::size_t j = 0; j < k; ++j)
            {
                if (!c.fixed[j])
                    continue;
                for (std::size_t i = 0; i < c.boundary.rows(); ++i)
                {
                    if (c.boundary(i, j) != 0 && !(i < below.fixed.size() && below.fixed[i]))
                    {
                        report(n, "boundary of fixed cell '" + c.labels[j] + "' meets free cell '" +
                                      below.labels[i] + "'");
                    }
                }
            }
        }
        if (n > 1)
        {
            const IntegerMatrix dd = x.boundary(n - 1) * c.boundary;
            if (dd.rows() == x.num_cells(n - 2))
            {
                for (std::size_t j = 0; j < k; ++j)
                {
                    for (std::size_t i = 0; i < dd.rows(); ++i)
                    {
                        if (dd(i, j) != 0)
                        {
                            report(n, "boundary of boundary of cell '" + c.labels[j] + "' is nonzero");
                            break;
                        }
                    }
                }
            }
        }
    }
    return out;
}

void require_valid(const Z2CwComplex& x)
{
    auto violations = validate(x);
    if (violations.empty())
        return;
    std::string msg = "invalid Z2-CW complex:";
    for (const auto& v : violations)
        msg += "\n  " + v;
    throw InvalidComplex(msg);
}

// ---------------------------------------------------------------------------
// Cell maps
// ---------------------------------------------------------------------------

IntegerMatrix CellMap::component(int n) const
{
    if (n >= 0 && n < static_cast<int>(chain.size()))
        return chain[static_cast<std::size_t>(n)];
    return IntegerMatrix(target.num_cells(n), source.num_cells(n));
}

std::vector<std::string> CellMap::check() const
{
    std::vector<std::string> out;
    const int d = std::max(source.dimension(), target.dimension());
    for (int n = 0; n <= d; ++n)
    {
        const IntegerMatrix f = component(n);
        if (f.rows() != target.num_cells(n) || f.cols() != source.num_cells(n))
        {
            out.push_back("dimension " + std::to_string(n) + ": chain matrix has the wrong shape");
            continue;
        }
        if (n > 0 && !(target.boundary(n) * f == component(n - 1) * source.boundary(n)))
            out.push_back("dimension " + std::to_string(n) + ": map does not commute with the boundary");
        if (!(target.action_matrix(n) * f == f * source.action_matrix(n)))
            out.push_back("dimension " + std::to_string(n) + ": map is not equivariant");
        for (std::size_t j = 0; j < f.cols(); ++j)
        {
            if (!source.is_fixed(n, j))
                continue;
            for (std::size_t i = 0; i < f.rows(); ++i)
            {
                if (f(i, j) != 0 && !target.is_fixed(n, i))
                {
                    out.push_back("dimension " + std::to_string(n) + ": fixed cell '" + source.label(n, j) +
                                  "' is sent off the fixed set");
                    break;
                }
            }
        }
    }
    return out;
}

CellMap identity_map(const Z2CwComplex& x)
{
    CellMap f{x, x, {}};
    for (int n = 0; n <= x.dimension(); ++n)
        f.chain.push_back(IntegerMatrix::identity(x.num_cells(n)));
    return f;
}

namespace {

Z2CwComplex single_point()
{
    Z2CwComplex::Cells c;
    c.labels = {"pt"};
    c.action = {SignedCell{0, 1}};
    c.boundary = IntegerMatrix(0, 1);
    c.fixed = {true};
    return Z2CwComplex({c});
}

}   // namespace

CellMap collapse_to_point(const Z2CwComplex& x)
{
    CellMap f{x, single_point(), {}};
    for (int n = 0; n <= x.dimension(); ++n)
    {
        IntegerMatrix m(n == 0 ? 1 : 0, x.num_cells(n));
        if (n == 0)
        {
            for (std::size_t j = 0; j < x.num_cells(0); ++j)
                m(0, j) = 1;
        }
        f.chain.push_back(std::move(m));
    }
    return f;
}

CellMap compose(const CellMap& g, const CellMap& f)
{
    CellMap h{f.source, g.target, {}};
    for (int n = 0; n <= f.source.dimension(); ++n)
        h.chain.push_back(g.component(n) * f.component(n));
    return h;
}

// ---------------------------------------------------------------------------
// Constructions
// ---------------------------------------------------------------------------

namespace {

/// Subcomplex on the given per-dimension index sets (kept in original order).
Subcomplex restrict_to(const Z2CwComplex& x, const std::vector<std::vector<std::size_t>>& keep, bool trivial_action)
{
    std::vector<Z2CwComplex::Cells> cells;
    std::vector<IntegerMatrix> inclusion;
    std::vector<std::vector<std::size_t>> position(keep.size());
    for (std::size_t n = 0; n < keep.size(); ++n)
    {
        position[n].assign(x.num_cells(static_cast<int>(n)), SIZE_MAX);
        for (std::size_t k = 0; k < keep[n].size(); ++k)
            position[n][keep[n][k]] = k;
    }

    for (std::size_t n = 0; n < keep.size(); ++n)
    {
        const int dim = static_cast<int>(n);
        const auto& src = x.cells(dim);
        Z2CwComplex::Cells c;
        const std::size_t rows_below = n == 0 ? 0 : keep[n - 1].size();
        c.boundary = IntegerMatrix(rows_below, keep[n].size());
        for (std::size_t k = 0; k < keep[n].size(); ++k)
        {
            const std::size_t i = keep[n][k];
            c.labels.push_back(src.labels[i]);
            if (trivial_action)
            {
                c.action.push_back(SignedCell{k, 1});
                c.fixed.push_back(true);
            }
            else
            {
                const SignedCell t = src.action[i];
                if (position[n][t.index] == SIZE_MAX)
                    throw SubcomplexNotInvariant("cell '" + src.labels[i] + "' is mapped outside the subcomplex");
                c.action.push_back(SignedCell{position[n][t.index], t.sign});
                c.fixed.push_back(src.fixed[i]);
            }
            if (n > 0)
            {
                for (std::size_t r = 0; r < src.boundary.rows(); ++r)
                {
                    if (src.boundary(r, i) == 0)
                        continue;
                    if (position[n - 1][r] == SIZE_MAX)
                        throw InvalidComplex("subcomplex is not closed under the boundary at cell '" +
                                             src.labels[i] + "'");
                    c.boundary(position[n - 1][r], k) = src.boundary(r, i);
                }
            }
        }
        IntegerMatrix inc(x.num_cells(dim), keep[n].size());
        for (std::size_t k = 0; k < keep[n].size(); ++k)
            inc(keep[n][k], k) = 1;
        cells.push_back(std::move(c));
        inclusion.push_back(std::move(inc));
    }
    while (!cells.empty() && cells.back().labels.empty())
    {
        cells.pop_back();
        inclusion.pop_back();
    }
    Z2CwComplex sub(std::move(cells));
    return Subcomplex{sub, CellMap{sub, x, std::move(inclusion)}};
}

}   // namespace

Subcomplex fixed_subcomplex(const Z2CwComplex& x)
{
    require_valid(x);
    std::vector<std::vector<std::size_t>> keep(x.num_dims());
    for (int n = 0; n < static_cast<int>(x.num_dims()); ++n)
    {
        for (std::size_t i = 0; i < x.num_cells(n); ++i)
        {
            if (x.is_fixed(n, i))
                keep[static_cast<std::size_t>(n)].push_back(i);
        }
    }
    return restrict_to(x, keep, true);
}

Subcomplex subcomplex(const Z2CwComplex& x, const std::vector<std::vector<std::string>>& labels)
{
    std::vector<std::vector<std::size_t>> keep(std::max(x.num_dims(), labels.size()));
    for (std::size_t n = 0; n < labels.size(); ++n)
    {
        std::set<std::string> wanted(labels[n].begin(), labels[n].end());
        const int dim = static_cast<int>(n);
        for (std::size_t i = 0; i < x.num_cells(dim); ++i)
        {
            if (wanted.count(x.label(dim, i)))
                keep[n].push_back(i);
        }
        if (keep[n].size() != wanted.size())
            throw InvalidComplex("subcomplex names a cell that does not exist in dimension " + std::to_string(n));
    }
    keep.resize(x.num_dims());
    return restrict_to(x, keep, false);
}

std::vector<std::vector<ProductCell>> product_cells(const Z2CwComplex& x, const Z2CwComplex& y)
{
    const int dx = x.dimension();
    const int dy = y.dimension();
    if (dx < 0 || dy < 0)
        return {};
    std::vector<std::vector<ProductCell>> cells(static_cast<std::size_t>(dx + dy) + 1);
    for (int k = 0; k <= dx + dy; ++k)
    {
        for (int p = std::max(0, k - dy); p <= std::min(k, dx); ++p)
        {
            for (std::size_t i = 0; i < x.num_cells(p); ++i)
            {
                for (std::size_t j = 0; j < y.num_cells(k - p); ++j)
                    cells[static_cast<std::size_t>(k)].push_back(ProductCell{p, i, j});
            }
        }
    }
    return cells;
}

Z2CwComplex product(const Z2CwComplex& x, const Z2CwComplex& y)
{
    require_valid(x);
    require_valid(y);
    const auto pairs = product_cells(x, y);
    if (pairs.empty())
        return Z2CwComplex();
    const int d = static_cast<int>(pairs.size()) - 1;

    // index[k] maps (p, i, j) -> position in dimension k
    std::vector<std::map<std::tuple<int, std::size_t, std::size_t>, std::size_t>> index(pairs.size());
    for (std::size_t k = 0; k < pairs.size(); ++k)
    {
        for (std::size_t pos = 0; pos < pairs[k].size(); ++pos)
        {
            const ProductCell& e = pairs[k][pos];
            index[k][{e.left_dim, e.left, e.right}] = pos;
        }
    }

    std::vector<IntegerMatrix> bx_all;
    std::vector<IntegerMatrix> by_all;
    for (int p = 0; p <= x.dimension(); ++p)
        bx_all.push_back(x.boundary(p));
    for (int q = 0; q <= y.dimension(); ++q)
        by_all.push_back(y.boundary(q));

    std::vector<Z2CwComplex::Cells> cells(pairs.size());
    for (int k = 0; k <= d; ++k)
    {
        const auto& ps = pairs[static_cast<std::size_t>(k)];
        auto& c = cells[static_cast<std::size_t>(k)];
        c.boundary = IntegerMatrix(k == 0 ? 0 : pairs[static_cast<std::size_t>(k - 1)].size(), ps.size());
        for (std::size_t col = 0; col < ps.size(); ++col)
        {
            const ProductCell& e = ps[col];
            const int p = e.left_dim;
            const int q = k - p;
            c.labels.push_back(x.label(p, e.left) + "*" + y.label(q, e.right));
            const SignedCell tx = x.action(p)[e.left];
            const SignedCell ty = y.action(q)[e.right];
            c.action.push_back(SignedCell{index[static_cast<std::size_t>(k)].at({p, tx.index, ty.index}),
                                          tx.sign * ty.sign});
            c.fixed.push_back(x.is_fixed(p, e.left) && y.is_fixed(q, e.right));
            if (k == 0)
                continue;
            auto& below = index[static_cast<std::size_t>(k - 1)];
            if (p > 0)
            {
                const IntegerMatrix& bx = bx_all[static_cast<std::size_t>(p)];
                for (std::size_t a = 0; a < bx.rows(); ++a)
                {
                    if (bx(a, e.left) != 0)
                        c.boundary(below.at({p - 1, a, e.right}), col) += bx(a, e.left);
                }
            }
            if (q > 0)
            {
                const IntegerMatrix& by = by_all[static_cast<std::size_t>(q)];
                const int sign = p % 2 == 0 ? 1 : -1;
                for (std::size_t b = 0; b < by.rows(); ++b)
                {
                    if (by(b, e.right) != 0)
                        c.boundary(below.at({p, e.left, b}), col) += sign * by(b, e.right);
                }
            }
        }
    }
    return Z2CwComplex(std::move(cells));
}

QuotientResult quotient_complex(const Z2CwComplex& x)
{
    require_valid(x);
    QuotientResult out;
    const int d = x.dimension();
    std::vector<IntegerMatrix> section;
    for (int n = 0; n <= d; ++n)
    {
        const auto orbits = x.free_orbits(n);
        const auto fixed = x.fixed_cells(n);
        const std::size_t q = orbits.size() + fixed.size();
        IntegerMatrix proj(q, x.num_cells(n));
        IntegerMatrix sec(x.num_cells(n), q);
        std::vector<std::string> labels;
        std::size_t k = 0;
        for (const auto& o : orbits)
        {
            labels.push_back(x.label(n, o.rep));
            proj(k, o.rep) = 1;
            proj(k, o.partner) = o.sign;
            sec(o.rep, k) = 1;
            ++k;
        }
        for (std::size_t f : fixed)
        {
            labels.push_back(x.label(n, f));
            proj(k, f) = 1;
            sec(f, k) = 1;
            ++k;
        }
        out.complex.labels.push_back(std::move(labels));
        out.projection.push_back(std::move(proj));
        section.push_back(std::move(sec));
    }
    for (int n = 0; n <= d; ++n)
    {
        const auto un = static_cast<std::size_t>(n);
        if (n == 0)
            out.complex.boundary.push_back(IntegerMatrix(0, out.complex.labels[0].size()));
        else
            out.complex.boundary.push_back(out.projection[un - 1] * x.boundary(n) * section[un]);
    }
    return out;
}

namespace {

/// perm[n][i] = index in b of the cell labelled like a's cell i, or nullopt.
std::optional<std::vector<std::vector<std::size_t>>> label_matching(const Z2CwComplex& a, const Z2CwComplex& b)
{
    if (a.dimension() != b.dimension())
        return std::nullopt;
    std::vector<std::vector<std::size_t>> perm;
    for (int n = 0; n <= a.dimension(); ++n)
    {
        if (a.num_cells(n) != b.num_cells(n))
            return std::nullopt;
        std::map<std::string, std::size_t> where;
        for (std::size_t i = 0; i < b.num_cells(n); ++i)
            where[b.label(n, i)] = i;
        std::vector<std::size_t> p;
        for (std::size_t i = 0; i < a.num_cells(n); ++i)
        {
            auto it = where.find(a.label(n, i));
            if (it == where.end())
                return std::nullopt;
            p.push_back(it->second);
        }
        perm.push_back(std::move(p));
    }
    return perm;
}

}   // namespace

bool isomorphic_by_labels(const Z2CwComplex& a, const Z2CwComplex& b)
{
    auto perm = label_matching(a, b);
    if (!perm)
        return false;
    for (int n = 0; n <= a.dimension(); ++n)
    {
        const auto& p = (*perm)[static_cast<std::size_t>(n)];
        for (std::size_t i = 0; i < a.num_cells(n); ++i)
        {
            const SignedCell ta = a.action(n)[i];
            const SignedCell tb = b.action(n)[p[i]];
            if (p[ta.index] != tb.index || ta.sign != tb.sign)
                return false;
            if (a.is_fixed(n, i) != b.is_fixed(n, p[i]))
                return false;
        }
        if (n == 0)
            continue;
        const auto& pb = (*perm)[static_cast<std::size_t>(n - 1)];
        const IntegerMatrix ba = a.boundary(n);
        const IntegerMatrix bb = b.boundary(n);
        for (std::size_t r = 0; r < ba.rows(); ++r)
        {
            for (std::size_t c = 0; c < ba.cols(); ++c)
            {
                if (ba(r, c) != bb(pb[r], p[c]))
                    return false;
            }
        }
    }
    return true;
}

Z2CwComplex sort_cells_by_label(const Z2CwComplex& x)
{
    std::vector<std::vector<std::size_t>> order;   // order[n][new] = old
    std::vector<std::vector<std::size_t>> inverse;  // inverse[n][old] = new
    for (int n = 0; n <= x.dimension(); ++n)
    {
        std::vector<std::size_t> o(x.num_cells(n));
        std::iota(o.begin(), o.end(), 0);
        std::sort(o.begin(), o.end(), [&](std::size_t a, std::size_t b) { return x.label(n, a) < x.label(n, b); });
        std::vector<std::size_t> inv(o.size());
        for (std::size_t k = 0; k < o.size(); ++k)
            inv[o[k]] = k;
        order.push_back(std::move(o));
        inverse.push_back(std::move(inv));
    }
    std::vector<Z2CwComplex::Cells> cells;
    for (int n = 0; n <= x.dimension(); ++n)
    {
        const auto un = static_cast<std::size_t>(n);
        Z2CwComplex::Cells c;
        const IntegerMatrix b = x.boundary(n);
        c.boundary = IntegerMatrix(b.rows(), b.cols());
        for (std::size_t k = 0; k < order[un].size(); ++k)
        {
            const std::size_t old = order[un][k];
            c.labels.push_back(x.label(n, old));
            const SignedCell t = x.action(n)[old];
            c.action.push_back(SignedCell{inverse[un][t.index], t.sign});
            c.fixed.push_back(x.is_fixed(n, old));
            for (std::size_t r = 0; r < b.rows(); ++r)
                c.boundary(inverse[un - 1][r], k) = b(r, old);
        }
        cells.push_back(std::move(c));
    }
    return Z2CwComplex(std::move(cells));
}

}   // namespace z2coh
