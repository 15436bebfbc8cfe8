#include "z2coh/sequences.hpp"

#include "z2coh/errors.hpp"

namespace z2coh {

namespace {

std::vector<std::vector<std::string>> as_lists(const CellLabels& y)
{
    std::vector<std::vector<std::string>> out;
    for (const auto& s : y)
        out.emplace_back(s.begin(), s.end());
    return out;
}

/// Borel cochains of (X, Y), X and Y at one approximation level.
struct PairCochains
{
    BorelComplex relative;
    BorelComplex whole;
    BorelComplex sub;

    PairCochains(const Z2CwComplex& x, const CellLabels& y, int twist, int level)
        : relative(x, twist, level, y), whole(x, twist, level), sub(subcomplex(x, as_lists(y)).complex, twist, level)
    {
    }

    FgAbGroup h_relative(int k) const { return relative.cohomology(k); }
    FgAbGroup h_whole(int k) const { return whole.cohomology(k); }
    FgAbGroup h_sub(int k) const { return sub.cohomology(k); }

    GroupHom extension(int k, const FgAbGroup& from, const FgAbGroup& to) const
    {
        return hom_from_cochains(label_match(whole, relative, k), from, to);
    }
    GroupHom restriction(int k, const FgAbGroup& from, const FgAbGroup& to) const
    {
        return hom_from_cochains(label_match(sub, whole, k), from, to);
    }
    GroupHom connecting(int k, const FgAbGroup& from, const FgAbGroup& to) const
    {
        const IntegerMatrix m =
            label_match(relative, whole, k + 1) * whole.cochains().differential(k) * label_match(whole, sub, k);
        return hom_from_cochains(m, from, to);
    }
};

std::string degree_label(const std::string& space, int k)
{
    return "H^" + std::to_string(k) + "(" + space + ")";
}

}   // namespace

ExactSequence les_of_pair(const Z2CwComplex& x, const CellLabels& y, int twist, int max_degree)
{
    const PairCochains pair(x, y, twist, approximation_level(std::max(max_degree, 0)));
    ExactSequence seq;
    seq.starts_with_zero = true;
    for (int k = 0; k <= max_degree; ++k)
    {
        const FgAbGroup rel = pair.h_relative(k);
        const FgAbGroup whole = pair.h_whole(k);
        const FgAbGroup sub = pair.h_sub(k);
        if (k > 0)
            seq.maps.push_back(pair.connecting(k - 1, seq.groups.back(), rel));
        seq.maps.push_back(pair.extension(k, rel, whole));
        seq.maps.push_back(pair.restriction(k, whole, sub));
        seq.labels.push_back(degree_label("X|Y", k));
        seq.labels.push_back(degree_label("X", k));
        seq.labels.push_back(degree_label("Y", k));
        seq.groups.push_back(rel);
        seq.groups.push_back(whole);
        seq.groups.push_back(sub);
    }
    return seq;
}

GroupHom restriction_map(const Z2CwComplex& x, const CellLabels& y, int twist, int n)
{
    const PairCochains pair(x, y, twist, approximation_level(std::max(n, 0)));
    return pair.restriction(n, pair.h_whole(n), pair.h_sub(n));
}

ExactSequence reduced_sequence(const Z2CwComplex& x, const CellLabels& y, int twist, int n)
{
    const PairCochains pair(x, y, twist, approximation_level(std::max(n, 0)));
    const FgAbGroup rel = pair.h_relative(n);
    const GroupHom before = pair.restriction(n - 1, pair.h_whole(n - 1), pair.h_sub(n - 1));
    const GroupHom after = pair.restriction(n, pair.h_whole(n), pair.h_sub(n));
    const GroupHom delta = pair.connecting(n - 1, before.target, rel);
    const GroupHom relativize = pair.extension(n, rel, after.source);

    const FgAbGroup coker = cokernel(before);
    const FgAbGroup ker = kernel(after);

    // coker generators are coordinate vectors of H^{n-1}(Y)
    IntegerMatrix in(rel.num_generators(), coker.num_generators());
    for (std::size_t i = 0; i < coker.num_generators(); ++i)
        in.set_column(i, rel.reduce(delta.matrix.apply(coker.generator(i))));
    // ker generators are coordinate vectors of H^n(X)
    IntegerMatrix out(ker.num_generators(), rel.num_generators());
    for (std::size_t i = 0; i < rel.num_generators(); ++i)
        out.set_column(i, ker.coordinates(relativize.matrix.column(i)));

    ExactSequence seq;
    seq.labels = {"coker i*^" + std::to_string(n - 1), degree_label("X|Y", n), "ker i*^" + std::to_string(n)};
    seq.groups = {coker, rel, ker};
    seq.maps = {GroupHom{coker, rel, in}, GroupHom{rel, ker, out}};
    seq.starts_with_zero = true;
    seq.ends_with_zero = true;
    return seq;
}

ExactnessReport check_exactness(const ExactSequence& seq)
{
    ExactnessReport report;
    auto fail = [&](std::string msg) {
        report.exact = false;
        report.violations.push_back(std::move(msg));
    };
    if (seq.maps.size() + 1 != seq.groups.size())
    {
        fail("sequence has " + std::to_string(seq.groups.size()) + " groups but " + std::to_string(seq.maps.size()) +
             " maps");
        return report;
    }
    auto name = [&](std::size_t i) { return i < seq.labels.size() ? seq.labels[i] : "#" + std::to_string(i); };

    for (std::size_t i = 0; i < seq.maps.size(); ++i)
    {
        const GroupHom& h = seq.maps[i];
        if (!(h.source == seq.groups[i]) || !(h.target == seq.groups[i + 1]))
            fail("map " + name(i) + " -> " + name(i + 1) + " has the wrong source or target");
        else if (!h.respects_relations())
            fail("map " + name(i) + " -> " + name(i + 1) + " is not well defined");
    }
    if (!report.exact)
        return report;

    if (seq.starts_with_zero && !seq.maps.empty() && !is_injective(seq.maps.front()))
        fail("not exact at " + name(0) + ": first map is not injective");
    if (seq.ends_with_zero && !seq.maps.empty() && !is_surjective(seq.maps.back()))
        fail("not exact at " + name(seq.groups.size() - 1) + ": last map is not surjective");

    for (std::size_t i = 1; i < seq.maps.size(); ++i)
    {
        const GroupHom& alpha = seq.maps[i - 1];
        const GroupHom& beta = seq.maps[i];
        if (!compose(beta, alpha).is_zero())
        {
            fail("not exact at " + name(i) + ": composite is nonzero");
            continue;
        }
        // ker beta inside im alpha + relations, in coordinates of groups[i]
        const FgAbGroup k = kernel(beta);
        const IntegerMatrix rel = relation_lattice(seq.groups[i]);
        IntegerMatrix gens(seq.groups[i].num_generators(), k.num_generators());
        for (std::size_t g = 0; g < k.num_generators(); ++g)
            gens.set_column(g, k.generator(g));
        const IntegerMatrix image_lattice = alpha.matrix.hstack(rel);
        if (!subquotient(gens.hstack(image_lattice), image_lattice).is_trivial())
            fail("not exact at " + name(i) + ": kernel is larger than image");
    }
    return report;
}

}   // namespace z2coh
