#include <catch_amalgamated.hpp>

#include "oracles.hpp"
#include "printing.hpp"
#include "z2coh/borel.hpp"
#include "z2coh/bredon.hpp"
#include "z2coh/catalog.hpp"
#include "z2coh/errors.hpp"

using namespace z2coh;

namespace {

CellLabels fixed_labels(const Z2CwComplex& x)
{
    return labels_of(fixed_subcomplex(x).complex);
}

}   // namespace

TEST_CASE("antipodal sphere skeleta")
{
    for (int n = 0; n <= 5; ++n)
    {
        const Z2CwComplex s = ez2_skeleton(n);
        REQUIRE(validate(s).empty());
        REQUIRE(s.is_free());
        for (int k = 0; k <= n; ++k)
            REQUIRE(s.num_cells(k) == 2);
        REQUIRE(cellular_cohomology(s.underlying(), n) == FgAbGroup::free(n == 0 ? 2 : 1));
    }
}

TEST_CASE("group cohomology of Z2")
{
    const std::vector<std::string> trivial{"Z", "0", "Z/2", "0", "Z/2", "0"};
    const std::vector<std::string> sign{"0", "Z/2", "0", "Z/2", "0", "Z/2"};
    for (int p = 0; p <= 5; ++p)
    {
        const auto up = static_cast<std::size_t>(p);
        REQUIRE(group_cohomology_z2(1, IntegerMatrix{{1}}, p) == parse_group(trivial[up]));
        REQUIRE(group_cohomology_z2(1, IntegerMatrix{{-1}}, p) == parse_group(sign[up]));
        // regular representation is induced, so acyclic above degree 0
        const FgAbGroup reg = group_cohomology_z2(2, IntegerMatrix{{0, 1}, {1, 0}}, p);
        REQUIRE(reg == (p == 0 ? FgAbGroup::free(1) : FgAbGroup::trivial()));
    }
    REQUIRE_THROWS_AS(group_cohomology_z2(1, IntegerMatrix{{2}}, 0), NotInvolution);
    REQUIRE_THROWS_AS(group_cohomology_z2(2, IntegerMatrix{{1}}, 0), DimensionMismatch);
}

TEST_CASE("Borel cohomology of a point is group cohomology")
{
    const Z2CwComplex pt = point_complex();
    for (int n = 0; n <= 4; ++n)
    {
        REQUIRE(borel_cohomology(pt, 0, n) == group_cohomology_z2(1, IntegerMatrix{{1}}, n));
        REQUIRE(borel_cohomology(pt, 1, n) == group_cohomology_z2(1, IntegerMatrix{{-1}}, n));
    }
}

TEST_CASE("free spaces have the cohomology of the quotient")
{
    for (int n = 1; n <= 3; ++n)
    {
        const Z2CwComplex s = sphere_antipodal(n);
        for (int k = 0; k <= n + 1; ++k)
        {
            CAPTURE(n, k);
            REQUIRE(borel_cohomology(s, 0, k) == bredon_cohomology(s, constant_z(), k));
        }
    }
}

TEST_CASE("Borel engine agrees with invariant cochains on X x S^N")
{
    const std::vector<std::string> names{"point", "circle-reflection", "circle-antipodal", "cp1-conjugation",
                                         "tr-sphere-2", "tr-torus-2", "lens-2"};
    for (const auto& name : names)
    {
        const Z2CwComplex x = build(name);
        for (int j = 0; j <= 1; ++j)
        {
            for (int n = 0; n <= x.dimension() + 1; ++n)
            {
                CAPTURE(name, j, n);
                const int level = approximation_level(n);
                REQUIRE(borel_cohomology(x, j, n) == oracle::borel_via_product(x, j, n, oracle::no_cells(x), level));
                REQUIRE(borel_cohomology(x, j, n, fixed_labels(x)) ==
                        oracle::borel_via_product(x, j, n, oracle::fixed_mask(x), level));
            }
        }
    }
}

TEST_CASE("stability in the approximation level")
{
    for (const std::string& name : list_names())
    {
        const Z2CwComplex x = build(name);
        for (int j = 0; j <= 1; ++j)
        {
            for (int n = 0; n <= x.dimension() + 1; ++n)
            {
                CAPTURE(name, j, n);
                REQUIRE(stability_check(x, j, n).stable);
            }
        }
    }
}

TEST_CASE("relative cohomology requires an invariant subcomplex")
{
    const Z2CwComplex s = circle_antipodal();
    CellLabels half(1);
    half[0].insert(s.label(0, 0));
    REQUIRE_THROWS_AS(borel_cohomology(s, 1, 0, half), SubcomplexNotInvariant);
    REQUIRE_THROWS_AS(TwistedCochains(s, 2, {}), Error);
    REQUIRE_THROWS_AS(TwistedCochains(point_complex(), 1, {}), InvalidComplex);
}

TEST_CASE("orbit evaluations")
{
    const Z2CwComplex z0 = free_pair();
    const Z2CwComplex z1 = point_complex();
    for (int n = 0; n <= 3; ++n)
    {
        for (int j = 0; j <= 1; ++j)
        {
            CAPTURE(n, j);
            REQUIRE(h_theory(z0, {}, j, n) == (n == 0 ? FgAbGroup::free(1) : FgAbGroup::trivial()));
            REQUIRE(h_theory(z1, {}, j, n).is_trivial());
        }
    }
}

TEST_CASE("forgetful map on the lens space")
{
    const GroupHom f = forgetful_map(lens(4), 2, 1);
    REQUIRE(f.source == FgAbGroup::cyclic(4));
    REQUIRE(f.target == FgAbGroup::cyclic(4));
    REQUIRE(f.respects_relations());
}
