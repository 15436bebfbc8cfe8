#include <catch_amalgamated.hpp>

#include <random>

#include "oracles.hpp"
#include "printing.hpp"
#include "z2coh/abelian.hpp"
#include "z2coh/errors.hpp"
#include "z2coh/smith.hpp"

using namespace z2coh;

TEST_CASE("canonical forms")
{
    REQUIRE(FgAbGroup::from_orders({2, 3}) == FgAbGroup::cyclic(6));
    REQUIRE(FgAbGroup::from_orders({4, 2}) == FgAbGroup(0, {2, 4}));
    REQUIRE(!(FgAbGroup::cyclic(4) == FgAbGroup::from_orders({2, 2})));
    REQUIRE(FgAbGroup::from_orders({1, 0, 0}) == FgAbGroup::free(2));
    REQUIRE(FgAbGroup::from_orders({6, 10}).torsion() == std::vector<Integer>{2, 30});
    REQUIRE(FgAbGroup::from_orders({2, 2}).order() == 4);
    REQUIRE_THROWS(FgAbGroup::free(1).order());
}

TEST_CASE("printing and parsing")
{
    REQUIRE(FgAbGroup::trivial().to_string() == "0");
    REQUIRE(FgAbGroup::free(1).to_string() == "Z");
    REQUIRE(FgAbGroup(2, {2, 4}).to_string() == "Z^2 + Z/2 + Z/4");
    for (const std::string s : {"0", "Z", "Z^3", "Z/2", "Z/2 + Z/2", "Z + Z/6"})
        REQUIRE(parse_group(s).to_string() == s);
    REQUIRE(parse_group("Z/2 + Z/3") == FgAbGroup::cyclic(6));
    REQUIRE_THROWS_AS(parse_group("Q"), ParseError);
}

TEST_CASE("subquotients")
{
    SECTION("Z / 2Z")
    {
        const IntegerMatrix num{{1}};
        const IntegerMatrix rel{{2}};
        REQUIRE(subquotient(num, rel) == FgAbGroup::cyclic(2));
    }
    SECTION("dependent generators")
    {
        const IntegerMatrix num{{1, 2, 3}, {0, 0, 0}};
        const IntegerMatrix rel{{4}, {0}};
        REQUIRE(subquotient(num, rel) == FgAbGroup::cyclic(4));
    }
    SECTION("coordinates round trip")
    {
        const IntegerMatrix num{{2, 0}, {0, 1}};
        const IntegerMatrix rel{{4, 0}, {0, 3}};
        const FgAbGroup g = subquotient(num, rel);
        REQUIRE(g == FgAbGroup(0, {6}));
        for (std::size_t i = 0; i < g.num_generators(); ++i)
        {
            auto coords = g.coordinates(g.generator(i));
            std::vector<Integer> unit(g.num_generators(), 0);
            unit[i] = 1;
            REQUIRE(coords == g.reduce(unit));
        }
        REQUIRE(g.contains({2, 0}));
        REQUIRE(!g.contains({1, 0}));
    }
}

namespace {

// Complex Z^a -D0-> Z^b -D1-> Z^c with D1 D0 = 0, both in block Smith form,
// then conjugated by random unimodular matrices.
struct KnownComplex
{
    CochainComplex complex;
    FgAbGroup h1;
};

KnownComplex known_complex(std::mt19937& rng)
{
    std::uniform_int_distribution<int> count(0, 2);
    std::uniform_int_distribution<int> factor(1, 4);
    const int r0 = count(rng);
    const int r1 = count(rng);
    const int free_middle = count(rng);
    const std::size_t a = static_cast<std::size_t>(r0 + count(rng));
    const std::size_t b = static_cast<std::size_t>(r0 + r1 + free_middle);
    const std::size_t c = static_cast<std::size_t>(r1 + count(rng));

    IntegerMatrix d0(b, a);
    IntegerMatrix d1(c, b);
    std::vector<Integer> orders;
    for (int i = 0; i < r0; ++i)
    {
        const int f = factor(rng);
        d0(static_cast<std::size_t>(i), static_cast<std::size_t>(i)) = f;
        orders.push_back(f);
    }
    for (int i = 0; i < r1; ++i)
        d1(static_cast<std::size_t>(i), static_cast<std::size_t>(r0 + i)) = factor(rng);
    for (int i = 0; i < free_middle; ++i)
        orders.push_back(0);

    const IntegerMatrix p = oracle::random_unimodular(a, 10, rng);
    const IntegerMatrix q = oracle::random_unimodular(b, 10, rng);
    const IntegerMatrix r = oracle::random_unimodular(c, 10, rng);
    const IntegerMatrix q_inv = smith_normal_form(q).v * smith_normal_form(q).u;   // q^{-1} since d = I
    return {CochainComplex({a, b, c}, {q * d0 * p, r * d1 * q_inv}), FgAbGroup::from_orders(orders)};
}

}   // namespace

TEST_CASE("cohomology of random complexes with known answer")
{
    std::mt19937 rng(424242);
    for (int trial = 0; trial < 100; ++trial)
    {
        const KnownComplex k = known_complex(rng);
        k.complex.check_square_zero();
        REQUIRE(cohomology_of_complex(k.complex, 1) == k.h1);
    }
}

TEST_CASE("rank-nullity for cohomology ranks")
{
    std::mt19937 rng(99);
    for (int trial = 0; trial < 50; ++trial)
    {
        const KnownComplex k = known_complex(rng);
        long long chi = 0;
        long long chi_h = 0;
        for (int n = 0; n <= 2; ++n)
        {
            const long long sign = n % 2 == 0 ? 1 : -1;
            chi += sign * static_cast<long long>(k.complex.rank(n));
            chi_h += sign * static_cast<long long>(cohomology_of_complex(k.complex, n).free_rank());
        }
        REQUIRE(chi == chi_h);
    }
}

TEST_CASE("non-complexes are rejected")
{
    const CochainComplex bad({1, 1, 1}, {IntegerMatrix{{1}}, IntegerMatrix{{1}}});
    REQUIRE_THROWS_AS(bad.check_square_zero(), CompositionNotZero);
    REQUIRE_THROWS_AS(cohomology_of_complex(bad, 1), CompositionNotZero);
}

TEST_CASE("homomorphisms")
{
    const FgAbGroup z = FgAbGroup::free(1);
    const FgAbGroup z4 = FgAbGroup::cyclic(4);
    const FgAbGroup z2 = FgAbGroup::cyclic(2);

    SECTION("Z -> Z/4 reduction")
    {
        const GroupHom h{z, z4, IntegerMatrix{{1}}};
        REQUIRE(h.respects_relations());
        REQUIRE(is_surjective(h));
        REQUIRE(!is_injective(h));
        REQUIRE(kernel(h).free_rank() == 1);
        REQUIRE(cokernel(h).is_trivial());
    }
    SECTION("Z/2 -> Z/4 inclusion")
    {
        const GroupHom h{z2, z4, IntegerMatrix{{2}}};
        REQUIRE(h.respects_relations());
        REQUIRE(is_injective(h));
        REQUIRE(cokernel(h) == z2);
        REQUIRE(image(h) == z2);
    }
    SECTION("Z/4 -> Z/2 reduction then inclusion is zero mod 4")
    {
        const GroupHom red{z4, z2, IntegerMatrix{{1}}};
        const GroupHom inc{z2, z4, IntegerMatrix{{2}}};
        REQUIRE(kernel(red) == z2);
        REQUIRE(!compose(inc, red).is_zero());
        REQUIRE(compose(red, inc).is_zero());
    }
    SECTION("ill-defined map")
    {
        const GroupHom h{z2, z, IntegerMatrix{{1}}};
        REQUIRE(!h.respects_relations());
    }
    SECTION("identity and zero")
    {
        REQUIRE(is_injective(identity_hom(z4)));
        REQUIRE(zero_hom(z4, z2).is_zero());
    }
}

TEST_CASE("induced maps")
{
    // C: Z -2-> Z, D: Z -4-> Z; f = (1, 2) gives Z/2 -> Z/4, 1 -> 2
    const CochainComplex c({1, 1}, {IntegerMatrix{{2}}});
    const CochainComplex d({1, 1}, {IntegerMatrix{{4}}});
    const CochainMap f{&c, &d, {IntegerMatrix{{1}}, IntegerMatrix{{2}}}};
    REQUIRE(f.commutes(0));
    const GroupHom h = induced_hom(f, 1);
    REQUIRE(h.source == FgAbGroup::cyclic(2));
    REQUIRE(h.target == FgAbGroup::cyclic(4));
    REQUIRE(is_injective(h));
    REQUIRE(cokernel(h) == FgAbGroup::cyclic(2));

    const CochainMap g{&c, &d, {IntegerMatrix{{1}}, IntegerMatrix{{1}}}};
    REQUIRE_THROWS_AS(induced_hom(g, 1), NotChainMap);
}
