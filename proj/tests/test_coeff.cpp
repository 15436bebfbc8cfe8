#include <catch_amalgamated.hpp>

#include "printing.hpp"
#include "z2coh/coeff.hpp"
#include "z2coh/errors.hpp"

using namespace z2coh;

TEST_CASE("orbit category composition")
{
    using M = OrbitMorphism;
    for (M f : all_morphisms())
    {
        for (M g : all_morphisms())
        {
            const auto gf = compose(g, f);
            REQUIRE(gf.has_value() == (morphism_target(f) == morphism_source(g)));
            if (gf)
            {
                REQUIRE(morphism_source(*gf) == morphism_source(f));
                REQUIRE(morphism_target(*gf) == morphism_target(g));
            }
        }
    }
    REQUIRE(compose(M::PhiMinus, M::PhiMinus) == M::Id0);
    REQUIRE(compose(M::Psi, M::PhiMinus) == M::Psi);
}

TEST_CASE("standard systems are functors")
{
    for (const std::string& name : std_system_names())
    {
        CAPTURE(name);
        const CoefficientSystem m = std_system(name);
        REQUIRE(check_system(m).empty());
        REQUIRE(m.name == name);
        for (OrbitMorphism f : all_morphisms())
        {
            for (OrbitMorphism g : all_morphisms())
            {
                const auto gf = compose(g, f);
                if (gf)
                    REQUIRE(m.evaluate(*gf) == m.evaluate(f) * m.evaluate(g));
            }
        }
    }
}

TEST_CASE("system values")
{
    REQUIRE(zero_to_ztilde().action == IntegerMatrix{{-1}});
    REQUIRE(zero_to_z().m1_rank == 0);
    REQUIRE(fixed_point_z().m0_rank == 0);
    REQUIRE(std_system("Z^3~Z^3").m0_rank == 3);
    REQUIRE_THROWS(std_system("Z^2~Z^3"));
    REQUIRE_THROWS(std_system("nonsense"));
}

TEST_CASE("invalid systems are reported")
{
    CoefficientSystem bad = constant_z();
    bad.action = IntegerMatrix{{2}};
    REQUIRE(!check_system(bad).empty());

    CoefficientSystem not_invariant = zero_to_ztilde();
    not_invariant.m1_rank = 1;
    not_invariant.structure_map = IntegerMatrix{{1}};
    REQUIRE(!check_system(not_invariant).empty());
}
