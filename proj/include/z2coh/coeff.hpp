/**
 * The orbit category of Z2 and coefficient systems over it.
 *
 * The orbit category has two objects, the free orbit Z0 = {z+, z-} and the
 * singleton Z1, and four morphisms: Id0, the swap phi- : Z0 -> Z0, the
 * collapse psi : Z0 -> Z1 and Id1. A coefficient system M is a contravariant
 * functor into abelian groups; here M(Z0) = Z^m0 carries the involution
 * A = M(phi-) and M(Z1) = Z^m1 maps into it through m = M(psi), which lands
 * in the A-invariants because psi o phi- = psi.
 */

#ifndef Z2COH_COEFF_HPP
#define Z2COH_COEFF_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "z2coh/integer_matrix.hpp"

namespace z2coh {

enum class OrbitZ2
{
    Z0,
    Z1,
};

enum class OrbitMorphism
{
    Id0,
    PhiMinus,
    Psi,
    Id1,
};

OrbitZ2 morphism_source(OrbitMorphism f);
OrbitZ2 morphism_target(OrbitMorphism f);
/// g o f, or nullopt when target(f) != source(g).
std::optional<OrbitMorphism> compose(OrbitMorphism g, OrbitMorphism f);
std::vector<OrbitMorphism> all_morphisms();
std::string to_string(OrbitMorphism f);

struct CoefficientSystem
{
    std::size_t m0_rank = 0;
    IntegerMatrix action;            // m0 x m0
    std::size_t m1_rank = 0;
    IntegerMatrix structure_map;     // m0 x m1
    std::string name;

    /// M(f) for a morphism f of the orbit category: M(target) -> M(source).
    IntegerMatrix evaluate(OrbitMorphism f) const;
};

/// Systems addressable by name: "0~Z", "0~Ztilde", "Z~Z", "Z~0" and "Z^k~Z^k".
CoefficientSystem std_system(const std::string& name);
std::vector<std::string> std_system_names();

CoefficientSystem zero_to_z();
CoefficientSystem zero_to_ztilde();
CoefficientSystem constant_z();
CoefficientSystem constant_free(std::size_t rank);
/// Z on the singleton orbit, 0 on the free orbit.
CoefficientSystem fixed_point_z();

/// Violations of A^2 = I and A m = m; empty when the system is valid.
std::vector<std::string> check_system(const CoefficientSystem& m);

}   // namespace z2coh

#endif
