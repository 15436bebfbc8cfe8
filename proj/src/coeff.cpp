#include "z2coh/coeff.hpp"

#include "z2coh/errors.hpp"

namespace z2coh {

OrbitZ2 morphism_source(OrbitMorphism f)
{
    switch (f)
    {
        case OrbitMorphism::Id0:
        case OrbitMorphism::PhiMinus:
        case OrbitMorphism::Psi:
            return OrbitZ2::Z0;
        case OrbitMorphism::Id1:
            return OrbitZ2::Z1;
    }
    return OrbitZ2::Z0;
}

OrbitZ2 morphism_target(OrbitMorphism f)
{
    switch (f)
    {
        case OrbitMorphism::Id0:
        case OrbitMorphism::PhiMinus:
            return OrbitZ2::Z0;
        case OrbitMorphism::Psi:
        case OrbitMorphism::Id1:
            return OrbitZ2::Z1;
    }
    return OrbitZ2::Z0;
}

std::optional<OrbitMorphism> compose(OrbitMorphism g, OrbitMorphism f)
{
    if (morphism_target(f) != morphism_source(g))
        return std::nullopt;
    if (f == OrbitMorphism::Id0 || f == OrbitMorphism::Id1)
        return g;
    if (g == OrbitMorphism::Id0 || g == OrbitMorphism::Id1)
        return f;
    // f = phi-, g in {phi-, psi}
    if (g == OrbitMorphism::PhiMinus)
        return OrbitMorphism::Id0;
    return OrbitMorphism::Psi;
}

std::vector<OrbitMorphism> all_morphisms()
{
    return {OrbitMorphism::Id0, OrbitMorphism::PhiMinus, OrbitMorphism::Psi, OrbitMorphism::Id1};
}

std::string to_string(OrbitMorphism f)
{
    switch (f)
    {
        case OrbitMorphism::Id0: return "Id0";
        case OrbitMorphism::PhiMinus: return "phi-";
        case OrbitMorphism::Psi: return "psi";
        case OrbitMorphism::Id1: return "Id1";
    }
    return "?";
}

IntegerMatrix CoefficientSystem::evaluate(OrbitMorphism f) const
{
    switch (f)
    {
        case OrbitMorphism::Id0: return IntegerMatrix::identity(m0_rank);
        case OrbitMorphism::PhiMinus: return action;
        case OrbitMorphism::Psi: return structure_map;
        case OrbitMorphism::Id1: return IntegerMatrix::identity(m1_rank);
    }
    return {};
}

CoefficientSystem zero_to_z()
{
    return CoefficientSystem{1, IntegerMatrix{{1}}, 0, IntegerMatrix(1, 0), "0~Z"};
}

CoefficientSystem zero_to_ztilde()
{
    return CoefficientSystem{1, IntegerMatrix{{-1}}, 0, IntegerMatrix(1, 0), "0~Ztilde"};
}

CoefficientSystem constant_z()
{
    return CoefficientSystem{1, IntegerMatrix{{1}}, 1, IntegerMatrix{{1}}, "Z~Z"};
}

CoefficientSystem constant_free(std::size_t rank)
{
    return CoefficientSystem{rank, IntegerMatrix::identity(rank), rank, IntegerMatrix::identity(rank),
                             "Z^" + std::to_string(rank) + "~Z^" + std::to_string(rank)};
}

CoefficientSystem fixed_point_z()
{
    return CoefficientSystem{0, IntegerMatrix(0, 0), 1, IntegerMatrix(0, 1), "Z~0"};
}

std::vector<std::string> std_system_names()
{
    return {"0~Z", "0~Ztilde", "Z^2~Z^2", "Z~0", "Z~Z"};
}

CoefficientSystem std_system(const std::string& name)
{
    if (name == "0~Z")
        return zero_to_z();
    if (name == "0~Ztilde")
        return zero_to_ztilde();
    if (name == "Z~Z")
        return constant_z();
    if (name == "Z~0")
        return fixed_point_z();
    // Z^k~Z^k
    if (name.rfind("Z^", 0) == 0)
    {
        const auto sep = name.find('~');
        if (sep != std::string::npos)
        {
            const std::string left = name.substr(0, sep);
            const std::string right = name.substr(sep + 1);
            if (left == right && left.size() > 2 &&
                left.find_first_not_of("0123456789", 2) == std::string::npos)
            {
                const std::size_t k = std::stoul(left.substr(2));
                if (k >= 1)
                    return constant_free(k);
            }
        }
    }
    throw InvalidSystem("unknown coefficient system '" + name + "'");
}

std::vector<std::string> check_system(const CoefficientSystem& m)
{
    std::vector<std::string> out;
    if (m.action.rows() != m.m0_rank || m.action.cols() != m.m0_rank)
    {
        out.push_back("action must be " + std::to_string(m.m0_rank) + "x" + std::to_string(m.m0_rank));
        return out;
    }
    if (m.structure_map.rows() != m.m0_rank || m.structure_map.cols() != m.m1_rank)
    {
        out.push_back("structure map must be " + std::to_string(m.m0_rank) + "x" + std::to_string(m.m1_rank));
        return out;
    }
    if (!(m.action * m.action == IntegerMatrix::identity(m.m0_rank)))
        out.push_back("action is not an involution (A*A != I)");
    if (!(m.action * m.structure_map == m.structure_map))
        out.push_back("structure map does not land in the invariants (A*m != m)");
    return out;
}

}   // namespace z2coh
