#include "engine.hpp"

#include "z2coh/borel.hpp"
#include "z2coh/bredon.hpp"
#include "z2coh/coeff.hpp"
#include "z2coh/errors.hpp"

namespace z2coh::cli {

bool is_borel_theory(const std::string& theory)
{
    return theory == "borel" || theory == "borel-relative" || theory == "borel-fixed";
}

int parse_twist(const std::string& text)
{
    if (text == "0" || text == "Z(0)")
        return 0;
    if (text == "1" || text == "Z(1)")
        return 1;
    throw Error("twist must be 0 or 1, got '" + text + "'");
}

std::string twist_name(int twist)
{
    return "Z(" + std::to_string(twist) + ")";
}

FgAbGroup evaluate_theory(const Z2CwComplex& x, const std::string& theory, const std::string& coeff, int degree)
{
    if (theory == "bredon")
        return bredon_cohomology(x, std_system(coeff), degree);
    if (theory == "borel")
        return borel_cohomology(x, parse_twist(coeff), degree);
    if (theory == "borel-relative")
        return borel_cohomology(x, parse_twist(coeff), degree, labels_of(fixed_subcomplex(x).complex));
    if (theory == "borel-fixed")
        return borel_cohomology(fixed_subcomplex(x).complex, parse_twist(coeff), degree);
    if (theory == "cellular")
        return cellular_cohomology(x.underlying(), degree);
    if (theory == "fixed")
        return cellular_cohomology(fixed_subcomplex(x).complex.underlying(), degree);
    throw Error("unknown theory '" + theory + "'");
}

}   // namespace z2coh::cli
