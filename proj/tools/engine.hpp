#ifndef Z2COH_TOOLS_ENGINE_HPP
#define Z2COH_TOOLS_ENGINE_HPP

#include <string>

#include "z2coh/abelian.hpp"
#include "z2coh/zcw.hpp"

namespace z2coh::cli {

/**
 * theory / coeff pairs understood by the tools:
 *     bredon          coefficient system name (0~Z, 0~Ztilde, Z~Z, Z~0, Z^k~Z^k)
 *     borel           Z(0) | Z(1)
 *     borel-relative  Z(0) | Z(1), relative to the fixed subcomplex
 *     borel-fixed     Z(0) | Z(1), Borel cohomology of the fixed subcomplex
 *     cellular        "" (underlying complex)
 *     fixed           "" (cellular cohomology of the fixed subcomplex)
 */
FgAbGroup evaluate_theory(const Z2CwComplex& x, const std::string& theory, const std::string& coeff, int degree);

bool is_borel_theory(const std::string& theory);
/// 0 / 1 from "Z(0)" / "Z(1)" or "0" / "1"; throws Error otherwise.
int parse_twist(const std::string& text);
std::string twist_name(int twist);

}   // namespace z2coh::cli

#endif
