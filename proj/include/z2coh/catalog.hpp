/**
 * Built-in Z2-CW complexes and their expected cohomology.
 *
 * Names accepted by build():
 *     point, free-pair, circle-trivial, circle-reflection, circle-antipodal,
 *     cp1-conjugation, tr-sphere-<d>, tr-torus-<d>, sphere-antipodal-<n>,
 *     lens-<2q>
 *
 * Lens spaces. S^3 is the join of two 4q-gons with vertices a_j and b_j;
 * Z_2q acts by j -> j + 2 on both circles and complex conjugation by
 * j -> -j. The conjugation descends to L_2q = S^3 / Z_2q. Every reflection
 * axis passes through vertices, so no edge is flipped and the quotient
 * Delta-complex is a Z2-CW complex with cell counts (4, 4 + 8q, 16q, 8q).
 * Its fixed set is two circles, each with two vertices and two edges.
 */

#ifndef Z2COH_CATALOG_HPP
#define Z2COH_CATALOG_HPP

#include <string>
#include <vector>

#include "z2coh/zcw.hpp"

namespace z2coh {

Z2CwComplex point_complex();
Z2CwComplex free_pair();
Z2CwComplex circle_trivial();
Z2CwComplex circle_reflection();
Z2CwComplex circle_antipodal();
Z2CwComplex cp1_conjugation();
/// Suspension of the antipodal S^{d-1}; fixed set = the two poles.
Z2CwComplex tr_sphere(int d);
/// d-fold product of circle_reflection.
Z2CwComplex tr_torus(int d);
Z2CwComplex sphere_antipodal(int n);
/// L_p for even p = 2q.
Z2CwComplex lens(int p);

/// Throws UnknownSpace.
Z2CwComplex build(const std::string& name);
/// The standard catalog, sorted.
std::vector<std::string> list_names();
bool is_known_space(const std::string& name);

struct OracleEntry
{
    /// cellular | fixed | bredon | borel | borel-relative | borel-fixed
    std::string theory;
    /// Coefficient system name for bredon, "Z(0)" / "Z(1)" for Borel theories, "" otherwise.
    std::string coeff;
    int degree = 0;
    std::string expected;
};

/// Expected groups for a catalog space. Throws UnknownSpace.
std::vector<OracleEntry> oracle_table(const std::string& name);

}   // namespace z2coh

#endif
