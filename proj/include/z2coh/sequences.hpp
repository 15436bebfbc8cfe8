/**
 * Long exact sequence of a pair in Borel cohomology
 *
 *   ... -> H^k(X|Y) -> H^k(X) -> H^k(Y) -> H^{k+1}(X|Y) -> ...
 *
 * computed at cochain level: extension by zero, restriction, and the
 * connecting map (extend a cocycle on Y by zero, apply delta_X, read off
 * the result on cells away from Y).
 */

#ifndef Z2COH_SEQUENCES_HPP
#define Z2COH_SEQUENCES_HPP

#include <string>
#include <vector>

#include "z2coh/abelian.hpp"
#include "z2coh/borel.hpp"
#include "z2coh/zcw.hpp"

namespace z2coh {

/// groups[0] -> groups[1] -> ... with maps[i] : groups[i] -> groups[i+1].
struct ExactSequence
{
    std::vector<std::string> labels;
    std::vector<FgAbGroup> groups;
    std::vector<GroupHom> maps;
    /// Whether the sequence is preceded / followed by 0.
    bool starts_with_zero = false;
    bool ends_with_zero = false;
};

/// H^k(X|Y), H^k(X), H^k(Y) for k = 0..max_degree with the three kinds of maps.
ExactSequence les_of_pair(const Z2CwComplex& x, const CellLabels& y, int twist, int max_degree);

/// Restriction H^n_{Z2}(X; Z(j)) -> H^n_{Z2}(Y; Z(j)).
GroupHom restriction_map(const Z2CwComplex& x, const CellLabels& y, int twist, int n);

/**
 * 0 -> coker(i*^{n-1}) -> H^n(X|Y) -> ker(i*^n) -> 0 extracted from the long
 * exact sequence, where i* is restriction to Y.
 */
ExactSequence reduced_sequence(const Z2CwComplex& x, const CellLabels& y, int twist, int n);

struct ExactnessReport
{
    bool exact = true;
    std::vector<std::string> violations;
};

/// Checks composites vanish and kernels lie in images at every node.
ExactnessReport check_exactness(const ExactSequence& seq);

}   // namespace z2coh

#endif
