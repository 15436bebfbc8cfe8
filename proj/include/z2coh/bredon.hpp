/**
 * Bredon cohomology of a Z2-CW complex with coefficients in a system M.
 *
 * A Bredon n-cochain is a natural transformation from the cellular chain
 * system to M: a pair (F0, F1) with F0 : C_n(X) -> M(Z0) equivariant
 * (F0(T e) = A F0(e)) and F1 : C_n(X^tau) -> M(Z1), subject to F0 = m F1 on
 * fixed cells. Such a pair is determined by
 *
 *   - x_e = F0(e) in M(Z0) for the representative e of each free orbit
 *     (then F0(e') = s A x_e for the partner, where T e = s e'), and
 *   - y_f = F1(f) in M(Z1) for each fixed cell f (then F0(f) = m y_f).
 *
 * Basis order: free orbits sorted by representative label, then fixed cells
 * sorted by label; within a block the standard basis of Z^m0 or Z^m1.
 *
 * The differential is precomposition with the boundary. For a free
 * representative c and a boundary term k*b:
 *     b a representative    ->  k * I   on block b
 *     b = partner of r      ->  k * s_r * A  on block r   (T r = s_r b)
 *     b fixed               ->  k * m   on block b
 * and for a fixed c only the fixed terms contribute, with k * I on M(Z1).
 * Induced maps along cellular maps use the same expansion.
 */

#ifndef Z2COH_BREDON_HPP
#define Z2COH_BREDON_HPP

#include <string>
#include <vector>

#include "z2coh/abelian.hpp"
#include "z2coh/coeff.hpp"
#include "z2coh/zcw.hpp"

namespace z2coh {

/// Position of each cell's data in the Bredon cochain basis of one degree.
struct BredonBasis
{
    std::vector<FreeOrbit> orbits;
    std::vector<std::size_t> fixed;
    std::size_t m0_rank = 0;
    std::size_t m1_rank = 0;

    std::size_t rank() const { return orbits.size() * m0_rank + fixed.size() * m1_rank; }
    std::size_t orbit_offset(std::size_t k) const { return k * m0_rank; }
    std::size_t fixed_offset(std::size_t k) const { return orbits.size() * m0_rank + k * m1_rank; }
};

BredonBasis bredon_basis(const Z2CwComplex& x, const CoefficientSystem& m, int n);

/// Cochain complex in degrees 0..dim X + 1 (the last group is zero).
CochainComplex bredon_cochain_complex(const Z2CwComplex& x, const CoefficientSystem& m);

FgAbGroup bredon_cohomology(const Z2CwComplex& x, const CoefficientSystem& m, int n);

/// Contravariant map H^n(target; M) -> H^n(source; M) along f.
GroupHom bredon_induced(const CellMap& f, const CoefficientSystem& m, int n);

/// The cochain map underlying bredon_induced (target complex -> source complex).
IntegerMatrix bredon_pullback(const CellMap& f, const CoefficientSystem& m, int n);

}   // namespace z2coh

#endif
