// Reference computations that avoid the engines' orbit bases.

#ifndef Z2COH_TESTS_ORACLES_HPP
#define Z2COH_TESTS_ORACLES_HPP

#include <random>
#include <vector>

#include "z2coh/abelian.hpp"
#include "z2coh/zcw.hpp"

namespace oracle {

using z2coh::FgAbGroup;
using z2coh::IntegerMatrix;
using z2coh::Z2CwComplex;

/**
 * Cohomology of {f in C^*(X; Z) : f(T e) = eps f(e), f = 0 on excluded cells},
 * computed inside the full cellular cochain complex of X.
 */
FgAbGroup invariant_cochain_cohomology(const Z2CwComplex& x, int eps, const std::vector<std::vector<bool>>& excluded,
                                       int n);

/// Bredon cohomology with 0~Z (j = 0) or 0~Ztilde (j = 1).
FgAbGroup bredon_zero_system(const Z2CwComplex& x, int j, int n);
/// Bredon cohomology with the constant system Z~Z.
FgAbGroup bredon_constant(const Z2CwComplex& x, int n);
/// Borel cohomology via invariant cochains of X x S^level, relative to cells over `rel` cells of X.
FgAbGroup borel_via_product(const Z2CwComplex& x, int j, int n, const std::vector<std::vector<bool>>& rel,
                            int level);
std::vector<std::vector<bool>> fixed_mask(const Z2CwComplex& x);
std::vector<std::vector<bool>> no_cells(const Z2CwComplex& x);

/// Product of `ops` random elementary operations applied to the identity.
IntegerMatrix random_unimodular(std::size_t n, int ops, std::mt19937& rng);
IntegerMatrix random_matrix(std::size_t rows, std::size_t cols, int bound, std::mt19937& rng);

}   // namespace oracle

#endif
