#ifndef Z2COH_SMITH_HPP
#define Z2COH_SMITH_HPP

#include <cstddef>
#include <vector>

#include "z2coh/integer_matrix.hpp"

namespace z2coh {

/**
 * U * A * V = D with U, V unimodular and D diagonal, d_1 | d_2 | ... | d_r,
 * d_i > 0, followed by zeros. The inverses of U and V are tracked alongside
 * so callers can move between the original and the diagonal bases without
 * inverting anything.
 */
struct SmithDecomposition
{
    IntegerMatrix u;
    IntegerMatrix v;
    IntegerMatrix d;
    IntegerMatrix u_inv;
    IntegerMatrix v_inv;
    std::size_t rank = 0;

    /// The nonzero diagonal entries d_1, ..., d_rank.
    std::vector<Integer> invariant_factors() const;
};

/**
 * Smith normal form by unimodular row and column operations.
 *
 * Pivot rule: the nonzero entry of least absolute value in the remaining
 * submatrix, ties broken by (row, column) in lexicographic order. Entries left
 * behind by division become the next pivot candidates, so the result is a
 * deterministic function of the input.
 */
SmithDecomposition smith_normal_form(const IntegerMatrix& a);

/// Columns form a basis of the integer kernel {x : A x = 0}.
IntegerMatrix kernel_basis(const IntegerMatrix& a);

}   // namespace z2coh

#endif
