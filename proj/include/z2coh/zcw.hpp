/**
 * Finite Z2-CW complexes.
 *
 * A complex stores, per dimension n, the cell labels, the cellular boundary
 * matrix (rows = (n-1)-cells, columns = n-cells) and the involution as a
 * signed permutation: T(e_i) = sign * e_{image}. A cell with T e = +e is
 * fixed pointwise; T e = -e is not allowed. Every other cell lies in a free
 * orbit {e, e'} with T e = s e'.
 *
 * Orientation: each cell carries the orientation implicit in its label; the
 * signs of T record whether the involution preserves it. Products use
 *     d(e x f) = de x f + (-1)^{|e|} e x df,   T(e x f) = Te x Tf.
 */

#ifndef Z2COH_ZCW_HPP
#define Z2COH_ZCW_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "z2coh/abelian.hpp"
#include "z2coh/integer_matrix.hpp"

namespace z2coh {

struct SignedCell
{
    std::size_t index = 0;
    int sign = 1;

    friend bool operator==(const SignedCell&, const SignedCell&) = default;
};

/// A plain (non-equivariant) finite CW complex given by its cellular chains.
struct CwComplex
{
    std::vector<std::vector<std::string>> labels;
    /// boundary[n] : C_n -> C_{n-1}; boundary[0] has zero rows.
    std::vector<IntegerMatrix> boundary;

    int dimension() const { return static_cast<int>(labels.size()) - 1; }
    std::size_t num_cells(int n) const;
    long long euler_characteristic() const;
};

/// Cellular cochain complex of a CW complex (delta_n = boundary_{n+1}^T).
CochainComplex cellular_cochains(const CwComplex& x);
FgAbGroup cellular_cohomology(const CwComplex& x, int n);

/// A free Z2-orbit of n-cells: T(rep) = sign * partner.
struct FreeOrbit
{
    std::size_t rep = 0;
    std::size_t partner = 0;
    int sign = 1;
};

class Z2CwComplex
{
    public:
        struct Cells
        {
            std::vector<std::string> labels;
            std::vector<SignedCell> action;
            IntegerMatrix boundary;
            std::vector<bool> fixed;

            friend bool operator==(const Cells&, const Cells&) = default;
        };

        Z2CwComplex() = default;
        explicit Z2CwComplex(std::vector<Cells> cells) : cells_(std::move(cells)) {}

        /// Dimension of the top nonempty cell group; -1 for the empty complex.
        int dimension() const;
        std::size_t num_dims() const { return cells_.size(); }
        std::size_t num_cells(int n) const;
        std::size_t total_cells() const;
        bool empty() const { return total_cells() == 0; }
        bool is_free() const;

        const Cells& cells(int n) const;
        const std::vector<Cells>& all_cells() const { return cells_; }

        const std::vector<std::string>& labels(int n) const { return cells(n).labels; }
        const std::string& label(int n, std::size_t i) const { return cells(n).labels[i]; }
        /// boundary_n with rows = (n-1)-cells, columns = n-cells; correctly
        /// shaped zero matrix outside the stored dimensions.
        IntegerMatrix boundary(int n) const;
        const std::vector<SignedCell>& action(int n) const { return cells(n).action; }
        bool is_fixed(int n, std::size_t i) const { return cells(n).fixed[i]; }
        /// Index of the cell with this label in dimension n, or num_cells(n).
        std::size_t find(int n, const std::string& label) const;

        /// T_n as a signed permutation matrix.
        IntegerMatrix action_matrix(int n) const;

        /// Free orbits in dimension n, representative = lexicographically
        /// first label, sorted by that label.
        std::vector<FreeOrbit> free_orbits(int n) const;
        /// Fixed cells in dimension n, sorted by label.
        std::vector<std::size_t> fixed_cells(int n) const;

        /// Forget the involution.
        CwComplex underlying() const;
        long long euler_characteristic() const;

        friend bool operator==(const Z2CwComplex&, const Z2CwComplex&);

    private:
        std::vector<Cells> cells_;
};

/// Cellular map between Z2-CW complexes, as chain matrices per dimension
/// (rows = target n-cells, columns = source n-cells).
struct CellMap
{
    Z2CwComplex source;
    Z2CwComplex target;
    std::vector<IntegerMatrix> chain;

    IntegerMatrix component(int n) const;
    /// Violations of chain-map and equivariance conditions; empty when valid.
    std::vector<std::string> check() const;
};

CellMap identity_map(const Z2CwComplex& x);
/// X -> point (a single fixed 0-cell).
CellMap collapse_to_point(const Z2CwComplex& x);
/// g after f.
CellMap compose(const CellMap& g, const CellMap& f);

/// Violations of the Z2-CW invariants; empty when valid.
std::vector<std::string> validate(const Z2CwComplex& x);
/// Throws InvalidComplex listing the violations.
void require_valid(const Z2CwComplex& x);

struct Subcomplex
{
    Z2CwComplex complex;
    CellMap inclusion;
};

/// Fixed cells with trivial action and the inclusion into X.
Subcomplex fixed_subcomplex(const Z2CwComplex& x);

/**
 * Subcomplex spanned by the cells with the given labels (per dimension).
 * Throws InvalidComplex if not closed under the boundary and
 * SubcomplexNotInvariant if not closed under the involution.
 */
Subcomplex subcomplex(const Z2CwComplex& x, const std::vector<std::vector<std::string>>& labels);

/// Cell e x f of a product: e is cell `left` of X in dimension `left_dim`,
/// f is cell `right` of Y in the complementary dimension.
struct ProductCell
{
    int left_dim = 0;
    std::size_t left = 0;
    std::size_t right = 0;
};

/// Cells of X x Y per dimension, in the order used by product().
std::vector<std::vector<ProductCell>> product_cells(const Z2CwComplex& x, const Z2CwComplex& y);

/// Product with diagonal involution; labels "a*b".
Z2CwComplex product(const Z2CwComplex& x, const Z2CwComplex& y);

struct QuotientResult
{
    CwComplex complex;
    /// projection[n] : C_n(X) -> C_n(X / tau)
    std::vector<IntegerMatrix> projection;
};

/// One cell per free orbit (labelled by its representative) plus the fixed cells.
QuotientResult quotient_complex(const Z2CwComplex& x);

/**
 * A label-preserving bijection matching cells, boundaries, actions and fixed
 * masks exists. Used to compare complexes built in different cell orders.
 */
bool isomorphic_by_labels(const Z2CwComplex& a, const Z2CwComplex& b);

/// Cells in dimension n sorted by label.
Z2CwComplex sort_cells_by_label(const Z2CwComplex& x);

}   // namespace z2coh

#endif
