/**
 * Borel equivariant cohomology with local coefficients Z(0) and Z(1).
 *
 * The homotopy quotient X x_{Z2} S^infinity is approximated by X x S^N with
 * the diagonal involution (S^N antipodal), which is a free Z2-CW complex.
 * Its equivariant cochains with values in Z(j) are the homomorphisms
 * F : C(X x S^N) -> Z with F(T c) = (-1)^j F(c), determined by their values
 * x_c on orbit representatives. For a representative c in degree k+1 and a
 * boundary term k*b:
 *     b a representative              ->  + k * x_b
 *     b the partner of r (T r = s b)  ->  s * (-1)^j * k * x_r
 * Relative groups drop the orbits lying over the subcomplex.
 *
 * Cells of X x S^{N+1} not in X x S^N have dimension >= N + 1, so degree n
 * is exact once N >= n + 1. The default level is N = n + 2.
 */

#ifndef Z2COH_BOREL_HPP
#define Z2COH_BOREL_HPP

#include <map>
#include <memory>
#include <optional>
#include <utility>
#include <set>
#include <string>
#include <vector>

#include "z2coh/abelian.hpp"
#include "z2coh/zcw.hpp"

namespace z2coh {

/// S^n with the antipodal involution: cells s{k}+, s{k}- for k = 0..n.
Z2CwComplex ez2_skeleton(int n);

/// Approximation level used for degree n.
inline int approximation_level(int n) { return n + 2; }

/// Per-dimension label sets of cells of X (used to describe subcomplexes).
using CellLabels = std::vector<std::set<std::string>>;

CellLabels labels_of(const Z2CwComplex& x);
CellLabels label_union(const CellLabels& a, const CellLabels& b);

/**
 * Equivariant Z(j)-cochains of a free complex P, vanishing on the cells in
 * `excluded` (which must be a union of orbits). Basis: orbit
 * representatives sorted by label.
 */
class TwistedCochains
{
    public:
        TwistedCochains(const Z2CwComplex& free_complex, int twist, const std::vector<std::vector<bool>>& excluded);

        const CochainComplex& cochains() const { return cochains_; }
        int twist() const { return twist_; }
        /// Representative labels of the basis in degree k.
        const std::vector<std::string>& basis_labels(int k) const;
        /// Value coefficient of F on cell `cell` of degree k: F(cell) = factor * x_{basis}.
        /// Returns nullopt for excluded cells.
        std::optional<std::pair<std::size_t, int>> evaluate(int k, std::size_t cell) const;

    private:
        int twist_;
        CochainComplex cochains_;
        std::vector<std::vector<std::string>> labels_;
        // per degree, per cell of P: (basis index, factor) or nullopt
        std::vector<std::vector<std::optional<std::pair<std::size_t, int>>>> roles_;
};

/// Borel cochains of X relative to a subcomplex Y, at a given approximation level.
class BorelComplex
{
    public:
        BorelComplex(const Z2CwComplex& x, int twist, int level, const CellLabels& relative = {});

        const CochainComplex& cochains() const { return twisted_->cochains(); }
        const std::vector<std::string>& basis_labels(int k) const { return twisted_->basis_labels(k); }
        int level() const { return level_; }
        int twist() const { return twist_; }
        const Z2CwComplex& base() const { return base_; }
        const Z2CwComplex& total() const { return total_; }
        const std::vector<std::vector<ProductCell>>& provenance() const { return cells_; }
        const TwistedCochains& twisted() const { return *twisted_; }

        FgAbGroup cohomology(int n) const { return cohomology_of_complex(cochains(), n); }

    private:
        Z2CwComplex base_;
        int twist_;
        int level_;
        Z2CwComplex total_;
        std::vector<std::vector<ProductCell>> cells_;
        std::shared_ptr<TwistedCochains> twisted_;
};

/// Rows = basis of `to` in degree k, columns = basis of `from`; 1 where the
/// representative labels agree.
IntegerMatrix label_match(const BorelComplex& to, const BorelComplex& from, int k);

/// Throws SubcomplexNotInvariant / InvalidComplex unless `rel` is an
/// invariant subcomplex of x.
void require_invariant_subcomplex(const Z2CwComplex& x, const CellLabels& rel);

FgAbGroup borel_cohomology(const Z2CwComplex& x, int twist, int n, const CellLabels& relative = {});
FgAbGroup borel_cohomology(const Z2CwComplex& x, int twist, int n, const CellLabels& relative, int level);

/// H^n_{Z2}(X | Y u X^tau; Z(j)).
FgAbGroup h_theory(const Z2CwComplex& x, const CellLabels& y, int twist, int n);

/// Cohomology of Z2 with coefficients in (Z^rank, action) from the 2-periodic
/// resolution: differentials A - 1, A + 1, A - 1, ...
CochainComplex group_cochain_complex(std::size_t module_rank, const IntegerMatrix& action, int top);
FgAbGroup group_cohomology_z2(std::size_t module_rank, const IntegerMatrix& action, int n);

/// f : H^n_{Z2}(X; Z(j)) -> H^n(X; Z) induced by the fiber X = X x {s0+}.
GroupHom forgetful_map(const Z2CwComplex& x, int n, int twist = 1);

struct StabilityReport
{
    bool stable = false;
    int level = 0;
    FgAbGroup at_level;
    FgAbGroup at_next_level;
};

StabilityReport stability_check(const Z2CwComplex& x, int twist, int n, const CellLabels& relative = {});

}   // namespace z2coh

#endif
