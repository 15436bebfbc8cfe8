/**
 * Finitely generated abelian groups realized as subquotients of Z^m, maps
 * between them, and the cohomology of integral cochain complexes.
 *
 * A group is kept in canonical form (free rank + invariant factors) together
 * with an optional presentation: canonical generators written in an ambient
 * lattice Z^m and a coordinate map sending any element of the numerator
 * lattice to its coordinates on those generators. The presentation is what
 * makes induced maps, kernels and cokernels computable.
 */

#ifndef Z2COH_ABELIAN_HPP
#define Z2COH_ABELIAN_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "z2coh/integer_matrix.hpp"

namespace z2coh {

/**
 * Z^free_rank + Z/d_1 + ... + Z/d_k with d_i >= 2 and d_i | d_{i+1}.
 *
 * Generators are ordered torsion first (ascending invariant factor), free
 * generators last; the same order is used for coordinates.
 */
class FgAbGroup
{
    public:
        struct Presentation
        {
            std::size_t ambient_dim = 0;
            /// ambient_dim x num_generators; column i is generator i.
            IntegerMatrix generators;
            /// Element z of the numerator lattice -> (transform * z) ./ scale,
            /// then relation_transform applied, then reduced mod orders.
            IntegerMatrix transform;
            std::vector<Integer> scale;
            IntegerMatrix relation_transform;
        };

        FgAbGroup() = default;
        FgAbGroup(std::size_t free_rank, std::vector<Integer> torsion);

        static FgAbGroup trivial() { return FgAbGroup(0, {}); }
        static FgAbGroup free(std::size_t rank) { return FgAbGroup(rank, {}); }
        static FgAbGroup cyclic(const Integer& order);
        /// Group with the given generator orders (0 = infinite), e.g. the
        /// presentation-free group Z/2 + Z/2 from {2, 2}. Normalizes to
        /// invariant factors.
        static FgAbGroup from_orders(const std::vector<Integer>& orders);

        std::size_t free_rank() const { return free_rank_; }
        const std::vector<Integer>& torsion() const { return torsion_; }
        bool is_trivial() const { return free_rank_ == 0 && torsion_.empty(); }
        bool is_finite() const { return free_rank_ == 0; }
        /// Order of a finite group; throws for infinite groups.
        Integer order() const;

        std::size_t num_generators() const { return torsion_.size() + free_rank_; }
        /// Order of generator i, 0 for free generators.
        Integer generator_order(std::size_t i) const;
        std::vector<Integer> generator_orders() const;

        bool has_presentation() const { return presentation_.has_value(); }
        const Presentation& presentation() const;
        void set_presentation(Presentation p) { presentation_ = std::move(p); }

        /// Canonical generator i as an ambient vector.
        std::vector<Integer> generator(std::size_t i) const;
        /// Coordinates of an ambient vector (which must lie in the numerator
        /// lattice) on the canonical generators, reduced mod the orders.
        std::vector<Integer> coordinates(const std::vector<Integer>& ambient) const;
        bool contains(const std::vector<Integer>& ambient) const;
        /// Reduce a coordinate vector mod the generator orders.
        std::vector<Integer> reduce(std::vector<Integer> coords) const;

        /// "0", "Z", "Z^2 + Z/2 + Z/4", ...
        std::string to_string() const;

        /// Equality of canonical forms; presentations are ignored.
        friend bool operator==(const FgAbGroup& a, const FgAbGroup& b)
        {
            return a.free_rank_ == b.free_rank_ && a.torsion_ == b.torsion_;
        }

    private:
        std::size_t free_rank_ = 0;
        std::vector<Integer> torsion_;
        std::optional<Presentation> presentation_;
};

/// Parse "0", "Z", "Z^2 + Z/4", "Z/2 + Z/2"; inverse of to_string up to normalization.
FgAbGroup parse_group(const std::string& text);

/**
 * Homomorphism given on canonical generators: column i holds the target
 * coordinates of the image of source generator i.
 */
struct GroupHom
{
    FgAbGroup source;
    FgAbGroup target;
    IntegerMatrix matrix;

    /// Image of each source relation lies in the target relation lattice.
    bool respects_relations() const;
    /// Matrix with every row reduced mod the corresponding target order.
    IntegerMatrix reduced_matrix() const;
    std::vector<Integer> apply(const std::vector<Integer>& coords) const;
    bool is_zero() const;
};

bool operator==(const GroupHom& a, const GroupHom& b);

GroupHom identity_hom(const FgAbGroup& g);
GroupHom zero_hom(const FgAbGroup& source, const FgAbGroup& target);
/// g after f.
GroupHom compose(const GroupHom& g, const GroupHom& f);

/**
 * numerator / relations, where both are lattices in Z^m given by generating
 * columns (not necessarily independent) and the relation lattice is contained
 * in the numerator lattice. The result carries a presentation in Z^m.
 */
FgAbGroup subquotient(const IntegerMatrix& numerator, const IntegerMatrix& relations);

/// Coordinate lattice of h's source relations, one column per torsion generator.
IntegerMatrix relation_lattice(const FgAbGroup& g);

FgAbGroup kernel(const GroupHom& h);
FgAbGroup cokernel(const GroupHom& h);
FgAbGroup image(const GroupHom& h);
bool is_injective(const GroupHom& h);
bool is_surjective(const GroupHom& h);

/**
 * Free cochain complex: groups Z^{rank(n)} for n = 0..top_degree with
 * differentials delta_n : C^n -> C^{n+1} of shape rank(n+1) x rank(n).
 * Degrees outside the range are zero groups.
 */
class CochainComplex
{
    public:
        CochainComplex() = default;
        CochainComplex(std::vector<std::size_t> ranks, std::vector<IntegerMatrix> differentials,
                       std::string provenance = {});

        std::size_t rank(int n) const;
        /// delta_n; zero matrix of the right shape outside the stored range.
        IntegerMatrix differential(int n) const;
        int top_degree() const { return static_cast<int>(ranks_.size()) - 1; }
        const std::string& provenance() const { return provenance_; }

        /// delta_{n} * delta_{n-1} == 0.
        bool composition_is_zero(int n) const;
        void check_square_zero() const;

    private:
        std::vector<std::size_t> ranks_;
        std::vector<IntegerMatrix> differentials_;
        std::string provenance_;
};

/// Degree-preserving map f : C -> D; component n has shape D.rank(n) x C.rank(n).
struct CochainMap
{
    const CochainComplex* source = nullptr;
    const CochainComplex* target = nullptr;
    std::vector<IntegerMatrix> components;

    IntegerMatrix component(int n) const;
    /// delta_D f_n == f_{n+1} delta_C.
    bool commutes(int n) const;
};

/// ker delta_n / im delta_{n-1}; throws CompositionNotZero.
FgAbGroup cohomology_of_complex(const CochainComplex& c, int n);

/**
 * Map between subquotients induced by a cochain-level matrix m (ambient of
 * source_group -> ambient of target_group). m must send the source numerator
 * into the target numerator and the source relations into the target
 * relations; only the first is checked here.
 */
GroupHom hom_from_cochains(const IntegerMatrix& m, const FgAbGroup& source_group, const FgAbGroup& target_group);

/// Map on H^n; throws NotChainMap when the squares around degree n fail.
GroupHom induced_hom(const CochainMap& f, int n);

/// Same as induced_hom with precomputed groups (which must carry presentations).
GroupHom induced_hom(const CochainMap& f, int n, const FgAbGroup& source_group,
                     const FgAbGroup& target_group);

}   // namespace z2coh

#endif
