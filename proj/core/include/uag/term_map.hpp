#pragma once

#include "uag/coordinate.hpp"

namespace uag {

/// A morphism of algebraic sets: coordinatewise term functions. A term map
/// is identified by its ordered tuple of T(Y)-elements; two maps with the
/// same source/target and the same component elements are the same morphism.
/// The unique arrow out of the empty set carries no components.
struct TermMap {
    std::shared_ptr<const TermFunctionAlgebra> source_functions; // T(Y), null iff source empty
    AlgebraicSet source; // Y
    AlgebraicSet target; // Z
    std::vector<int> components;  // element ids in T(Y), length = target dim
    std::vector<int> point_image; // source point index -> target point index

    bool empty_source() const { return source.points.empty(); }
    /// Image of source point i.
    const Point& image_of(int i) const { return target.points[static_cast<std::size_t>(point_image[static_cast<std::size_t>(i)])]; }
    /// Representative component terms (witnesses of the component elements).
    std::vector<TermId> component_terms() const;
};

/// Same morphism: same source/target point sets and same components.
bool same_morphism(const TermMap& f, const TermMap& g);

/// Builds the term map p -> (t_1(p),...,t_m(p)); rejected (with the first
/// offending point in the message) when the image leaves z.
TermMap make_term_map(std::span<const TermId> terms, const AlgebraicSet& y,
                      const AlgebraicSet& z, const RunConfig& cfg = {});

TermMap identity_map(const AlgebraicSet& y, const RunConfig& cfg = {});

/// g after f.
TermMap compose(const TermMap& g, const TermMap& f, const RunConfig& cfg = {});

/// All term maps Y -> Z in lexicographic component order. Mor(empty, Z) is a
/// single arrow; Mor(Y, empty) is empty for non-empty Y.
std::vector<TermMap> enumerate_term_maps(const AlgebraicSet& y, const AlgebraicSet& z,
                                         const RunConfig& cfg = {});

/// phi^{-1}(z) for a term map defined on the whole affine space: substitutes
/// the component terms into z's defining system and solves.
AlgebraicSet preimage(const TermMap& phi, const AlgebraicSet& z, const RunConfig& cfg = {});

/// The contravariant functor on morphisms: the homomorphism
/// T(Z) -> T(Y) sending each coordinate function of Z to the matching
/// component of phi; concretely e -> e o phi. Verified on construction.
Homomorphism dual_functor(const TermMap& phi, const TermFunctionAlgebra& target_functions);

struct IsomorphismResult {
    bool isomorphic = false;
    std::optional<std::pair<TermMap, TermMap>> maps; // (phi: Y->Z, psi: Z->Y)
};

/// Mutually inverse term maps, if any; cross-checked against the
/// embeddings-both-ways test on the coordinate algebras.
IsomorphismResult sets_isomorphic(const AlgebraicSet& y, const AlgebraicSet& z,
                                  const RunConfig& cfg = {});

/// Injective homomorphism search between term-function algebras.
std::optional<Homomorphism> find_embedding(const TermFunctionAlgebra& c,
                                           const TermFunctionAlgebra& a);

} // namespace uag
