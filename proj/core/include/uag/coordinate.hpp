#pragma once

#include "uag/geometry.hpp"
#include "uag/hom.hpp"

namespace uag {

/// The coordinate algebra of Y realized concretely: the subalgebra of A^Y
/// generated by the coordinate functions and all constants, under pointwise
/// operations. Element i is a function Y -> A stored as a value per point of
/// Y (in Y's point order), with a depth-minimal witness term. Gamma(Y) is
/// isomorphic to this algebra; two terms are radical-congruent over Y
/// exactly when they evaluate to the same element.
struct TermFunctionAlgebra {
    std::shared_ptr<const FiniteAlgebra> algebra; // the ambient A
    AlgebraicSet base;                            // Y
    std::vector<std::vector<int>> elems;          // element -> value per point
    std::vector<TermId> witness;
    std::vector<int> witness_depth;
    std::vector<Derivation> derivations;          // BFS provenance
    std::vector<int> coord_elem;                  // element of x_i^Y, i = 0..n-1
    std::unordered_map<std::string, int> index;   // packed vector -> element

    int size() const { return static_cast<int>(elems.size()); }
    int num_ops() const { return algebra->num_ops(); }
    int op_arity(int op) const { return algebra->op_arity(op); }
    int op_apply(int op, std::span<const int> args) const;

    int index_of_vector(const std::vector<int>& vec) const;
    /// The element t evaluates to (pointwise over Y). Total for any term over
    /// the ambient signature.
    int element_of_term(TermId t) const;

    /// Distinct coordinate elements, in first-occurrence order.
    std::vector<int> generator_elems() const;

    /// Materializes explicit operation tables (capacity-checked).
    FiniteAlgebra to_finite_algebra(const RunConfig& cfg = {}) const;
};

inline int carrier_size(const TermFunctionAlgebra& t) { return t.size(); }

/// Gamma(Y) as a term-function algebra. Gamma of the empty set is the
/// trivial algebra.
TermFunctionAlgebra coordinate_algebra(const AlgebraicSet& y, const RunConfig& cfg = {});

/// Decides membership of (t = s) in Rad(Y) through the term-function algebra.
struct RadicalOracle {
    std::shared_ptr<const TermFunctionAlgebra> functions;
    bool contains(TermId t, TermId s) const {
        return functions->element_of_term(t) == functions->element_of_term(s);
    }
    bool contains(const AtomicFormula& eq) const { return contains(eq.lhs, eq.rhs); }
};

RadicalOracle radical_oracle(const AlgebraicSet& y, const RunConfig& cfg = {});

/// Every homomorphism T(Y) -> a, in lexicographic generator-image order.
/// When a is the ambient algebra of c, images forming a point of Y yield the
/// evaluation homomorphism directly; other candidates are validated by a
/// graph-closure consistency test.
std::vector<Homomorphism> enumerate_homomorphisms(const TermFunctionAlgebra& c,
                                                  const FiniteAlgebra& a,
                                                  const RunConfig& cfg = {});

/// Generic search for targets other than table algebras (e.g. T(Z) -> T(Y)).
template <AlgebraLike Tgt>
std::vector<Homomorphism> enumerate_homomorphisms_generic(const TermFunctionAlgebra& c,
                                                          const Tgt& a) {
    SourcePresentation pres{c.generator_elems(), c.derivations};
    std::vector<Homomorphism> out;
    detail::hom_search(c, pres, a, HomSearchOptions{}, [&](const std::vector<int>& map) {
        out.push_back(Homomorphism{map});
        return true;
    });
    return out;
}

/// The Lemma-hom correspondence: point i of Y maps to the evaluation
/// homomorphism T(Y) -> A at that point. Requires non-empty algebraic Y.
std::vector<Homomorphism> points_as_homs(const TermFunctionAlgebra& t, const RunConfig& cfg = {});

/// Reads back the point of a homomorphism T(Y) -> A from the images of the
/// coordinate elements.
Point hom_to_point(const TermFunctionAlgebra& t, const Homomorphism& h);

} // namespace uag
