#pragma once

#include "uag/term_map.hpp"
#include "uag/topology.hpp"

namespace uag {

enum class Claim {
    IsCoordinateAlgebra,
    IsIrreducibleCoordinateAlgebra,
    InQvar,
    EmptySetAlgebraic,
    TrivialInUcl,
};

std::string to_string(Claim c);

/// A quasi-identity: forall y ( /\ premises -> conclusion ), all over the
/// premises' variable set.
struct QuasiIdentity {
    EquationSystem premises;
    AtomicFormula conclusion;
};

struct PowerEmbedding {
    int power = 0;               // d
    FiniteAlgebra power_algebra; // A^d (the empty power is the trivial algebra)
    Homomorphism embedding;      // injective C -> A^d
};

struct Realization {
    EquationSystem system; // S with T(V(S)) isomorphic to C
    AlgebraicSet set;      // V(S) over A
    Homomorphism iso;      // the canonical bijective homomorphism T(set) -> C
    std::optional<Point> generic_point; // for irreducible realizations
};

/// Answer plus machine-checkable evidence; every piece is re-verified before
/// it is returned.
struct Verdict {
    Claim claim = Claim::IsCoordinateAlgebra;
    bool answer = false;
    std::optional<PowerEmbedding> embedding;
    std::optional<Realization> realization;
    std::optional<Homomorphism> discrimination_embedding; // C -> A
    std::optional<QuasiIdentity> refutation;
    std::optional<EquationSystem> inconsistent_system; // one-variable witness
    std::optional<int> trivial_element;
    std::vector<std::string> notes; // characterizations implied, not computed
    bool witness_inconclusive = false; // depth bound hit; the answer is still exact
};

/// A finite presentation of C by generators and its operation-table
/// relations: the absolutely free algebra over the generators modulo the
/// congruent closure of `relations` is C.
struct Presentation {
    std::vector<int> generators;
    EquationSystem relations;
    std::vector<TermId> witness; // carrier element -> term over the generators
};

Presentation table_presentation(const FiniteAlgebra& c, std::span<const int> generators);
Presentation table_presentation(const FiniteAlgebra& c); // minimal generating set

/// Is C (finitely generated, finite) the coordinate algebra of an algebraic
/// set over A? Decided through separation; positive evidence: a direct-power
/// embedding assembled from separating homomorphisms and a realizing system
/// with T(V(S)) isomorphic to C. Negative evidence: a refuting
/// quasi-identity (holds in A, fails in C).
Verdict coordinate_algebra_criterion(const FiniteAlgebra& c, const FiniteAlgebra& a,
                                     const RunConfig& cfg = {});

/// Membership in Qvar(A) for finite C: the same decision as the coordinate
/// algebra criterion (finite algebras are equationally Noetherian, so the
/// quasivariety collapses onto separation).
Verdict qvar_membership(const FiniteAlgebra& c, const FiniteAlgebra& a, const RunConfig& cfg = {});

/// Is C the coordinate algebra of an irreducible algebraic set over A?
/// Decided through discrimination (= embeddability for finite C).
Verdict irreducible_criterion(const FiniteAlgebra& c, const FiniteAlgebra& a,
                              const RunConfig& cfg = {});

/// For non-separated C: a quasi-identity holding in A and failing in C at
/// the generators, built from an unseparated pair and the reduced table
/// presentation. Absent when C is separated by A.
std::optional<QuasiIdentity> witness_quasi_identity(const FiniteAlgebra& c,
                                                    const FiniteAlgebra& a,
                                                    const RunConfig& cfg = {});

struct SubdirectDecomposition {
    std::vector<AlgebraicSet> components;
    std::vector<TermFunctionAlgebra> factors; // T(Y_i)
    FiniteAlgebra product;                    // direct product of the factors
    Homomorphism embedding;                   // T(Y) -> product
};

/// T(Y) as a subdirect product of the coordinate algebras of Y's irreducible
/// components; the embedding is verified injective with surjective
/// projections.
SubdirectDecomposition subdirect_decomposition(const AlgebraicSet& y, const RunConfig& cfg = {});

/// Is the empty set algebraic over A (equivalently: A has no trivial
/// subalgebra)? Positive evidence: a finite inconsistent one-variable
/// system, found by enumerating term functions up to the witness depth.
Verdict empty_set_algebraic(const FiniteAlgebra& a, const RunConfig& cfg = {});

/// Does Ucl(A) contain the trivial algebra (equivalently: A has a trivial
/// subalgebra)? Negative evidence: a clause set whose universal disequation
/// holds in A and fails in the trivial algebra.
Verdict trivial_in_ucl(const FiniteAlgebra& a, const RunConfig& cfg = {});

} // namespace uag
