#pragma once

#include <memory>
#include <optional>

#include "uag/algebra.hpp"

namespace uag {

/// A subset of A^n given by an explicit, lex-sorted, duplicate-free point
/// list, together with a defining system when one is known. `algebraic`
/// caches whether the set equals its own ac-closure (nullopt = not checked).
struct AlgebraicSet {
    std::shared_ptr<const FiniteAlgebra> algebra;
    int dim = 1;
    VariableSet vars;                     // coordinate names, size == dim
    std::vector<Point> points;
    std::optional<EquationSystem> system;
    mutable std::optional<bool> algebraic;
    mutable std::optional<bool> irreducible_cache;

    bool empty() const { return points.empty(); }
    int size() const { return static_cast<int>(points.size()); }
    bool contains(const Point& p) const { return index_of(p) >= 0; }
    /// Index in the sorted point list, or -1.
    int index_of(const Point& p) const;
};

/// Default coordinate names x1..xn.
VariableSet default_vars(int n);

/// Builds a set from raw points (sorted and dedup'd here); algebraic status
/// unknown.
AlgebraicSet make_point_set(std::shared_ptr<const FiniteAlgebra> a, int dim,
                            std::vector<Point> points);

/// V_A(S): all roots of S in A^num_vars, by exact sweep. The result is
/// flagged algebraic; empty result means S is inconsistent over A.
AlgebraicSet solve(const EquationSystem& s, std::shared_ptr<const FiniteAlgebra> a,
                   const RunConfig& cfg = {});
AlgebraicSet solve(const EquationSystem& s, const FiniteAlgebra& a, const RunConfig& cfg = {});

/// Whether (t = s) lies in Rad(Y): t and s agree on every point of Y. For
/// empty Y this is always true (the radical of an inconsistent system is all
/// of At_L(X)).
bool in_radical(TermId t, TermId s, const AlgebraicSet& y);
bool in_radical(const AtomicFormula& eq, const AlgebraicSet& y);

/// V(S1) == V(S2) over a.
bool systems_equivalent(const EquationSystem& s1, const EquationSystem& s2,
                        const FiniteAlgebra& a, const RunConfig& cfg = {});

/// An irredundant subsystem with the same solution set: greedy keep-if-it-
/// shrinks pass, then a pruning pass dropping redundant survivors.
EquationSystem minimal_subsystem(const EquationSystem& s, const FiniteAlgebra& a,
                                 const RunConfig& cfg = {});

/// Y x Z inside A^(n+m), with the merged defining system over renamed
/// variables. Both inputs need defining systems.
AlgebraicSet product_set(const AlgebraicSet& y, const AlgebraicSet& z, const RunConfig& cfg = {});

} // namespace uag
