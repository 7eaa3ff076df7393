#pragma once

#include "uag/geometry.hpp"

namespace uag {

/// The least algebraic superset Y^ac = V(Rad(Y)): all points satisfying
/// every equation that holds on Y. For empty Y this is V(At_L(X)), the set
/// of diagonal points over trivial subalgebra elements.
AlgebraicSet ac_closure(const AlgebraicSet& y, const RunConfig& cfg = {});

/// {p}^ac; always irreducible. Results are cached per algebra.
AlgebraicSet point_closure(std::shared_ptr<const FiniteAlgebra> a, const Point& p,
                           const RunConfig& cfg = {});

/// Whether Y equals its ac-closure; computes and caches the flag.
bool is_algebraic(const AlgebraicSet& y, const RunConfig& cfg = {});

struct IrreducibilityResult {
    bool irreducible = false;
    std::optional<Point> generic_point; // evaluation there is injective on T(Y)
};

/// Generic-point criterion: Y (non-empty, algebraic) is irreducible iff some
/// p in Y separates all term functions. For finite A, discrimination of the
/// coordinate algebra collapses to an embedding T(Y) -> A, and every
/// homomorphism T(Y) -> A is evaluation at a point of Y, hence the test.
IrreducibilityResult is_irreducible(const AlgebraicSet& y, const RunConfig& cfg = {});

/// The irreducible components: maximal point closures of Y's points,
/// pairwise incomparable, covering Y, sorted by least point. Their
/// correctness (irreducibility, incomparability, cover) is re-verified on
/// every call.
std::vector<AlgebraicSet> decompose(const AlgebraicSet& y, const RunConfig& cfg = {});

} // namespace uag
