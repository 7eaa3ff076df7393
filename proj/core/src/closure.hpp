#pragma once

// Internal: BFS closure of term functions over a fixed list of evaluation
// columns, plus the cached full-space instance (term functions on all of
// A^n). Not installed.

#include <cstdint>
#include <memory>
#include <unordered_map>

#include "uag/algebra.hpp"

namespace uag::detail {

/// Term functions on a column list, generated by the coordinate functions
/// and all constants, closed under pointwise operations. Elements are in BFS
/// discovery order; witnesses are depth-minimal terms with lexicographic
/// (symbol order, argument-tuple order) tiebreak.
struct ColumnClosure {
    int k = 1;          // carrier size
    int n = 1;          // ambient dimension (number of coordinates)
    int num_columns = 0;
    std::vector<std::vector<int>> elems; // element -> value per column
    std::vector<TermId> witness;
    std::vector<int> depth;              // BFS layer per element
    std::vector<Derivation> derivations; // Seed = coordinate; Op = application
    std::vector<int> coord_elem;         // n entries
    bool depth_limited = false;          // growth was cut by a depth limit

    int index_of(const std::vector<int>& vec) const {
        auto it = index.find(key_of(vec));
        return it == index.end() ? -1 : it->second;
    }

    static std::string key_of(const std::vector<int>& vec) {
        return std::string(reinterpret_cast<const char*>(vec.data()),
                           vec.size() * sizeof(int));
    }

    std::unordered_map<std::string, int> index;
};

/// depth_limit < 0 means unlimited. Throws CapacityError when the element
/// count would exceed cfg.max_closure.
ColumnClosure closure_over_columns(const FiniteAlgebra& a, int n, std::span<const Point> columns,
                                   const RunConfig& cfg, int depth_limit = -1);

/// Whether the cached full-space closure is usable for (a, n).
bool full_space_feasible(const FiniteAlgebra& a, int n);

/// Term functions on all of A^n (columns = lex-ordered points). Cached per
/// algebra content. Requires full_space_feasible.
std::shared_ptr<const ColumnClosure> full_space_functions(const FiniteAlgebra& a, int n,
                                                          const RunConfig& cfg);

/// Lex-ordered points of A^n.
std::vector<Point> all_points(int k, int n, const RunConfig& cfg);

std::uint64_t algebra_fingerprint(const FiniteAlgebra& a);

} // namespace uag::detail
