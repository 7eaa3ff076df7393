#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "uag/config.hpp"
#include "uag/term.hpp"

namespace uag {

/// A tuple in some affine space A^n. Coordinate i is the value of the i-th
/// declared variable. Lexicographic order is vector order.
using Point = std::vector<int>;

/// A finite algebra: carrier {0..size-1} with one total operation table per
/// signature symbol. Tables are flat, row-major, first argument most
/// significant. Immutable after construction.
struct FiniteAlgebra {
    Signature sig;
    int size = 1;
    std::vector<std::vector<int>> tables; // parallel to sig.symbols, length size^arity

    FiniteAlgebra() = default;
    FiniteAlgebra(Signature s, int k, std::vector<std::vector<int>> t);

    int num_ops() const { return sig.size(); }
    int op_arity(int op) const { return sig.symbols[op].arity; }

    int op_apply(int op, std::span<const int> args) const {
        const std::vector<int>& t = tables[op];
        std::size_t idx = 0;
        for (int a : args) idx = idx * static_cast<std::size_t>(size) + static_cast<std::size_t>(a);
        return t[idx];
    }

    /// Op index of a global symbol id, or -1 if the symbol is not interpreted.
    int op_index(SymbolId sym) const;

    bool operator==(const FiniteAlgebra&) const = default;
};

/// The one-element algebra over sig.
FiniteAlgebra trivial_algebra(const Signature& sig);

/// Evaluates a fixed set of terms at many points. Terms are compiled once
/// (shared subterms evaluated once per point).
class TermEvaluator {
public:
    TermEvaluator(const FiniteAlgebra& a, std::span<const TermId> roots);

    /// Evaluates every compiled node at p; p must cover all variables used.
    void eval_point(std::span<const int> p);
    /// Value of a compiled root/subterm after eval_point.
    int value(TermId t) const;
    int max_var() const { return max_var_; }

private:
    struct Slot {
        int var;            // >= 0 for variables
        int op;             // op index for applications
        std::vector<int> args; // slot indices
    };
    const FiniteAlgebra* algebra_;
    std::vector<Slot> slots_;
    std::vector<int> values_;
    std::unordered_map<TermId, int> slot_of_;
    int max_var_ = -1;
};

/// t interpreted in a at point p.
int eval(TermId t, const FiniteAlgebra& a, std::span<const int> p);
/// Whether p is a root of eq.
bool holds(const AtomicFormula& eq, const FiniteAlgebra& a, std::span<const int> p);

// ---- products ----

/// Componentwise product; factors must share a's signature. The empty
/// product is the trivial algebra.
FiniteAlgebra direct_product(const Signature& sig, std::span<const FiniteAlgebra> factors,
                             const RunConfig& cfg = {});
FiniteAlgebra direct_power(const FiniteAlgebra& a, int d, const RunConfig& cfg = {});

/// Decodes a product-carrier element into its factor coordinates (d factors
/// of the given sizes, first factor most significant).
std::vector<int> product_coords(int element, std::span<const int> sizes);
int product_encode(std::span<const int> coords, std::span<const int> sizes);

// ---- subalgebras ----

/// How a closure element arose: a seed element or an operation applied to
/// earlier elements (constants are arity-0 applications).
struct Derivation {
    enum class Kind { Seed, Op };
    Kind kind = Kind::Seed;
    int op = -1;
    std::vector<int> args; // closure indices
};

struct GeneratedSubalgebra {
    FiniteAlgebra algebra;          // carrier re-indexed 0..m-1 in BFS order
    std::vector<int> elements;      // closure index -> parent element
    std::vector<int> parent_index;  // parent element -> closure index or -1
    std::vector<Derivation> derivations;
    std::vector<int> generators;    // closure indices of the seeds, in seed order, dedup'd
};

/// Least subset of a's carrier containing seed and all constants, closed
/// under every operation. Throws PreconditionError when that subset is empty
/// (no seed, no constants).
GeneratedSubalgebra subalgebra_generated(const FiniteAlgebra& a, std::span<const int> seed);

/// Smallest generating set, exhaustive over subsets in (size, lex) order.
std::vector<int> minimal_generating_set(const FiniteAlgebra& a);

// ---- quotients ----

/// A partition of a carrier; classes numbered by first occurrence.
struct Partition {
    std::vector<int> class_of;
    int num_classes = 0;
};

Partition make_partition(std::span<const int> raw_class_of);
bool is_congruence(const FiniteAlgebra& a, const Partition& theta);

struct QuotientResult {
    FiniteAlgebra algebra;
    std::vector<int> projection; // element -> class
};

/// Quotient by a compatible partition; incompatible partitions are rejected.
QuotientResult quotient(const FiniteAlgebra& a, const Partition& theta);

// ---- logical checks ----

/// An element e with f(e,...,e)=e for every symbol, if any (the least one).
std::optional<int> has_trivial_subalgebra(const FiniteAlgebra& a);

struct QuasiIdentityCheck {
    bool holds = false;
    std::optional<Point> counterexample;
};

/// Whether every point of A^n satisfying all premises satisfies the
/// conclusion. Brute force over A^n.
QuasiIdentityCheck check_quasi_identity(const FiniteAlgebra& a, const EquationSystem& premises,
                                        const AtomicFormula& conclusion, const RunConfig& cfg = {});

/// Whether every point falsifies at least one of the listed equations,
/// i.e. the universal disequation over the clause set holds in a.
bool check_universal_disequation(const FiniteAlgebra& a, const EquationSystem& clauses,
                                 const RunConfig& cfg = {});

// ---- language extension ----

/// The extended language L_A: one fresh constant per carrier element,
/// interpreted by that element. Fresh names are c0,c1,... with _k suffixes on
/// collision. Applying twice adds a second constant layer.
std::pair<Signature, FiniteAlgebra> extend_with_constants(const Signature& sig,
                                                          const FiniteAlgebra& a);

} // namespace uag
