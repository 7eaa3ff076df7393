#pragma once

#include <cstdint>
#include <deque>
#include <shared_mutex>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "uag/signature.hpp"

namespace uag {

using TermId = std::uint32_t;
using SymbolId = std::uint32_t;

/// One node of the hash-consed term DAG. Structural equality of terms is
/// TermId equality.
struct TermNode {
    std::int32_t var = -1;     // 0-based variable index, or -1 for an application
    SymbolId sym = 0;          // interned symbol name (applications only)
    std::vector<TermId> args;  // length = arity

    bool is_var() const { return var >= 0; }
};

/// Global intern table for symbols and term nodes. Interning takes the
/// writer lock; lookups take the reader lock. Returned references stay valid
/// forever (nodes are immutable and the deques never invalidate references).
class TermArena {
public:
    static TermArena& global();

    SymbolId symbol(std::string_view name);
    const std::string& symbol_name(SymbolId s) const;

    TermId var(int index);
    TermId app(SymbolId sym, std::span<const TermId> args);
    TermId app(std::string_view sym, std::span<const TermId> args);
    TermId constant(std::string_view sym) { return app(sym, {}); }

    const TermNode& node(TermId t) const {
        std::shared_lock lock(mu_);
        return nodes_[t];
    }

private:
    TermArena() = default;

    mutable std::shared_mutex mu_;
    std::deque<TermNode> nodes_;
    std::deque<std::string> symbol_names_;
    std::unordered_map<std::string, SymbolId> symbol_ids_;
    std::vector<TermId> var_ids_;
    struct AppKey {
        SymbolId sym;
        std::vector<TermId> args;
        bool operator==(const AppKey&) const = default;
    };
    struct AppKeyHash {
        std::size_t operator()(const AppKey& k) const;
    };
    std::unordered_map<AppKey, TermId, AppKeyHash> app_ids_;
};

/// An equation t = s. Both sides share one variable indexing.
struct AtomicFormula {
    TermId lhs;
    TermId rhs;
    bool operator==(const AtomicFormula&) const = default;
};

/// A finite list of equations over a fixed variable set. Order only matters
/// for the determinism of subsystem reduction.
struct EquationSystem {
    VariableSet vars;
    std::vector<AtomicFormula> equations;

    int num_vars() const { return vars.size(); }
    bool has_duplicates() const;
};

// ---- term utilities ----

/// Largest variable index occurring in t, or -1 if t is ground.
int max_var_index(TermId t);

/// All distinct subterms of t (t included), children before parents.
std::vector<TermId> subterms(TermId t);

/// Distinct subterms of several roots, children before parents.
std::vector<TermId> subterms(std::span<const TermId> roots);

int term_depth(TermId t);
int term_size(TermId t);

/// Simultaneous substitution; map[i] replaces variable i. The map must cover
/// every variable of t.
TermId substitute(TermId t, std::span<const TermId> map);

/// Canonical rendering: `f(x,g(y))`. Variable names come from vars.
std::string to_string(TermId t, const VariableSet& vars);
std::string to_string(const AtomicFormula& eq, const VariableSet& vars);
/// One `t = s;` line per equation.
std::string to_string(const EquationSystem& s);

} // namespace uag
