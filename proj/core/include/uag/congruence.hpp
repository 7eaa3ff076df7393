#pragma once

#include <span>
#include <unordered_map>
#include <vector>

#include "uag/term.hpp"

namespace uag {

/// Decides membership in the congruent closure [S]: the least congruent set
/// of equations containing S. Variables are treated as uninterpreted
/// constants, so ground congruence closure (union-find plus a signature
/// table) applies. The universe of tracked terms grows lazily per query.
///
/// Single-writer while closing; afterwards queries still mutate internal
/// state (universe growth), so share across threads only behind a lock.
class CongruenceTable {
public:
    explicit CongruenceTable(const EquationSystem& s);
    CongruenceTable(const EquationSystem& s, std::span<const TermId> universe);

    /// Whether (t = s) lies in the closure. Extends the universe on demand.
    bool equivalent(TermId t, TermId s);

    /// Terms currently tracked.
    std::size_t universe_size() const { return terms_.size(); }

    /// Representative index of t's class within the current universe
    /// (t is added if absent).
    int class_of(TermId t);

private:
    int add_term(TermId t);
    int find(int i);
    void merge(int a, int b);
    void process_pending();

    struct SigKey {
        SymbolId sym;
        std::vector<int> child_classes;
        bool operator==(const SigKey&) const = default;
    };
    struct SigKeyHash {
        std::size_t operator()(const SigKey& k) const;
    };

    SigKey signature_of(int i);

    std::vector<TermId> terms_;
    std::unordered_map<TermId, int> index_;
    std::vector<int> parent_;
    std::vector<int> rank_;
    std::vector<std::vector<int>> uses_; // class rep -> parent term indices
    std::unordered_map<SigKey, int, SigKeyHash> sig_table_;
    std::vector<std::pair<int, int>> pending_;
};

/// Whether (t = s) is in [S].
bool in_closure(TermId t, TermId s, const EquationSystem& s_system);

} // namespace uag
