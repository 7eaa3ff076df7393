#include "uag/congruence.hpp"

#include <functional>

namespace uag {

std::size_t CongruenceTable::SigKeyHash::operator()(const SigKey& k) const {
    std::size_t h = std::hash<SymbolId>{}(k.sym);
    for (int c : k.child_classes) h = h * 1000003u ^ std::hash<int>{}(c);
    return h;
}

CongruenceTable::CongruenceTable(const EquationSystem& s)
    : CongruenceTable(s, std::span<const TermId>{}) {}

CongruenceTable::CongruenceTable(const EquationSystem& s, std::span<const TermId> universe) {
    for (TermId t : universe) add_term(t);
    for (const auto& eq : s.equations) {
        int a = add_term(eq.lhs);
        int b = add_term(eq.rhs);
        pending_.emplace_back(a, b);
    }
    process_pending();
}

int CongruenceTable::find(int i) {
    while (parent_[i] != i) {
        parent_[i] = parent_[parent_[i]];
        i = parent_[i];
    }
    return i;
}

CongruenceTable::SigKey CongruenceTable::signature_of(int i) {
    const TermNode& n = TermArena::global().node(terms_[i]);
    SigKey key{n.sym, {}};
    key.child_classes.reserve(n.args.size());
    for (TermId a : n.args) key.child_classes.push_back(find(index_.at(a)));
    return key;
}

int CongruenceTable::add_term(TermId t) {
    auto it = index_.find(t);
    if (it != index_.end()) return it->second;
    const TermNode& n = TermArena::global().node(t);
    for (TermId a : n.args) add_term(a);

    int i = static_cast<int>(terms_.size());
    terms_.push_back(t);
    index_.emplace(t, i);
    parent_.push_back(i);
    rank_.push_back(0);
    uses_.emplace_back();

    if (n.is_var()) return i;
    for (TermId a : n.args) uses_[find(index_.at(a))].push_back(i);
    SigKey key = signature_of(i);
    auto [sit, fresh] = sig_table_.emplace(std::move(key), i);
    if (!fresh) {
        // a congruent application already exists; the new node is a fresh
        // singleton with no parents, so one union suffices
        pending_.emplace_back(i, sit->second);
        process_pending();
    }
    return i;
}

void CongruenceTable::merge(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (rank_[a] < rank_[b]) std::swap(a, b);
    if (rank_[a] == rank_[b]) ++rank_[a];
    parent_[b] = a; // b absorbed into a
    std::vector<int> moved = std::move(uses_[b]);
    uses_[b].clear();
    for (int p : moved) {
        SigKey key = signature_of(p);
        auto [it, fresh] = sig_table_.emplace(std::move(key), p);
        if (!fresh && find(it->second) != find(p)) pending_.emplace_back(it->second, p);
        uses_[a].push_back(p);
    }
}

void CongruenceTable::process_pending() {
    while (!pending_.empty()) {
        auto [a, b] = pending_.back();
        pending_.pop_back();
        merge(a, b);
    }
}

int CongruenceTable::class_of(TermId t) { return find(add_term(t)); }

bool CongruenceTable::equivalent(TermId t, TermId s) { return class_of(t) == class_of(s); }

bool in_closure(TermId t, TermId s, const EquationSystem& s_system) {
    CongruenceTable table(s_system);
    return table.equivalent(t, s);
}

} // namespace uag
