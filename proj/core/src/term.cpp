#include "uag/term.hpp"

#include <algorithm>
#include <functional>
#include <mutex>

#include "uag/errors.hpp"

namespace uag {

std::size_t TermArena::AppKeyHash::operator()(const AppKey& k) const {
    std::size_t h = std::hash<SymbolId>{}(k.sym);
    for (TermId a : k.args) h = h * 1000003u ^ std::hash<TermId>{}(a);
    return h;
}

TermArena& TermArena::global() {
    static TermArena arena;
    return arena;
}

SymbolId TermArena::symbol(std::string_view name) {
    std::unique_lock lock(mu_);
    auto it = symbol_ids_.find(std::string(name));
    if (it != symbol_ids_.end()) return it->second;
    SymbolId id = static_cast<SymbolId>(symbol_names_.size());
    symbol_names_.emplace_back(name);
    symbol_ids_.emplace(std::string(name), id);
    return id;
}

const std::string& TermArena::symbol_name(SymbolId s) const {
    std::shared_lock lock(mu_);
    return symbol_names_[s];
}

TermId TermArena::var(int index) {
    if (index < 0) throw PreconditionError("variable index must be non-negative");
    std::unique_lock lock(mu_);
    while (static_cast<int>(var_ids_.size()) <= index) {
        TermId id = static_cast<TermId>(nodes_.size());
        nodes_.push_back(TermNode{static_cast<std::int32_t>(var_ids_.size()), 0, {}});
        var_ids_.push_back(id);
    }
    return var_ids_[index];
}

TermId TermArena::app(SymbolId sym, std::span<const TermId> args) {
    AppKey key{sym, std::vector<TermId>(args.begin(), args.end())};
    std::unique_lock lock(mu_);
    auto it = app_ids_.find(key);
    if (it != app_ids_.end()) return it->second;
    TermId id = static_cast<TermId>(nodes_.size());
    nodes_.push_back(TermNode{-1, sym, key.args});
    app_ids_.emplace(std::move(key), id);
    return id;
}

TermId TermArena::app(std::string_view sym, std::span<const TermId> args) {
    return app(symbol(sym), args);
}

bool EquationSystem::has_duplicates() const {
    for (std::size_t i = 0; i < equations.size(); ++i)
        for (std::size_t j = i + 1; j < equations.size(); ++j)
            if (equations[i] == equations[j]) return true;
    return false;
}

int max_var_index(TermId t) {
    int best = -1;
    for (TermId s : subterms(t)) {
        const TermNode& n = TermArena::global().node(s);
        if (n.is_var()) best = std::max(best, static_cast<int>(n.var));
    }
    return best;
}

std::vector<TermId> subterms(std::span<const TermId> roots) {
    const TermArena& arena = TermArena::global();
    std::vector<TermId> order;
    std::unordered_map<TermId, bool> state; // false = open, true = done
    std::vector<TermId> stack(roots.begin(), roots.end());
    while (!stack.empty()) {
        TermId t = stack.back();
        auto it = state.find(t);
        if (it != state.end() && it->second) {
            stack.pop_back();
            continue;
        }
        const TermNode& n = arena.node(t);
        if (it == state.end()) {
            state[t] = false;
            bool ready = true;
            for (TermId a : n.args) {
                auto ai = state.find(a);
                if (ai == state.end() || !ai->second) {
                    ready = false;
                    stack.push_back(a);
                }
            }
            if (!ready) continue;
        }
        state[t] = true;
        order.push_back(t);
        stack.pop_back();
    }
    return order;
}

std::vector<TermId> subterms(TermId t) {
    TermId roots[1] = {t};
    return subterms(std::span<const TermId>(roots));
}

int term_depth(TermId t) {
    std::unordered_map<TermId, int> depth;
    for (TermId s : subterms(t)) {
        const TermNode& n = TermArena::global().node(s);
        int d = 0;
        for (TermId a : n.args) d = std::max(d, depth[a] + 1);
        depth[s] = d;
    }
    return depth[t];
}

int term_size(TermId t) {
    std::unordered_map<TermId, int> size;
    for (TermId s : subterms(t)) {
        const TermNode& n = TermArena::global().node(s);
        int z = 1;
        for (TermId a : n.args) z += size[a];
        size[s] = z;
    }
    return size[t];
}

TermId substitute(TermId t, std::span<const TermId> map) {
    TermArena& arena = TermArena::global();
    std::unordered_map<TermId, TermId> out;
    for (TermId s : subterms(t)) {
        const TermNode& n = arena.node(s);
        if (n.is_var()) {
            if (n.var >= static_cast<int>(map.size()))
                throw PreconditionError("substitution map does not cover variable index " +
                                        std::to_string(n.var + 1));
            out[s] = map[n.var];
        } else {
            std::vector<TermId> args;
            args.reserve(n.args.size());
            for (TermId a : n.args) args.push_back(out[a]);
            out[s] = arena.app(n.sym, args);
        }
    }
    return out[t];
}

std::string to_string(TermId t, const VariableSet& vars) {
    const TermArena& arena = TermArena::global();
    std::string out;
    std::function<void(TermId)> rec = [&](TermId u) {
        const TermNode& n = arena.node(u);
        if (n.is_var()) {
            if (n.var < vars.size())
                out += vars.names[n.var];
            else
                out += "x" + std::to_string(n.var + 1); // fallback for anonymous indices
            return;
        }
        out += arena.symbol_name(n.sym);
        if (!n.args.empty()) {
            out += '(';
            for (std::size_t i = 0; i < n.args.size(); ++i) {
                if (i) out += ',';
                rec(n.args[i]);
            }
            out += ')';
        }
    };
    rec(t);
    return out;
}

std::string to_string(const AtomicFormula& eq, const VariableSet& vars) {
    return to_string(eq.lhs, vars) + " = " + to_string(eq.rhs, vars);
}

std::string to_string(const EquationSystem& s) {
    std::string out;
    for (const auto& eq : s.equations) {
        out += to_string(eq, s.vars);
        out += ";\n";
    }
    return out;
}

} // namespace uag
