#include "uag/algebra.hpp"

#include <algorithm>
#include <cmath>

#include "uag/errors.hpp"

namespace uag {

namespace {

// size^arity with overflow care; -1 when it exceeds limit
std::int64_t checked_pow(std::int64_t base, int exp, std::int64_t limit) {
    std::int64_t r = 1;
    for (int i = 0; i < exp; ++i) {
        if (base != 0 && r > limit / base) return -1;
        r *= base;
    }
    return r;
}

} // namespace

FiniteAlgebra::FiniteAlgebra(Signature s, int k, std::vector<std::vector<int>> t)
    : sig(std::move(s)), size(k), tables(std::move(t)) {
    if (size < 1) throw PreconditionError("carrier must have at least one element");
    if (static_cast<int>(tables.size()) != sig.size())
        throw PreconditionError("one table per symbol required");
    for (int i = 0; i < sig.size(); ++i) {
        std::int64_t want = checked_pow(size, sig.symbols[i].arity, 1'000'000'000'000LL);
        if (want < 0 || static_cast<std::int64_t>(tables[i].size()) != want)
            throw PreconditionError("table for '" + sig.symbols[i].name + "' has wrong size");
        for (int v : tables[i])
            if (v < 0 || v >= size)
                throw PreconditionError("table entry out of carrier for '" + sig.symbols[i].name + "'");
    }
}

int FiniteAlgebra::op_index(SymbolId sym) const {
    const std::string& name = TermArena::global().symbol_name(sym);
    return sig.index_of(name);
}

FiniteAlgebra trivial_algebra(const Signature& sig) {
    std::vector<std::vector<int>> tables;
    for (const auto& s : sig.symbols)
        tables.emplace_back(static_cast<std::size_t>(std::max<std::int64_t>(1, checked_pow(1, s.arity, 8))), 0);
    return FiniteAlgebra(sig, 1, std::move(tables));
}

TermEvaluator::TermEvaluator(const FiniteAlgebra& a, std::span<const TermId> roots)
    : algebra_(&a) {
    const TermArena& arena = TermArena::global();
    std::vector<TermId> order = subterms(roots);
    slots_.reserve(order.size());
    for (TermId t : order) {
        const TermNode& n = arena.node(t);
        Slot s;
        if (n.is_var()) {
            s.var = n.var;
            s.op = -1;
            max_var_ = std::max(max_var_, static_cast<int>(n.var));
        } else {
            s.var = -1;
            s.op = a.op_index(n.sym);
            if (s.op < 0)
                throw PreconditionError("algebra does not interpret symbol '" +
                                        arena.symbol_name(n.sym) + "'");
            for (TermId c : n.args) s.args.push_back(slot_of_.at(c));
        }
        slot_of_.emplace(t, static_cast<int>(slots_.size()));
        slots_.push_back(std::move(s));
    }
    values_.assign(slots_.size(), 0);
}

void TermEvaluator::eval_point(std::span<const int> p) {
    if (max_var_ >= static_cast<int>(p.size()))
        throw PreconditionError("point does not cover all variables of the term");
    std::vector<int> argbuf;
    for (std::size_t i = 0; i < slots_.size(); ++i) {
        const Slot& s = slots_[i];
        if (s.var >= 0) {
            values_[i] = p[s.var];
        } else {
            argbuf.clear();
            for (int a : s.args) argbuf.push_back(values_[a]);
            values_[i] = algebra_->op_apply(s.op, argbuf);
        }
    }
}

int TermEvaluator::value(TermId t) const { return values_[slot_of_.at(t)]; }

int eval(TermId t, const FiniteAlgebra& a, std::span<const int> p) {
    TermId roots[1] = {t};
    TermEvaluator ev(a, roots);
    ev.eval_point(p);
    return ev.value(t);
}

bool holds(const AtomicFormula& eq, const FiniteAlgebra& a, std::span<const int> p) {
    TermId roots[2] = {eq.lhs, eq.rhs};
    TermEvaluator ev(a, roots);
    ev.eval_point(p);
    return ev.value(eq.lhs) == ev.value(eq.rhs);
}

FiniteAlgebra direct_product(const Signature& sig, std::span<const FiniteAlgebra> factors,
                             const RunConfig& cfg) {
    for (const auto& f : factors)
        if (!(f.sig == sig))
            throw PreconditionError("product factors must share one signature");
    std::int64_t carrier = 1;
    for (const auto& f : factors) {
        carrier *= f.size;
        if (carrier > cfg.max_carrier)
            throw CapacityError("product carrier exceeds max_carrier (" +
                                std::to_string(cfg.max_carrier) + ")");
    }
    const int d = static_cast<int>(factors.size());
    const int k = static_cast<int>(carrier);
    std::vector<int> sizes(d);
    for (int i = 0; i < d; ++i) sizes[i] = factors[i].size;

    std::vector<std::vector<int>> tables;
    tables.reserve(sig.size());
    for (int op = 0; op < sig.size(); ++op) {
        int m = sig.symbols[op].arity;
        std::int64_t entries = checked_pow(k, m, cfg.max_enumeration);
        if (entries < 0)
            throw CapacityError("product table for '" + sig.symbols[op].name +
                                "' exceeds max_enumeration");
        std::vector<int> table(static_cast<std::size_t>(entries));
        std::vector<std::vector<int>> coords(m);
        std::vector<int> args(m, 0), fargs(m), rescoords(d);
        for (std::int64_t idx = 0; idx < entries; ++idx) {
            for (int j = 0; j < m; ++j) coords[j] = product_coords(args[j], sizes);
            for (int i = 0; i < d; ++i) {
                for (int j = 0; j < m; ++j) fargs[j] = coords[j][i];
                rescoords[i] = factors[i].op_apply(op, fargs);
            }
            table[static_cast<std::size_t>(idx)] = product_encode(rescoords, sizes);
            // odometer over args, last argument fastest
            for (int j = m - 1; j >= 0; --j) {
                if (++args[j] < k) break;
                args[j] = 0;
            }
        }
        tables.push_back(std::move(table));
    }
    return FiniteAlgebra(sig, k, std::move(tables));
}

FiniteAlgebra direct_power(const FiniteAlgebra& a, int d, const RunConfig& cfg) {
    if (d < 0) throw PreconditionError("negative power");
    std::vector<FiniteAlgebra> factors(static_cast<std::size_t>(d), a);
    return direct_product(a.sig, factors, cfg);
}

std::vector<int> product_coords(int element, std::span<const int> sizes) {
    std::vector<int> out(sizes.size());
    for (int i = static_cast<int>(sizes.size()) - 1; i >= 0; --i) {
        out[i] = element % sizes[i];
        element /= sizes[i];
    }
    return out;
}

int product_encode(std::span<const int> coords, std::span<const int> sizes) {
    int e = 0;
    for (std::size_t i = 0; i < sizes.size(); ++i) e = e * sizes[i] + coords[i];
    return e;
}

GeneratedSubalgebra subalgebra_generated(const FiniteAlgebra& a, std::span<const int> seed) {
    GeneratedSubalgebra out;
    out.parent_index.assign(a.size, -1);
    auto intern = [&](int parent_elem, Derivation d) {
        if (out.parent_index[parent_elem] >= 0) return false;
        out.parent_index[parent_elem] = static_cast<int>(out.elements.size());
        out.elements.push_back(parent_elem);
        out.derivations.push_back(std::move(d));
        return true;
    };
    for (int s : seed) {
        if (s < 0 || s >= a.size) throw PreconditionError("seed element out of carrier");
        intern(s, Derivation{Derivation::Kind::Seed, -1, {}});
        out.generators.push_back(out.parent_index[s]);
    }
    std::sort(out.generators.begin(), out.generators.end());
    out.generators.erase(std::unique(out.generators.begin(), out.generators.end()),
                         out.generators.end());
    for (int op = 0; op < a.num_ops(); ++op)
        if (a.op_arity(op) == 0)
            intern(a.op_apply(op, {}), Derivation{Derivation::Kind::Op, op, {}});

    bool grew = true;
    while (grew) {
        grew = false;
        for (int op = 0; op < a.num_ops(); ++op) {
            int m = a.op_arity(op);
            if (m == 0) continue;
            std::size_t count = out.elements.size(); // freeze the frontier for this sweep
            std::vector<int> idx(m, 0), args(m);
            while (true) {
                for (int j = 0; j < m; ++j) args[j] = out.elements[idx[j]];
                int r = a.op_apply(op, args);
                grew |= intern(r, Derivation{Derivation::Kind::Op, op,
                                             std::vector<int>(idx.begin(), idx.end())});
                int j = m - 1;
                for (; j >= 0; --j) {
                    if (static_cast<std::size_t>(++idx[j]) < count) break;
                    idx[j] = 0;
                }
                if (j < 0) break;
            }
        }
    }
    if (out.elements.empty())
        throw PreconditionError("empty seed and no constants: closure is empty");

    int m = static_cast<int>(out.elements.size());
    std::vector<std::vector<int>> tables;
    for (int op = 0; op < a.num_ops(); ++op) {
        int ar = a.op_arity(op);
        std::int64_t entries = 1;
        for (int i = 0; i < ar; ++i) entries *= m;
        std::vector<int> table(static_cast<std::size_t>(entries));
        std::vector<int> idx(ar, 0), args(ar);
        for (std::int64_t e = 0; e < entries; ++e) {
            for (int j = 0; j < ar; ++j) args[j] = out.elements[idx[j]];
            table[static_cast<std::size_t>(e)] = out.parent_index[a.op_apply(op, args)];
            for (int j = ar - 1; j >= 0; --j) {
                if (++idx[j] < m) break;
                idx[j] = 0;
            }
        }
        tables.push_back(std::move(table));
    }
    out.algebra = FiniteAlgebra(a.sig, m, std::move(tables));
    return out;
}

std::vector<int> minimal_generating_set(const FiniteAlgebra& a) {
    auto generates = [&](std::span<const int> seed) {
        try {
            return static_cast<int>(subalgebra_generated(a, seed).elements.size()) == a.size;
        } catch (const PreconditionError&) {
            return false; // empty closure
        }
    };
    if (generates({})) return {};
    std::vector<int> subset;
    // subsets in (size, lex) order
    for (int s = 1; s <= a.size; ++s) {
        subset.assign(s, 0);
        for (int i = 0; i < s; ++i) subset[i] = i;
        while (true) {
            if (generates(subset)) return subset;
            int i = s - 1;
            while (i >= 0 && subset[i] == a.size - s + i) --i;
            if (i < 0) break;
            ++subset[i];
            for (int j = i + 1; j < s; ++j) subset[j] = subset[j - 1] + 1;
        }
    }
    throw PreconditionError("no generating set found"); // unreachable: full carrier generates
}

Partition make_partition(std::span<const int> raw_class_of) {
    Partition p;
    std::unordered_map<int, int> remap;
    p.class_of.reserve(raw_class_of.size());
    for (int c : raw_class_of) {
        auto [it, fresh] = remap.emplace(c, p.num_classes);
        if (fresh) ++p.num_classes;
        p.class_of.push_back(it->second);
    }
    return p;
}

bool is_congruence(const FiniteAlgebra& a, const Partition& theta) {
    if (static_cast<int>(theta.class_of.size()) != a.size) return false;
    // compatible iff the induced table map is well defined
    for (int op = 0; op < a.num_ops(); ++op) {
        int m = a.op_arity(op);
        std::vector<int> args(m, 0);
        std::unordered_map<std::int64_t, int> induced;
        while (true) {
            std::int64_t key = 0;
            for (int j = 0; j < m; ++j) key = key * theta.num_classes + theta.class_of[args[j]];
            int v = theta.class_of[a.op_apply(op, args)];
            auto [it, fresh] = induced.emplace(key, v);
            if (!fresh && it->second != v) return false;
            int j = m - 1;
            for (; j >= 0; --j) {
                if (++args[j] < a.size) break;
                args[j] = 0;
            }
            if (j < 0) break;
        }
    }
    return true;
}

QuotientResult quotient(const FiniteAlgebra& a, const Partition& theta) {
    if (static_cast<int>(theta.class_of.size()) != a.size)
        throw PreconditionError("partition does not cover the carrier");
    if (!is_congruence(a, theta))
        throw PreconditionError("partition is not compatible with the operations");
    int q = theta.num_classes;
    std::vector<int> representative(q, -1);
    for (int e = 0; e < a.size; ++e)
        if (representative[theta.class_of[e]] < 0) representative[theta.class_of[e]] = e;
    std::vector<std::vector<int>> tables;
    for (int op = 0; op < a.num_ops(); ++op) {
        int m = a.op_arity(op);
        std::int64_t entries = 1;
        for (int i = 0; i < m; ++i) entries *= q;
        std::vector<int> table(static_cast<std::size_t>(entries));
        std::vector<int> idx(m, 0), args(m);
        for (std::int64_t e = 0; e < entries; ++e) {
            for (int j = 0; j < m; ++j) args[j] = representative[idx[j]];
            table[static_cast<std::size_t>(e)] = theta.class_of[a.op_apply(op, args)];
            for (int j = m - 1; j >= 0; --j) {
                if (++idx[j] < q) break;
                idx[j] = 0;
            }
        }
        tables.push_back(std::move(table));
    }
    return QuotientResult{FiniteAlgebra(a.sig, q, std::move(tables)), theta.class_of};
}

std::optional<int> has_trivial_subalgebra(const FiniteAlgebra& a) {
    for (int e = 0; e < a.size; ++e) {
        bool ok = true;
        for (int op = 0; op < a.num_ops() && ok; ++op) {
            std::vector<int> args(static_cast<std::size_t>(a.op_arity(op)), e);
            ok = a.op_apply(op, args) == e;
        }
        if (ok) return e;
    }
    return std::nullopt;
}

QuasiIdentityCheck check_quasi_identity(const FiniteAlgebra& a, const EquationSystem& premises,
                                        const AtomicFormula& conclusion, const RunConfig& cfg) {
    int n = premises.num_vars();
    std::int64_t space = checked_pow(a.size, n, cfg.max_enumeration);
    if (space < 0)
        throw CapacityError("quasi-identity sweep |A|^n exceeds max_enumeration");
    std::vector<TermId> roots;
    for (const auto& eq : premises.equations) {
        roots.push_back(eq.lhs);
        roots.push_back(eq.rhs);
    }
    roots.push_back(conclusion.lhs);
    roots.push_back(conclusion.rhs);
    TermEvaluator ev(a, roots);
    Point p(static_cast<std::size_t>(n), 0);
    for (std::int64_t i = 0; i < space; ++i) {
        ev.eval_point(p);
        bool premises_hold = true;
        for (const auto& eq : premises.equations)
            if (ev.value(eq.lhs) != ev.value(eq.rhs)) {
                premises_hold = false;
                break;
            }
        if (premises_hold && ev.value(conclusion.lhs) != ev.value(conclusion.rhs))
            return QuasiIdentityCheck{false, p};
        for (int j = n - 1; j >= 0; --j) {
            if (++p[static_cast<std::size_t>(j)] < a.size) break;
            p[static_cast<std::size_t>(j)] = 0;
        }
    }
    return QuasiIdentityCheck{true, std::nullopt};
}

bool check_universal_disequation(const FiniteAlgebra& a, const EquationSystem& clauses,
                                 const RunConfig& cfg) {
    int n = clauses.num_vars();
    std::int64_t space = checked_pow(a.size, n, cfg.max_enumeration);
    if (space < 0)
        throw CapacityError("disequation sweep |A|^n exceeds max_enumeration");
    std::vector<TermId> roots;
    for (const auto& eq : clauses.equations) {
        roots.push_back(eq.lhs);
        roots.push_back(eq.rhs);
    }
    TermEvaluator ev(a, roots);
    Point p(static_cast<std::size_t>(n), 0);
    for (std::int64_t i = 0; i < space; ++i) {
        ev.eval_point(p);
        bool falsifies_one = false;
        for (const auto& eq : clauses.equations)
            if (ev.value(eq.lhs) != ev.value(eq.rhs)) {
                falsifies_one = true;
                break;
            }
        if (!falsifies_one) return false; // p satisfies every clause
        for (int j = n - 1; j >= 0; --j) {
            if (++p[static_cast<std::size_t>(j)] < a.size) break;
            p[static_cast<std::size_t>(j)] = 0;
        }
    }
    return true;
}

std::pair<Signature, FiniteAlgebra> extend_with_constants(const Signature& sig,
                                                          const FiniteAlgebra& a) {
    if (!(a.sig == sig)) throw PreconditionError("algebra does not interpret the signature");
    Signature ext = sig;
    std::vector<std::vector<int>> tables = a.tables;
    for (int e = 0; e < a.size; ++e) {
        std::string name = "c" + std::to_string(e);
        for (int suffix = 1; ext.has(name); ++suffix)
            name = "c" + std::to_string(e) + "_" + std::to_string(suffix);
        ext.add(name, 0);
        tables.push_back({e});
    }
    return {ext, FiniteAlgebra(ext, a.size, std::move(tables))};
}

} // namespace uag
