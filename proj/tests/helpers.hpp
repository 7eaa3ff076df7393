#pragma once

// Shared builders, deterministic random generators and independent oracles
// for the test suites. Oracles here must stay independent of the library
// implementation paths they check.

#include <algorithm>
#include <random>

#include "uag/congruence.hpp"
#include "uag/parser.hpp"
#include "uag/unification.hpp"

namespace test {

using namespace uag;

/// mt19937_64 output is fully specified, so draws are stable across
/// platforms. Modulo bias is irrelevant for test-case generation.
struct Rng {
    std::mt19937_64 eng;
    explicit Rng(std::uint64_t seed) : eng(seed) {}
    int below(int n) { return static_cast<int>(eng() % static_cast<std::uint64_t>(n)); }
};

inline Signature group_sig() { return parse_signature("op add/2; op neg/1; const zero;"); }
inline Signature monoid_sig() { return parse_signature("op add/2; const zero;"); }
inline Signature groupoid_sig() { return parse_signature("op f/2;"); }

inline FiniteAlgebra cyclic_group(int n) {
    Signature sig = group_sig();
    std::vector<int> add(static_cast<std::size_t>(n) * n), neg(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        neg[static_cast<std::size_t>(i)] = (n - i) % n;
        for (int j = 0; j < n; ++j) add[static_cast<std::size_t>(i * n + j)] = (i + j) % n;
    }
    return FiniteAlgebra(sig, n, {add, neg, {0}});
}

inline FiniteAlgebra cyclic_monoid(int n) {
    Signature sig = monoid_sig();
    std::vector<int> add(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) add[static_cast<std::size_t>(i * n + j)] = (i + j) % n;
    return FiniteAlgebra(sig, n, {add, {0}});
}

inline FiniteAlgebra random_algebra(const Signature& sig, int k, Rng& rng) {
    std::vector<std::vector<int>> tables;
    for (const auto& sym : sig.symbols) {
        std::size_t entries = 1;
        for (int i = 0; i < sym.arity; ++i) entries *= static_cast<std::size_t>(k);
        std::vector<int> t(entries);
        for (auto& v : t) v = rng.below(k);
        tables.push_back(std::move(t));
    }
    return FiniteAlgebra(sig, k, std::move(tables));
}

inline TermId random_term(const Signature& sig, int nvars, int depth, Rng& rng) {
    TermArena& arena = TermArena::global();
    std::vector<int> nonconst;
    for (int i = 0; i < sig.size(); ++i)
        if (sig.symbols[static_cast<std::size_t>(i)].arity > 0) nonconst.push_back(i);
    if (depth == 0 || nonconst.empty() || rng.below(3) == 0) {
        int leaves = nvars + static_cast<int>(std::count_if(
                                 sig.symbols.begin(), sig.symbols.end(),
                                 [](const auto& s) { return s.arity == 0; }));
        int pick = rng.below(std::max(1, leaves));
        if (pick < nvars) return arena.var(pick);
        int seen = 0;
        for (const auto& s : sig.symbols)
            if (s.arity == 0 && seen++ == pick - nvars) return arena.constant(s.name);
        return arena.var(rng.below(std::max(1, nvars)));
    }
    int op = nonconst[static_cast<std::size_t>(rng.below(static_cast<int>(nonconst.size())))];
    std::vector<TermId> args;
    for (int i = 0; i < sig.symbols[static_cast<std::size_t>(op)].arity; ++i)
        args.push_back(random_term(sig, nvars, depth - 1, rng));
    return arena.app(sig.symbols[static_cast<std::size_t>(op)].name, args);
}

inline EquationSystem random_system(const Signature& sig, const VariableSet& vars, int max_eqs,
                                    int depth, Rng& rng) {
    EquationSystem s{vars, {}};
    int n = rng.below(max_eqs + 1);
    for (int i = 0; i < n; ++i)
        s.equations.push_back(AtomicFormula{random_term(sig, vars.size(), depth, rng),
                                            random_term(sig, vars.size(), depth, rng)});
    return s;
}

// ---- independent oracles ----

/// Naive congruent-closure oracle: boolean relation matrix over a
/// subterm-closed universe, iterated to a fixpoint with symmetry,
/// transitivity and congruence propagation.
inline bool in_closure_naive(TermId t, TermId s, const EquationSystem& sys) {
    std::vector<TermId> roots{t, s};
    for (const auto& eq : sys.equations) {
        roots.push_back(eq.lhs);
        roots.push_back(eq.rhs);
    }
    std::vector<TermId> universe = subterms(roots);
    const int n = static_cast<int>(universe.size());
    std::unordered_map<TermId, int> idx;
    for (int i = 0; i < n; ++i) idx[universe[static_cast<std::size_t>(i)]] = i;

    std::vector<std::vector<char>> rel(static_cast<std::size_t>(n),
                                       std::vector<char>(static_cast<std::size_t>(n), 0));
    for (int i = 0; i < n; ++i) rel[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
    for (const auto& eq : sys.equations) {
        int a = idx[eq.lhs], b = idx[eq.rhs];
        rel[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = 1;
        rel[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] = 1;
    }
    const TermArena& arena = TermArena::global();
    bool changed = true;
    while (changed) {
        changed = false;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (!rel[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) continue;
                for (int k = 0; k < n; ++k)
                    if (rel[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] &&
                        !rel[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)]) {
                        rel[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] = 1;
                        rel[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)] = 1;
                        changed = true;
                    }
            }
        for (int i = 0; i < n; ++i) {
            const TermNode& ni = arena.node(universe[static_cast<std::size_t>(i)]);
            if (ni.is_var()) continue;
            for (int j = 0; j < n; ++j) {
                const TermNode& nj = arena.node(universe[static_cast<std::size_t>(j)]);
                if (nj.is_var() || ni.sym != nj.sym || ni.args.size() != nj.args.size()) continue;
                if (rel[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) continue;
                bool all = true;
                for (std::size_t a = 0; a < ni.args.size() && all; ++a)
                    all = rel[static_cast<std::size_t>(idx[ni.args[a]])]
                             [static_cast<std::size_t>(idx[nj.args[a]])];
                if (all) {
                    rel[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = 1;
                    rel[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = 1;
                    changed = true;
                }
            }
        }
    }
    return rel[static_cast<std::size_t>(idx[t])][static_cast<std::size_t>(idx[s])] != 0;
}

/// Brute-force homomorphism enumeration: filter all |A|^|C| carrier maps.
inline std::vector<std::vector<int>> all_homomorphisms_bruteforce(const FiniteAlgebra& c,
                                                                  const FiniteAlgebra& a) {
    std::vector<std::vector<int>> out;
    std::vector<int> map(static_cast<std::size_t>(c.size), 0);
    while (true) {
        if (is_homomorphism(c, a, map)) out.push_back(map);
        int j = c.size - 1;
        for (; j >= 0; --j) {
            if (++map[static_cast<std::size_t>(j)] < a.size) break;
            map[static_cast<std::size_t>(j)] = 0;
        }
        if (j < 0) break;
    }
    return out;
}

/// All subsets of A^n that are fixed points of the ac-closure, i.e. every
/// algebraic set of the ambient space. Exponential; ambient must be tiny.
inline std::vector<std::vector<Point>> all_algebraic_sets(std::shared_ptr<const FiniteAlgebra> a,
                                                          int n, const RunConfig& cfg = {}) {
    std::vector<Point> space;
    {
        Point p(static_cast<std::size_t>(n), 0);
        std::int64_t total = 1;
        for (int i = 0; i < n; ++i) total *= a->size;
        for (std::int64_t i = 0; i < total; ++i) {
            space.push_back(p);
            for (int j = n - 1; j >= 0; --j) {
                if (++p[static_cast<std::size_t>(j)] < a->size) break;
                p[static_cast<std::size_t>(j)] = 0;
            }
        }
    }
    std::vector<std::vector<Point>> out;
    for (std::uint64_t mask = 0; mask < (1ull << space.size()); ++mask) {
        std::vector<Point> pts;
        for (std::size_t i = 0; i < space.size(); ++i)
            if (mask & (1ull << i)) pts.push_back(space[i]);
        AlgebraicSet y = make_point_set(a, n, pts);
        if (ac_closure(y, cfg).points == pts) out.push_back(std::move(pts));
    }
    return out;
}

} // namespace test
