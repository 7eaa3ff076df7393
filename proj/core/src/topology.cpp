#include "uag/topology.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "closure.hpp"
#include "uag/coordinate.hpp"
#include "uag/errors.hpp"

namespace uag {

namespace {

std::int64_t column_of(const Point& p, int k) {
    std::int64_t c = 0;
    for (int v : p) c = c * k + v;
    return c;
}

std::int64_t ipow(std::int64_t b, int e, std::int64_t limit) {
    std::int64_t r = 1;
    for (int i = 0; i < e; ++i) {
        if (b != 0 && r > limit / b) return -1;
        r *= b;
    }
    return r;
}

// ac-closure through the full-space term functions: q belongs to Y^ac iff
// every pair of term functions agreeing on Y agrees at q; tested per
// restriction-bucket.
AlgebraicSet ac_closure_full_space(const AlgebraicSet& y, const RunConfig& cfg) {
    const FiniteAlgebra& a = *y.algebra;
    auto full = detail::full_space_functions(a, y.dim, cfg);
    const std::size_t num_cols = full->elems.empty() ? 0 : full->elems[0].size();

    std::vector<std::int64_t> ycols;
    ycols.reserve(y.points.size());
    for (const Point& p : y.points) ycols.push_back(column_of(p, a.size));

    std::vector<char> good(num_cols, 1);
    std::unordered_map<std::string, int> bucket_head;
    std::vector<int> restricted(y.points.size());
    for (std::size_t e = 0; e < full->elems.size(); ++e) {
        for (std::size_t j = 0; j < ycols.size(); ++j)
            restricted[j] = full->elems[e][static_cast<std::size_t>(ycols[j])];
        std::string key(reinterpret_cast<const char*>(restricted.data()),
                        restricted.size() * sizeof(int));
        auto [it, fresh] = bucket_head.emplace(std::move(key), static_cast<int>(e));
        if (fresh) continue;
        const std::vector<int>& head = full->elems[static_cast<std::size_t>(it->second)];
        const std::vector<int>& cur = full->elems[e];
        for (std::size_t q = 0; q < num_cols; ++q)
            if (cur[q] != head[q]) good[q] = 0;
    }

    std::vector<Point> pts = detail::all_points(a.size, y.dim, cfg);
    AlgebraicSet out;
    out.algebra = y.algebra;
    out.dim = y.dim;
    out.vars = y.vars;
    for (std::size_t q = 0; q < num_cols; ++q)
        if (good[q]) out.points.push_back(pts[q]);
    out.algebraic = true;
    return out;
}

// candidate test without the full-space cache: the subalgebra of A^(Y u {q})
// generated by the extended coordinates is a function graph over T(Y) iff q
// is in the closure
bool ac_candidate(const AlgebraicSet& y, const Point& q, int ty_size, const RunConfig& cfg) {
    std::vector<Point> cols = y.points;
    cols.push_back(q);
    RunConfig bounded = cfg;
    bounded.max_closure = ty_size;
    try {
        detail::closure_over_columns(*y.algebra, y.dim, cols, bounded);
        return true;
    } catch (const CapacityError&) {
        return false;
    }
}

AlgebraicSet ac_closure_sweep(const AlgebraicSet& y, const RunConfig& cfg) {
    const FiniteAlgebra& a = *y.algebra;
    std::int64_t space = ipow(a.size, y.dim, cfg.max_enumeration);
    if (space < 0) throw CapacityError("ac-closure sweep |A|^n exceeds max_enumeration");
    const int ty_size =
        static_cast<int>(detail::closure_over_columns(a, y.dim, y.points, cfg).elems.size());

    AlgebraicSet out;
    out.algebra = y.algebra;
    out.dim = y.dim;
    out.vars = y.vars;
    Point q(static_cast<std::size_t>(y.dim), 0);
    for (std::int64_t i = 0; i < space; ++i) {
        if (y.contains(q) || ac_candidate(y, q, ty_size, cfg)) out.points.push_back(q);
        for (int j = y.dim - 1; j >= 0; --j) {
            if (++q[static_cast<std::size_t>(j)] < a.size) break;
            q[static_cast<std::size_t>(j)] = 0;
        }
    }
    out.algebraic = true;
    return out;
}

} // namespace

AlgebraicSet ac_closure(const AlgebraicSet& y, const RunConfig& cfg) {
    AlgebraicSet out = detail::full_space_feasible(*y.algebra, y.dim)
                           ? ac_closure_full_space(y, cfg)
                           : ac_closure_sweep(y, cfg);
    y.algebraic = y.points == out.points;
    if (*y.algebraic) out.system = y.system; // a fixed point keeps its system
    return out;
}

AlgebraicSet point_closure(std::shared_ptr<const FiniteAlgebra> a, const Point& p,
                           const RunConfig& cfg) {
    for (int v : p)
        if (v < 0 || v >= a->size) throw PreconditionError("point coordinate out of carrier");
    if (p.empty()) throw PreconditionError("point must have dimension at least 1");

    const bool cacheable = detail::full_space_feasible(*a, static_cast<int>(p.size()));
    if (cacheable) {
        // the cached full-space closure enforces cfg bounds on every access
        (void)detail::full_space_functions(*a, static_cast<int>(p.size()), cfg);
        struct Entry {
            FiniteAlgebra algebra;
            std::map<Point, AlgebraicSet> closures;
        };
        static std::mutex mu;
        static std::unordered_map<std::uint64_t, std::vector<Entry>> cache;
        std::uint64_t key = detail::algebra_fingerprint(*a);
        {
            std::lock_guard lock(mu);
            for (Entry& e : cache[key])
                if (e.algebra == *a) {
                    auto it = e.closures.find(p);
                    if (it != e.closures.end()) return it->second;
                }
        }
        AlgebraicSet singleton = make_point_set(a, static_cast<int>(p.size()), {p});
        AlgebraicSet closed = ac_closure(singleton, cfg);
        closed.irreducible_cache = true; // closures of singletons are irreducible
        {
            std::lock_guard lock(mu);
            std::vector<Entry>& entries = cache[key];
            Entry* slot = nullptr;
            for (Entry& e : entries)
                if (e.algebra == *a) slot = &e;
            if (!slot) {
                entries.push_back(Entry{*a, {}});
                slot = &entries.back();
            }
            slot->closures.emplace(p, closed);
        }
        return closed;
    }
    AlgebraicSet singleton = make_point_set(a, static_cast<int>(p.size()), {p});
    AlgebraicSet closed = ac_closure(singleton, cfg);
    closed.irreducible_cache = true;
    return closed;
}

bool is_algebraic(const AlgebraicSet& y, const RunConfig& cfg) {
    if (y.algebraic) return *y.algebraic;
    y.algebraic = ac_closure(y, cfg).points == y.points;
    return *y.algebraic;
}

IrreducibilityResult is_irreducible(const AlgebraicSet& y, const RunConfig& cfg) {
    if (y.empty())
        throw PreconditionError("the empty set is not considered for irreducibility");
    if (!is_algebraic(y, cfg))
        throw PreconditionError("irreducibility is defined for algebraic sets");

    TermFunctionAlgebra t = coordinate_algebra(y, cfg);
    IrreducibilityResult res;
    if (t.size() > y.algebra->size) {
        y.irreducible_cache = false; // no injective evaluation can exist
        return res;
    }
    for (std::size_t idx = 0; idx < y.points.size(); ++idx) {
        bool injective = true;
        for (int e1 = 0; e1 < t.size() && injective; ++e1)
            for (int e2 = e1 + 1; e2 < t.size(); ++e2)
                if (t.elems[static_cast<std::size_t>(e1)][idx] == t.elems[static_cast<std::size_t>(e2)][idx]) {
                    injective = false;
                    break;
                }
        if (injective) {
            res.irreducible = true;
            res.generic_point = y.points[idx];
            break;
        }
    }
    y.irreducible_cache = res.irreducible;
    return res;
}

std::vector<AlgebraicSet> decompose(const AlgebraicSet& y, const RunConfig& cfg) {
    if (y.empty()) throw PreconditionError("the empty set has no decomposition");
    if (!is_algebraic(y, cfg))
        throw PreconditionError("decomposition is defined for algebraic sets");

    std::vector<AlgebraicSet> closures;
    for (const Point& p : y.points) {
        AlgebraicSet pc = point_closure(y.algebra, p, cfg);
        pc.vars = y.vars;
        bool dup = false;
        for (const auto& c : closures)
            if (c.points == pc.points) {
                dup = true;
                break;
            }
        if (!dup) closures.push_back(std::move(pc));
    }
    auto subset = [](const AlgebraicSet& s, const AlgebraicSet& t) {
        return std::includes(t.points.begin(), t.points.end(), s.points.begin(), s.points.end());
    };
    std::vector<AlgebraicSet> maximal;
    for (const auto& c : closures) {
        bool dominated = false;
        for (const auto& d : closures)
            if (c.points != d.points && subset(c, d)) {
                dominated = true;
                break;
            }
        if (!dominated) maximal.push_back(c);
    }
    std::sort(maximal.begin(), maximal.end(),
              [](const AlgebraicSet& l, const AlgebraicSet& r) { return l.points < r.points; });

    // postconditions, re-verified every run: irreducible components, pairwise
    // incomparable, covering Y
    std::vector<char> covered(y.points.size(), 0);
    for (const auto& c : maximal) {
        if (!is_irreducible(c, cfg).irreducible)
            throw Error("decomposition produced a reducible component (internal error)");
        for (const Point& p : c.points) {
            int idx = y.index_of(p);
            if (idx < 0) throw Error("component escapes the set (internal error)");
            covered[static_cast<std::size_t>(idx)] = 1;
        }
    }
    for (char c : covered)
        if (!c) throw Error("components do not cover the set (internal error)");
    for (std::size_t i = 0; i < maximal.size(); ++i)
        for (std::size_t j = 0; j < maximal.size(); ++j)
            if (i != j && subset(maximal[i], maximal[j]))
                throw Error("components are not incomparable (internal error)");
    return maximal;
}

} // namespace uag
