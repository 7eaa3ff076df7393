#include "uag/geometry.hpp"

#include <algorithm>
#include <future>

#include "uag/errors.hpp"

namespace uag {

namespace {

std::int64_t pow_checked(std::int64_t base, int exp, std::int64_t limit) {
    std::int64_t r = 1;
    for (int i = 0; i < exp; ++i) {
        if (base != 0 && r > limit / base) return -1;
        r *= base;
    }
    return r;
}

Point point_at(std::int64_t index, int k, int n) {
    Point p(static_cast<std::size_t>(n));
    for (int j = n - 1; j >= 0; --j) {
        p[static_cast<std::size_t>(j)] = static_cast<int>(index % k);
        index /= k;
    }
    return p;
}

} // namespace

int AlgebraicSet::index_of(const Point& p) const {
    auto it = std::lower_bound(points.begin(), points.end(), p);
    if (it == points.end() || *it != p) return -1;
    return static_cast<int>(it - points.begin());
}

VariableSet default_vars(int n) {
    std::vector<std::string> names;
    names.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
    return VariableSet(std::move(names));
}

AlgebraicSet make_point_set(std::shared_ptr<const FiniteAlgebra> a, int dim,
                            std::vector<Point> points) {
    if (dim < 1) throw PreconditionError("affine dimension must be at least 1");
    for (const Point& p : points) {
        if (static_cast<int>(p.size()) != dim)
            throw PreconditionError("point dimension mismatch");
        for (int v : p)
            if (v < 0 || v >= a->size) throw PreconditionError("point coordinate out of carrier");
    }
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    AlgebraicSet y;
    y.algebra = std::move(a);
    y.dim = dim;
    y.vars = default_vars(dim);
    y.points = std::move(points);
    return y;
}

AlgebraicSet solve(const EquationSystem& s, std::shared_ptr<const FiniteAlgebra> a,
                   const RunConfig& cfg) {
    const FiniteAlgebra& alg = *a;
    const int n = s.num_vars();
    std::int64_t space = pow_checked(alg.size, n, cfg.max_enumeration);
    if (space < 0)
        throw CapacityError("solution sweep |A|^n exceeds max_enumeration (" +
                            std::to_string(cfg.max_enumeration) + ")");

    std::vector<TermId> roots;
    for (const auto& eq : s.equations) {
        roots.push_back(eq.lhs);
        roots.push_back(eq.rhs);
    }
    {
        // validate variable coverage up front
        TermEvaluator probe(alg, roots);
        if (probe.max_var() >= n)
            throw PreconditionError("system uses a variable beyond its declared set");
    }

    auto sweep_chunk = [&](std::int64_t lo, std::int64_t hi) {
        TermEvaluator ev(alg, roots);
        std::vector<Point> found;
        Point p = point_at(lo, alg.size, n);
        for (std::int64_t i = lo; i < hi; ++i) {
            ev.eval_point(p);
            bool root = true;
            for (const auto& eq : s.equations)
                if (ev.value(eq.lhs) != ev.value(eq.rhs)) {
                    root = false;
                    break;
                }
            if (root) found.push_back(p);
            for (int j = n - 1; j >= 0; --j) {
                if (++p[static_cast<std::size_t>(j)] < alg.size) break;
                p[static_cast<std::size_t>(j)] = 0;
            }
        }
        return found;
    };

    std::vector<Point> points;
    int threads = std::max(1, cfg.threads);
    if (threads == 1 || space < 4096) {
        points = sweep_chunk(0, space);
    } else {
        // fixed chunking in index order keeps the output identical for any
        // thread count
        std::int64_t chunk = (space + threads - 1) / threads;
        std::vector<std::future<std::vector<Point>>> parts;
        for (std::int64_t lo = 0; lo < space; lo += chunk)
            parts.push_back(std::async(std::launch::async, sweep_chunk, lo,
                                       std::min(space, lo + chunk)));
        for (auto& f : parts) {
            std::vector<Point> part = f.get();
            points.insert(points.end(), part.begin(), part.end());
        }
    }

    AlgebraicSet y;
    y.algebra = std::move(a);
    y.dim = n;
    y.vars = s.vars;
    y.points = std::move(points);
    y.system = s;
    y.algebraic = true;
    return y;
}

AlgebraicSet solve(const EquationSystem& s, const FiniteAlgebra& a, const RunConfig& cfg) {
    return solve(s, std::make_shared<FiniteAlgebra>(a), cfg);
}

bool in_radical(TermId t, TermId s, const AlgebraicSet& y) {
    if (y.points.empty()) return true;
    TermId roots[2] = {t, s};
    TermEvaluator ev(*y.algebra, roots);
    if (ev.max_var() >= y.dim)
        throw PreconditionError("formula uses a variable beyond the ambient dimension");
    for (const Point& p : y.points) {
        ev.eval_point(p);
        if (ev.value(t) != ev.value(s)) return false;
    }
    return true;
}

bool in_radical(const AtomicFormula& eq, const AlgebraicSet& y) {
    return in_radical(eq.lhs, eq.rhs, y);
}

bool systems_equivalent(const EquationSystem& s1, const EquationSystem& s2,
                        const FiniteAlgebra& a, const RunConfig& cfg) {
    if (s1.num_vars() != s2.num_vars())
        throw PreconditionError("systems must share one variable set");
    auto alg = std::make_shared<FiniteAlgebra>(a);
    return solve(s1, alg, cfg).points == solve(s2, alg, cfg).points;
}

EquationSystem minimal_subsystem(const EquationSystem& s, const FiniteAlgebra& a,
                                 const RunConfig& cfg) {
    auto alg = std::make_shared<FiniteAlgebra>(a);
    EquationSystem kept{s.vars, {}};
    std::vector<Point> current = solve(kept, alg, cfg).points;

    // greedy pass: keep an equation iff it strictly shrinks the running set
    for (const auto& eq : s.equations) {
        EquationSystem trial{s.vars, {eq}};
        TermId roots[2] = {eq.lhs, eq.rhs};
        TermEvaluator ev(a, roots);
        std::vector<Point> shrunk;
        for (const Point& p : current) {
            ev.eval_point(p);
            if (ev.value(eq.lhs) == ev.value(eq.rhs)) shrunk.push_back(p);
        }
        if (shrunk.size() < current.size()) {
            kept.equations.push_back(eq);
            current = std::move(shrunk);
        }
    }

    // pruning pass: drop any survivor whose removal keeps V unchanged
    for (std::size_t i = 0; i < kept.equations.size();) {
        EquationSystem without{s.vars, {}};
        for (std::size_t j = 0; j < kept.equations.size(); ++j)
            if (j != i) without.equations.push_back(kept.equations[j]);
        if (solve(without, alg, cfg).points == current)
            kept.equations.erase(kept.equations.begin() + static_cast<std::ptrdiff_t>(i));
        else
            ++i;
    }
    return kept;
}

AlgebraicSet product_set(const AlgebraicSet& y, const AlgebraicSet& z, const RunConfig& cfg) {
    if (y.algebra->size != z.algebra->size || !(y.algebra->sig == z.algebra->sig))
        throw PreconditionError("product requires one ambient algebra");
    if (!y.system || !z.system)
        throw PreconditionError("product requires defining systems on both factors");
    std::int64_t count = static_cast<std::int64_t>(y.points.size()) *
                         static_cast<std::int64_t>(z.points.size());
    if (count > cfg.max_enumeration)
        throw CapacityError("product point count exceeds max_enumeration");

    // disjoint variable names: keep y's, rename colliding z names
    std::vector<std::string> names = y.vars.names;
    for (const std::string& zn : z.vars.names) {
        std::string candidate = zn;
        int suffix = 1;
        auto taken = [&](const std::string& s) {
            return std::find(names.begin(), names.end(), s) != names.end();
        };
        while (taken(candidate)) candidate = zn + "_" + std::to_string(suffix++);
        names.push_back(candidate);
    }
    VariableSet vars(names);

    EquationSystem merged{vars, y.system->equations};
    std::vector<TermId> shift(static_cast<std::size_t>(z.dim));
    for (int j = 0; j < z.dim; ++j)
        shift[static_cast<std::size_t>(j)] = TermArena::global().var(y.dim + j);
    for (const auto& eq : z.system->equations)
        merged.equations.push_back(AtomicFormula{substitute(eq.lhs, shift),
                                                 substitute(eq.rhs, shift)});

    AlgebraicSet out;
    out.algebra = y.algebra;
    out.dim = y.dim + z.dim;
    out.vars = vars;
    out.points.reserve(static_cast<std::size_t>(count));
    for (const Point& p : y.points)
        for (const Point& q : z.points) {
            Point pq = p;
            pq.insert(pq.end(), q.begin(), q.end());
            out.points.push_back(std::move(pq));
        }
    out.system = std::move(merged);
    out.algebraic = true; // V(S u S') by construction
    return out;
}

} // namespace uag
