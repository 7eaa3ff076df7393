#include "uag/coordinate.hpp"

#include <algorithm>

#include "closure.hpp"
#include "uag/topology.hpp"

namespace uag {

namespace {

// full-space column index of a point (lex position)
std::int64_t column_of(const Point& p, int k) {
    std::int64_t c = 0;
    for (int v : p) c = c * k + v;
    return c;
}

std::string pack(const std::vector<int>& vec) { return detail::ColumnClosure::key_of(vec); }

TermFunctionAlgebra from_closure(const AlgebraicSet& y, detail::ColumnClosure&& cc) {
    TermFunctionAlgebra t;
    t.algebra = y.algebra;
    t.base = y;
    t.elems = std::move(cc.elems);
    t.witness = std::move(cc.witness);
    t.witness_depth = std::move(cc.depth);
    t.derivations = std::move(cc.derivations);
    t.coord_elem = std::move(cc.coord_elem);
    t.index = std::move(cc.index);
    return t;
}

TermFunctionAlgebra restrict_from_full_space(const AlgebraicSet& y, const RunConfig& cfg) {
    const FiniteAlgebra& a = *y.algebra;
    auto full = detail::full_space_functions(a, y.dim, cfg);
    std::vector<std::int64_t> cols;
    cols.reserve(y.points.size());
    for (const Point& p : y.points) cols.push_back(column_of(p, a.size));

    TermFunctionAlgebra t;
    t.algebra = y.algebra;
    t.base = y;
    std::vector<int> cls(full->elems.size(), -1); // full element -> restricted element
    std::vector<int> restricted(y.points.size());
    for (std::size_t e = 0; e < full->elems.size(); ++e) {
        for (std::size_t j = 0; j < cols.size(); ++j)
            restricted[j] = full->elems[e][static_cast<std::size_t>(cols[j])];
        std::string key = pack(restricted);
        auto it = t.index.find(key);
        if (it != t.index.end()) {
            cls[e] = it->second;
            continue;
        }
        int id = static_cast<int>(t.elems.size());
        cls[e] = id;
        t.index.emplace(std::move(key), id);
        t.elems.push_back(restricted);
        t.witness.push_back(full->witness[e]);
        t.witness_depth.push_back(full->depth[e]);
        Derivation d = full->derivations[e];
        for (int& arg : d.args) arg = cls[static_cast<std::size_t>(arg)];
        t.derivations.push_back(std::move(d));
    }
    for (int ce : full->coord_elem) t.coord_elem.push_back(cls[static_cast<std::size_t>(ce)]);
    return t;
}

} // namespace

int TermFunctionAlgebra::op_apply(int op, std::span<const int> args) const {
    const std::size_t cols = base.points.size();
    std::vector<int> vec(cols);
    std::vector<int> vals(args.size());
    for (std::size_t c = 0; c < cols; ++c) {
        for (std::size_t j = 0; j < args.size(); ++j) vals[j] = elems[static_cast<std::size_t>(args[j])][c];
        vec[c] = algebra->op_apply(op, vals);
    }
    if (cols == 0) return 0; // Gamma(empty) is trivial
    int id = index_of_vector(vec);
    if (id < 0) throw Error("term-function algebra is not closed (internal error)");
    return id;
}

int TermFunctionAlgebra::index_of_vector(const std::vector<int>& vec) const {
    auto it = index.find(pack(vec));
    return it == index.end() ? -1 : it->second;
}

int TermFunctionAlgebra::element_of_term(TermId t) const {
    if (base.points.empty()) return 0;
    TermId roots[1] = {t};
    TermEvaluator ev(*algebra, roots);
    if (ev.max_var() >= base.dim)
        throw PreconditionError("term uses a variable beyond the ambient dimension");
    std::vector<int> vec;
    vec.reserve(base.points.size());
    for (const Point& p : base.points) {
        ev.eval_point(p);
        vec.push_back(ev.value(t));
    }
    int id = index_of_vector(vec);
    if (id < 0) throw Error("term function missing from closure (internal error)");
    return id;
}

std::vector<int> TermFunctionAlgebra::generator_elems() const {
    std::vector<int> gens;
    for (int ce : coord_elem)
        if (std::find(gens.begin(), gens.end(), ce) == gens.end()) gens.push_back(ce);
    return gens;
}

FiniteAlgebra TermFunctionAlgebra::to_finite_algebra(const RunConfig& cfg) const {
    const int m = size();
    std::vector<std::vector<int>> tables;
    for (int op = 0; op < num_ops(); ++op) {
        int ar = op_arity(op);
        std::int64_t entries = 1;
        for (int i = 0; i < ar; ++i) {
            entries *= m;
            if (entries > cfg.max_enumeration)
                throw CapacityError("materialized table exceeds max_enumeration");
        }
        std::vector<int> table(static_cast<std::size_t>(entries));
        std::vector<int> idx(static_cast<std::size_t>(ar), 0);
        for (std::int64_t e = 0; e < entries; ++e) {
            table[static_cast<std::size_t>(e)] = op_apply(op, idx);
            for (int j = ar - 1; j >= 0; --j) {
                if (++idx[static_cast<std::size_t>(j)] < m) break;
                idx[static_cast<std::size_t>(j)] = 0;
            }
        }
        tables.push_back(std::move(table));
    }
    return FiniteAlgebra(algebra->sig, m, std::move(tables));
}

TermFunctionAlgebra coordinate_algebra(const AlgebraicSet& y, const RunConfig& cfg) {
    if (detail::full_space_feasible(*y.algebra, y.dim) && !y.points.empty())
        return restrict_from_full_space(y, cfg);
    return from_closure(y, detail::closure_over_columns(*y.algebra, y.dim, y.points, cfg));
}

RadicalOracle radical_oracle(const AlgebraicSet& y, const RunConfig& cfg) {
    return RadicalOracle{std::make_shared<TermFunctionAlgebra>(coordinate_algebra(y, cfg))};
}

std::vector<Homomorphism> enumerate_homomorphisms(const TermFunctionAlgebra& c,
                                                  const FiniteAlgebra& a, const RunConfig& cfg) {
    if (!(a == *c.algebra)) {
        // unrelated target: plain generic search
        return enumerate_homomorphisms_generic(c, a);
    }
    const AlgebraicSet& y = c.base;
    std::vector<int> gens = c.generator_elems();
    std::vector<int> gen_slot(static_cast<std::size_t>(c.coord_elem.size()));
    for (std::size_t i = 0; i < c.coord_elem.size(); ++i)
        gen_slot[i] = static_cast<int>(
            std::find(gens.begin(), gens.end(), c.coord_elem[i]) - gens.begin());

    std::vector<Homomorphism> out;
    const int g = static_cast<int>(gens.size());
    std::vector<int> images(static_cast<std::size_t>(g), 0);

    auto try_candidate = [&]() {
        Point p(static_cast<std::size_t>(y.dim));
        for (int i = 0; i < y.dim; ++i) p[static_cast<std::size_t>(i)] = images[static_cast<std::size_t>(gen_slot[i])];
        int idx = y.index_of(p);
        if (idx >= 0) {
            // evaluation at a point of Y: a homomorphism by pointwise definition
            std::vector<int> map(static_cast<std::size_t>(c.size()));
            for (int e = 0; e < c.size(); ++e) map[static_cast<std::size_t>(e)] = c.elems[static_cast<std::size_t>(e)][static_cast<std::size_t>(idx)];
            out.push_back(Homomorphism{std::move(map)});
            return;
        }
        if (y.points.empty()) {
            // T(empty) is trivial; any image of the single element that is
            // itself a trivial subalgebra gives a homomorphism
            std::vector<int> map{images.empty() ? 0 : images[0]};
            if (is_homomorphism(c, a, map)) out.push_back(Homomorphism{std::move(map)});
            return;
        }
        // graph-closure consistency: the subalgebra of A^(Y u {p}) generated
        // by the extended coordinates is a function graph iff evaluation at p
        // is well defined on T(Y)
        std::vector<Point> cols = y.points;
        cols.push_back(p);
        RunConfig bounded = cfg;
        bounded.max_closure = c.size(); // one extra element means a conflict
        try {
            detail::ColumnClosure graph =
                detail::closure_over_columns(a, y.dim, cols, bounded);
            std::vector<int> map(static_cast<std::size_t>(c.size()), -1);
            std::vector<int> ypart(y.points.size());
            for (const auto& vec : graph.elems) {
                for (std::size_t j = 0; j < y.points.size(); ++j) ypart[j] = vec[j];
                int e = c.index_of_vector(ypart);
                if (e < 0) throw Error("restriction missing from T(Y) (internal error)");
                map[static_cast<std::size_t>(e)] = vec.back();
            }
            for (int v : map)
                if (v < 0) throw Error("graph closure did not cover T(Y) (internal error)");
            out.push_back(Homomorphism{std::move(map)});
        } catch (const CapacityError&) {
            // conflict: two term functions equal on Y disagree at p
        }
    };

    // lexicographic sweep over generator images
    if (g == 0) {
        try_candidate();
        return out;
    }
    while (true) {
        try_candidate();
        int j = g - 1;
        for (; j >= 0; --j) {
            if (++images[static_cast<std::size_t>(j)] < a.size) break;
            images[static_cast<std::size_t>(j)] = 0;
        }
        if (j < 0) break;
    }
    return out;
}

std::vector<Homomorphism> points_as_homs(const TermFunctionAlgebra& t, const RunConfig& cfg) {
    const AlgebraicSet& y = t.base;
    if (y.points.empty()) throw PreconditionError("empty set has no point correspondence");
    if (!is_algebraic(y, cfg))
        throw PreconditionError("point-homomorphism correspondence needs an algebraic set");
    std::vector<Homomorphism> homs;
    homs.reserve(y.points.size());
    for (std::size_t idx = 0; idx < y.points.size(); ++idx) {
        std::vector<int> map(static_cast<std::size_t>(t.size()));
        for (int e = 0; e < t.size(); ++e) map[static_cast<std::size_t>(e)] = t.elems[static_cast<std::size_t>(e)][idx];
        homs.push_back(Homomorphism{std::move(map)});
    }
    return homs;
}

Point hom_to_point(const TermFunctionAlgebra& t, const Homomorphism& h) {
    Point p(static_cast<std::size_t>(t.base.dim));
    for (int i = 0; i < t.base.dim; ++i)
        p[static_cast<std::size_t>(i)] = h.map[static_cast<std::size_t>(t.coord_elem[static_cast<std::size_t>(i)])];
    return p;
}

} // namespace uag
