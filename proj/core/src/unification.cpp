#include "uag/unification.hpp"

#include <algorithm>

#include "closure.hpp"

namespace uag {

namespace {

VariableSet fresh_vars(int n, const Signature& sig) {
    std::vector<std::string> names;
    for (int i = 1; i <= n; ++i) {
        std::string candidate = "x" + std::to_string(i);
        int suffix = 0;
        while (sig.has(candidate) ||
               std::find(names.begin(), names.end(), candidate) != names.end())
            candidate = "x" + std::to_string(i) + "_" + std::to_string(++suffix);
        names.push_back(candidate);
    }
    return VariableSet(std::move(names));
}

Point generator_point(const Presentation& pres) {
    return Point(pres.generators.begin(), pres.generators.end());
}

// the canonical map T(V(S)) -> C: evaluate each element's witness term in C
// at the generator tuple; bijective exactly when C is separated by A
Homomorphism canonical_realization_iso(const TermFunctionAlgebra& t, const FiniteAlgebra& c,
                                       const Presentation& pres) {
    Point gp = generator_point(pres);
    std::vector<int> map(static_cast<std::size_t>(t.size()));
    for (int e = 0; e < t.size(); ++e)
        map[static_cast<std::size_t>(e)] = eval(t.witness[static_cast<std::size_t>(e)], c, gp);
    if (!is_homomorphism(t, c, map))
        throw Error("realization map is not a homomorphism (internal error)");
    std::vector<char> hit(static_cast<std::size_t>(c.size), 0);
    for (int v : map) {
        if (hit[static_cast<std::size_t>(v)])
            throw Error("realization map is not injective (internal error)");
        hit[static_cast<std::size_t>(v)] = 1;
    }
    if (t.size() != c.size) throw Error("realization map is not onto (internal error)");
    return Homomorphism{std::move(map)};
}

void append_theorem_notes(Verdict& v, bool irreducible_variant) {
    if (!v.answer) return;
    if (irreducible_variant) {
        v.notes.push_back("implied: member of Ucl(A), with the existential theory of A "
                          "containing that of C");
        v.notes.push_back("implied: embeds into an ultrapower of A; limit algebra over A; "
                          "defined by a complete atomic type in the universal theory of A");
    } else {
        v.notes.push_back("implied: member of Qvar(A) and Pvar(A)");
        v.notes.push_back("implied: subdirect product of finitely many coordinate algebras "
                          "of irreducible sets; defined by a complete atomic type in the "
                          "quasi-identity theory of A");
    }
}

// inconsistent one-variable system over A by greedy cover over term-function
// pairs, BFS-depth bounded; nullopt when the bound cuts the search short
std::optional<EquationSystem> inconsistent_unary_system(const FiniteAlgebra& a,
                                                        const RunConfig& cfg,
                                                        bool* inconclusive) {
    *inconclusive = false;
    std::vector<Point> line = detail::all_points(a.size, 1, cfg);
    detail::ColumnClosure cc =
        detail::closure_over_columns(a, 1, line, cfg, cfg.witness_depth);
    VariableSet vars = fresh_vars(1, a.sig);

    std::vector<char> alive(static_cast<std::size_t>(a.size), 1);
    int alive_count = a.size;
    EquationSystem sys{vars, {}};
    // element order is BFS order, so (j, i<j) pairs come depth-major
    for (std::size_t j = 1; j < cc.elems.size() && alive_count > 0; ++j) {
        for (std::size_t i = 0; i < j && alive_count > 0; ++i) {
            bool useful = false;
            for (int p = 0; p < a.size; ++p)
                if (alive[static_cast<std::size_t>(p)] &&
                    cc.elems[i][static_cast<std::size_t>(p)] != cc.elems[j][static_cast<std::size_t>(p)]) {
                    useful = true;
                    break;
                }
            if (!useful) continue;
            sys.equations.push_back(AtomicFormula{cc.witness[i], cc.witness[j]});
            for (int p = 0; p < a.size; ++p)
                if (alive[static_cast<std::size_t>(p)] &&
                    cc.elems[i][static_cast<std::size_t>(p)] != cc.elems[j][static_cast<std::size_t>(p)]) {
                    alive[static_cast<std::size_t>(p)] = 0;
                    --alive_count;
                }
        }
    }
    if (alive_count > 0) {
        *inconclusive = cc.depth_limited;
        return std::nullopt;
    }
    EquationSystem reduced = minimal_subsystem(sys, a, cfg);
    if (!solve(reduced, a, cfg).points.empty())
        throw Error("inconsistency witness has roots (internal error)");
    return reduced;
}

} // namespace

std::string to_string(Claim c) {
    switch (c) {
        case Claim::IsCoordinateAlgebra: return "coordinate-algebra";
        case Claim::IsIrreducibleCoordinateAlgebra: return "irreducible-coordinate-algebra";
        case Claim::InQvar: return "qvar-membership";
        case Claim::EmptySetAlgebraic: return "empty-set-algebraic";
        case Claim::TrivialInUcl: return "trivial-in-ucl";
    }
    return "?";
}

Presentation table_presentation(const FiniteAlgebra& c, std::span<const int> generators) {
    GeneratedSubalgebra sub = subalgebra_generated(c, generators);
    if (static_cast<int>(sub.elements.size()) != c.size)
        throw PreconditionError("the given elements do not generate the algebra");
    const int n = static_cast<int>(generators.size());
    TermArena& arena = TermArena::global();
    Presentation pres;
    pres.generators.assign(generators.begin(), generators.end());
    pres.relations.vars = fresh_vars(n, c.sig);

    // witness per closure element, seeds first
    std::vector<TermId> closure_witness(sub.elements.size());
    std::vector<char> have(sub.elements.size(), 0);
    for (int i = 0; i < n; ++i) {
        int cl = sub.parent_index[generators[i]];
        if (!have[static_cast<std::size_t>(cl)]) {
            closure_witness[static_cast<std::size_t>(cl)] = arena.var(i);
            have[static_cast<std::size_t>(cl)] = 1;
        }
    }
    for (std::size_t e = 0; e < sub.elements.size(); ++e) {
        if (have[e]) continue;
        const Derivation& d = sub.derivations[e];
        if (d.kind != Derivation::Kind::Op)
            throw Error("unexpected seed without witness (internal error)");
        std::vector<TermId> args;
        for (int arg : d.args) args.push_back(closure_witness[static_cast<std::size_t>(arg)]);
        closure_witness[e] = arena.app(c.sig.symbols[d.op].name, args);
        have[e] = 1;
    }

    // operation-table relations over the witnesses
    for (int op = 0; op < c.num_ops(); ++op) {
        const int m = c.op_arity(op);
        std::vector<int> idx(static_cast<std::size_t>(m), 0);
        while (true) {
            std::vector<TermId> args;
            std::vector<int> elems(static_cast<std::size_t>(m));
            for (int j = 0; j < m; ++j) {
                args.push_back(closure_witness[static_cast<std::size_t>(idx[static_cast<std::size_t>(j)])]);
                elems[static_cast<std::size_t>(j)] = sub.elements[static_cast<std::size_t>(idx[static_cast<std::size_t>(j)])];
            }
            TermId lhs = arena.app(c.sig.symbols[op].name, args);
            TermId rhs = closure_witness[static_cast<std::size_t>(sub.parent_index[c.op_apply(op, elems)])];
            if (lhs != rhs) pres.relations.equations.push_back(AtomicFormula{lhs, rhs});
            int j = m - 1;
            for (; j >= 0; --j) {
                if (++idx[static_cast<std::size_t>(j)] < static_cast<int>(sub.elements.size())) break;
                idx[static_cast<std::size_t>(j)] = 0;
            }
            if (j < 0 || m == 0) break;
        }
    }
    // duplicate generators pin their variables
    for (int i = 0; i < n; ++i) {
        int cl = sub.parent_index[generators[i]];
        if (closure_witness[static_cast<std::size_t>(cl)] != arena.var(i))
            pres.relations.equations.push_back(
                AtomicFormula{arena.var(i), closure_witness[static_cast<std::size_t>(cl)]});
    }

    pres.witness.resize(static_cast<std::size_t>(c.size));
    for (int e = 0; e < c.size; ++e)
        pres.witness[static_cast<std::size_t>(e)] = closure_witness[static_cast<std::size_t>(sub.parent_index[e])];
    return pres;
}

Presentation table_presentation(const FiniteAlgebra& c) {
    std::vector<int> gens = minimal_generating_set(c);
    if (gens.empty()) gens.push_back(0); // presentations need at least one variable
    return table_presentation(c, gens);
}

std::optional<QuasiIdentity> witness_quasi_identity(const FiniteAlgebra& c,
                                                    const FiniteAlgebra& a,
                                                    const RunConfig& cfg) {
    SeparationResult sep = is_separated(c, a);
    if (sep.separated) return std::nullopt;
    Presentation pres = table_presentation(c);
    auto [c1, c2] = *sep.witness_pair;
    QuasiIdentity qi{minimal_subsystem(pres.relations, a, cfg),
                     AtomicFormula{pres.witness[static_cast<std::size_t>(c1)],
                                   pres.witness[static_cast<std::size_t>(c2)]}};
    // holds in A, fails in C at the generators
    if (!check_quasi_identity(a, qi.premises, qi.conclusion, cfg).holds)
        throw Error("refuting quasi-identity fails in A (internal error)");
    Point gp = generator_point(pres);
    for (const auto& eq : pres.relations.equations)
        if (eval(eq.lhs, c, gp) != eval(eq.rhs, c, gp))
            throw Error("presentation relations fail in C (internal error)");
    if (eval(qi.conclusion.lhs, c, gp) == eval(qi.conclusion.rhs, c, gp))
        throw Error("refuting quasi-identity holds in C (internal error)");
    return qi;
}

namespace {

Verdict separation_verdict(Claim claim, const FiniteAlgebra& c, const FiniteAlgebra& a,
                           const RunConfig& cfg) {
    Verdict v;
    v.claim = claim;
    SeparationResult sep = is_separated(c, a);
    v.answer = sep.separated;
    if (!sep.separated) {
        v.refutation = witness_quasi_identity(c, a, cfg);
        return v;
    }

    // separating family -> embedding into a direct power
    std::vector<Homomorphism> homs = enumerate_homomorphisms(c, a);
    std::vector<int> chosen;
    for (int i = 0; i < c.size; ++i)
        for (int j = i + 1; j < c.size; ++j) {
            for (std::size_t h = 0; h < homs.size(); ++h)
                if (homs[h].map[static_cast<std::size_t>(i)] != homs[h].map[static_cast<std::size_t>(j)]) {
                    if (std::find(chosen.begin(), chosen.end(), static_cast<int>(h)) ==
                        chosen.end())
                        chosen.push_back(static_cast<int>(h));
                    break;
                }
        }
    std::sort(chosen.begin(), chosen.end());
    const int d = static_cast<int>(chosen.size());
    PowerEmbedding pe;
    pe.power = d;
    pe.power_algebra = direct_power(a, d, cfg);
    std::vector<int> sizes(static_cast<std::size_t>(d), a.size);
    std::vector<int> map(static_cast<std::size_t>(c.size));
    std::vector<int> coords(static_cast<std::size_t>(d));
    for (int e = 0; e < c.size; ++e) {
        for (int h = 0; h < d; ++h)
            coords[static_cast<std::size_t>(h)] = homs[static_cast<std::size_t>(chosen[static_cast<std::size_t>(h)])].map[static_cast<std::size_t>(e)];
        map[static_cast<std::size_t>(e)] = product_encode(coords, sizes);
    }
    std::vector<char> seen(static_cast<std::size_t>(pe.power_algebra.size), 0);
    for (int v2 : map) {
        if (seen[static_cast<std::size_t>(v2)])
            throw Error("separating embedding is not injective (internal error)");
        seen[static_cast<std::size_t>(v2)] = 1;
    }
    pe.embedding = make_checked_homomorphism(c, pe.power_algebra, std::move(map));
    v.embedding = std::move(pe);

    // realization: C recovered as the coordinate algebra of V(S)
    Presentation pres = table_presentation(c);
    Realization r;
    r.system = pres.relations;
    r.set = solve(pres.relations, a, cfg);
    TermFunctionAlgebra t = coordinate_algebra(r.set, cfg);
    r.iso = canonical_realization_iso(t, c, pres);
    v.realization = std::move(r);
    append_theorem_notes(v, false);
    return v;
}

} // namespace

Verdict coordinate_algebra_criterion(const FiniteAlgebra& c, const FiniteAlgebra& a,
                                     const RunConfig& cfg) {
    return separation_verdict(Claim::IsCoordinateAlgebra, c, a, cfg);
}

Verdict qvar_membership(const FiniteAlgebra& c, const FiniteAlgebra& a, const RunConfig& cfg) {
    Verdict v = separation_verdict(Claim::InQvar, c, a, cfg);
    v.notes.push_back("for a finite algebra A, membership of finite C in Qvar(A) is "
                      "equivalent to separation of C by A");
    return v;
}

Verdict irreducible_criterion(const FiniteAlgebra& c, const FiniteAlgebra& a,
                              const RunConfig& cfg) {
    Verdict v;
    v.claim = Claim::IsIrreducibleCoordinateAlgebra;
    DiscriminationResult disc = is_discriminated(c, a);
    v.answer = disc.discriminated;
    if (!disc.discriminated) return v;
    v.discrimination_embedding = disc.embedding;

    Presentation pres = table_presentation(c);
    Realization r;
    r.system = pres.relations;
    r.set = solve(pres.relations, a, cfg);
    TermFunctionAlgebra t = coordinate_algebra(r.set, cfg);
    r.iso = canonical_realization_iso(t, c, pres);
    IrreducibilityResult irr = is_irreducible(r.set, cfg);
    if (!irr.irreducible)
        throw Error("realizing set of a discriminated algebra is reducible (internal error)");
    r.generic_point = irr.generic_point;
    v.realization = std::move(r);
    append_theorem_notes(v, true);
    return v;
}

SubdirectDecomposition subdirect_decomposition(const AlgebraicSet& y, const RunConfig& cfg) {
    SubdirectDecomposition out;
    out.components = decompose(y, cfg);
    TermFunctionAlgebra ty = coordinate_algebra(y, cfg);

    std::vector<FiniteAlgebra> factor_algebras;
    std::vector<std::vector<int>> comp_cols; // component point -> index in y.points
    for (const AlgebraicSet& comp : out.components) {
        out.factors.push_back(coordinate_algebra(comp, cfg));
        factor_algebras.push_back(out.factors.back().to_finite_algebra(cfg));
        std::vector<int> cols;
        for (const Point& p : comp.points) {
            int idx = y.index_of(p);
            if (idx < 0) throw Error("component point missing (internal error)");
            cols.push_back(idx);
        }
        comp_cols.push_back(std::move(cols));
    }
    out.product = direct_product(y.algebra->sig, factor_algebras, cfg);

    std::vector<int> sizes;
    for (const auto& f : factor_algebras) sizes.push_back(f.size);
    std::vector<int> map(static_cast<std::size_t>(ty.size()));
    std::vector<int> coords(out.factors.size());
    for (int e = 0; e < ty.size(); ++e) {
        for (std::size_t f = 0; f < out.factors.size(); ++f) {
            std::vector<int> restricted;
            restricted.reserve(comp_cols[f].size());
            for (int col : comp_cols[f])
                restricted.push_back(ty.elems[static_cast<std::size_t>(e)][static_cast<std::size_t>(col)]);
            int fe = out.factors[f].index_of_vector(restricted);
            if (fe < 0) throw Error("restriction escapes the factor (internal error)");
            coords[f] = fe;
        }
        map[static_cast<std::size_t>(e)] = product_encode(coords, sizes);
    }
    // injectivity (components cover Y) and subdirectness (restrictions onto
    // every factor are onto)
    std::vector<char> seen(static_cast<std::size_t>(out.product.size), 0);
    for (int v : map) {
        if (seen[static_cast<std::size_t>(v)])
            throw Error("subdirect embedding is not injective (internal error)");
        seen[static_cast<std::size_t>(v)] = 1;
    }
    for (std::size_t f = 0; f < out.factors.size(); ++f) {
        std::vector<char> hit(static_cast<std::size_t>(out.factors[f].size()), 0);
        for (int v : map)
            hit[static_cast<std::size_t>(product_coords(v, sizes)[f])] = 1;
        for (char h : hit)
            if (!h) throw Error("projection onto a factor is not surjective (internal error)");
    }
    out.embedding = make_checked_homomorphism(ty, out.product, std::move(map));
    return out;
}

Verdict empty_set_algebraic(const FiniteAlgebra& a, const RunConfig& cfg) {
    Verdict v;
    v.claim = Claim::EmptySetAlgebraic;
    std::optional<int> e = has_trivial_subalgebra(a);
    v.answer = !e.has_value();
    if (e) {
        v.trivial_element = *e;
        v.notes.push_back("every system has the diagonal root at the trivial subalgebra");
        return v;
    }
    bool inconclusive = false;
    v.inconsistent_system = inconsistent_unary_system(a, cfg, &inconclusive);
    v.witness_inconclusive = inconclusive || !v.inconsistent_system;
    return v;
}

Verdict trivial_in_ucl(const FiniteAlgebra& a, const RunConfig& cfg) {
    Verdict v;
    v.claim = Claim::TrivialInUcl;
    std::optional<int> e = has_trivial_subalgebra(a);
    v.answer = e.has_value();
    if (e) {
        v.trivial_element = *e;
        return v;
    }
    bool inconclusive = false;
    v.inconsistent_system = inconsistent_unary_system(a, cfg, &inconclusive);
    v.witness_inconclusive = inconclusive || !v.inconsistent_system;
    if (v.inconsistent_system) {
        if (!check_universal_disequation(a, *v.inconsistent_system, cfg))
            throw Error("disequation witness fails in A (internal error)");
        if (check_universal_disequation(trivial_algebra(a.sig), *v.inconsistent_system, cfg))
            throw Error("disequation witness holds in the trivial algebra (internal error)");
        v.notes.push_back("the universal disequation over the clause set holds in A and "
                          "fails in the trivial algebra");
    }
    return v;
}

} // namespace uag
