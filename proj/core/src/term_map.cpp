#include "uag/term_map.hpp"

#include <algorithm>

#include "uag/topology.hpp"

namespace uag {

namespace {

std::string point_text(const Point& p) {
    std::string s = "(";
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(p[i]);
    }
    return s + ")";
}

// point images for component elements; -1 at the first point whose image
// escapes the target
std::vector<int> image_indices(const TermFunctionAlgebra& ty, std::span<const int> components,
                               const AlgebraicSet& z, int* bad_point) {
    std::vector<int> image(ty.base.points.size());
    Point q(static_cast<std::size_t>(z.dim));
    for (std::size_t i = 0; i < ty.base.points.size(); ++i) {
        for (std::size_t j = 0; j < components.size(); ++j)
            q[j] = ty.elems[static_cast<std::size_t>(components[j])][i];
        int idx = z.index_of(q);
        if (idx < 0) {
            if (bad_point) *bad_point = static_cast<int>(i);
            return {};
        }
        image[i] = idx;
    }
    if (bad_point) *bad_point = -1;
    return image;
}

} // namespace

std::vector<TermId> TermMap::component_terms() const {
    std::vector<TermId> out;
    for (int c : components) out.push_back(source_functions->witness[static_cast<std::size_t>(c)]);
    return out;
}

bool same_morphism(const TermMap& f, const TermMap& g) {
    return f.source.points == g.source.points && f.target.points == g.target.points &&
           f.components == g.components;
}

TermMap make_term_map(std::span<const TermId> terms, const AlgebraicSet& y,
                      const AlgebraicSet& z, const RunConfig& cfg) {
    if (static_cast<int>(terms.size()) != z.dim)
        throw PreconditionError("term tuple length must match the target dimension");
    TermMap out;
    out.source = y;
    out.target = z;
    if (y.points.empty()) return out; // the unique arrow out of the empty set
    auto ty = std::make_shared<TermFunctionAlgebra>(coordinate_algebra(y, cfg));
    for (TermId t : terms) out.components.push_back(ty->element_of_term(t));
    int bad = -1;
    out.point_image = image_indices(*ty, out.components, z, &bad);
    if (bad >= 0)
        throw PreconditionError("image of point " + point_text(y.points[static_cast<std::size_t>(bad)]) +
                                " lies outside the target set");
    out.source_functions = std::move(ty);
    return out;
}

TermMap identity_map(const AlgebraicSet& y, const RunConfig& cfg) {
    std::vector<TermId> coords;
    for (int i = 0; i < y.dim; ++i) coords.push_back(TermArena::global().var(i));
    return make_term_map(coords, y, y, cfg);
}

TermMap compose(const TermMap& g, const TermMap& f, const RunConfig& cfg) {
    if (f.target.points != g.source.points)
        throw PreconditionError("maps are not composable");
    TermMap out;
    out.source = f.source;
    out.target = g.target;
    if (f.empty_source()) return out;
    out.source_functions = f.source_functions;
    const TermFunctionAlgebra& ty = *f.source_functions;
    // component j of the composite as a function on Y: p -> g_j(f(p))
    for (int j = 0; j < g.target.dim; ++j) {
        std::vector<int> vec(ty.base.points.size());
        for (std::size_t i = 0; i < ty.base.points.size(); ++i) {
            int zi = f.point_image[i];
            vec[i] = g.source_functions->elems[static_cast<std::size_t>(g.components[static_cast<std::size_t>(j)])][static_cast<std::size_t>(zi)];
        }
        int e = ty.index_of_vector(vec);
        if (e < 0) throw Error("composite escapes T(Y) (internal error)");
        out.components.push_back(e);
    }
    out.point_image.resize(ty.base.points.size());
    for (std::size_t i = 0; i < ty.base.points.size(); ++i)
        out.point_image[i] = g.point_image[static_cast<std::size_t>(f.point_image[i])];
    (void)cfg;
    return out;
}

std::vector<TermMap> enumerate_term_maps(const AlgebraicSet& y, const AlgebraicSet& z,
                                         const RunConfig& cfg) {
    std::vector<TermMap> out;
    if (y.points.empty()) {
        TermMap arrow;
        arrow.source = y;
        arrow.target = z;
        out.push_back(std::move(arrow));
        return out;
    }
    if (z.points.empty()) return out;

    auto ty = std::make_shared<TermFunctionAlgebra>(coordinate_algebra(y, cfg));
    const int m = z.dim;
    std::int64_t total = 1;
    for (int j = 0; j < m; ++j) {
        total *= ty->size();
        if (total > cfg.max_enumeration)
            throw CapacityError("term-map enumeration exceeds max_enumeration");
    }
    std::vector<int> comp(static_cast<std::size_t>(m), 0);
    for (std::int64_t it = 0; it < total; ++it) {
        int bad = -1;
        std::vector<int> image = image_indices(*ty, comp, z, &bad);
        if (bad < 0) {
            TermMap f;
            f.source_functions = ty;
            f.source = y;
            f.target = z;
            f.components = comp;
            f.point_image = std::move(image);
            out.push_back(std::move(f));
        }
        for (int j = m - 1; j >= 0; --j) {
            if (++comp[static_cast<std::size_t>(j)] < ty->size()) break;
            comp[static_cast<std::size_t>(j)] = 0;
        }
    }
    return out;
}

AlgebraicSet preimage(const TermMap& phi, const AlgebraicSet& z, const RunConfig& cfg) {
    if (!z.system)
        throw PreconditionError("preimage needs a defining system on the target");
    if (phi.empty_source())
        throw PreconditionError("preimage needs a map defined on the affine space");
    std::vector<TermId> subst = phi.component_terms();
    EquationSystem s{phi.source.vars, {}};
    for (const auto& eq : z.system->equations)
        s.equations.push_back(AtomicFormula{substitute(eq.lhs, subst), substitute(eq.rhs, subst)});
    return solve(s, phi.source.algebra, cfg);
}

Homomorphism dual_functor(const TermMap& phi, const TermFunctionAlgebra& target_functions) {
    const TermFunctionAlgebra& tz = target_functions;
    if (tz.base.points != phi.target.points)
        throw PreconditionError("target functions do not match the map's target");
    if (phi.empty_source()) {
        // T(empty) is trivial: the unique homomorphism collapses everything
        return Homomorphism{std::vector<int>(static_cast<std::size_t>(tz.size()), 0)};
    }
    const TermFunctionAlgebra& ty = *phi.source_functions;
    std::vector<int> map(static_cast<std::size_t>(tz.size()));
    std::vector<int> vec(ty.base.points.size());
    for (int e = 0; e < tz.size(); ++e) {
        for (std::size_t i = 0; i < ty.base.points.size(); ++i)
            vec[i] = tz.elems[static_cast<std::size_t>(e)][static_cast<std::size_t>(phi.point_image[i])];
        int img = ty.index_of_vector(vec);
        if (img < 0) throw Error("composed function escapes T(Y) (internal error)");
        map[static_cast<std::size_t>(e)] = img;
    }
    if (!is_homomorphism(tz, ty, map))
        throw Error("dual map failed the homomorphism check (internal error)");
    return Homomorphism{std::move(map)};
}

std::optional<Homomorphism> find_embedding(const TermFunctionAlgebra& c,
                                           const TermFunctionAlgebra& a) {
    if (c.size() > a.size()) return std::nullopt;
    SourcePresentation pres{c.generator_elems(), c.derivations};
    HomSearchOptions opts;
    opts.injective = true;
    std::optional<Homomorphism> out;
    detail::hom_search(c, pres, a, opts, [&](const std::vector<int>& map) {
        out = Homomorphism{map};
        return false;
    });
    return out;
}

IsomorphismResult sets_isomorphic(const AlgebraicSet& y, const AlgebraicSet& z,
                                  const RunConfig& cfg) {
    if (!is_algebraic(y, cfg) || !is_algebraic(z, cfg))
        throw PreconditionError("isomorphism is defined between algebraic sets");

    IsomorphismResult res;
    std::vector<TermMap> fwd = enumerate_term_maps(y, z, cfg);
    std::vector<TermMap> bwd = enumerate_term_maps(z, y, cfg);
    for (const TermMap& f : fwd) {
        for (const TermMap& g : bwd) {
            bool id_y = true, id_z = true;
            if (!f.empty_source())
                for (std::size_t i = 0; i < f.point_image.size() && id_y; ++i)
                    id_y = g.point_image[static_cast<std::size_t>(f.point_image[i])] == static_cast<int>(i);
            if (!g.empty_source())
                for (std::size_t i = 0; i < g.point_image.size() && id_z; ++i)
                    id_z = f.point_image[static_cast<std::size_t>(g.point_image[i])] == static_cast<int>(i);
            if (id_y && id_z) {
                res.isomorphic = true;
                res.maps = std::make_pair(f, g);
                break;
            }
        }
        if (res.isomorphic) break;
    }

    // second route: Gamma(Y) and Gamma(Z) embed into each other
    TermFunctionAlgebra ty = coordinate_algebra(y, cfg);
    TermFunctionAlgebra tz = coordinate_algebra(z, cfg);
    bool both_embed = find_embedding(ty, tz).has_value() && find_embedding(tz, ty).has_value();
    if (both_embed != res.isomorphic)
        throw Error("isomorphism routes disagree (internal error)");
    return res;
}

} // namespace uag
