#pragma once

#include <concepts>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "uag/algebra.hpp"
#include "uag/errors.hpp"

namespace uag {

inline int carrier_size(const FiniteAlgebra& a) { return a.size; }

/// Anything with an indexed carrier and per-symbol operations in signature
/// order. FiniteAlgebra and TermFunctionAlgebra both qualify.
template <class A>
concept AlgebraLike = requires(const A& a, int op, std::span<const int> args) {
    { carrier_size(a) } -> std::convertible_to<int>;
    { a.num_ops() } -> std::convertible_to<int>;
    { a.op_arity(op) } -> std::convertible_to<int>;
    { a.op_apply(op, args) } -> std::convertible_to<int>;
};

/// A carrier map; validity is checked against the two algebras it connects.
struct Homomorphism {
    std::vector<int> map; // source element -> target element
    bool operator==(const Homomorphism&) const = default;
};

template <AlgebraLike Src, AlgebraLike Tgt>
bool is_homomorphism(const Src& c, const Tgt& a, std::span<const int> map) {
    if (static_cast<int>(map.size()) != carrier_size(c)) return false;
    for (int v : map)
        if (v < 0 || v >= carrier_size(a)) return false;
    for (int op = 0; op < c.num_ops(); ++op) {
        int m = c.op_arity(op);
        std::vector<int> idx(m, 0), imgs(m);
        while (true) {
            for (int j = 0; j < m; ++j) imgs[j] = map[idx[j]];
            if (map[c.op_apply(op, idx)] != a.op_apply(op, imgs)) return false;
            int j = m - 1;
            for (; j >= 0; --j) {
                if (++idx[j] < carrier_size(c)) break;
                idx[j] = 0;
            }
            if (j < 0 || m == 0) break;
        }
    }
    return true;
}

template <AlgebraLike Src, AlgebraLike Tgt>
Homomorphism make_checked_homomorphism(const Src& c, const Tgt& a, std::vector<int> map) {
    if (!is_homomorphism(c, a, map))
        throw PreconditionError("map is not a homomorphism");
    return Homomorphism{std::move(map)};
}

/// A BFS description of how every source element arises from the seeds:
/// derivations[i] mentions only indices < i.
struct SourcePresentation {
    std::vector<int> generators;         // distinct element ids, search order
    std::vector<Derivation> derivations; // one per element
};

struct HomSearchOptions {
    bool injective = false;
    std::vector<std::pair<int, int>> pinned; // (source element, forced image)
};

namespace detail {

/// Backtracks over generator images in ascending order, forcing the rest of
/// the map through the derivations, and emits every verified homomorphism in
/// lexicographic generator-image order. cb returns false to stop.
template <AlgebraLike Src, AlgebraLike Tgt, class Callback>
void hom_search(const Src& c, const SourcePresentation& pres, const Tgt& a,
                const HomSearchOptions& opts, Callback&& cb) {
    const int m = carrier_size(c);
    const int ka = carrier_size(a);
    std::vector<int> gen_of(m, -1);
    for (std::size_t g = 0; g < pres.generators.size(); ++g) gen_of[pres.generators[g]] = static_cast<int>(g);

    std::vector<int> image(m, -1);
    // forces images along derivations; returns false on a conflict with
    // pinned values or injectivity
    auto propagate = [&](std::span<const int> gen_images) -> bool {
        std::vector<int> used; // for injectivity
        std::vector<int> args;
        for (int e = 0; e < m; ++e) {
            const Derivation& d = pres.derivations[e];
            int img = -1;
            if (d.kind == Derivation::Kind::Seed) {
                img = gen_of[e] >= 0 ? gen_images[gen_of[e]] : -1;
            } else {
                bool known = true;
                args.clear();
                for (int arg : d.args) {
                    if (image[arg] < 0) {
                        known = false;
                        break;
                    }
                    args.push_back(image[arg]);
                }
                if (known) img = a.op_apply(d.op, args);
            }
            image[e] = img;
        }
        for (const auto& [elem, forced] : opts.pinned)
            if (image[elem] >= 0 && image[elem] != forced) return false;
        if (opts.injective) {
            used.assign(ka, -1);
            for (int e = 0; e < m; ++e) {
                if (image[e] < 0) continue;
                if (used[image[e]] >= 0) return false;
                used[image[e]] = e;
            }
        }
        return true;
    };

    // Verifies op-compatibility over every tuple of assigned elements.
    // Early-exits at the first violated constraint; with a full assignment
    // this is the complete homomorphism check.
    auto consistent = [&]() -> bool {
        std::vector<int> idx, imgs;
        for (int op = 0; op < c.num_ops(); ++op) {
            int ar = c.op_arity(op);
            idx.assign(ar, 0);
            imgs.assign(ar, 0);
            while (true) {
                bool known = true;
                for (int j = 0; j < ar; ++j) {
                    imgs[j] = image[idx[j]];
                    if (imgs[j] < 0) known = false;
                }
                if (known) {
                    int r = c.op_apply(op, idx);
                    if (image[r] >= 0 && image[r] != a.op_apply(op, imgs)) return false;
                }
                int j = ar - 1;
                for (; j >= 0; --j) {
                    if (++idx[j] < m) break;
                    idx[j] = 0;
                }
                if (j < 0 || ar == 0) break;
            }
        }
        return true;
    };

    // inner-node consistency checks pay off only when sweeps are cheap
    std::int64_t sweep_cost = 1;
    for (int op = 0; op < c.num_ops(); ++op) {
        std::int64_t t = 1;
        for (int j = 0; j < c.op_arity(op) && t <= 1'000'000; ++j) t *= m;
        sweep_cost = std::max(sweep_cost, t);
    }
    const bool check_inner = sweep_cost <= 100'000;

    const int g = static_cast<int>(pres.generators.size());
    std::vector<int> gen_images(g, 0);
    bool stop = false;
    auto rec = [&](auto&& self, int depth) -> void {
        if (stop) return;
        if (depth == g) {
            if (!propagate(gen_images)) return;
            for (int e = 0; e < m; ++e)
                if (image[e] < 0) throw PreconditionError("generators do not generate the source");
            if (!consistent()) return;
            std::vector<int> out = image;
            for (const auto& [elem, forced] : opts.pinned)
                if (out[elem] != forced) return;
            if (!cb(out)) stop = true;
            return;
        }
        for (int v = 0; v < ka && !stop; ++v) {
            gen_images[depth] = v;
            bool viable = true;
            if (check_inner) {
                std::vector<int> partial(gen_images.begin(), gen_images.begin() + depth + 1);
                partial.resize(g, -1);
                // temporarily propagate with unknowns beyond this depth
                std::vector<int> save = image;
                viable = propagate(partial) && consistent();
                image = std::move(save);
            }
            if (viable) self(self, depth + 1);
        }
    };
    rec(rec, 0);
}

} // namespace detail

/// Every homomorphism c -> a exactly once, in lexicographic generator-image
/// order. Generators default to a minimal generating set of c.
std::vector<Homomorphism> enumerate_homomorphisms(const FiniteAlgebra& c, const FiniteAlgebra& a,
                                                  const HomSearchOptions& opts = {});
std::vector<Homomorphism> enumerate_homomorphisms(const FiniteAlgebra& c, std::span<const int> gens,
                                                  const FiniteAlgebra& a,
                                                  const HomSearchOptions& opts = {});

struct SeparationResult {
    bool separated = false;
    std::optional<std::pair<int, int>> witness_pair; // first unseparated pair
};

/// Whether every pair of distinct elements of c is split by some c -> a.
SeparationResult is_separated(const FiniteAlgebra& c, const FiniteAlgebra& a);

struct DiscriminationResult {
    bool discriminated = false;
    std::optional<Homomorphism> embedding;
};

/// For finite c, discrimination collapses to the existence of an embedding
/// (take the whole carrier as the finite witness set).
DiscriminationResult is_discriminated(const FiniteAlgebra& c, const FiniteAlgebra& a);

} // namespace uag
