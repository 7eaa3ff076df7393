#include "uag/hom.hpp"

#include <algorithm>

namespace uag {

std::vector<Homomorphism> enumerate_homomorphisms(const FiniteAlgebra& c, std::span<const int> gens,
                                                  const FiniteAlgebra& a,
                                                  const HomSearchOptions& opts) {
    GeneratedSubalgebra sub = subalgebra_generated(c, gens);
    if (static_cast<int>(sub.elements.size()) != c.size)
        throw PreconditionError("given elements do not generate the algebra");
    SourcePresentation pres;
    pres.generators = sub.generators;
    pres.derivations = sub.derivations;

    std::vector<Homomorphism> out;
    detail::hom_search(sub.algebra, pres, a, opts, [&](const std::vector<int>& closure_map) {
        std::vector<int> map(static_cast<std::size_t>(c.size));
        for (int e = 0; e < c.size; ++e) map[e] = closure_map[sub.parent_index[e]];
        out.push_back(Homomorphism{std::move(map)});
        return true;
    });
    return out;
}

std::vector<Homomorphism> enumerate_homomorphisms(const FiniteAlgebra& c, const FiniteAlgebra& a,
                                                  const HomSearchOptions& opts) {
    std::vector<int> gens = minimal_generating_set(c);
    return enumerate_homomorphisms(c, gens, a, opts);
}

SeparationResult is_separated(const FiniteAlgebra& c, const FiniteAlgebra& a) {
    std::vector<std::pair<int, int>> pending;
    for (int i = 0; i < c.size; ++i)
        for (int j = i + 1; j < c.size; ++j) pending.emplace_back(i, j);
    if (pending.empty()) return {true, std::nullopt};

    std::vector<int> gens = minimal_generating_set(c);
    GeneratedSubalgebra sub = subalgebra_generated(c, gens);
    SourcePresentation pres{sub.generators, sub.derivations};
    detail::hom_search(sub.algebra, pres, a, HomSearchOptions{}, [&](const std::vector<int>& map) {
        std::erase_if(pending, [&](const std::pair<int, int>& pr) {
            return map[sub.parent_index[pr.first]] != map[sub.parent_index[pr.second]];
        });
        return !pending.empty();
    });
    if (pending.empty()) return {true, std::nullopt};
    return {false, pending.front()};
}

DiscriminationResult is_discriminated(const FiniteAlgebra& c, const FiniteAlgebra& a) {
    if (c.size > a.size) return {false, std::nullopt}; // no injection can exist
    std::vector<int> gens = minimal_generating_set(c);
    GeneratedSubalgebra sub = subalgebra_generated(c, gens);
    SourcePresentation pres{sub.generators, sub.derivations};
    HomSearchOptions opts;
    opts.injective = true;
    DiscriminationResult out;
    detail::hom_search(sub.algebra, pres, a, opts, [&](const std::vector<int>& map) {
        std::vector<int> carrier_map(static_cast<std::size_t>(c.size));
        for (int e = 0; e < c.size; ++e) carrier_map[e] = map[sub.parent_index[e]];
        out.discriminated = true;
        out.embedding = Homomorphism{std::move(carrier_map)};
        return false; // first embedding suffices
    });
    return out;
}

} // namespace uag
