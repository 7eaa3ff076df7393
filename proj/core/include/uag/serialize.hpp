#pragma once

#include <string>

#include "uag/term_map.hpp"
#include "uag/unification.hpp"

namespace uag {

/// Renderers for CLI results. JSON output is byte-deterministic: fixed key
/// order, two-space indent, trailing newline. Text output is a stable
/// human-readable form of the same data.

std::string render_solve(const AlgebraicSet& y, bool json);
std::string render_gamma(const AlgebraicSet& y, const TermFunctionAlgebra& t, bool json);
std::string render_components(const AlgebraicSet& y, const std::vector<AlgebraicSet>& comps,
                              bool json);
std::string render_reduce(const EquationSystem& reduced, const EquationSystem& original,
                          bool json);
std::string render_membership(const std::string& kind, const AtomicFormula& eq,
                              const VariableSet& vars, bool member, bool json);
std::string render_verdict(const Verdict& v, bool json);
std::string render_duality(const std::vector<TermMap>& maps,
                           const std::vector<Homomorphism>& homs, bool bijection, bool json);
std::string render_isomorphic(const IsomorphismResult& res, bool json);

/// Round-trip helpers: read back points/equations from emitted JSON.
std::vector<Point> points_from_json(const std::string& text, const std::string& key = "points");
std::string string_from_json(const std::string& text, const std::string& key);
bool bool_from_json(const std::string& text, const std::string& key);

} // namespace uag
