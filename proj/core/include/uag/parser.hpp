#pragma once

#include <string_view>

#include "uag/term.hpp"

namespace uag {

/// Parses a bare declaration list: `op f/2; const e;`. Declaration order is
/// kept. Throws ParseError on bad syntax, duplicate names, negative arity.
Signature parse_signature(std::string_view text);

/// Parses `IDENT` or `IDENT(term,...)`. Every identifier must resolve to a
/// variable or to a symbol used with its declared arity.
TermId parse_term(std::string_view text, const Signature& sig, const VariableSet& vars);

/// Parses a single `t = s`.
AtomicFormula parse_equation(std::string_view text, const Signature& sig, const VariableSet& vars);

/// Parses `t = s; ...` into a system over vars. Empty text gives the empty
/// system.
EquationSystem parse_system(std::string_view text, const Signature& sig, const VariableSet& vars);

} // namespace uag
