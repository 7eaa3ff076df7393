#include "uag/signature.hpp"

#include "uag/errors.hpp"

namespace uag {

Signature::Signature(std::vector<Symbol> syms) {
    for (auto& s : syms) add(std::move(s.name), s.arity);
}

int Signature::index_of(const std::string& name) const {
    for (int i = 0; i < size(); ++i)
        if (symbols[i].name == name) return i;
    return -1;
}

void Signature::add(std::string name, int arity) {
    if (arity < 0) throw PreconditionError("negative arity for symbol '" + name + "'");
    if (has(name)) throw PreconditionError("duplicate symbol '" + name + "'");
    symbols.push_back({std::move(name), arity});
}

VariableSet::VariableSet(std::vector<std::string> ns) : names(std::move(ns)) {
    if (names.empty()) throw PreconditionError("variable set must be non-empty");
    for (std::size_t i = 0; i < names.size(); ++i)
        for (std::size_t j = i + 1; j < names.size(); ++j)
            if (names[i] == names[j])
                throw PreconditionError("duplicate variable '" + names[i] + "'");
}

int VariableSet::index_of(const std::string& name) const {
    for (int i = 0; i < size(); ++i)
        if (names[i] == name) return i;
    return -1;
}

void VariableSet::check_disjoint_from(const Signature& sig) const {
    for (const auto& n : names)
        if (sig.has(n))
            throw PreconditionError("variable '" + n + "' shadows a signature symbol");
}

} // namespace uag
