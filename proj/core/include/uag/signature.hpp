#pragma once

#include <string>
#include <vector>

namespace uag {

/// A functional language: function symbols with arities, in declaration
/// order. Arity-0 symbols are constants. Names are unique.
struct Signature {
    struct Symbol {
        std::string name;
        int arity = 0;
        bool operator==(const Symbol&) const = default;
    };

    std::vector<Symbol> symbols;

    Signature() = default;
    explicit Signature(std::vector<Symbol> syms);

    int size() const { return static_cast<int>(symbols.size()); }
    /// Index of the named symbol, or -1.
    int index_of(const std::string& name) const;
    bool has(const std::string& name) const { return index_of(name) >= 0; }

    /// Appends a symbol; duplicate names rejected.
    void add(std::string name, int arity);

    bool operator==(const Signature&) const = default;
};

/// An ordered, non-empty set of variable names. Declaration order fixes the
/// coordinate indices of affine points: name i maps to coordinate i.
struct VariableSet {
    std::vector<std::string> names;

    VariableSet() = default;
    explicit VariableSet(std::vector<std::string> ns);

    int size() const { return static_cast<int>(names.size()); }
    int index_of(const std::string& name) const;

    /// Variable names must not shadow signature symbols.
    void check_disjoint_from(const Signature& sig) const;

    bool operator==(const VariableSet&) const = default;
};

} // namespace uag
