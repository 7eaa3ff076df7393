#pragma once

#include <map>
#include <memory>
#include <string>

#include "uag/algebra.hpp"

namespace uag {

/// Named signatures, algebras and systems loaded from DSL files. Names are
/// unique per kind; `over` references are resolved at load time.
struct Workspace {
    struct NamedSystem {
        std::string signature_name;
        EquationSystem system;
    };

    std::map<std::string, Signature> signatures;
    std::map<std::string, std::shared_ptr<const FiniteAlgebra>> algebras;
    std::map<std::string, NamedSystem> systems;

    const Signature& signature(const std::string& name) const;
    std::shared_ptr<const FiniteAlgebra> algebra(const std::string& name) const;
    const NamedSystem& system(const std::string& name) const;
};

Workspace load_workspace_text(std::string_view text);
Workspace load_workspace_file(const std::string& path);
/// Later files may reference earlier definitions.
Workspace load_workspace_files(std::span<const std::string> paths);

} // namespace uag
