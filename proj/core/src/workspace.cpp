#include "uag/workspace.hpp"

#include <fstream>
#include <sstream>

#include "lexer.hpp"
#include "uag/parser.hpp"

namespace uag {

using detail::Lexer;
using detail::Tok;

namespace {

// nested row-major table literal: arity levels deep, each level k wide
void parse_table_level(Lexer& lex, int k, int levels, std::vector<int>& out) {
    if (levels == 0) {
        long v = lex.expect_int("table entry");
        if (v < 0 || v >= k) lex.fail("table entry out of carrier");
        out.push_back(static_cast<int>(v));
        return;
    }
    lex.expect(Tok::Punct, "[", "'['");
    for (int i = 0; i < k; ++i) {
        if (i) lex.expect(Tok::Punct, ",", "','");
        parse_table_level(lex, k, levels - 1, out);
    }
    lex.expect(Tok::Punct, "]", "']'");
}

void parse_signature_block(Lexer& lex, Workspace& ws) {
    std::string name = lex.expect_ident("signature name");
    if (ws.signatures.count(name))
        lex.fail("duplicate signature '" + name + "'");
    lex.expect(Tok::Punct, "{", "'{'");
    Signature sig;
    while (!lex.accept(Tok::Punct, "}")) {
        if (lex.accept(Tok::Ident, "op")) {
            std::string sym = lex.expect_ident("symbol name");
            lex.expect(Tok::Punct, "/", "'/'");
            if (lex.at(Tok::Punct, "-")) lex.fail("negative arity");
            long arity = lex.expect_int("arity");
            lex.expect(Tok::Punct, ";", "';'");
            if (sig.has(sym)) lex.fail("duplicate symbol '" + sym + "'");
            sig.add(sym, static_cast<int>(arity));
        } else if (lex.accept(Tok::Ident, "const")) {
            std::string sym = lex.expect_ident("constant name");
            lex.expect(Tok::Punct, ";", "';'");
            if (sig.has(sym)) lex.fail("duplicate symbol '" + sym + "'");
            sig.add(sym, 0);
        } else {
            lex.fail("expected 'op', 'const' or '}'");
        }
    }
    ws.signatures.emplace(std::move(name), std::move(sig));
}

void parse_algebra_block(Lexer& lex, Workspace& ws) {
    std::string name = lex.expect_ident("algebra name");
    if (ws.algebras.count(name)) lex.fail("duplicate algebra '" + name + "'");
    lex.expect(Tok::Ident, "over", "'over'");
    std::string signame = lex.expect_ident("signature name");
    auto sit = ws.signatures.find(signame);
    if (sit == ws.signatures.end())
        throw NameError("unknown signature '" + signame + "' in algebra '" + name + "'");
    const Signature& sig = sit->second;

    lex.expect(Tok::Punct, "{", "'{'");
    lex.expect(Tok::Ident, "carrier", "'carrier'");
    long k = lex.expect_int("carrier size");
    if (k < 1) lex.fail("carrier must have at least one element");
    lex.expect(Tok::Punct, ";", "';'");

    std::vector<std::vector<int>> tables(static_cast<std::size_t>(sig.size()));
    std::vector<char> assigned(static_cast<std::size_t>(sig.size()), 0);
    while (!lex.accept(Tok::Punct, "}")) {
        std::string sym = lex.expect_ident("symbol name");
        int idx = sig.index_of(sym);
        if (idx < 0) lex.fail("symbol '" + sym + "' is not in signature '" + signame + "'");
        if (assigned[static_cast<std::size_t>(idx)]) lex.fail("symbol '" + sym + "' assigned twice");
        lex.expect(Tok::Punct, "=", "'='");
        std::vector<int> table;
        parse_table_level(lex, static_cast<int>(k), sig.symbols[static_cast<std::size_t>(idx)].arity, table);
        lex.expect(Tok::Punct, ";", "';'");
        tables[static_cast<std::size_t>(idx)] = std::move(table);
        assigned[static_cast<std::size_t>(idx)] = 1;
    }
    for (int i = 0; i < sig.size(); ++i)
        if (!assigned[static_cast<std::size_t>(i)])
            lex.fail("algebra '" + name + "' lacks a table for '" + sig.symbols[static_cast<std::size_t>(i)].name + "'");
    ws.algebras.emplace(std::move(name), std::make_shared<FiniteAlgebra>(
                                             sig, static_cast<int>(k), std::move(tables)));
}

void parse_system_block(Lexer& lex, Workspace& ws) {
    std::string name = lex.expect_ident("system name");
    if (ws.systems.count(name)) lex.fail("duplicate system '" + name + "'");
    lex.expect(Tok::Ident, "over", "'over'");
    std::string signame = lex.expect_ident("signature name");
    auto sit = ws.signatures.find(signame);
    if (sit == ws.signatures.end())
        throw NameError("unknown signature '" + signame + "' in system '" + name + "'");
    const Signature& sig = sit->second;

    lex.expect(Tok::Ident, "vars", "'vars'");
    std::vector<std::string> names;
    names.push_back(lex.expect_ident("variable name"));
    while (lex.accept(Tok::Punct, ",")) names.push_back(lex.expect_ident("variable name"));
    VariableSet vars(std::move(names));
    vars.check_disjoint_from(sig);

    lex.expect(Tok::Punct, "{", "'{'");
    std::string body;
    // capture the raw block and reuse the fragment parser
    int depth = 1;
    while (depth > 0) {
        if (lex.at_end()) lex.fail("unterminated system block");
        if (lex.at(Tok::Punct, "{")) ++depth;
        if (lex.at(Tok::Punct, "}")) {
            --depth;
            if (depth == 0) {
                lex.advance();
                break;
            }
        }
        body += lex.value();
        body += ' ';
        lex.advance();
    }
    EquationSystem sys = parse_system(body, sig, vars);
    ws.systems.emplace(std::move(name), Workspace::NamedSystem{signame, std::move(sys)});
}

} // namespace

const Signature& Workspace::signature(const std::string& name) const {
    auto it = signatures.find(name);
    if (it == signatures.end()) throw NameError("unknown signature '" + name + "'");
    return it->second;
}

std::shared_ptr<const FiniteAlgebra> Workspace::algebra(const std::string& name) const {
    auto it = algebras.find(name);
    if (it == algebras.end()) throw NameError("unknown algebra '" + name + "'");
    return it->second;
}

const Workspace::NamedSystem& Workspace::system(const std::string& name) const {
    auto it = systems.find(name);
    if (it == systems.end()) throw NameError("unknown system '" + name + "'");
    return it->second;
}

namespace {

void load_into(Workspace& ws, std::string_view text) {
    Lexer lex(text);
    while (!lex.at_end()) {
        if (lex.accept(Tok::Ident, "signature")) {
            parse_signature_block(lex, ws);
        } else if (lex.accept(Tok::Ident, "algebra")) {
            parse_algebra_block(lex, ws);
        } else if (lex.accept(Tok::Ident, "system")) {
            parse_system_block(lex, ws);
        } else {
            lex.fail("expected 'signature', 'algebra' or 'system'");
        }
    }
}

} // namespace

Workspace load_workspace_text(std::string_view text) {
    Workspace ws;
    load_into(ws, text);
    return ws;
}

Workspace load_workspace_file(const std::string& path) {
    std::string paths[1] = {path};
    return load_workspace_files(paths);
}

Workspace load_workspace_files(std::span<const std::string> paths) {
    Workspace ws;
    for (const std::string& path : paths) {
        std::ifstream in(path);
        if (!in) throw Error("cannot open '" + path + "'");
        std::ostringstream buf;
        buf << in.rdbuf();
        load_into(ws, buf.str());
    }
    return ws;
}

} // namespace uag
