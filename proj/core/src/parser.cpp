#include "uag/parser.hpp"

#include "lexer.hpp"

namespace uag {

using detail::Lexer;
using detail::Tok;

namespace {

void parse_declaration(Lexer& lex, Signature& sig) {
    if (lex.accept(Tok::Ident, "op")) {
        std::string name = lex.expect_ident("symbol name");
        lex.expect(Tok::Punct, "/", "'/' before arity");
        if (lex.at(Tok::Punct, "-")) lex.fail("negative arity");
        long arity = lex.expect_int("arity");
        lex.expect(Tok::Punct, ";", "';' after declaration");
        if (sig.has(name)) throw ParseError("duplicate symbol '" + name + "'", lex.line(), lex.col());
        sig.add(name, static_cast<int>(arity));
    } else if (lex.accept(Tok::Ident, "const")) {
        std::string name = lex.expect_ident("constant name");
        lex.expect(Tok::Punct, ";", "';' after declaration");
        if (sig.has(name)) throw ParseError("duplicate symbol '" + name + "'", lex.line(), lex.col());
        sig.add(name, 0);
    } else {
        lex.fail("expected 'op' or 'const'");
    }
}

TermId parse_term_expr(Lexer& lex, const Signature& sig, const VariableSet& vars) {
    if (lex.kind() != Tok::Ident) lex.fail("expected a term");
    std::string name = lex.value();
    int tline = lex.line(), tcol = lex.col();
    lex.advance();
    if (!lex.at(Tok::Punct, "(")) {
        int v = vars.index_of(name);
        if (v >= 0) return TermArena::global().var(v);
        int s = sig.index_of(name);
        if (s < 0) throw ParseError("unknown identifier '" + name + "'", tline, tcol);
        if (sig.symbols[s].arity != 0)
            throw ParseError("symbol '" + name + "' expects " +
                                 std::to_string(sig.symbols[s].arity) + " arguments",
                             tline, tcol);
        return TermArena::global().constant(name);
    }
    lex.advance(); // '('
    int s = sig.index_of(name);
    if (s < 0) throw ParseError("unknown identifier '" + name + "'", tline, tcol);
    std::vector<TermId> args;
    if (!lex.at(Tok::Punct, ")")) {
        args.push_back(parse_term_expr(lex, sig, vars));
        while (lex.accept(Tok::Punct, ","))
            args.push_back(parse_term_expr(lex, sig, vars));
    }
    lex.expect(Tok::Punct, ")", "')'");
    if (static_cast<int>(args.size()) != sig.symbols[s].arity)
        throw ParseError("symbol '" + name + "' expects " +
                             std::to_string(sig.symbols[s].arity) + " arguments, got " +
                             std::to_string(args.size()),
                         tline, tcol);
    return TermArena::global().app(name, args);
}

AtomicFormula parse_equation_expr(Lexer& lex, const Signature& sig, const VariableSet& vars) {
    TermId lhs = parse_term_expr(lex, sig, vars);
    lex.expect(Tok::Punct, "=", "'='");
    TermId rhs = parse_term_expr(lex, sig, vars);
    return AtomicFormula{lhs, rhs};
}

} // namespace

Signature parse_signature(std::string_view text) {
    Lexer lex(text);
    Signature sig;
    while (!lex.at_end()) parse_declaration(lex, sig);
    return sig;
}

TermId parse_term(std::string_view text, const Signature& sig, const VariableSet& vars) {
    Lexer lex(text);
    TermId t = parse_term_expr(lex, sig, vars);
    if (!lex.at_end()) lex.fail("trailing input after term");
    return t;
}

AtomicFormula parse_equation(std::string_view text, const Signature& sig, const VariableSet& vars) {
    Lexer lex(text);
    AtomicFormula eq = parse_equation_expr(lex, sig, vars);
    lex.accept(Tok::Punct, ";");
    if (!lex.at_end()) lex.fail("trailing input after equation");
    return eq;
}

EquationSystem parse_system(std::string_view text, const Signature& sig, const VariableSet& vars) {
    vars.check_disjoint_from(sig);
    Lexer lex(text);
    EquationSystem sys{vars, {}};
    while (!lex.at_end()) {
        sys.equations.push_back(parse_equation_expr(lex, sig, vars));
        if (!lex.accept(Tok::Punct, ";") && !lex.at_end())
            lex.fail("expected ';' between equations");
    }
    return sys;
}

} // namespace uag
