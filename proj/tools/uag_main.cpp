#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "uag/congruence.hpp"
#include "uag/parser.hpp"
#include "uag/serialize.hpp"
#include "uag/workspace.hpp"

namespace {

struct GlobalOptions {
    std::string config_path;
    std::string format = "json";
    int threads = 0;
    std::int64_t max_points = 0;
    std::int64_t max_closure = 0;
    int witness_depth = -1;
    std::string out_file;
};

uag::RunConfig resolve_config(const GlobalOptions& g) {
    uag::RunConfig cfg;
    if (!g.config_path.empty()) cfg = uag::load_config(g.config_path);
    if (g.threads > 0) cfg.threads = g.threads;
    if (g.max_points > 0) cfg.max_enumeration = g.max_points;
    if (g.max_closure > 0) cfg.max_closure = g.max_closure;
    if (g.witness_depth >= 0) cfg.witness_depth = g.witness_depth;
    cfg.validate();
    return cfg;
}

void emit(const GlobalOptions& g, const std::string& text) {
    if (g.out_file.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(g.out_file, std::ios::binary);
    if (!out) throw uag::Error("cannot write '" + g.out_file + "'");
    out << text;
}

struct SetArgs {
    std::string file;
    std::string system;
    std::string algebra;
};

uag::AlgebraicSet solve_named(const SetArgs& args, const uag::Workspace& ws,
                              const uag::RunConfig& cfg) {
    const auto& named = ws.system(args.system);
    auto algebra = ws.algebra(args.algebra);
    if (!(algebra->sig == ws.signature(named.signature_name)))
        throw uag::PreconditionError("system '" + args.system + "' and algebra '" +
                                     args.algebra + "' use different signatures");
    return uag::solve(named.system, algebra, cfg);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"uag: equations, algebraic sets and coordinate algebras over finite algebras"};
    app.require_subcommand(1);

    GlobalOptions g;
    app.add_option("--config", g.config_path, "JSON run configuration file");
    app.add_option("--format", g.format, "output format: json or text")
        ->check(CLI::IsMember({"json", "text"}));
    app.add_option("--threads", g.threads, "cap on internal parallelism");
    app.add_option("--max-points", g.max_points, "largest admissible point sweep");
    app.add_option("--max-closure", g.max_closure, "largest admissible closure size");
    app.add_option("--witness-depth", g.witness_depth, "term depth bound for witnesses");
    app.add_option("-o,--output", g.out_file, "write the result to a file instead of stdout");

    SetArgs sa;
    std::string equation_text;
    std::string claim;
    std::string target_name;
    std::string left_name, right_name;

    auto add_set_args = [&](CLI::App* cmd, bool with_algebra = true) {
        cmd->add_option("file", sa.file, "DSL input file")->required();
        cmd->add_option("--system", sa.system, "system name")->required();
        if (with_algebra) cmd->add_option("--algebra", sa.algebra, "algebra name")->required();
    };

    CLI::App* cmd_solve = app.add_subcommand("solve", "compute V(S) by exact sweep");
    add_set_args(cmd_solve);

    CLI::App* cmd_gamma = app.add_subcommand("gamma", "coordinate algebra of V(S)");
    add_set_args(cmd_gamma);

    CLI::App* cmd_decompose =
        app.add_subcommand("decompose", "irreducible components of V(S)");
    add_set_args(cmd_decompose);

    CLI::App* cmd_reduce =
        app.add_subcommand("reduce", "irredundant subsystem with the same solutions");
    add_set_args(cmd_reduce);

    CLI::App* cmd_radical = app.add_subcommand("radical-member", "is t = s in Rad(V(S))?");
    add_set_args(cmd_radical);
    cmd_radical->add_option("--equation", equation_text, "equation 't = s'")->required();

    CLI::App* cmd_closure =
        app.add_subcommand("closure-member", "is t = s in the congruent closure [S]?");
    add_set_args(cmd_closure, false);
    cmd_closure->add_option("--equation", equation_text, "equation 't = s'")->required();

    CLI::App* cmd_check = app.add_subcommand("check", "decision procedures with evidence");
    cmd_check
        ->add_option("claim", claim,
                     "one of: coord, irr-coord, qvar, empty-set, trivial-ucl")
        ->required()
        ->check(CLI::IsMember({"coord", "irr-coord", "qvar", "empty-set", "trivial-ucl"}));
    cmd_check->add_option("file", sa.file, "DSL input file")->required();
    cmd_check->add_option("--algebra", sa.algebra, "the algebra under test")->required();
    cmd_check->add_option("--target", target_name, "the base algebra A (coord/irr-coord/qvar)");

    CLI::App* cmd_duality =
        app.add_subcommand("duality", "term maps Y -> Z against homomorphisms T(Z) -> T(Y)");
    cmd_duality->add_option("file", sa.file, "DSL input file")->required();
    cmd_duality->add_option("--source", left_name, "system for Y")->required();
    cmd_duality->add_option("--target", right_name, "system for Z")->required();
    cmd_duality->add_option("--algebra", sa.algebra, "algebra name")->required();

    CLI::App* cmd_iso = app.add_subcommand("isomorphic", "are V(S1) and V(S2) isomorphic?");
    cmd_iso->add_option("file", sa.file, "DSL input file")->required();
    cmd_iso->add_option("--left", left_name, "system for the left set")->required();
    cmd_iso->add_option("--right", right_name, "system for the right set")->required();
    cmd_iso->add_option("--algebra", sa.algebra, "algebra name")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        uag::RunConfig cfg = resolve_config(g);
        const bool json = g.format == "json";

        if (app.got_subcommand(cmd_solve)) {
            uag::Workspace ws = uag::load_workspace_file(sa.file);
            emit(g, uag::render_solve(solve_named(sa, ws, cfg), json));
        } else if (app.got_subcommand(cmd_gamma)) {
            uag::Workspace ws = uag::load_workspace_file(sa.file);
            uag::AlgebraicSet y = solve_named(sa, ws, cfg);
            emit(g, uag::render_gamma(y, uag::coordinate_algebra(y, cfg), json));
        } else if (app.got_subcommand(cmd_decompose)) {
            uag::Workspace ws = uag::load_workspace_file(sa.file);
            uag::AlgebraicSet y = solve_named(sa, ws, cfg);
            emit(g, uag::render_components(y, uag::decompose(y, cfg), json));
        } else if (app.got_subcommand(cmd_reduce)) {
            uag::Workspace ws = uag::load_workspace_file(sa.file);
            const auto& named = ws.system(sa.system);
            auto algebra = ws.algebra(sa.algebra);
            uag::EquationSystem reduced = uag::minimal_subsystem(named.system, *algebra, cfg);
            emit(g, uag::render_reduce(reduced, named.system, json));
        } else if (app.got_subcommand(cmd_radical)) {
            uag::Workspace ws = uag::load_workspace_file(sa.file);
            const auto& named = ws.system(sa.system);
            uag::AlgebraicSet y = solve_named(sa, ws, cfg);
            uag::AtomicFormula eq = uag::parse_equation(
                equation_text, ws.signature(named.signature_name), named.system.vars);
            emit(g, uag::render_membership("radical_member", eq, named.system.vars,
                                           uag::in_radical(eq, y), json));
        } else if (app.got_subcommand(cmd_closure)) {
            uag::Workspace ws = uag::load_workspace_file(sa.file);
            const auto& named = ws.system(sa.system);
            uag::AtomicFormula eq = uag::parse_equation(
                equation_text, ws.signature(named.signature_name), named.system.vars);
            emit(g, uag::render_membership("closure_member", eq, named.system.vars,
                                           uag::in_closure(eq.lhs, eq.rhs, named.system), json));
        } else if (app.got_subcommand(cmd_check)) {
            uag::Workspace ws = uag::load_workspace_file(sa.file);
            auto c = ws.algebra(sa.algebra);
            uag::Verdict v;
            if (claim == "empty-set") {
                v = uag::empty_set_algebraic(*c, cfg);
            } else if (claim == "trivial-ucl") {
                v = uag::trivial_in_ucl(*c, cfg);
            } else {
                if (target_name.empty())
                    throw uag::PreconditionError("claim '" + claim + "' needs --target");
                auto a = ws.algebra(target_name);
                if (!(a->sig == c->sig))
                    throw uag::PreconditionError("algebras use different signatures");
                if (claim == "coord")
                    v = uag::coordinate_algebra_criterion(*c, *a, cfg);
                else if (claim == "qvar")
                    v = uag::qvar_membership(*c, *a, cfg);
                else
                    v = uag::irreducible_criterion(*c, *a, cfg);
            }
            emit(g, uag::render_verdict(v, json));
        } else if (app.got_subcommand(cmd_duality)) {
            uag::Workspace ws = uag::load_workspace_file(sa.file);
            auto algebra = ws.algebra(sa.algebra);
            const auto& sy = ws.system(left_name);
            const auto& sz = ws.system(right_name);
            uag::AlgebraicSet y = uag::solve(sy.system, algebra, cfg);
            uag::AlgebraicSet z = uag::solve(sz.system, algebra, cfg);
            std::vector<uag::TermMap> maps = uag::enumerate_term_maps(y, z, cfg);
            uag::TermFunctionAlgebra tz = uag::coordinate_algebra(z, cfg);
            uag::TermFunctionAlgebra ty = uag::coordinate_algebra(y, cfg);
            std::vector<uag::Homomorphism> duals;
            for (const auto& m : maps) duals.push_back(uag::dual_functor(m, tz));
            std::vector<uag::Homomorphism> homs =
                uag::enumerate_homomorphisms_generic(tz, ty);
            bool bijection = homs.size() == duals.size();
            for (std::size_t i = 0; i < duals.size() && bijection; ++i)
                for (std::size_t j = i + 1; j < duals.size() && bijection; ++j)
                    bijection = !(duals[i] == duals[j]);
            emit(g, uag::render_duality(maps, duals, bijection, json));
        } else if (app.got_subcommand(cmd_iso)) {
            uag::Workspace ws = uag::load_workspace_file(sa.file);
            auto algebra = ws.algebra(sa.algebra);
            uag::AlgebraicSet y = uag::solve(ws.system(left_name).system, algebra, cfg);
            uag::AlgebraicSet z = uag::solve(ws.system(right_name).system, algebra, cfg);
            emit(g, uag::render_isomorphic(uag::sets_isomorphic(y, z, cfg), json));
        }
        return 0;
    } catch (const uag::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const uag::CapacityError& e) {
        std::cerr << "capacity error: " << e.what() << "\n";
        return 3;
    } catch (const uag::NameError& e) {
        std::cerr << "name error: " << e.what() << "\n";
        return 4;
    } catch (const uag::PreconditionError& e) {
        std::cerr << "precondition violated: " << e.what() << "\n";
        return 5;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
