#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "helpers.hpp"

using namespace uag;

TEST_CASE("signature parsing") {
    Signature sig = parse_signature("op f/2; const e;");
    REQUIRE(sig.size() == 2);
    CHECK(sig.symbols[0].name == "f");
    CHECK(sig.symbols[0].arity == 2);
    CHECK(sig.symbols[1].name == "e");
    CHECK(sig.symbols[1].arity == 0);

    CHECK(parse_signature("").size() == 0);
    CHECK_THROWS_AS(parse_signature("op f/2; op f/1;"), ParseError);
    CHECK_THROWS_AS(parse_signature("op f/-1;"), ParseError);
    CHECK_THROWS_AS(parse_signature("op f"), ParseError);
}

TEST_CASE("term parsing and printing") {
    Signature sig = parse_signature("op f/2; const e;");
    VariableSet vars({"x", "y"});

    TermId t = parse_term("f(x,e)", sig, vars);
    CHECK(to_string(t, vars) == "f(x,e)");
    CHECK(parse_term("x", sig, vars) == TermArena::global().var(0));

    CHECK_THROWS_AS(parse_term("f(x)", sig, vars), ParseError);
    CHECK_THROWS_AS(parse_term("g(x)", sig, vars), ParseError);
    CHECK_THROWS_AS(parse_term("f(x,e) junk", sig, vars), ParseError);

    // hash-consing: structural equality is id equality
    CHECK(parse_term("f(x,e)", sig, vars) == t);
    CHECK(parse_term("f(e,x)", sig, vars) != t);
}

TEST_CASE("system parsing") {
    Signature sig = parse_signature("op f/2; const e;");
    VariableSet vars({"x", "y"});
    EquationSystem s = parse_system("f(x,y)=e; x=y;", sig, vars);
    REQUIRE(s.equations.size() == 2);
    CHECK(to_string(s) == "f(x,y) = e;\nx = y;\n");
    CHECK(parse_system("", sig, vars).equations.empty());
    CHECK_THROWS_AS(parse_system("x=", sig, vars), ParseError);
    CHECK_THROWS_AS(parse_system("x=y y=x", sig, vars), ParseError);

    EquationSystem dup = parse_system("x=y; x=y;", sig, vars);
    CHECK(dup.has_duplicates());
    CHECK_FALSE(s.has_duplicates());
}

TEST_CASE("variable sets") {
    CHECK_THROWS_AS(VariableSet({}), PreconditionError);
    CHECK_THROWS_AS(VariableSet({"x", "x"}), PreconditionError);
    Signature sig = parse_signature("const x;");
    VariableSet vars({"x"});
    CHECK_THROWS_AS(vars.check_disjoint_from(sig), PreconditionError);
}

TEST_CASE("substitution") {
    Signature sig = parse_signature("op f/2; op g/1; const e;");
    VariableSet vars({"x", "y"});
    TermArena& arena = TermArena::global();

    TermId fxy = parse_term("f(x,y)", sig, vars);
    std::vector<TermId> map{arena.constant("e"), arena.var(0)};
    CHECK(to_string(substitute(fxy, map), vars) == "f(e,x)");

    TermId x = arena.var(0);
    std::vector<TermId> id_map{arena.var(0), arena.var(1)};
    CHECK(substitute(x, id_map) == x);

    TermId fxx = parse_term("f(x,x)", sig, vars);
    std::vector<TermId> gy{parse_term("g(y)", sig, vars)};
    CHECK(to_string(substitute(fxx, gy), vars) == "f(g(y),g(y))");

    CHECK_THROWS_AS(substitute(fxy, gy), PreconditionError); // y not covered
}

TEST_CASE("substitution properties") {
    Signature sig = parse_signature("op f/2; op g/1; const e;");
    VariableSet vars({"x", "y"});
    TermArena& arena = TermArena::global();
    test::Rng rng(7);

    std::vector<TermId> identity{arena.var(0), arena.var(1)};
    for (int i = 0; i < 200; ++i) {
        TermId t = test::random_term(sig, 2, 3, rng);
        CHECK(substitute(t, identity) == t);

        // print -> parse round-trips onto the same canonical id
        CHECK(parse_term(to_string(t, vars), sig, vars) == t);

        // composition law: (t sigma) tau == t (tau after sigma)
        std::vector<TermId> sigma{test::random_term(sig, 2, 2, rng),
                                  test::random_term(sig, 2, 2, rng)};
        std::vector<TermId> tau{test::random_term(sig, 2, 2, rng),
                                test::random_term(sig, 2, 2, rng)};
        std::vector<TermId> both{substitute(sigma[0], tau), substitute(sigma[1], tau)};
        CHECK(substitute(substitute(t, sigma), tau) == substitute(t, both));
    }
}

TEST_CASE("extend with constants") {
    Signature sig = parse_signature("op add/2;");
    test::Rng rng(1);
    FiniteAlgebra z2 = test::random_algebra(sig, 2, rng);
    auto [ext, extended] = extend_with_constants(sig, z2);
    REQUIRE(ext.size() == 3);
    CHECK(ext.symbols[1].name == "c0");
    CHECK(ext.symbols[2].name == "c1");
    CHECK(extended.op_apply(1, {}) == 0);
    CHECK(extended.op_apply(2, {}) == 1);

    // empty signature, one-element algebra
    Signature empty;
    FiniteAlgebra one(empty, 1, {});
    auto [ext1, e1] = extend_with_constants(empty, one);
    CHECK(ext1.size() == 1);
    CHECK(e1.size == 1);

    // applying twice adds a second, disambiguated constant layer
    auto [ext2, e2] = extend_with_constants(ext, extended);
    CHECK(ext2.size() == 5);
    CHECK(ext2.symbols[3].name == "c0_1");
    CHECK(e2.op_apply(3, {}) == 0);
}

TEST_CASE("concurrent interning stays consistent") {
    Signature sig = parse_signature("op p/2;");
    std::vector<std::thread> threads;
    std::vector<TermId> results(8);
    for (int t = 0; t < 8; ++t)
        threads.emplace_back([t, &results] {
            TermArena& arena = TermArena::global();
            TermId x = arena.var(20 + (t % 4));
            TermId id = arena.app("p", std::vector<TermId>{x, x});
            results[static_cast<std::size_t>(t)] = id;
        });
    for (auto& th : threads) th.join();
    for (int t = 0; t < 8; ++t) CHECK(results[static_cast<std::size_t>(t)] == results[static_cast<std::size_t>(t % 4)]);
}
