#include <doctest.h>

#include "helpers.hpp"
#include "yablo/eval.hpp"
#include "yablo/parser.hpp"
#include "yablo/schemes.hpp"

using namespace yablo;

namespace {

const Digraph graph1 = Digraph::build(3, {{0, 1}, {0, 2}, {2, 2}});
const Digraph graph2 = Digraph::build(3, {{0, 1}, {1, 2}, {2, 2}});
const Digraph graph3 = Digraph::build(4, {{0, 1}, {1, 2}, {0, 3}, {1, 3}, {2, 3}, {3, 3}});

}  // namespace

TEST_CASE("axiom truth values on the fixture graphs") {
    CHECK(!eval(graph1, axiom(AxiomName::A1)));  // node 1 has no out-edge
    CHECK(eval(graph1, axiom(AxiomName::A2)));
    CHECK(eval(graph2, axiom(AxiomName::A1)));
    CHECK(!eval(graph2, axiom(AxiomName::A2)));  // 0R1R2 but not 0R2
    CHECK(eval(graph3, axiom(AxiomName::A)));    // every node dominates via node 3
    CHECK(!eval(graph3, axiom(AxiomName::A2)));
}

TEST_CASE("quantifiers on the empty graph") {
    const Digraph empty;
    CHECK(eval(empty, parse_formula("forall x. R(x,x)")));
    CHECK(!eval(empty, parse_formula("exists x. R(x,x)")));
    CHECK(eval(empty, axiom(AxiomName::S)));  // mentions s; vacuously functional
}

TEST_CASE("environment handling") {
    const FormulaPtr edge = parse_formula("R(x,y)");
    CHECK(eval(graph1, edge, {{"x", 0}, {"y", 2}}));
    CHECK(!eval(graph1, edge, {{"x", 1}, {"y", 2}}));
    // innermost binding shadows
    CHECK(eval(graph1, edge, {{"x", 1}, {"x", 0}, {"y", 1}}));
    // extra bindings are fine
    CHECK(eval(graph1, parse_formula("x = x"), {{"x", 0}, {"q", 2}}));

    CHECK_THROWS_WITH_AS(eval(graph1, edge, {{"x", 0}}), doctest::Contains("'y'"), EvalError);
    CHECK_THROWS_AS(eval(graph1, edge, {{"x", 0}, {"y", 3}}), EvalError);
    // a quantifier rebinding x keeps the sentence closed
    CHECK(eval(graph1, parse_formula("exists x. R(x,x)")));
}

TEST_CASE("s-terms need a functional graph") {
    const Digraph two_cycle = Digraph::build(2, {{0, 1}, {1, 0}});
    CHECK(eval(two_cycle, parse_formula("s(x) = y"), {{"x", 0}, {"y", 1}}));
    CHECK(eval(two_cycle, parse_formula("s(s(x)) = x"), {{"x", 0}}));
    CHECK(eval(two_cycle, axiom(AxiomName::S)));

    CHECK_THROWS_WITH_AS(eval(graph1, parse_formula("s(x) = x"), {{"x", 0}}),
                         doctest::Contains("out-degree"), EvalError);
    // formulas without s never trip the check
    CHECK(eval(graph1, parse_formula("exists x. R(x,x)")));
}

TEST_CASE("satisfying sets") {
    const Digraph loop = Digraph::build(1, {{0, 0}});
    CHECK(satisfying_set(loop, *parse_formula("R(x,x)"), "x") == VertexSet::of(1, {0}));
    CHECK(satisfying_set(graph1, *parse_formula("R(x,x)"), "x") == VertexSet::of(3, {2}));
    CHECK(satisfying_set(graph1, *parse_formula("exists y. R(x,y)"), "x") ==
          VertexSet::of(3, {0, 2}));
}

TEST_CASE("russell validity sweep") {
    CHECK(russell_validity_check(2));
    CHECK(russell_validity_check(3));
    CHECK_THROWS_AS(russell_validity_check(5), CapError);

    // the negated sentence is already false on the single edgeless node
    const Digraph one = Digraph::build(1, {});
    CHECK(!eval(one, parse_formula("exists y. forall x. (R(y,x) <-> ~R(x,x))")));
}

TEST_CASE("translation into the successor language") {
    const FormulaPtr f = translate_to_successor(parse_formula("R(x,y)"));
    CHECK(equal(f, eq(s_power("x", 1), mkvar("y"))));
    CHECK(unparse(f) == "s(x) = y");

    // connectives and quantifiers pass through
    CHECK(equal(translate_to_successor(parse_formula("forall x. exists y. R(x,y)")),
                parse_formula("forall x. exists y. s(x) = y")));

    CHECK_THROWS_AS(translate_to_successor(parse_formula("s(x) = x")), Error);

    SUBCASE("translated A1 holds in every functional structure") {
        const FormulaPtr a1s = translate_to_successor(axiom(AxiomName::A1));
        for (int n = 1; n <= 4; ++n)
            for (int i = 0; i < 10; ++i)
                CHECK(eval(test_util::random_functional(n, 100 * n + i), a1s));
    }

    SUBCASE("evaluation agrees across the translation on functional graphs") {
        const FormulaPtr originals[] = {axiom(AxiomName::A1), axiom(AxiomName::A2),
                                        axiom(AxiomName::A)};
        for (const auto& f0 : originals) {
            const FormulaPtr fs = translate_to_successor(f0);
            for (int n = 0; n <= 6; ++n) {
                // all n^n functional graphs: node u points at digit u of the counter
                std::uint64_t total = 1;
                for (int i = 0; i < n; ++i) total *= static_cast<std::uint64_t>(n);
                for (std::uint64_t code = 0; code < total; ++code) {
                    std::vector<std::pair<int, int>> edges;
                    std::uint64_t c = code;
                    for (int u = 0; u < n; ++u) {
                        edges.emplace_back(u, static_cast<int>(c % n));
                        c /= static_cast<std::uint64_t>(n);
                    }
                    const Digraph g = Digraph::build(n, edges);
                    if (eval(g, f0) != eval(g, fs)) {
                        CAPTURE(format_edge_list(g));
                        CHECK(eval(g, f0) == eval(g, fs));
                    }
                }
            }
        }
    }
}
