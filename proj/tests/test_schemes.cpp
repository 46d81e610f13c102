#include <doctest.h>

#include "helpers.hpp"
#include "yablo/eval.hpp"
#include "yablo/kernel.hpp"
#include "yablo/parser.hpp"
#include "yablo/schemes.hpp"

using namespace yablo;

TEST_CASE("theta construction") {
    // theta(0) = exists y0 (R(x,y0) & forall z0 (R(y0,z0) -> R(x,z0)))
    const FormulaPtr t0 = theta(0);
    CHECK(equal(t0, exists("y0", conj(rel(mkvar("x"), mkvar("y0")),
                                      forall("z0", implies(rel(mkvar("y0"), mkvar("z0")),
                                                           rel(mkvar("x"), mkvar("z0"))))))));
    // theta(1) nests theta(0) at z0 with depth-1 names
    const FormulaPtr t1 = theta(1);
    const FormulaPtr inner =
        exists("y1", conj(rel(mkvar("z0"), mkvar("y1")),
                          forall("z1", implies(rel(mkvar("y1"), mkvar("z1")),
                                               rel(mkvar("z0"), mkvar("z1"))))));
    CHECK(equal(t1, exists("y0", conj(rel(mkvar("x"), mkvar("y0")),
                                      forall("z0", implies(rel(mkvar("y0"), mkvar("z0")),
                                                           inner))))));

    for (int k = 0; k <= 3; ++k) {
        auto fv = free_variables(*theta(k));
        CHECK(fv == std::set<std::string>{"x"});
    }
    CHECK_THROWS_AS(theta(-1), Error);
}

TEST_CASE("axiom builders") {
    CHECK(unparse(axiom(AxiomName::A)) ==
          "forall x. exists y. (R(x,y) & forall z. (R(y,z) -> R(x,z)))");
    CHECK(unparse(axiom(AxiomName::A1)) == "forall x. exists y. R(x,y)");
    CHECK(equal(axiom(AxiomName::S),
                forall("x", forall("y", implies(eq(s_power("x", 1), s_power("y", 1)),
                                                eq(mkvar("x"), mkvar("y")))))));
    CHECK(equal(axiom_no_odd_cycle(0), neg(exists("x", eq(s_power("x", 1), mkvar("x"))))));
    CHECK(equal(axiom_no_odd_cycle(2), neg(exists("x", eq(s_power("x", 5), mkvar("x"))))));

    for (const char* name : {"A1", "A2", "A", "S"}) CHECK(is_sentence(*axiom(name)));
    CHECK(equal(axiom("no_odd_cycle(2)"), axiom_no_odd_cycle(2)));
    CHECK_THROWS_AS(axiom("B"), Error);
    CHECK_THROWS_AS(axiom("no_odd_cycle()"), Error);
    CHECK_THROWS_AS(axiom("no_odd_cycle(x)"), Error);
    CHECK_THROWS_AS(axiom_no_odd_cycle(-1), Error);

    SUBCASE("every builder output reparses to itself") {
        for (const FormulaPtr& f :
             {axiom(AxiomName::A1), axiom(AxiomName::A2), axiom(AxiomName::A),
              axiom(AxiomName::S), axiom_no_odd_cycle(0), axiom_no_odd_cycle(3), theta(0),
              theta(2), yablo_instance(theta(1)),
              yablo_instance(exists("y", rel(mkvar("x"), mkvar("y")))),
              translate_to_successor(axiom(AxiomName::A))})
            CHECK(equal(parse_formula(unparse(f)), f));
    }
}

TEST_CASE("theta sets") {
    const Digraph chain1 = witness_chain(1);
    CHECK(theta_set(chain1, 0) == VertexSet::of(3, {1, 2}));  // node 0 fails: 0R1R2, no 0R2
    CHECK(theta_set(chain1, 1) == VertexSet::of(3, {0, 1, 2}));

    const Digraph edgeless = Digraph::build(5, {});
    for (int k = 0; k <= 3; ++k) CHECK(theta_set(edgeless, k).empty());

    SUBCASE("iterative computation equals direct evaluation") {
        for (int n = 0; n <= 3; ++n) {
            for (const Digraph& g : all_digraphs(n)) {
                for (int k = 0; k <= 2; ++k) {
                    const VertexSet direct = satisfying_set(g, *theta(k), "x");
                    CHECK(theta_set(g, k) == direct);
                }
            }
        }
    }

    SUBCASE("monotone step on small graphs") {
        for (const Digraph& g : all_digraphs(3))
            for (int k = 0; k <= 1; ++k)
                if (theta_set(g, k).full()) CHECK(theta_set(g, k + 1).full());
    }

    SUBCASE("strictness on witness chains") {
        for (int k = 0; k <= 4; ++k) {
            const Digraph chain = witness_chain(k + 1);
            CHECK(theta_set(chain, k + 1).full());
            CHECK(!theta_set(chain, k).contains(0));
        }
    }
}

TEST_CASE("kernel-sentence instances") {
    SUBCASE("shape for an atomic phi") {
        const FormulaPtr inst = yablo_instance(rel(mkvar("x"), mkvar("x")));
        const FormulaPtr expected = neg(forall(
            "x", iff(rel(mkvar("x"), mkvar("x")),
                     forall("y", implies(rel(mkvar("x"), mkvar("y")),
                                         neg(rel(mkvar("y"), mkvar("y"))))))));
        CHECK(equal(inst, expected));
    }

    SUBCASE("the loop graph defeats the atomic instance") {
        const Digraph loop = Digraph::build(1, {{0, 0}});
        CHECK(eval(loop, yablo_instance(rel(mkvar("x"), mkvar("x")))));
    }

    SUBCASE("free-variable validation") {
        CHECK_THROWS_AS(yablo_instance(parse_formula("forall x. R(x,x)")), Error);
        CHECK_THROWS_AS(yablo_instance(parse_formula("R(x,y)")), Error);
        // the free variable does not have to be named x
        const FormulaPtr inst = yablo_instance(rel(mkvar("w"), mkvar("w")));
        CHECK(is_sentence(*inst));
    }

    SUBCASE("fresh variable avoids capture") {
        const FormulaPtr phi = exists("y", rel(mkvar("x"), mkvar("y")));
        const FormulaPtr inst = yablo_instance(phi);
        CHECK(is_sentence(*inst));
        // y is taken inside phi, so the scheme quantifies over y0
        const FormulaPtr expected = neg(forall(
            "x",
            iff(phi, forall("y0", implies(rel(mkvar("x"), mkvar("y0")),
                                          neg(exists("y", rel(mkvar("y0"), mkvar("y")))))))));
        CHECK(equal(inst, expected));
    }

    SUBCASE("instance truth means the definable set is not a kernel") {
        test_util::AstGen gen(4242, /*allow_s=*/false);
        for (int i = 0; i < 20; ++i) {
            const FormulaPtr phi = gen.gen_phi_over_x(3);
            const Digraph g = random_digraph(2 + i % 5, 0.4, 1000 + i);
            const VertexSet definable = satisfying_set(g, *phi, "x");
            const bool not_kernel = !is_kernel(g, definable);
            CAPTURE(unparse(phi));
            CAPTURE(format_edge_list(g));
            CHECK(eval(g, yablo_instance(phi)) == not_kernel);
        }
    }
}
