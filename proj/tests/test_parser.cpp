#include <doctest.h>

#include "helpers.hpp"
#include "yablo/parser.hpp"

using namespace yablo;

TEST_CASE("parses the quantified atoms") {
    const FormulaPtr f = parse_formula("forall x. exists y. R(x,y)");
    CHECK(equal(f, forall("x", exists("y", rel(mkvar("x"), mkvar("y"))))));

    const FormulaPtr g = parse_formula("s(x) = y");
    CHECK(equal(g, eq(s_power("x", 1), mkvar("y"))));

    const FormulaPtr h = parse_formula("s(s(x)) = s(y)");
    CHECK(equal(h, eq(s_power("x", 2), s_power("y", 1))));
}

TEST_CASE("precedence and associativity") {
    // ~ binds tightest, then & | -> <->
    CHECK(equal(parse_formula("~x = y & y = z"),
                conj(neg(eq(mkvar("x"), mkvar("y"))), eq(mkvar("y"), mkvar("z")))));
    CHECK(equal(parse_formula("x = x & y = y | z = z"),
                disj(conj(eq(mkvar("x"), mkvar("x")), eq(mkvar("y"), mkvar("y"))),
                     eq(mkvar("z"), mkvar("z")))));
    CHECK(equal(parse_formula("x = x -> y = y -> z = z"),
                implies(eq(mkvar("x"), mkvar("x")),
                        implies(eq(mkvar("y"), mkvar("y")), eq(mkvar("z"), mkvar("z"))))));
    CHECK(equal(parse_formula("x = x <-> y = y <-> z = z"),
                iff(iff(eq(mkvar("x"), mkvar("x")), eq(mkvar("y"), mkvar("y"))),
                    eq(mkvar("z"), mkvar("z")))));
    // quantifier body extends maximally right
    CHECK(equal(parse_formula("forall x. R(x,x) & R(x,x)"),
                forall("x", conj(rel(mkvar("x"), mkvar("x")), rel(mkvar("x"), mkvar("x"))))));
    // a quantifier may close a conjunct
    CHECK(equal(parse_formula("R(x,y) & forall z. R(z,z)"),
                conj(rel(mkvar("x"), mkvar("y")), forall("z", rel(mkvar("z"), mkvar("z"))))));
    CHECK(equal(parse_formula("~~x = x"), neg(neg(eq(mkvar("x"), mkvar("x"))))));
}

TEST_CASE("rejects propositional atoms and junk") {
    // no propositional atoms in this language: a bare variable is only the
    // start of an equality atom
    CHECK_THROWS_AS(parse_formula("~(p)"), ParseError);
    try {
        parse_formula("~(p)");
    } catch (const ParseError& e) {
        CHECK(e.line == 1);
        CHECK(e.col == 4);
        REQUIRE(!e.expected.empty());
        CHECK(e.expected[0] == "'='");
    }

    CHECK_THROWS_AS(parse_formula(""), ParseError);
    CHECK_THROWS_AS(parse_formula("R(x y)"), ParseError);
    CHECK_THROWS_AS(parse_formula("forall x R(x,x)"), ParseError);
    CHECK_THROWS_AS(parse_formula("forall forall. x = x"), ParseError);
    CHECK_THROWS_AS(parse_formula("x = y extra"), ParseError);
    CHECK_THROWS_AS(parse_formula("x - y"), ParseError);
    CHECK_THROWS_AS(parse_formula("x < y"), ParseError);
    CHECK_THROWS_AS(parse_formula("Q(x,y)"), ParseError);
    CHECK_THROWS_AS(parse_formula("x = 3"), ParseError);
    CHECK_THROWS_AS(parse_formula("(x = y"), ParseError);

    SUBCASE("keywords cannot be variables") {
        CHECK_THROWS_AS(parse_formula("s = y"), ParseError);
        CHECK_THROWS_AS(parse_formula("forall s. s = s"), ParseError);
    }
    SUBCASE("positions track lines") {
        try {
            parse_formula("forall x.\n  R(x,x) &\n");
            FAIL("should not parse");
        } catch (const ParseError& e) {
            CHECK(e.line == 3);
        }
    }
}

TEST_CASE("unparse round trip on random ASTs") {
    test_util::AstGen gen(20260809, /*allow_s=*/true);
    for (int i = 0; i < 1000; ++i) {
        const FormulaPtr f = gen.gen(6);
        const std::string text = unparse(f);
        CAPTURE(text);
        CHECK(equal(parse_formula(text), f));
    }
}

TEST_CASE("unparse stays stable on reparse") {
    test_util::AstGen gen(99, /*allow_s=*/true);
    for (int i = 0; i < 100; ++i) {
        const FormulaPtr f = gen.gen(5);
        const std::string once = unparse(f);
        CHECK(unparse(parse_formula(once)) == once);
    }
}
