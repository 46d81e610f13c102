#include <doctest.h>

#include "helpers.hpp"
#include "yablo/eval.hpp"
#include "yablo/kernel.hpp"
#include "yablo/schemes.hpp"
#include "yablo/successor.hpp"

using namespace yablo;

TEST_CASE("realize lays out cycles consecutively") {
    CHECK(realize(SuccessorStructure::make({3})) ==
          Digraph::build(3, {{0, 1}, {1, 2}, {2, 0}}));
    CHECK(realize(SuccessorStructure::make({2, 4})) ==
          Digraph::build(6, {{0, 1}, {1, 0}, {2, 3}, {3, 4}, {4, 5}, {5, 2}}));
    CHECK(realize(SuccessorStructure::make({})) == Digraph());
    CHECK(realize(SuccessorStructure::make({1})) == Digraph::build(1, {{0, 0}}));

    CHECK_THROWS_AS(realize(SuccessorStructure::make({2}, 1, 0)), StructureError);
    CHECK_THROWS_AS(realize(SuccessorStructure::make({}, 0, 2)), StructureError);
    CHECK_THROWS_AS(SuccessorStructure::make({0}), StructureError);
    CHECK_THROWS_AS(SuccessorStructure::make({2}, -1, 0), StructureError);

    SUBCASE("every realized structure satisfies injectivity and totality") {
        test_util::for_each_multiset(8, [&](const std::vector<int>& lengths) {
            const Digraph g = realize(SuccessorStructure::make(lengths));
            CHECK(eval(g, axiom(AxiomName::S)));
            CHECK(eval(g, axiom(AxiomName::A1)));
        });
    }
}

TEST_CASE("classify decomposes permutations") {
    CHECK(classify(realize(SuccessorStructure::make({2, 4}))) ==
          SuccessorStructure::make({2, 4}));
    CHECK(classify(Digraph::build(3, {{0, 1}, {1, 2}, {2, 0}})) ==
          SuccessorStructure::make({3}));
    CHECK(classify(Digraph()) == SuccessorStructure::make({}));
    // relabeled cycles classify the same
    CHECK(classify(Digraph::build(4, {{0, 2}, {2, 0}, {1, 3}, {3, 1}})) ==
          SuccessorStructure::make({2, 2}));

    SUBCASE("rejects in-degree 2 with a witness") {
        CHECK_THROWS_WITH_AS(classify(Digraph::build(3, {{0, 1}, {1, 0}, {2, 0}})),
                             doctest::Contains("node 0"), StructureError);
    }
    SUBCASE("rejects non-functional graphs") {
        CHECK_THROWS_WITH_AS(classify(Digraph::build(2, {{0, 1}})),
                             doctest::Contains("out-degree"), StructureError);
        CHECK_THROWS_AS(classify(Digraph::build(2, {{0, 0}, {0, 1}, {1, 0}})), StructureError);
    }
    SUBCASE("round trip over all small multisets") {
        test_util::for_each_multiset(12, [&](const std::vector<int>& lengths) {
            const SuccessorStructure s = SuccessorStructure::make(lengths);
            CHECK(classify(realize(s)) == s);
        });
    }
}

TEST_CASE("symbolic kernel verdict") {
    CHECK(kernel_exists_symbolic(SuccessorStructure::make({2, 4}, 3, 1)));
    CHECK(!kernel_exists_symbolic(SuccessorStructure::make({5})));
    CHECK(!kernel_exists_symbolic(SuccessorStructure::make({2, 3}, 10, 10)));
    CHECK(kernel_exists_symbolic(SuccessorStructure::make({})));
    CHECK(kernel_exists_symbolic(SuccessorStructure::make({}, 5, 5)));

    SUBCASE("matches the solver on realizable structures") {
        test_util::for_each_multiset(10, [&](const std::vector<int>& lengths) {
            const SuccessorStructure s = SuccessorStructure::make(lengths);
            CHECK(kernel_exists_symbolic(s) == solve(realize(s)).found());
        });
    }
}

TEST_CASE("fragment satisfaction arithmetic") {
    CHECK(fragment_satisfaction(SuccessorStructure::make({5}), 1));   // 5 divides neither 1 nor 3
    CHECK(!fragment_satisfaction(SuccessorStructure::make({5}), 2));  // s^5(x) = x
    CHECK(fragment_satisfaction(SuccessorStructure::make({}), 100));
    CHECK(fragment_satisfaction(SuccessorStructure::make({2, 4, 6}), 100));
    CHECK(!fragment_satisfaction(SuccessorStructure::make({1}), 0));  // s(x) = x on the loop
    CHECK(!fragment_satisfaction(SuccessorStructure::make({3, 4}), 1));

    SUBCASE("odd cycles survive exactly their proper fragments") {
        for (int big_n = 0; big_n <= 20; ++big_n) {
            const SuccessorStructure s = SuccessorStructure::make({2 * big_n + 3});
            CHECK(fragment_satisfaction(s, big_n));
            CHECK(!fragment_satisfaction(s, big_n + 1));
        }
    }

    SUBCASE("agrees with the evaluator on realized graphs") {
        for (int big_n = 0; big_n <= 5; ++big_n) {
            const SuccessorStructure s = SuccessorStructure::make({2 * big_n + 3});
            const Digraph g = realize(s);
            for (int k = 0; k <= big_n + 1; ++k) {
                const bool arithmetic = fragment_satisfaction(s, k);
                bool evaluated = true;
                for (int j = 0; j <= k && evaluated; ++j)
                    evaluated = eval(g, axiom_no_odd_cycle(j));
                CHECK(arithmetic == evaluated);
            }
        }
    }
}

TEST_CASE("successor text form") {
    const SuccessorStructure s = parse_successor("cycles=[2,4] n=0 z=0");
    CHECK(s == SuccessorStructure::make({2, 4}));
    CHECK(format_successor(s) == "cycles=[2,4] n=0 z=0");
    CHECK(parse_successor("cycles=[] n=1 z=2") == SuccessorStructure::make({}, 1, 2));
    CHECK(parse_successor(format_successor(SuccessorStructure::make({7, 3, 3}, 4, 0))) ==
          SuccessorStructure::make({3, 3, 7}, 4, 0));

    CHECK_THROWS_AS(parse_successor(""), StructureError);
    CHECK_THROWS_AS(parse_successor("cycles=[2 4] n=0 z=0"), StructureError);
    CHECK_THROWS_AS(parse_successor("cycles=[2,4]"), StructureError);
    CHECK_THROWS_AS(parse_successor("cycles=[2,4] n=0 z=0 extra"), StructureError);
    CHECK_THROWS_AS(parse_successor("cycles=[2,-4] n=0 z=0"), StructureError);
    CHECK_THROWS_AS(parse_successor("cycles=[0] n=0 z=0"), StructureError);
}
