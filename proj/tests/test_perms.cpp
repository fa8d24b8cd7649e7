#include <catch2/catch_amalgamated.hpp>

#include "lpres/action.hpp"
#include "lpres/permutation.hpp"
#include "test_util.hpp"

using namespace lpres;

TEST_CASE("permutation arithmetic") {
    Permutation p{1, 0, 2}; // (1,2)
    Permutation q{0, 2, 1}; // (2,3)
    CHECK(perm_identity(3) == Permutation{0, 1, 2});
    CHECK(perm_mul(p, q) == Permutation{2, 0, 1}); // p first, then q
    CHECK(perm_mul(p, perm_inverse(p)) == perm_identity(3));
    CHECK(perm_is_identity(perm_identity(5)));
    CHECK_FALSE(perm_is_identity(p));
    CHECK(perm_order(perm_identity(4)) == 1);
    CHECK(perm_order(Permutation{1, 2, 3, 0}) == 4);
    CHECK(perm_order(Permutation{1, 0, 3, 4, 2}) == 6); // (1,2)(3,4,5)
}

TEST_CASE("cycle notation round trips") {
    CHECK(cycle_string(perm_identity(4)) == "()");
    CHECK(cycle_string(Permutation{1, 0, 2}) == "(1,2)");
    CHECK(cycle_string(Permutation{1, 0, 4, 2, 3}) == "(1,2)(3,5,4)");
    CHECK(parse_cycles("(1,2)(3,5,4)", 5) == Permutation{1, 0, 4, 2, 3});
    CHECK(parse_cycles("()", 3) == perm_identity(3));

    std::mt19937 rng(201);
    for (int i = 0; i < 500; ++i) {
        Permutation p = testutil::random_permutation(rng, 7);
        REQUIRE(parse_cycles(cycle_string(p), 7) == p);
    }
}

TEST_CASE("generator actions follow words") {
    GeneratorAction a{{perm_identity(3), Permutation{1, 2, 0}}}; // a trivial, b a 3-cycle
    CHECK(act_point(a, 0, Word{2}) == 1);
    CHECK(act_point(a, 0, Word{-2}) == 2);
    CHECK(act_point(a, 1, Word{2, 1, 2}) == 0);
    CHECK(act_word(a, Word{2, 2, 2}) == perm_identity(3));
    CHECK(action_is_trivial(GeneratorAction{{perm_identity(2), perm_identity(2)}}));
    CHECK_FALSE(action_is_trivial(a));
}

TEST_CASE("composing an action with an endomorphism matches substitution") {
    std::mt19937 rng(202);
    for (int i = 0; i < 1000; ++i) {
        GeneratorAction a{{testutil::random_permutation(rng, 5), testutil::random_permutation(rng, 5),
                           testutil::random_permutation(rng, 5)}};
        FreeEndomorphism e{{testutil::random_raw_word(rng, 3, 4), testutil::random_raw_word(rng, 3, 4),
                            testutil::random_raw_word(rng, 3, 4)}};
        Word w = testutil::random_raw_word(rng, 3, 8);
        REQUIRE(act_word(compose_action(a, e), w) == act_word(a, apply_endo(e, w)));
    }
}

TEST_CASE("closure of permutation sets") {
    Permutation s{1, 0, 2}; // (1,2)
    Permutation c{1, 2, 0}; // (1,2,3)
    auto s3 = closure({s, c});
    CHECK(s3.size() == 6);
    CHECK(s3.front() == perm_identity(3)); // identity is listed first
    auto klein = closure({Permutation{1, 0, 3, 2}, Permutation{2, 3, 0, 1}});
    CHECK(klein.size() == 4);
    CHECK_THROWS_AS(closure({Permutation{1, 2, 3, 4, 0}}, 4), ResourceLimitError);
}

TEST_CASE("action factoring detects coarser actions") {
    GeneratorAction c4{{Permutation{1, 2, 3, 0}}};
    GeneratorAction c2{{Permutation{1, 0}}};
    GeneratorAction trivial{{perm_identity(2)}};

    // the mod-2 action factors through the mod-4 action, never the converse
    auto down = factors_through(c2, c4);
    REQUIRE(down.has_value());
    CHECK_FALSE(down->bijective);
    CHECK_FALSE(factors_through(c4, c2).has_value());

    // a trivial target factors through anything; equality gives a bijective witness
    CHECK(factors_through(trivial, c4).has_value());
    CHECK_FALSE(factors_through(c4, trivial).has_value());
    auto same = factors_through(c4, c4);
    REQUIRE(same.has_value());
    CHECK(same->bijective);
}

TEST_CASE("action factoring is reflexive and transitive") {
    std::mt19937 rng(203);
    // a pool with plenty of genuine factorings: cyclic quotient chains plus noise
    std::vector<GeneratorAction> pool;
    pool.push_back(GeneratorAction{{perm_identity(1)}});
    pool.push_back(GeneratorAction{{Permutation{1, 0}}});
    pool.push_back(GeneratorAction{{Permutation{1, 2, 0}}});
    pool.push_back(GeneratorAction{{Permutation{1, 2, 3, 0}}});
    pool.push_back(GeneratorAction{{Permutation{1, 2, 3, 4, 5, 0}}});
    pool.push_back(GeneratorAction{{Permutation{1, 0, 2}}});
    for (int i = 0; i < 6; ++i)
        pool.push_back(GeneratorAction{{testutil::random_permutation(rng, 4)}});

    for (const auto& a : pool) {
        auto self = factors_through(a, a);
        REQUIRE(self.has_value());
        REQUIRE(self->bijective);
    }
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    int seen = 0;
    for (int i = 0; i < 1000; ++i) {
        const auto& a = pool[pick(rng)];
        const auto& b = pool[pick(rng)];
        const auto& c = pool[pick(rng)];
        if (factors_through(a, b).has_value() && factors_through(b, c).has_value()) {
            REQUIRE(factors_through(a, c).has_value());
            ++seen;
        }
    }
    CHECK(seen > 50); // the pool really exercises the law
}
