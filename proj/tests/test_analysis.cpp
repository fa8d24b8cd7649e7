#include <catch2/catch_amalgamated.hpp>

#include "lpres/classify.hpp"
#include "fixtures.hpp"
#include "test_util.hpp"

using namespace lpres;

namespace {

/* Independent oracle for resolve_element: compose the substitution
 * action factor by factor and scan the nodes in their stored order,
 * which is the traversal order of the worklist. The first list entry is
 * the substitution applied to words first, so the fold runs backwards. */
int brute_resolve(const SubstitutionTree& tree, const MonoidElement& elem) {
    GeneratorAction act = tree.base_action;
    for (std::size_t pos = elem.size(); pos-- > 0;)
        act = compose_action(act, tree.phi[static_cast<std::size_t>(elem[pos])]);
    for (std::size_t i = 0; i < tree.nodes.size(); ++i)
        if (actions_equal(tree.node_actions[i], act))
            return static_cast<int>(i);
    return -1;
}

} // namespace

TEST_CASE("substitution trees over the fixture subgroups") {
    const auto& bas = fixtures::basilica();

    CosetTable u1 = enumerate_cosets(bas.lp, bas.subgroup("U1"));
    SubstitutionTree t1 = iterating_endomorphisms(bas.lp.substitutions, u1.action());
    CHECK(t1.nodes == std::vector<MonoidElement>{{}, {0}, {0, 0}, {0, 0, 0}});
    REQUIRE(t1.leafs.size() == 1);
    CHECK(t1.leafs[0].element == MonoidElement{0, 0, 0, 0});
    CHECK(t1.leafs[0].resolved_node == 0);
    for (std::size_t i = 0; i < t1.nodes.size(); ++i)
        for (std::size_t j = i + 1; j < t1.nodes.size(); ++j)
            REQUIRE_FALSE(actions_equal(t1.node_actions[i], t1.node_actions[j]));
    CHECK(phi_leafs(t1, u1.action()) == std::vector<MonoidElement>{{0, 0, 0, 0}});

    CosetTable u2 = enumerate_cosets(bas.lp, bas.subgroup("U2"));
    SubstitutionTree t2 = iterating_endomorphisms(bas.lp.substitutions, u2.action());
    CHECK(t2.nodes == std::vector<MonoidElement>{{}, {0}});
    REQUIRE(t2.leafs.size() == 1);
    CHECK(t2.leafs[0].element == MonoidElement{0, 0});
    CHECK(t2.leafs[0].resolved_node == 1);
    CHECK(action_is_trivial(t2.node_actions[1]));
    CHECK(phi_leafs(t2, u2.action()).empty());

    CosetTable u6 = enumerate_cosets(bas.lp, bas.subgroup("U6"));
    SubstitutionTree t6 = iterating_endomorphisms(bas.lp.substitutions, u6.action());
    CHECK(t6.nodes.size() == 5);

    const auto& gri = fixtures::grigorchuk();
    CosetTable d = enumerate_cosets(gri.lp, gri.subgroup("D"));
    SubstitutionTree td = iterating_endomorphisms(gri.lp.substitutions, d.action());
    CHECK(td.nodes.size() == 6);
    REQUIRE(td.leafs.size() == 1);
    CHECK(td.leafs[0].element == MonoidElement{0, 0, 0, 0, 0, 0});
    CHECK(td.leafs[0].resolved_node == 3);
}

TEST_CASE("element resolution agrees with the composed action") {
    const auto& bas = fixtures::basilica();
    std::mt19937 rng(401);
    for (const char* name : {"U1", "U2", "U6"}) {
        CosetTable table = enumerate_cosets(bas.lp, bas.subgroup(name));
        SubstitutionTree tree = iterating_endomorphisms(bas.lp.substitutions, table.action());
        for (const MonoidElement& elem : monoid_elements(1, 4))
            REQUIRE(resolve_element(tree, elem) == brute_resolve(tree, elem));
        std::uniform_int_distribution<int> len(0, 40);
        for (int i = 0; i < 50; ++i) {
            MonoidElement elem(static_cast<std::size_t>(len(rng)), 0);
            REQUIRE(resolve_element(tree, elem) == brute_resolve(tree, elem));
        }
    }
}

TEST_CASE("reduced trees and the factoring relation on the index-6 subgroup") {
    const auto& bas = fixtures::basilica();

    CosetTable u1 = enumerate_cosets(bas.lp, bas.subgroup("U1"));
    SubstitutionTree t1 = iterating_endomorphisms(bas.lp.substitutions, u1.action());
    LeadstoTree l1 = leadsto_subtree(t1, u1.action());
    CHECK(l1.nodes == std::vector<MonoidElement>{{}, {0}});
    REQUIRE(l1.leafs.size() == 1);
    CHECK(l1.leafs[0].element == MonoidElement{0, 0});
    CHECK(l1.leafs[0].resolved_node == 0);
    CHECK(l1.leafs[0].witness.bijective);

    CosetTable u2 = enumerate_cosets(bas.lp, bas.subgroup("U2"));
    SubstitutionTree t2 = iterating_endomorphisms(bas.lp.substitutions, u2.action());
    LeadstoTree l2 = leadsto_subtree(t2, u2.action());
    CHECK(l2.nodes == std::vector<MonoidElement>{{}});
    REQUIRE(l2.leafs.size() == 1);
    CHECK(l2.leafs[0].element == MonoidElement{0});
    CHECK(l2.leafs[0].resolved_node == 0);
    CHECK_FALSE(l2.leafs[0].witness.bijective);

    // iterates of the substitution on the index-6 subgroup's action
    CosetTable u6 = enumerate_cosets(bas.lp, bas.subgroup("U6"));
    GeneratorAction base = u6.action();
    const FreeEndomorphism& sigma = bas.lp.substitutions[0];
    CHECK(cycle_string(base.perms[0]) == "(1,2,4)(3,6,5)");
    CHECK(cycle_string(base.perms[1]) == "(1,3)(2,5)(4,6)");
    std::vector<GeneratorAction> iterate{base};
    for (int l = 1; l <= 6; ++l)
        iterate.push_back(compose_action(iterate.back(), sigma));
    CHECK(cycle_string(iterate[1].perms[0]) == "()");
    CHECK(cycle_string(iterate[1].perms[1]) == "(1,2,4)(3,6,5)");
    CHECK(cycle_string(iterate[2].perms[0]) == "(1,4,2)(3,5,6)");
    CHECK(cycle_string(iterate[2].perms[1]) == "()");
    CHECK(cycle_string(iterate[3].perms[0]) == "()");
    CHECK(cycle_string(iterate[3].perms[1]) == "(1,4,2)(3,5,6)");

    // the third iterate factors bijectively through the first, none reach the root
    auto wit = factors_through(iterate[3], iterate[1]);
    REQUIRE(wit.has_value());
    CHECK(wit->bijective);
    for (int l = 1; l <= 6; ++l)
        REQUIRE_FALSE(factors_through(iterate[static_cast<std::size_t>(l)], base).has_value());

    SubstitutionTree t6 = iterating_endomorphisms(bas.lp.substitutions, base);
    LeadstoTree l6 = leadsto_subtree(t6, base);
    CHECK(l6.nodes.size() == 3);
    bool found = false;
    for (const auto& leaf : l6.leafs) {
        if (leaf.element == MonoidElement{0, 0, 0}) {
            found = true;
            CHECK(leaf.resolved_node == 1);
            CHECK(leaf.witness.bijective);
        }
    }
    CHECK(found);
}

TEST_CASE("classification of the fixture subgroups") {
    const auto& bas = fixtures::basilica();
    const auto& gri = fixtures::grigorchuk();
    auto report = [](const PresentationFile& pf, const char* name) {
        CosetTable t = enumerate_cosets(pf.lp, pf.subgroup(name));
        return classify_subgroup(pf.lp, t);
    };

    SubgroupReport u1 = report(bas, "U1");
    CHECK(u1.index == 3);
    CHECK(u1.normal);
    CHECK_FALSE(u1.phi_invariant);
    CHECK(u1.leaf_invariant);
    CHECK(u1.weakly_leaf_invariant_V);
    CHECK(u1.weakly_leaf_invariant_Vtilde);
    CHECK(u1.recommended == "leaf-invariant");
    CHECK(u1.phi_leaf_elements == std::vector<MonoidElement>{{0, 0, 0, 0}});

    SubgroupReport u2 = report(bas, "U2");
    CHECK(u2.index == 2);
    CHECK(u2.normal);
    CHECK(u2.phi_invariant);
    CHECK_FALSE(u2.leaf_invariant);
    CHECK(u2.weakly_leaf_invariant_V);
    CHECK(u2.weakly_leaf_invariant_Vtilde);
    CHECK(u2.recommended == "invariant-normal");

    SubgroupReport u4 = report(bas, "U4");
    CHECK(u4.index == 4);
    CHECK_FALSE(u4.normal);
    CHECK(u4.phi_invariant);
    CHECK_FALSE(u4.leaf_invariant);
    CHECK(u4.weakly_leaf_invariant_V);
    CHECK(u4.weakly_leaf_invariant_Vtilde);
    CHECK(u4.tree.nodes.size() == 3);
    CHECK(u4.recommended == "general");

    SubgroupReport u5 = report(bas, "U5");
    CHECK(u5.index == 2);
    CHECK(u5.normal);
    CHECK_FALSE(u5.phi_invariant);
    CHECK(u5.recommended == "weakly-leaf-invariant-normal");

    SubgroupReport u6 = report(bas, "U6");
    CHECK(u6.index == 6);
    CHECK(u6.normal);
    CHECK_FALSE(u6.phi_invariant);
    CHECK_FALSE(u6.leaf_invariant);
    CHECK_FALSE(u6.weakly_leaf_invariant_V);
    CHECK_FALSE(u6.weakly_leaf_invariant_Vtilde);
    CHECK(u6.tree.nodes.size() == 5);
    CHECK(u6.leadsto.nodes.size() == 3);
    CHECK(u6.recommended == "general");

    SubgroupReport d = report(gri, "D");
    CHECK(d.index == 16);
    CHECK(d.normal);
    CHECK_FALSE(d.phi_invariant);
    CHECK_FALSE(d.leaf_invariant);
    CHECK(d.weakly_leaf_invariant_V);
    CHECK(d.weakly_leaf_invariant_Vtilde);
    CHECK(d.tree.nodes.size() == 6);
    CHECK(d.leadsto.nodes.size() == 3);
    CHECK(d.recommended == "weakly-leaf-invariant-normal");
}

TEST_CASE("stabilizing subgroup and core of the fixtures") {
    const auto& bas = fixtures::basilica();

    // an invariant subgroup is its own stabilizing subgroup
    CosetTable u4 = enumerate_cosets(bas.lp, bas.subgroup("U4"));
    CHECK(stabilizing_subgroup(bas.lp, u4) == u4.standardized());

    CosetTable u1 = enumerate_cosets(bas.lp, bas.subgroup("U1"));
    CosetTable stab = stabilizing_subgroup(bas.lp, u1);
    CosetTable core = stabilizing_core(bas.lp, u1);
    CHECK(stab == core);
    CHECK(core.ncosets() == 9);
    SchreierData sd(core);
    CHECK(sd.rank() == 10);
    CHECK(sd.definitions() ==
          std::vector<Word>{Word{2, 1, -2, -1}, Word{1, 1, 1}, Word{1, 2, 1, -2, -1, -1},
                            Word{2, 2, 1, -2, -2, -1}, Word{2, 2, 2}, Word{1, 1, 2, 1, -2},
                            Word{1, 2, 2, 1, -2, -2, -1, -1}, Word{1, 2, 2, 2, -1},
                            Word{1, 1, 2, 2, 1, -2, -2}, Word{1, 1, 2, 2, 2, -1, -1}});
    CHECK(sd.transversal() ==
          std::vector<Word>{Word{}, Word{1}, Word{2}, Word{1, 1}, Word{1, 2}, Word{2, 2},
                            Word{1, 1, 2}, Word{1, 2, 2}, Word{1, 1, 2, 2}});

    // the core sits inside the subgroup it stabilizes and is normal in F
    for (const Word& w : sd.definitions()) {
        CHECK(u1.contains(w));
        CHECK(stab.contains(w));
    }
    CHECK(is_normal(core));
}

TEST_CASE("finite quotients are recognized") {
    const auto& bas = fixtures::basilica();
    const auto& gri = fixtures::grigorchuk();

    auto q1 = quotient_group(enumerate_cosets(bas.lp, bas.subgroup("U1")));
    CHECK(q1.size() == 3);
    CHECK(is_abelian(q1));
    CHECK_FALSE(is_dihedral(q1));

    auto q5 = quotient_group(enumerate_cosets(bas.lp, bas.subgroup("U5")));
    CHECK(q5.size() == 2);
    CHECK(is_abelian(q5));

    auto q6 = quotient_group(enumerate_cosets(bas.lp, bas.subgroup("U6")));
    CHECK(q6.size() == 6);
    CHECK_FALSE(is_abelian(q6));
    CHECK(is_dihedral(q6)); // the nonabelian group of order 6 is dihedral

    auto qd = quotient_group(enumerate_cosets(gri.lp, gri.subgroup("D")));
    CHECK(qd.size() == 16);
    CHECK_FALSE(is_abelian(qd));
    CHECK(is_dihedral(qd));

    // direct checks on small abstract groups
    auto klein = closure({Permutation{1, 0, 3, 2}, Permutation{2, 3, 0, 1}});
    CHECK(is_abelian(klein));
    CHECK(is_dihedral(klein));
    auto c4 = closure({Permutation{1, 2, 3, 0}});
    CHECK(is_abelian(c4));
    CHECK_FALSE(is_dihedral(c4));

    // the closure only describes a quotient along a normal subgroup
    CosetTable u4 = enumerate_cosets(bas.lp, bas.subgroup("U4"));
    CHECK_FALSE(is_normal(u4));
}

TEST_CASE("classification ignores the order of the substitutions") {
    const auto& bas = fixtures::basilica();
    const FreeEndomorphism& sigma = bas.lp.substitutions[0];

    LPresentation two = bas.lp;
    two.substitutions = {sigma, compose(sigma, sigma)};
    LPresentation swapped = bas.lp;
    swapped.substitutions = {compose(sigma, sigma), sigma};

    for (const char* name : {"U1", "U2", "U6"}) {
        CosetTable t = enumerate_cosets(two, bas.subgroup(name));
        CosetTable s = enumerate_cosets(swapped, bas.subgroup(name));
        CHECK(t == s);
        SubgroupReport a = classify_subgroup(two, t);
        SubgroupReport b = classify_subgroup(swapped, s);
        CHECK(a.normal == b.normal);
        CHECK(a.phi_invariant == b.phi_invariant);
        CHECK(a.leaf_invariant == b.leaf_invariant);
        CHECK(a.weakly_leaf_invariant_V == b.weakly_leaf_invariant_V);
        CHECK(a.weakly_leaf_invariant_Vtilde == b.weakly_leaf_invariant_Vtilde);
        CHECK(a.tree.nodes.size() == b.tree.nodes.size());
        CHECK(a.recommended == b.recommended);
    }
}
