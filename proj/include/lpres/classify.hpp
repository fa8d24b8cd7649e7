#pragma once

/*
 * Subgroup classification over the substitution tree.
 *
 * Working against a verified coset table, the report answers which
 * subgroup-presentation construction applies: normality, invariance
 * under every substitution (tested over the tree nodes, which exhaust
 * all actions of Phi*), leaf-invariance (every boundary element acts
 * like the root), and weak leaf-invariance in both readings: over the
 * equality tree's boundary (each leaf action factors through the root)
 * and over the leadsto tree (each leaf resolves to the root). The two
 * readings can differ; the constructions key off the leadsto form, so
 * both are reported rather than silently merging them.
 *
 * The stabilizing subgroup of U is the largest Phi*-invariant subgroup
 * of U, realized as an orbit stabilizer of the diagonal action over the
 * tree nodes; the stabilizing core is the largest one normal in F,
 * realized as the kernel intersection of the node actions.
 */

#include <set>
#include <string>
#include <vector>

#include "action.hpp"
#include "coset_table.hpp"
#include "errors.hpp"
#include "orbits.hpp"
#include "permutation.hpp"
#include "presentation.hpp"
#include "tree.hpp"

namespace lpres {

struct SubgroupReport {
    int index = 0;
    bool normal = false;
    bool phi_invariant = false;
    bool leaf_invariant = false;
    bool weakly_leaf_invariant_V = false;
    bool weakly_leaf_invariant_Vtilde = false;
    SubstitutionTree tree;                       // V with actions, leafs and edges
    LeadstoTree leadsto;                         // Vtilde
    std::vector<MonoidElement> phi_leaf_elements; // leafs acting like the root
    std::string recommended;                     // strongest applicable construction
};

inline SubgroupReport classify_subgroup(const LPresentation& lp, const CosetTable& table) {
    if (table.ngens() != lp.ngens())
        throw MalformedInputError("coset table alphabet differs from the presentation's");

    SubgroupReport report;
    report.index = table.ncosets();
    report.normal = is_normal(table);

    GeneratorAction action = table.action();
    report.tree = iterating_endomorphisms(lp.substitutions, action);

    std::vector<Word> defs = table.subgroup_generators();
    report.phi_invariant = true;
    for (const MonoidElement& elem : report.tree.nodes) {
        FreeEndomorphism e = endo_of(lp.substitutions, elem, lp.ngens());
        for (const Word& u : defs)
            if (!table.contains(apply_endo(e, u))) {
                report.phi_invariant = false;
                break;
            }
        if (!report.phi_invariant)
            break;
    }

    report.leaf_invariant = true;
    report.weakly_leaf_invariant_V = true;
    for (const TreeLeaf& leaf : report.tree.leafs) {
        if (!actions_equal(leaf.action, action))
            report.leaf_invariant = false;
        if (!factors_through(leaf.action, action))
            report.weakly_leaf_invariant_V = false;
    }

    report.leadsto = leadsto_subtree(report.tree, action);
    report.weakly_leaf_invariant_Vtilde = true;
    for (const LeadstoLeaf& leaf : report.leadsto.leafs)
        if (leaf.resolved_node != 0)
            report.weakly_leaf_invariant_Vtilde = false;

    report.phi_leaf_elements = phi_leafs(report.tree, action);

    if (lp.invariant && report.normal && report.phi_invariant)
        report.recommended = "invariant-normal";
    else if (lp.invariant && report.leaf_invariant)
        report.recommended = "leaf-invariant";
    else if (lp.invariant && report.normal && report.weakly_leaf_invariant_Vtilde)
        report.recommended = "weakly-leaf-invariant-normal";
    else
        report.recommended = "general";
    return report;
}

/* Table of the largest Phi*-invariant subgroup of U: the stabilizer of
 * the base tuple under the diagonal action of all tree-node actions. */
inline CosetTable stabilizing_subgroup(const LPresentation& lp, const CosetTable& table) {
    SubstitutionTree tree = iterating_endomorphisms(lp.substitutions, table.action());
    std::vector<std::pair<GeneratorAction, int>> components;
    components.reserve(tree.node_actions.size());
    for (const GeneratorAction& a : tree.node_actions)
        components.emplace_back(a, 0);
    return orbit_table(components);
}

/* Table of the largest Phi*-invariant subgroup of U normal in F: the
 * intersection of the kernels of the tree-node actions. */
inline CosetTable stabilizing_core(const LPresentation& lp, const CosetTable& table,
                                   std::size_t closure_cap = 1000000) {
    SubstitutionTree tree = iterating_endomorphisms(lp.substitutions, table.action());
    return kernel_table(tree.node_actions, closure_cap);
}

/* Elements of the finite quotient a normal table describes, as the
 * closure of the generator permutations. */
inline std::vector<Permutation> quotient_group(const CosetTable& table,
                                               std::size_t closure_cap = 1000000) {
    std::vector<Permutation> gens;
    gens.reserve(static_cast<std::size_t>(table.ngens()));
    for (const auto& col : table.columns())
        gens.push_back(col);
    return closure(gens, closure_cap);
}

inline bool is_abelian(const std::vector<Permutation>& elements) {
    for (const Permutation& p : elements)
        for (const Permutation& q : elements)
            if (perm_mul(p, q) != perm_mul(q, p))
                return false;
    return true;
}

/* Dihedral test for a finite permutation group given by its elements:
 * order 2n with n >= 2, an element r of order n whose powers form a
 * cyclic subgroup, and every element outside it an involution
 * inverting r. */
inline bool is_dihedral(const std::vector<Permutation>& elements) {
    std::size_t order = elements.size();
    if (order < 4 || order % 2 != 0)
        return false;
    long long n = static_cast<long long>(order / 2);
    const Permutation* r = nullptr;
    for (const Permutation& p : elements)
        if (perm_order(p) == n) {
            r = &p;
            break;
        }
    if (!r)
        return false;
    std::set<Permutation> cyc;
    Permutation x = perm_identity(static_cast<int>(r->size()));
    for (long long i = 0; i < n; ++i) {
        cyc.insert(x);
        x = perm_mul(x, *r);
    }
    if (static_cast<long long>(cyc.size()) != n)
        return false;
    Permutation ri = perm_inverse(*r);
    for (const Permutation& s : elements) {
        if (cyc.count(s))
            continue;
        if (!perm_is_identity(perm_mul(s, s)))
            return false;
        if (perm_mul(perm_inverse(s), perm_mul(*r, s)) != ri)
            return false;
    }
    return true;
}

} // namespace lpres
