#pragma once

/*
 * Coset tables derived from actions rather than word lists.
 *
 * orbit_table realizes the stabilizer of a tuple of base points under a
 * componentwise diagonal action: the intersection of the preimages of
 * the point stabilizers. kernel_table realizes the intersection of the
 * action kernels as the regular action of the image of the combined
 * homomorphism into a direct product of symmetric groups; the resulting
 * subgroup is normal by construction. restricted_orbit_table re-expresses
 * the orbit of a base coset under a chosen list of words as a table over
 * a fresh alphabet with one generator per word.
 */

#include <map>
#include <vector>

#include "action.hpp"
#include "coset_table.hpp"
#include "errors.hpp"

namespace lpres {

/* Table of the stabilizer of the combined base-point tuple. Points are
 * the reachable tuples, numbered breadth first in generator order. */
inline CosetTable orbit_table(const std::vector<std::pair<GeneratorAction, int>>& components) {
    if (components.empty())
        throw MalformedInputError("orbit table needs at least one component");
    int ngens = components.front().first.ngens();
    for (const auto& [action, base] : components) {
        if (action.ngens() != ngens)
            throw MalformedInputError("orbit components must share an alphabet");
        if (base < 0 || base >= action.npoints())
            throw MalformedInputError("orbit base point out of range");
    }

    std::vector<int> base;
    base.reserve(components.size());
    for (const auto& [action, point] : components)
        base.push_back(point);

    std::map<std::vector<int>, int> num{{base, 0}};
    std::vector<std::vector<int>> order{base};
    for (std::size_t qi = 0; qi < order.size(); ++qi) {
        std::vector<int> tuple = order[qi];
        for (int g = 0; g < ngens; ++g) {
            std::vector<int> next(tuple.size());
            for (std::size_t k = 0; k < components.size(); ++k)
                next[k] = components[k].first.perms[static_cast<std::size_t>(g)]
                                                  [static_cast<std::size_t>(tuple[k])];
            if (num.emplace(next, static_cast<int>(order.size())).second)
                order.push_back(std::move(next));
        }
    }

    std::vector<std::vector<int>> cols(static_cast<std::size_t>(ngens),
                                       std::vector<int>(order.size()));
    for (std::size_t i = 0; i < order.size(); ++i) {
        for (int g = 0; g < ngens; ++g) {
            std::vector<int> next(order[i].size());
            for (std::size_t k = 0; k < components.size(); ++k)
                next[k] = components[k].first.perms[static_cast<std::size_t>(g)]
                                                  [static_cast<std::size_t>(order[i][k])];
            cols[static_cast<std::size_t>(g)][i] = num.at(next);
        }
    }
    return CosetTable(std::move(cols));
}

/* Table of the intersection of the actions' kernels: the regular action
 * of the group generated by the block-combined permutations. */
inline CosetTable kernel_table(const std::vector<GeneratorAction>& actions,
                               std::size_t closure_cap = 1000000) {
    if (actions.empty())
        throw MalformedInputError("kernel table needs at least one action");
    int ngens = actions.front().ngens();
    int total = 0;
    std::vector<int> offsets;
    offsets.reserve(actions.size());
    for (const GeneratorAction& a : actions) {
        if (a.ngens() != ngens)
            throw MalformedInputError("kernel components must share an alphabet");
        offsets.push_back(total);
        total += a.npoints();
    }

    std::vector<Permutation> gens;
    gens.reserve(static_cast<std::size_t>(ngens));
    for (int g = 0; g < ngens; ++g) {
        Permutation comb;
        comb.reserve(static_cast<std::size_t>(total));
        for (std::size_t k = 0; k < actions.size(); ++k)
            for (int x : actions[k].perms[static_cast<std::size_t>(g)])
                comb.push_back(offsets[k] + x);
        gens.push_back(std::move(comb));
    }

    std::vector<Permutation> elements = closure(gens, closure_cap);
    std::map<Permutation, int> num;
    for (std::size_t i = 0; i < elements.size(); ++i)
        num.emplace(elements[i], static_cast<int>(i));

    std::vector<std::vector<int>> cols(static_cast<std::size_t>(ngens),
                                       std::vector<int>(elements.size()));
    for (std::size_t i = 0; i < elements.size(); ++i)
        for (int g = 0; g < ngens; ++g)
            cols[static_cast<std::size_t>(g)][i] =
                num.at(perm_mul(elements[i], gens[static_cast<std::size_t>(g)]));
    return CosetTable(std::move(cols)).standardized();
}

/* Orbit of a table's base coset under the subgroup generated by the
 * given words, as a table over one fresh generator per word. */
inline CosetTable restricted_orbit_table(const CosetTable& table,
                                         const std::vector<Word>& gen_words) {
    if (gen_words.empty())
        throw MalformedInputError("restricted orbit needs at least one generator word");
    GeneratorAction action = table.action();
    std::vector<Permutation> perms;
    perms.reserve(gen_words.size());
    for (const Word& w : gen_words)
        perms.push_back(act_word(action, w));

    std::map<int, int> num{{0, 0}};
    std::vector<int> order{0};
    for (std::size_t qi = 0; qi < order.size(); ++qi)
        for (const Permutation& p : perms) {
            int d = p[static_cast<std::size_t>(order[qi])];
            if (num.emplace(d, static_cast<int>(order.size())).second)
                order.push_back(d);
        }

    std::vector<std::vector<int>> cols(perms.size(), std::vector<int>(order.size()));
    for (std::size_t i = 0; i < order.size(); ++i)
        for (std::size_t g = 0; g < perms.size(); ++g)
            cols[g][i] = num.at(perms[g][static_cast<std::size_t>(order[i])]);
    return CosetTable(std::move(cols));
}

} // namespace lpres
