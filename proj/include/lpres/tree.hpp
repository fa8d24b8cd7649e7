#pragma once

/*
 * Iterated-substitution trees.
 *
 * Given substitutions Phi and a base action phi on a finite coset space,
 * the tree collects a set V of monoid elements whose induced actions
 * sigma*phi are pairwise distinct. A worklist seeded with Phi is drained
 * in the length-then-right-lex order; a candidate joins V when its action
 * is new, otherwise it becomes a leaf recording the minimal earlier node
 * with the same action. Termination follows because only finitely many
 * actions into a finite symmetric group exist.
 *
 * The leadsto variant resolves leafs through factors_through instead of
 * equality, producing the smaller node set used by the weak normal
 * subgroup construction; each of its leafs keeps the witness map.
 */

#include <deque>
#include <utility>
#include <vector>

#include "action.hpp"
#include "endomorphism.hpp"
#include "presentation.hpp"

namespace lpres {

struct TreeEdge {
    bool to_leaf = false;
    int index = -1; // node index, or leaf index when to_leaf
};

struct TreeLeaf {
    MonoidElement element;
    int resolved_node = -1; // the minimal node with matching action
    GeneratorAction action;
};

struct SubstitutionTree {
    std::vector<FreeEndomorphism> phi;
    GeneratorAction base_action;
    std::vector<MonoidElement> nodes; // ascending, nodes[0] = identity
    std::vector<GeneratorAction> node_actions;
    std::vector<TreeLeaf> leafs;
    std::vector<std::vector<TreeEdge>> edges; // edges[node][i] = target of prepending phi_i
};

struct LeadstoLeaf {
    MonoidElement element;
    int resolved_node = -1;
    GeneratorAction action;
    PartialHom witness;
};

struct LeadstoTree {
    std::vector<MonoidElement> nodes;
    std::vector<GeneratorAction> node_actions;
    std::vector<LeadstoLeaf> leafs;
    std::vector<std::vector<TreeEdge>> edges;
};

/* Build V for the given substitutions over the given action. Worklist
 * items carry the parent node and substitution index so the edge map can
 * be filled as candidates resolve. */
inline SubstitutionTree iterating_endomorphisms(const std::vector<FreeEndomorphism>& phi,
                                                const GeneratorAction& action,
                                                std::size_t max_nodes = 100000) {
    SubstitutionTree tree;
    tree.phi = phi;
    tree.base_action = action;
    tree.nodes.push_back(MonoidElement{});
    tree.node_actions.push_back(action);
    tree.edges.emplace_back(phi.size());

    struct Item {
        MonoidElement element;
        GeneratorAction action;
        int parent;
        int sub;
    };
    std::deque<Item> work;
    for (std::size_t i = 0; i < phi.size(); ++i)
        work.push_back({MonoidElement{static_cast<int>(i)}, compose_action(action, phi[i]), 0,
                        static_cast<int>(i)});

    while (!work.empty()) {
        Item item = std::move(work.front());
        work.pop_front();
        int hit = -1;
        for (std::size_t k = 0; k < tree.node_actions.size(); ++k)
            if (actions_equal(tree.node_actions[k], item.action)) {
                hit = static_cast<int>(k);
                break;
            }
        if (hit >= 0) {
            tree.edges[static_cast<std::size_t>(item.parent)][static_cast<std::size_t>(item.sub)] =
                TreeEdge{true, static_cast<int>(tree.leafs.size())};
            tree.leafs.push_back({std::move(item.element), hit, std::move(item.action)});
            continue;
        }
        int node = static_cast<int>(tree.nodes.size());
        if (tree.nodes.size() >= max_nodes)
            throw ResourceLimitError("substitution tree exceeded node cap");
        tree.edges[static_cast<std::size_t>(item.parent)][static_cast<std::size_t>(item.sub)] =
            TreeEdge{false, node};
        tree.nodes.push_back(item.element);
        tree.node_actions.push_back(item.action);
        tree.edges.emplace_back(phi.size());
        for (std::size_t i = 0; i < phi.size(); ++i) {
            MonoidElement child;
            child.reserve(item.element.size() + 1);
            child.push_back(static_cast<int>(i));
            child.insert(child.end(), item.element.begin(), item.element.end());
            work.push_back({std::move(child), compose_action(item.action, phi[i]), node,
                            static_cast<int>(i)});
        }
    }
    return tree;
}

/* The leafs whose action equals the root action; prepending them to any
 * node does not change its action, so they induce endomorphisms of the
 * subgroup in the leaf-invariant construction. */
inline std::vector<MonoidElement> phi_leafs(const SubstitutionTree& tree,
                                            const GeneratorAction& action) {
    std::vector<MonoidElement> out;
    for (const TreeLeaf& leaf : tree.leafs)
        if (actions_equal(leaf.action, action))
            out.push_back(leaf.element);
    return out;
}

/* Rebuild the tree with leadsto resolution: a candidate becomes a leaf
 * of the minimal node whose action it factors through. */
inline LeadstoTree leadsto_subtree(const SubstitutionTree& tree, const GeneratorAction& action,
                                   std::size_t max_nodes = 100000) {
    const std::vector<FreeEndomorphism>& phi = tree.phi;
    LeadstoTree out;
    out.nodes.push_back(MonoidElement{});
    out.node_actions.push_back(action);
    out.edges.emplace_back(phi.size());

    struct Item {
        MonoidElement element;
        GeneratorAction action;
        int parent;
        int sub;
    };
    std::deque<Item> work;
    for (std::size_t i = 0; i < phi.size(); ++i)
        work.push_back({MonoidElement{static_cast<int>(i)}, compose_action(action, phi[i]), 0,
                        static_cast<int>(i)});

    while (!work.empty()) {
        Item item = std::move(work.front());
        work.pop_front();
        int hit = -1;
        PartialHom witness;
        for (std::size_t k = 0; k < out.node_actions.size(); ++k) {
            if (auto hom = factors_through(item.action, out.node_actions[k])) {
                hit = static_cast<int>(k);
                witness = *hom;
                break;
            }
        }
        if (hit >= 0) {
            out.edges[static_cast<std::size_t>(item.parent)][static_cast<std::size_t>(item.sub)] =
                TreeEdge{true, static_cast<int>(out.leafs.size())};
            out.leafs.push_back({std::move(item.element), hit, std::move(item.action), witness});
            continue;
        }
        int node = static_cast<int>(out.nodes.size());
        if (out.nodes.size() >= max_nodes)
            throw ResourceLimitError("leadsto tree exceeded node cap");
        out.edges[static_cast<std::size_t>(item.parent)][static_cast<std::size_t>(item.sub)] =
            TreeEdge{false, node};
        out.nodes.push_back(item.element);
        out.node_actions.push_back(item.action);
        out.edges.emplace_back(phi.size());
        for (std::size_t i = 0; i < phi.size(); ++i) {
            MonoidElement child;
            child.reserve(item.element.size() + 1);
            child.push_back(static_cast<int>(i));
            child.insert(child.end(), item.element.begin(), item.element.end());
            work.push_back({std::move(child), compose_action(item.action, phi[i]), node,
                            static_cast<int>(i)});
        }
    }
    return out;
}

/* Node whose action matches an arbitrary monoid element, found by
 * rewriting leaf suffixes to their resolutions. Each rewrite strictly
 * decreases the element in the tree order, so the walk terminates. */
inline int resolve_element(const SubstitutionTree& tree, MonoidElement elem) {
    for (;;) {
        int node = 0;
        bool rewrote = false;
        for (std::size_t pos = elem.size(); pos-- > 0;) {
            int factor = elem[pos];
            const TreeEdge& edge =
                tree.edges[static_cast<std::size_t>(node)][static_cast<std::size_t>(factor)];
            if (!edge.to_leaf) {
                node = edge.index;
                continue;
            }
            const TreeLeaf& leaf = tree.leafs[static_cast<std::size_t>(edge.index)];
            const MonoidElement& resolution =
                tree.nodes[static_cast<std::size_t>(leaf.resolved_node)];
            MonoidElement next(elem.begin(), elem.begin() + static_cast<std::ptrdiff_t>(pos));
            next.insert(next.end(), resolution.begin(), resolution.end());
            elem = std::move(next);
            rewrote = true;
            break;
        }
        if (!rewrote)
            return node;
    }
}

} // namespace lpres
