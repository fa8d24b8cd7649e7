#pragma once

/*
 * Graph folding for finitely generated subgroups of free groups.
 *
 * The words are laid out as loops at a base vertex and the resulting
 * labelled graph is folded: whenever two edges with the same label leave
 * one vertex, their endpoints are identified, until the labelling is
 * deterministic. The folded graph recognizes exactly the subgroup the
 * words generate. When every vertex carries all labels the graph is a
 * complete coset table and the subgroup has finite index equal to the
 * vertex count.
 */

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "coset_table.hpp"
#include "word.hpp"

namespace lpres {

struct FoldResult {
    bool complete = false;
    int size = 0;
    std::optional<CosetTable> table; // standardized, present iff complete
};

inline FoldResult fold_subgroup_graph(int ngens, const std::vector<Word>& words) {
    if (ngens < 1)
        throw MalformedInputError("folding needs at least one generator");
    for (const Word& w : words)
        validate_word(w, ngens);

    // Multi-edge lists per vertex, as (column, destination) pairs with
    // column 2(g-1) for g and 2(g-1)+1 for its inverse.
    std::vector<std::vector<std::pair<int, int>>> elist(1);
    for (const Word& w : words) {
        int prev = 0;
        for (std::size_t idx = 0; idx < w.size(); ++idx) {
            int x = w[idx];
            int col = x > 0 ? 2 * (x - 1) : 2 * (-x - 1) + 1;
            int nxt;
            if (idx + 1 == w.size()) {
                nxt = 0;
            } else {
                nxt = static_cast<int>(elist.size());
                elist.emplace_back();
            }
            elist[static_cast<std::size_t>(prev)].emplace_back(col, nxt);
            elist[static_cast<std::size_t>(nxt)].emplace_back(col ^ 1, prev);
            prev = nxt;
        }
    }

    std::vector<int> parent(elist.size());
    for (std::size_t i = 0; i < parent.size(); ++i)
        parent[i] = static_cast<int>(i);
    auto rep = [&](int v) {
        while (parent[static_cast<std::size_t>(v)] != v) {
            parent[static_cast<std::size_t>(v)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
            v = parent[static_cast<std::size_t>(v)];
        }
        return v;
    };

    // Fold to a fixpoint: a vertex with two equal labels forces a merge.
    bool changed = true;
    while (changed) {
        changed = false;
        for (int v = 0; v < static_cast<int>(elist.size()) && !changed; ++v) {
            if (rep(v) != v)
                continue;
            std::map<int, int> seen;
            for (const auto& [col, dst] : elist[static_cast<std::size_t>(v)]) {
                int d = rep(dst);
                auto it = seen.find(col);
                if (it == seen.end()) {
                    seen.emplace(col, d);
                    continue;
                }
                if (it->second == d)
                    continue;
                int keep = std::min(it->second, d);
                int drop = std::max(it->second, d);
                parent[static_cast<std::size_t>(drop)] = keep;
                auto& into = elist[static_cast<std::size_t>(keep)];
                auto& from = elist[static_cast<std::size_t>(drop)];
                into.insert(into.end(), from.begin(), from.end());
                from.clear();
                changed = true;
                break;
            }
        }
    }

    // Renumber the surviving vertices, base vertex first.
    std::map<int, int> number;
    number.emplace(rep(0), 0);
    for (int v = 0; v < static_cast<int>(elist.size()); ++v)
        if (rep(v) == v)
            number.emplace(v, static_cast<int>(number.size()));

    std::vector<std::map<int, int>> adjacency(number.size());
    for (int v = 0; v < static_cast<int>(elist.size()); ++v) {
        if (rep(v) != v)
            continue;
        auto& adj = adjacency[static_cast<std::size_t>(number.at(v))];
        for (const auto& [col, dst] : elist[static_cast<std::size_t>(v)])
            adj[col] = number.at(rep(dst));
    }

    FoldResult result;
    result.size = static_cast<int>(adjacency.size());
    result.complete = true;
    for (const auto& adj : adjacency)
        if (static_cast<int>(adj.size()) != 2 * ngens)
            result.complete = false;
    if (result.complete) {
        std::vector<std::vector<int>> columns(static_cast<std::size_t>(ngens),
                                              std::vector<int>(adjacency.size()));
        for (int g = 0; g < ngens; ++g)
            for (std::size_t v = 0; v < adjacency.size(); ++v)
                columns[static_cast<std::size_t>(g)][v] = adjacency[v].at(2 * g);
        result.table = CosetTable(std::move(columns)).standardized();
    }
    return result;
}

} // namespace lpres
