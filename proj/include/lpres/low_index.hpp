#pragma once

/*
 * Low-index subgroup enumeration.
 *
 * Systematic backtracking over partial coset tables: repeatedly take the
 * first undefined (coset, column) cell and try every coset without a
 * matching inverse entry plus, below the index bound, one fresh coset.
 * After each choice, forced deductions from a finite relator truncation
 * are applied to a fixpoint, abandoning contradictory branches. Complete
 * tables are standardized, then accepted by the same tree verification
 * the enumerator uses, so the truncation depth influences pruning speed
 * but never the result set. The output lists every subgroup of index at
 * most max_index exactly once (subgroups, not conjugacy classes),
 * sorted by index and table content.
 */

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "coset_table.hpp"
#include "enumerate.hpp"
#include "errors.hpp"
#include "presentation.hpp"

namespace lpres {

/* Raised when a search branch hits a resource limit; the subgroups
 * found before the failure are attached. */
struct LowIndexInconclusiveError : InconclusiveError {
    std::vector<CosetTable> partial;

    LowIndexInconclusiveError(const std::string& what, std::vector<CosetTable> found)
        : InconclusiveError(what), partial(std::move(found)) {}
};

namespace detail {

class LowIndexSearch {
  public:
    LowIndexSearch(const LPresentation& lp, int max_index, int prune_depth)
        : lp_(lp), max_index_(max_index), cols_(2 * lp.ngens()) {
        for (const Word& w : instantiate(lp, prune_depth).relators) {
            std::vector<int> cw;
            cw.reserve(w.size());
            for (int x : w)
                cw.push_back(x > 0 ? 2 * (x - 1) : 2 * (-x - 1) + 1);
            relators_.push_back(std::move(cw));
        }
        fwd_.push_back(std::vector<int>(static_cast<std::size_t>(cols_), -1));
    }

    std::vector<CosetTable> run() {
        recurse();
        std::map<std::vector<std::vector<int>>, CosetTable> unique;
        for (CosetTable& t : results_)
            unique.emplace(t.columns(), std::move(t));
        std::vector<CosetTable> out;
        out.reserve(unique.size());
        for (auto& [key, t] : unique)
            out.push_back(std::move(t));
        std::sort(out.begin(), out.end(), [](const CosetTable& a, const CosetTable& b) {
            if (a.ncosets() != b.ncosets())
                return a.ncosets() < b.ncosets();
            return a.columns() < b.columns();
        });
        return out;
    }

    std::vector<CosetTable> found_so_far() && { return std::move(results_); }

  private:
    /* Apply forced deductions to a fixpoint; false on contradiction. */
    bool scan_all() {
        bool changed = true;
        while (changed) {
            changed = false;
            for (const std::vector<int>& wl : relators_) {
                for (int c = 0; c < static_cast<int>(fwd_.size()); ++c) {
                    int f = c;
                    int i = 0;
                    int b = c;
                    int j = static_cast<int>(wl.size()) - 1;
                    while (i <= j && cell(f, wl[static_cast<std::size_t>(i)]) != -1) {
                        f = cell(f, wl[static_cast<std::size_t>(i)]);
                        ++i;
                    }
                    if (i > j) {
                        if (f != c)
                            return false;
                        continue;
                    }
                    while (j >= i && cell(b, wl[static_cast<std::size_t>(j)] ^ 1) != -1) {
                        b = cell(b, wl[static_cast<std::size_t>(j)] ^ 1);
                        --j;
                    }
                    if (j < i) {
                        if (f != b)
                            return false;
                    } else if (j == i) {
                        int col = wl[static_cast<std::size_t>(i)];
                        if (cell(b, col ^ 1) != -1)
                            return false; // b already has a different col-predecessor
                        cell(f, col) = b;
                        cell(b, col ^ 1) = f;
                        changed = true;
                    }
                }
            }
        }
        return true;
    }

    void recurse() {
        std::vector<std::vector<int>> saved = fwd_;
        if (!scan_all()) {
            fwd_ = std::move(saved);
            return;
        }
        int c = -1, col = -1;
        for (int cc = 0; cc < static_cast<int>(fwd_.size()) && c == -1; ++cc)
            for (int cl = 0; cl < cols_; ++cl)
                if (cell(cc, cl) == -1) {
                    c = cc;
                    col = cl;
                    break;
                }
        if (c == -1) {
            std::vector<std::vector<int>> columns(static_cast<std::size_t>(lp_.ngens()),
                                                  std::vector<int>(fwd_.size()));
            for (int g = 0; g < lp_.ngens(); ++g)
                for (int cc = 0; cc < static_cast<int>(fwd_.size()); ++cc)
                    columns[static_cast<std::size_t>(g)][static_cast<std::size_t>(cc)] =
                        cell(cc, 2 * g);
            CosetTable t = CosetTable(std::move(columns)).standardized();
            if (verify_table(lp_, t))
                results_.push_back(std::move(t));
            fwd_ = std::move(saved);
            return;
        }
        for (int d = 0; d < static_cast<int>(fwd_.size()); ++d) {
            if (cell(d, col ^ 1) != -1)
                continue;
            std::vector<std::vector<int>> snap = fwd_;
            cell(c, col) = d;
            cell(d, col ^ 1) = c;
            recurse();
            fwd_ = std::move(snap);
        }
        if (static_cast<int>(fwd_.size()) < max_index_) {
            std::vector<std::vector<int>> snap = fwd_;
            fwd_.push_back(std::vector<int>(static_cast<std::size_t>(cols_), -1));
            int d = static_cast<int>(fwd_.size()) - 1;
            cell(c, col) = d;
            cell(d, col ^ 1) = c;
            recurse();
            fwd_ = std::move(snap);
        }
        fwd_ = std::move(saved);
    }

    int& cell(int c, int col) {
        return fwd_[static_cast<std::size_t>(c)][static_cast<std::size_t>(col)];
    }

    const LPresentation& lp_;
    int max_index_;
    int cols_;
    std::vector<std::vector<int>> relators_;
    std::vector<std::vector<int>> fwd_;
    std::vector<CosetTable> results_;
};

} // namespace detail

/* All subgroups of index <= max_index, one standardized table each. The
 * pruning truncation depth follows the schedule but is capped, deeper
 * instantiations only slow the scan down without changing the output. */
inline std::vector<CosetTable> low_index_tables(const LPresentation& lp, int max_index,
                                                const EnumerationLimits& limits = {}) {
    if (max_index < 1)
        throw MalformedInputError("index bound must be at least 1");
    lp.validate();
    limits.validate();
    int prune_depth = std::min(limits.depth_schedule.back(), 6);
    detail::LowIndexSearch search(lp, max_index, prune_depth);
    try {
        return search.run();
    } catch (const ResourceLimitError& e) {
        throw LowIndexInconclusiveError(std::string("low-index search hit a resource limit: ") +
                                            e.what(),
                                        std::move(search).found_so_far());
    }
}

/* A transitive action is primitive exactly when the point stabilizer is
 * a maximal subgroup: test whether any pair generates a proper block
 * system, by closing the pair under the generators in a union-find. */
inline bool is_primitive(const CosetTable& table) {
    int n = table.ncosets();
    if (n == 1)
        return true;
    std::vector<Permutation> gens;
    for (const auto& col : table.columns()) {
        gens.push_back(col);
        gens.push_back(perm_inverse(col));
    }

    auto blocks_from = [&](int a, int b) {
        std::vector<int> parent(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i)
            parent[static_cast<std::size_t>(i)] = i;
        auto find = [&](int x) {
            while (parent[static_cast<std::size_t>(x)] != x) {
                parent[static_cast<std::size_t>(x)] =
                    parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
                x = parent[static_cast<std::size_t>(x)];
            }
            return x;
        };
        auto unite = [&](int x, int y) {
            x = find(x);
            y = find(y);
            if (x == y)
                return false;
            parent[static_cast<std::size_t>(std::max(x, y))] = std::min(x, y);
            return true;
        };
        std::vector<std::pair<int, int>> queue;
        unite(a, b);
        queue.emplace_back(a, b);
        while (!queue.empty()) {
            auto [x, y] = queue.back();
            queue.pop_back();
            for (const Permutation& g : gens) {
                int gx = g[static_cast<std::size_t>(x)];
                int gy = g[static_cast<std::size_t>(y)];
                if (unite(gx, gy))
                    queue.emplace_back(gx, gy);
            }
        }
        std::set<int> reps;
        for (int i = 0; i < n; ++i)
            reps.insert(find(i));
        return static_cast<int>(reps.size());
    };

    for (int b = 1; b < n; ++b)
        if (blocks_from(0, b) != 1)
            return false;
    return true;
}

} // namespace lpres
