#pragma once

/*
 * Complete coset tables.
 *
 * A table stores, per generator, the permutation the generator induces
 * on the cosets of a finite-index subgroup; coset 0 is the subgroup
 * itself. Construction checks that each column is a bijection and that
 * coset 0 reaches everything, so a CosetTable always describes a
 * transitive action. Tables are standardized so that a breadth first
 * search from coset 0 through positive letters, trying generators in
 * order, discovers cosets in increasing numeric order; standardized
 * tables of the same subgroup are identical, which makes equality and
 * deduplication meaningful.
 */

#include <vector>

#include "action.hpp"
#include "errors.hpp"
#include "word.hpp"

namespace lpres {

class CosetTable {
  public:
    /* Generator words of the subgroup this table was computed for; empty
     * for tables built from actions rather than from a word list. */
    std::vector<Word> defining_generators;

    /* columns[g-1][c] is the coset c * x_g. */
    explicit CosetTable(std::vector<std::vector<int>> columns) : fwd_(std::move(columns)) {
        if (fwd_.empty())
            throw MalformedInputError("coset table needs at least one generator column");
        int n = static_cast<int>(fwd_.front().size());
        if (n == 0)
            throw MalformedInputError("coset table needs at least one coset");
        inv_.assign(fwd_.size(), std::vector<int>(static_cast<std::size_t>(n), -1));
        for (std::size_t g = 0; g < fwd_.size(); ++g) {
            if (static_cast<int>(fwd_[g].size()) != n)
                throw MalformedInputError("coset table columns differ in length");
            for (int c = 0; c < n; ++c) {
                int d = fwd_[g][static_cast<std::size_t>(c)];
                if (d < 0 || d >= n)
                    throw MalformedInputError("coset table entry out of range");
                if (inv_[g][static_cast<std::size_t>(d)] != -1)
                    throw MalformedInputError("coset table column is not a bijection");
                inv_[g][static_cast<std::size_t>(d)] = c;
            }
        }
        std::vector<int> reached = bfs_order();
        if (static_cast<int>(reached.size()) != n)
            throw MalformedInputError("coset table is not transitive");
    }

    int ncosets() const { return static_cast<int>(fwd_.front().size()); }
    int ngens() const { return static_cast<int>(fwd_.size()); }
    const std::vector<std::vector<int>>& columns() const { return fwd_; }

    /* Image of a coset under a single signed letter. */
    int step(int coset, int letter) const {
        int g = letter > 0 ? letter : -letter;
        if (g < 1 || g > ngens())
            throw MalformedInputError("letter outside the coset table's alphabet");
        const auto& col = letter > 0 ? fwd_[static_cast<std::size_t>(g - 1)]
                                     : inv_[static_cast<std::size_t>(g - 1)];
        return col[static_cast<std::size_t>(coset)];
    }

    int trace(int coset, const Word& w) const {
        for (int letter : w)
            coset = step(coset, letter);
        return coset;
    }

    /* Membership in the subgroup the table describes. */
    bool contains(const Word& w) const { return trace(0, w) == 0; }

    GeneratorAction action() const {
        GeneratorAction a;
        a.perms = fwd_;
        return a;
    }

    /* Schreier generators of coset 0's stabilizer: t x (t x)bar^-1 over
     * all transversal representatives t and generators x, trivial ones
     * dropped. The result generates the subgroup. */
    std::vector<Word> subgroup_generators() const {
        std::vector<Word> reps = transversal_words();
        std::vector<Word> out;
        for (int c = 0; c < ncosets(); ++c) {
            for (int g = 1; g <= ngens(); ++g) {
                int d = step(c, g);
                Word w = mul(reps[static_cast<std::size_t>(c)], Word{g},
                             inverse(reps[static_cast<std::size_t>(d)]));
                if (!w.empty())
                    out.push_back(std::move(w));
            }
        }
        return out;
    }

    /* Breadth first transversal over positive letters, one word per
     * coset, shortest first. */
    std::vector<Word> transversal_words() const {
        std::vector<Word> reps(static_cast<std::size_t>(ncosets()));
        std::vector<char> seen(static_cast<std::size_t>(ncosets()), 0);
        std::vector<int> queue{0};
        seen[0] = 1;
        for (std::size_t i = 0; i < queue.size(); ++i) {
            int c = queue[i];
            for (int g = 1; g <= ngens(); ++g) {
                int d = step(c, g);
                if (!seen[static_cast<std::size_t>(d)]) {
                    seen[static_cast<std::size_t>(d)] = 1;
                    reps[static_cast<std::size_t>(d)] = mul(reps[static_cast<std::size_t>(c)], Word{g});
                    queue.push_back(d);
                }
            }
        }
        return reps;
    }

    /* Renumber cosets in breadth first discovery order. The result is
     * the canonical form used for comparisons. */
    CosetTable standardized() const {
        std::vector<int> order = bfs_order();
        std::vector<int> pos(order.size());
        for (std::size_t i = 0; i < order.size(); ++i)
            pos[static_cast<std::size_t>(order[i])] = static_cast<int>(i);
        std::vector<std::vector<int>> cols(fwd_.size(),
                                           std::vector<int>(static_cast<std::size_t>(ncosets())));
        for (std::size_t g = 0; g < fwd_.size(); ++g)
            for (int c = 0; c < ncosets(); ++c)
                cols[g][static_cast<std::size_t>(pos[static_cast<std::size_t>(c)])] =
                    pos[static_cast<std::size_t>(fwd_[g][static_cast<std::size_t>(c)])];
        CosetTable out(std::move(cols));
        out.defining_generators = defining_generators;
        return out;
    }

    bool operator==(const CosetTable& other) const { return fwd_ == other.fwd_; }
    bool operator<(const CosetTable& other) const { return fwd_ < other.fwd_; }

  private:
    std::vector<int> bfs_order() const {
        std::vector<char> seen(fwd_.front().size(), 0);
        std::vector<int> order{0};
        seen[0] = 1;
        for (std::size_t i = 0; i < order.size(); ++i) {
            for (const auto& col : fwd_) {
                int d = col[static_cast<std::size_t>(order[i])];
                if (!seen[static_cast<std::size_t>(d)]) {
                    seen[static_cast<std::size_t>(d)] = 1;
                    order.push_back(d);
                }
            }
        }
        return order;
    }

    std::vector<std::vector<int>> fwd_;
    std::vector<std::vector<int>> inv_;
};

/* A finite-index subgroup is normal iff each of its Schreier generators
 * stabilizes every coset, i.e. lies in every point stabilizer. */
inline bool is_normal(const CosetTable& table) {
    GeneratorAction action = table.action();
    for (const Word& u : table.subgroup_generators())
        if (!perm_is_identity(act_word(action, u)))
            return false;
    return true;
}

} // namespace lpres
