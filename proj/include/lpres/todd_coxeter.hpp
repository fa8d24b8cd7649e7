#pragma once

/*
 * HLT-style coset enumeration over a finite presentation.
 *
 * Rows are cosets, columns alternate generator and inverse (column 2g for
 * generator g+1, column 2g+1 for its inverse). Subgroup generator words
 * are scanned once at the base coset, then every live coset is scanned
 * against every relator, defining new cosets where a scan stalls and
 * merging cosets through a union-find queue when scans close up. When
 * the presented index is finite and max_cosets is large enough, the
 * result is the standardized coset table of the subgroup; when the bound
 * is exhausted the call reports failure instead of looping forever.
 */

#include <deque>
#include <optional>
#include <utility>
#include <vector>

#include "coset_table.hpp"
#include "word.hpp"

namespace lpres {

namespace detail {

struct EnumerationOverflow {};

class HltEnumerator {
  public:
    HltEnumerator(int ngens, int max_cosets) : ngens_(ngens), max_(max_cosets) {
        tab_.push_back(std::vector<int>(static_cast<std::size_t>(2 * ngens_), -1));
        parent_.push_back(0);
    }

    static int column(int letter) {
        return letter > 0 ? 2 * (letter - 1) : 2 * (-letter - 1) + 1;
    }

    bool run(const std::vector<Word>& relators, const std::vector<Word>& subgroup_gens) {
        try {
            for (const Word& w : subgroup_gens)
                if (!w.empty())
                    scan_and_fill(rep(0), w);
            for (int alpha = 0; alpha < static_cast<int>(tab_.size()); ++alpha) {
                if (rep(alpha) != alpha)
                    continue;
                for (const Word& w : relators) {
                    if (w.empty())
                        continue;
                    scan_and_fill(alpha, w);
                    if (rep(alpha) != alpha)
                        break;
                }
                if (rep(alpha) == alpha)
                    for (int col = 0; col < 2 * ngens_; ++col)
                        if (cell(alpha, col) == -1)
                            define(alpha, col);
            }
        } catch (const EnumerationOverflow&) {
            return false;
        }
        return true;
    }

    CosetTable result() {
        std::vector<int> lives;
        std::vector<int> index(tab_.size(), -1);
        for (int c = 0; c < static_cast<int>(tab_.size()); ++c)
            if (rep(c) == c) {
                index[static_cast<std::size_t>(c)] = static_cast<int>(lives.size());
                lives.push_back(c);
            }
        std::vector<std::vector<int>> cols(static_cast<std::size_t>(ngens_),
                                           std::vector<int>(lives.size()));
        for (int g = 0; g < ngens_; ++g)
            for (std::size_t k = 0; k < lives.size(); ++k) {
                int d = cell(lives[k], 2 * g);
                cols[static_cast<std::size_t>(g)][k] = index[static_cast<std::size_t>(rep(d))];
            }
        return CosetTable(std::move(cols)).standardized();
    }

  private:
    int& cell(int c, int col) { return tab_[static_cast<std::size_t>(c)][static_cast<std::size_t>(col)]; }

    int rep(int c) {
        int r = c;
        while (parent_[static_cast<std::size_t>(r)] != r)
            r = parent_[static_cast<std::size_t>(r)];
        while (parent_[static_cast<std::size_t>(c)] != r) {
            int next = parent_[static_cast<std::size_t>(c)];
            parent_[static_cast<std::size_t>(c)] = r;
            c = next;
        }
        return r;
    }

    int define(int c, int col) {
        if (static_cast<int>(tab_.size()) >= max_)
            throw EnumerationOverflow{};
        int d = static_cast<int>(tab_.size());
        tab_.push_back(std::vector<int>(static_cast<std::size_t>(2 * ngens_), -1));
        parent_.push_back(d);
        cell(c, col) = d;
        cell(d, col ^ 1) = c;
        return d;
    }

    void merge(int a, int b) {
        a = rep(a);
        b = rep(b);
        if (a == b)
            return;
        if (a > b)
            std::swap(a, b);
        parent_[static_cast<std::size_t>(b)] = a;
        queue_.push_back(b);
    }

    /* Transfer the edges of merged cosets onto their representatives,
     * cascading further merges as columns collide. */
    void process_coincidences() {
        while (!queue_.empty()) {
            int e = queue_.front();
            queue_.pop_front();
            for (int col = 0; col < 2 * ngens_; ++col) {
                int d = cell(e, col);
                if (d == -1)
                    continue;
                cell(e, col) = -1;
                int icol = col ^ 1;
                int a = rep(e);
                int dd = rep(d);
                if (cell(dd, icol) == e)
                    cell(dd, icol) = -1;
                int existing = cell(a, col);
                if (existing != -1) {
                    merge(existing, dd);
                } else {
                    int back = cell(dd, icol);
                    if (back != -1) {
                        merge(back, a);
                    } else {
                        cell(a, col) = dd;
                        cell(dd, icol) = a;
                    }
                }
            }
        }
    }

    /* Trace w forward from alpha and backward toward it; a meeting scan
     * either closes (possibly merging cosets) or deduces one entry, a
     * stalled forward scan defines the missing coset. */
    void scan_and_fill(int alpha, const Word& w) {
        int f = alpha;
        int i = 0;
        int b = alpha;
        int j = static_cast<int>(w.size()) - 1;
        for (;;) {
            while (i <= j && cell(f, column(w[static_cast<std::size_t>(i)])) != -1) {
                f = rep(cell(f, column(w[static_cast<std::size_t>(i)])));
                ++i;
            }
            if (i > j) {
                if (f != b) {
                    merge(f, b);
                    process_coincidences();
                }
                return;
            }
            while (j >= i && cell(b, column(w[static_cast<std::size_t>(j)]) ^ 1) != -1) {
                b = rep(cell(b, column(w[static_cast<std::size_t>(j)]) ^ 1));
                --j;
            }
            if (j < i) {
                merge(f, b);
                process_coincidences();
                return;
            }
            if (j == i) {
                int col = column(w[static_cast<std::size_t>(i)]);
                cell(f, col) = b;
                cell(b, col ^ 1) = f;
                return;
            }
            f = define(f, column(w[static_cast<std::size_t>(i)]));
            ++i;
        }
    }

    int ngens_;
    int max_;
    std::vector<std::vector<int>> tab_;
    std::vector<int> parent_;
    std::deque<int> queue_;
};

} // namespace detail

/* Enumerate the cosets of <subgroup_gens> in <X | relators>. Returns the
 * standardized table, or nothing when max_cosets was exhausted. */
inline std::optional<CosetTable> todd_coxeter(int ngens, const std::vector<Word>& relators,
                                              const std::vector<Word>& subgroup_gens,
                                              int max_cosets = 1 << 16) {
    detail::HltEnumerator enumerator(ngens, max_cosets);
    if (!enumerator.run(relators, subgroup_gens))
        return std::nullopt;
    return enumerator.result();
}

} // namespace lpres
