#pragma once

/*
 * Schreier transversals and Reidemeister rewriting.
 *
 * For a coset table of U the transversal T holds one representative word
 * per coset, built breadth first through positive letters in generator
 * order, so T is prefix closed and matches the representatives used in
 * the golden fixtures. The subgroup alphabet Y has one symbol per pair
 * (coset t, generator x) whose Schreier word t x (tx)bar^-1 is nontrivial,
 * numbered lexicographically by (coset, generator). U is free on Y when
 * the ambient group is free, of rank 1 + n(|X| - 1).
 *
 * rewrite maps a member word over X to its expression over Y by reading
 * off the Schreier symbol of each step; it is a homomorphism on U and
 * the identity map after expanding each Y symbol back to its definition.
 */

#include <string>
#include <utility>
#include <vector>

#include "coset_table.hpp"
#include "endomorphism.hpp"
#include "errors.hpp"
#include "word.hpp"

namespace lpres {

class SchreierData {
  public:
    explicit SchreierData(CosetTable table) : table_(std::move(table)) {
        int n = table_.ncosets();
        int k = table_.ngens();
        reps_ = table_.transversal_words();
        pair_.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(k), -1));
        for (int c = 0; c < n; ++c) {
            for (int g = 1; g <= k; ++g) {
                int d = table_.step(c, g);
                Word w = mul(reps_[static_cast<std::size_t>(c)], Word{g},
                             inverse(reps_[static_cast<std::size_t>(d)]));
                if (!w.empty()) {
                    pair_[static_cast<std::size_t>(c)][static_cast<std::size_t>(g - 1)] =
                        static_cast<int>(defs_.size());
                    defs_.push_back(std::move(w));
                    def_pairs_.emplace_back(c, g);
                }
            }
        }
    }

    const CosetTable& table() const { return table_; }

    /* Transversal representative per coset, empty word for coset 0. */
    const std::vector<Word>& transversal() const { return reps_; }

    /* Number of subgroup generators |Y|. */
    int rank() const { return static_cast<int>(defs_.size()); }

    /* Definition word over X of each Y symbol, in Y order. */
    const std::vector<Word>& definitions() const { return defs_; }

    /* (coset, generator) pair of each Y symbol. */
    const std::vector<std::pair<int, int>>& definition_pairs() const { return def_pairs_; }

    /* Y symbol for a (coset, generator) step, -1 when the Schreier word
     * at that step is trivial. */
    int symbol_at(int coset, int gen) const {
        return pair_[static_cast<std::size_t>(coset)][static_cast<std::size_t>(gen - 1)];
    }

  private:
    CosetTable table_;
    std::vector<Word> reps_;
    std::vector<std::vector<int>> pair_;
    std::vector<Word> defs_;
    std::vector<std::pair<int, int>> def_pairs_;
};

inline SchreierData schreier_data(const CosetTable& table) { return SchreierData(table); }

/* Reidemeister rewriting of a subgroup member into the Y alphabet,
 * reduced as it is produced. Words outside the subgroup have no image
 * under the rewriting map and are rejected. */
inline Word rewrite(const SchreierData& sd, const Word& w) {
    const CosetTable& table = sd.table();
    int c = 0;
    Word out;
    for (int x : w) {
        if (x > 0) {
            int y = sd.symbol_at(c, x);
            if (y >= 0) {
                if (!out.empty() && out.back() == -(y + 1))
                    out.pop_back();
                else
                    out.push_back(y + 1);
            }
            c = table.step(c, x);
        } else {
            c = table.step(c, x);
            int y = sd.symbol_at(c, -x);
            if (y >= 0) {
                if (!out.empty() && out.back() == y + 1)
                    out.pop_back();
                else
                    out.push_back(-(y + 1));
            }
        }
    }
    if (c != 0)
        throw NotAMemberError("rewriting is defined on subgroup members only");
    return out;
}

/* Endomorphism of F(Y) induced by an endomorphism of F(X) mapping the
 * subgroup into itself. The premise is checked: every Schreier generator
 * image must stay in the subgroup. */
inline FreeEndomorphism induced_endomorphism(const SchreierData& sd, const FreeEndomorphism& e) {
    FreeEndomorphism out;
    out.images.reserve(sd.definitions().size());
    for (std::size_t i = 0; i < sd.definitions().size(); ++i) {
        Word image = apply_endo(e, sd.definitions()[i]);
        if (!sd.table().contains(image))
            throw NotInvariantError("substitution image of x" + std::to_string(i + 1) +
                                    " leaves the subgroup");
        out.images.push_back(rewrite(sd, image));
    }
    return out;
}

/* Endomorphism of F(Y) induced by conjugation g -> t g t^-1; defined on
 * the subgroup exactly when the subgroup is normal. */
inline FreeEndomorphism conjugation_endo(const SchreierData& sd, const Word& t) {
    if (!is_normal(sd.table()))
        throw NormalityRequiredError("conjugation maps the subgroup to itself only when normal");
    FreeEndomorphism out;
    out.images.reserve(sd.definitions().size());
    for (const Word& u : sd.definitions())
        out.images.push_back(rewrite(sd, mul(t, u, inverse(t))));
    return out;
}

} // namespace lpres
