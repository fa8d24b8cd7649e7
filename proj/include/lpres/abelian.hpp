#pragma once

/*
 * Abelian invariants of L-presented groups.
 *
 * The abelianization of <X | Q | Phi | R> is Z^k modulo the smallest
 * lattice containing the exponent vectors of Q and R that is closed
 * under the abelianized substitutions. For asserted-invariant inputs the
 * closure is computed exactly by saturating a Hermite basis; otherwise
 * the lattice is approximated by instantiating to increasing depths
 * until two consecutive depths give the same Smith data, and the result
 * is marked heuristic because agreement of two truncations proves
 * nothing about deeper ones.
 */

#include <optional>
#include <utility>
#include <vector>

#include "endomorphism.hpp"
#include "errors.hpp"
#include "integer_matrix.hpp"
#include "presentation.hpp"
#include "word.hpp"

namespace lpres {

/* Exponent-sum vector of a word over a k-letter alphabet. */
inline IntVector abelianize_word(const Word& w, int k) {
    IntVector v(static_cast<std::size_t>(k), 0);
    for (int x : w) {
        if (x > 0)
            v[static_cast<std::size_t>(x - 1)] += 1;
        else
            v[static_cast<std::size_t>(-x - 1)] -= 1;
    }
    return v;
}

/* Matrix of the induced map on Z^k; abelianize_word(w^e) equals
 * abelianize_word(w) times this matrix. */
inline IntMatrix abelianize_endo(const FreeEndomorphism& e) {
    IntMatrix m;
    m.reserve(e.images.size());
    for (const Word& img : e.images)
        m.push_back(abelianize_word(img, e.ngens()));
    return m;
}

/* Hermite basis of the smallest lattice containing the vectors and
 * closed under right multiplication by every matrix. Saturation must
 * stabilize because ascending chains of lattices in Z^k are finite; the
 * round cap turns a runaway (impossible unless inputs are inconsistent)
 * into a report instead of a hang. */
inline IntMatrix invariant_lattice_closure(const IntMatrix& vectors,
                                           const std::vector<IntMatrix>& matrices,
                                           int rounds = 1000) {
    IntMatrix basis = hnf(vectors);
    for (int round = 0; round < rounds; ++round) {
        IntMatrix next = basis;
        for (const IntVector& v : basis)
            for (const IntMatrix& m : matrices)
                next.push_back(vec_mat(v, m));
        IntMatrix nb = hnf(next);
        if (nb == basis)
            return basis;
        basis = std::move(nb);
    }
    throw ResourceLimitError("lattice closure did not stabilize within the round cap");
}

struct AbelianInvariants {
    int free_rank = 0;
    std::vector<Int> torsion; // d1 | d2 | ..., each >= 2
    bool heuristic = false;   // true when computed by depth truncation

    bool operator==(const AbelianInvariants&) const = default;
};

/* Abelian invariants of the presented group. Asserted-invariant inputs
 * use exact lattice closure; others need a truncation depth and return
 * the first result two consecutive depths agree on. */
inline AbelianInvariants abelian_invariants(const LPresentation& lp,
                                            std::optional<int> depth = std::nullopt) {
    int k = lp.ngens();
    if (lp.invariant) {
        IntMatrix vectors;
        for (const Word& w : lp.fixed)
            vectors.push_back(abelianize_word(w, k));
        for (const Word& w : lp.iterated)
            vectors.push_back(abelianize_word(w, k));
        std::vector<IntMatrix> matrices;
        for (const FreeEndomorphism& e : lp.substitutions)
            matrices.push_back(abelianize_endo(e));
        IntMatrix basis = invariant_lattice_closure(vectors, matrices);
        auto [rank, torsion] = smith_divisors(basis, static_cast<std::size_t>(k));
        return {rank, std::move(torsion), false};
    }
    if (!depth)
        throw InvarianceRequiredError(
            "a truncation depth is required when the presentation is not asserted-invariant");
    std::optional<std::pair<int, std::vector<Int>>> prev;
    for (int d = 0; d <= *depth; ++d) {
        IntMatrix vectors;
        for (const Word& w : instantiate(lp, d).relators)
            vectors.push_back(abelianize_word(w, k));
        auto cur = smith_divisors(vectors, static_cast<std::size_t>(k));
        if (prev && cur == *prev)
            return {cur.first, std::move(cur.second), true};
        prev = std::move(cur);
    }
    throw InconclusiveError("abelian invariants did not stabilize within the truncation depth");
}

} // namespace lpres
