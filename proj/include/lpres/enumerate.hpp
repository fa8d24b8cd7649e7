#pragma once

/*
 * Truncate-and-verify coset enumeration for L-presented groups.
 *
 * The relator set of an L-presentation is infinite, so enumeration runs
 * against finite truncations of increasing depth. A closed table found at
 * some depth only proves the base stabilizer contains the subgroup times
 * the truncated normal closure; the verification step then builds the
 * tree V against the table's action and checks that the fixed relators
 * and every r^delta for delta in V act trivially. Because every sigma in
 * Phi* acts like some tree node, this forces the whole iterated relator
 * family into the kernel, so an accepted table is exact, not truncated.
 */

#include <optional>
#include <vector>

#include "coset_table.hpp"
#include "errors.hpp"
#include "presentation.hpp"
#include "todd_coxeter.hpp"
#include "tree.hpp"

namespace lpres {

struct EnumerationLimits {
    int max_cosets = 1 << 16;
    std::vector<int> depth_schedule{2, 4, 6, 8};
    std::size_t closure_cap = 1000000;

    void validate() const {
        if (max_cosets < 1 || closure_cap < 1 || depth_schedule.empty())
            throw MalformedInputError("enumeration limits must be positive");
        for (std::size_t i = 0; i < depth_schedule.size(); ++i)
            if (depth_schedule[i] < 0 || (i && depth_schedule[i] <= depth_schedule[i - 1]))
                throw MalformedInputError("depth schedule must be increasing and nonnegative");
    }
};

/* Exactness check for a candidate table: Q and every r^delta over the
 * tree V of the table's own action must act trivially. */
inline bool verify_table(const LPresentation& lp, const CosetTable& table) {
    GeneratorAction action = table.action();
    for (const Word& q : lp.fixed)
        if (!perm_is_identity(act_word(action, q)))
            return false;
    SubstitutionTree tree = iterating_endomorphisms(lp.substitutions, action);
    for (const MonoidElement& elem : tree.nodes) {
        FreeEndomorphism e = endo_of(lp.substitutions, elem, lp.ngens());
        for (const Word& r : lp.iterated)
            if (!perm_is_identity(act_word(action, apply_endo(e, r))))
                return false;
    }
    return true;
}

/* Coset table of the subgroup generated by subgroup_gens. Runs the
 * depth schedule until a closed table verifies; a subgroup of infinite
 * index can never verify, so exhaustion reports inconclusive rather
 * than an answer. The verified truncation depth is reported through
 * verified_depth when requested. */
inline CosetTable enumerate_cosets(const LPresentation& lp, const std::vector<Word>& subgroup_gens,
                                   const EnumerationLimits& limits = {},
                                   int* verified_depth = nullptr) {
    lp.validate();
    limits.validate();
    for (const Word& w : subgroup_gens)
        validate_word(w, lp.ngens());
    for (int depth : limits.depth_schedule) {
        FinitePresentation trunc = instantiate(lp, depth);
        std::optional<CosetTable> table =
            todd_coxeter(lp.ngens(), trunc.relators, subgroup_gens, limits.max_cosets);
        if (!table)
            continue;
        if (verify_table(lp, *table)) {
            if (verified_depth)
                *verified_depth = depth;
            table->defining_generators = subgroup_gens;
            return *table;
        }
    }
    throw InconclusiveError("coset enumeration exhausted its limits without a verified table; "
                            "the subgroup may have infinite index");
}

} // namespace lpres
