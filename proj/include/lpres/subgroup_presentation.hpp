#pragma once

/*
 * Subgroup presentations from coset tables.
 *
 * Five constructions, from strongest precondition to none:
 *
 *  - classical: finite presentations only, relators tau(t r t^-1).
 *  - invariant-normal: a normal subgroup invariant under every
 *    substitution inherits an ascending presentation on the Schreier
 *    generators whose substitutions are the induced maps plus the
 *    conjugations by transversal elements.
 *  - leaf-invariant: every tree boundary element acts like the root, so
 *    the boundary induces endomorphisms and the relators range over
 *    tau(t r^theta t^-1) for theta in V.
 *  - weakly-leaf-invariant-normal: the leadsto boundary resolves to the
 *    root; relators range over tau(r^sigma) for sigma in Vtilde only.
 *  - general: no invariance at all. The subgroup is presented as a
 *    finite extension of the stabilizing core's ascending presentation
 *    by the finite quotient of the subgroup modulo the core, and the
 *    fixed relators of the input are restored by factoring afterwards.
 *
 * Outputs of the three invariant constructions are flagged
 * asserted-invariant; the general output never is.
 */

#include <algorithm>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "classify.hpp"
#include "coset_table.hpp"
#include "enumerate.hpp"
#include "errors.hpp"
#include "orbits.hpp"
#include "presentation.hpp"
#include "schreier.hpp"
#include "tree.hpp"

namespace lpres {

/* Which conjugation endomorphisms accompany the induced substitutions:
 * one per nontrivial transversal element, or the shorter list with one
 * per distinct nontrivial generator coset (the compositions of the
 * latter reach the former, so the generated monoid is the same). */
enum class ConjugatorPolicy { per_transversal, per_generator };

struct SubgroupPresentationResult {
    LPresentation presentation;
    std::string strategy;
    SchreierData schreier;         // provenance: transversal and Y data used
    SubstitutionTree tree;         // provenance: V over the table's action
    std::vector<Word> dictionary;  // output generator -> definition word over X

    /* View of a substitution-free result as a finite presentation. */
    FinitePresentation as_finite() const {
        if (!presentation.substitutions.empty())
            throw MalformedInputError("presentation has substitutions");
        FinitePresentation fp;
        fp.alphabet = presentation.alphabet;
        fp.relators = presentation.fixed;
        fp.relators.insert(fp.relators.end(), presentation.iterated.begin(),
                           presentation.iterated.end());
        return fp;
    }
};

namespace detail {

inline void push_unique(std::vector<Word>& out, std::set<Word>& seen, Word w) {
    if (!w.empty() && seen.insert(w).second)
        out.push_back(std::move(w));
}

/* One conjugation word per distinct nontrivial generator coset, in
 * declaration order. */
inline std::vector<Word> minimal_conjugators(const CosetTable& table) {
    std::vector<Word> words;
    std::set<int> seen;
    for (int g = 1; g <= table.ngens(); ++g) {
        int c = table.step(0, g);
        if (c == 0 || !seen.insert(c).second)
            continue;
        words.push_back(Word{g});
    }
    return words;
}

/* Coset indices ordered by their transversal words, shortest first. */
inline std::vector<int> cosets_by_transversal(const SchreierData& sd) {
    std::vector<int> order(sd.transversal().size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        const Word& wa = sd.transversal()[static_cast<std::size_t>(a)];
        const Word& wb = sd.transversal()[static_cast<std::size_t>(b)];
        if (wa.size() != wb.size())
            return wa.size() < wb.size();
        if (wa != wb)
            return wa < wb;
        return a < b;
    });
    return order;
}

} // namespace detail

/* tau(t r t^-1) over all transversal elements and relators; the
 * subgroup presentation for finitely presented inputs. */
inline SubgroupPresentationResult classical_reidemeister_schreier(const FinitePresentation& fp,
                                                                  const CosetTable& table) {
    if (table.ngens() != fp.ngens())
        throw MalformedInputError("coset table alphabet differs from the presentation's");
    SchreierData sd(table);
    std::vector<Word> relators;
    std::set<Word> seen;
    for (int c = 0; c < table.ncosets(); ++c) {
        const Word& t = sd.transversal()[static_cast<std::size_t>(c)];
        for (const Word& r : fp.relators)
            detail::push_unique(relators, seen, rewrite(sd, mul(t, r, inverse(t))));
    }
    LPresentation pres;
    pres.alphabet = default_alphabet(sd.rank());
    pres.fixed = std::move(relators);
    pres.invariant = true; // no substitutions, so invariance is vacuous
    return {std::move(pres), "classical", sd, SubstitutionTree{}, sd.definitions()};
}

/* Ascending presentation of a normal, fully substitution-invariant
 * subgroup: induced substitutions plus conjugators, relators tau(r). */
inline SubgroupPresentationResult invariant_normal_lpres(
    const LPresentation& lp, const CosetTable& table,
    ConjugatorPolicy policy = ConjugatorPolicy::per_transversal) {
    if (!lp.invariant)
        throw StrategyInapplicableError("presentation is not asserted-invariant");
    SubgroupReport report = classify_subgroup(lp, table);
    if (!report.normal)
        throw StrategyInapplicableError("subgroup is not normal");
    if (!report.phi_invariant)
        throw StrategyInapplicableError("subgroup is not invariant under every substitution");

    LPresentation asc = as_ascending(lp);
    SchreierData sd(table);

    std::vector<FreeEndomorphism> subs;
    for (const FreeEndomorphism& e : lp.substitutions)
        subs.push_back(induced_endomorphism(sd, e));
    if (policy == ConjugatorPolicy::per_transversal) {
        for (int c = 1; c < table.ncosets(); ++c)
            subs.push_back(conjugation_endo(sd, sd.transversal()[static_cast<std::size_t>(c)]));
    } else {
        for (const Word& t : detail::minimal_conjugators(table))
            subs.push_back(conjugation_endo(sd, t));
    }

    std::vector<Word> relators;
    std::set<Word> seen;
    for (const Word& r : asc.iterated)
        detail::push_unique(relators, seen, rewrite(sd, r));

    LPresentation pres;
    pres.alphabet = default_alphabet(sd.rank());
    pres.substitutions = std::move(subs);
    pres.iterated = std::move(relators);
    pres.invariant = true;
    return {std::move(pres), "invariant-normal", sd, std::move(report.tree), sd.definitions()};
}

/* Ascending presentation of a leaf-invariant subgroup: substitutions
 * induced by the boundary elements acting like the root, relators
 * tau(t r^theta t^-1) over theta in V, r in R, t in T. */
inline SubgroupPresentationResult leaf_invariant_lpres(const LPresentation& lp,
                                                       const CosetTable& table) {
    if (!lp.invariant)
        throw StrategyInapplicableError("presentation is not asserted-invariant");
    SubgroupReport report = classify_subgroup(lp, table);
    if (!report.leaf_invariant)
        throw StrategyInapplicableError("subgroup is not leaf-invariant");

    LPresentation asc = as_ascending(lp);
    SchreierData sd(table);

    std::vector<FreeEndomorphism> subs;
    for (const MonoidElement& elem : report.phi_leaf_elements)
        subs.push_back(induced_endomorphism(sd, endo_of(lp.substitutions, elem, lp.ngens())));

    std::vector<int> coset_order = detail::cosets_by_transversal(sd);
    std::vector<Word> relators;
    std::set<Word> seen;
    for (const MonoidElement& elem : report.tree.nodes) {
        FreeEndomorphism e = endo_of(lp.substitutions, elem, lp.ngens());
        for (const Word& r : asc.iterated) {
            Word rs = apply_endo(e, r);
            for (int c : coset_order) {
                const Word& t = sd.transversal()[static_cast<std::size_t>(c)];
                detail::push_unique(relators, seen, rewrite(sd, mul(t, rs, inverse(t))));
            }
        }
    }

    LPresentation pres;
    pres.alphabet = default_alphabet(sd.rank());
    pres.substitutions = std::move(subs);
    pres.iterated = std::move(relators);
    pres.invariant = true;
    return {std::move(pres), "leaf-invariant", sd, std::move(report.tree), sd.definitions()};
}

/* Ascending presentation of a normal subgroup whose leadsto boundary
 * resolves to the root: boundary-induced substitutions plus conjugators,
 * relators tau(r^sigma) over sigma in Vtilde only. */
inline SubgroupPresentationResult weakly_leaf_invariant_normal_lpres(const LPresentation& lp,
                                                                     const CosetTable& table) {
    if (!lp.invariant)
        throw StrategyInapplicableError("presentation is not asserted-invariant");
    SubgroupReport report = classify_subgroup(lp, table);
    if (!report.normal)
        throw StrategyInapplicableError("subgroup is not normal");
    if (!report.weakly_leaf_invariant_Vtilde)
        throw StrategyInapplicableError("subgroup is not weakly leaf-invariant");

    LPresentation asc = as_ascending(lp);
    SchreierData sd(table);

    std::vector<FreeEndomorphism> subs;
    for (const LeadstoLeaf& leaf : report.leadsto.leafs)
        subs.push_back(induced_endomorphism(sd, endo_of(lp.substitutions, leaf.element, lp.ngens())));
    for (const Word& t : detail::minimal_conjugators(table))
        subs.push_back(conjugation_endo(sd, t));

    std::vector<Word> relators;
    std::set<Word> seen;
    for (const MonoidElement& elem : report.leadsto.nodes) {
        FreeEndomorphism e = endo_of(lp.substitutions, elem, lp.ngens());
        for (const Word& r : asc.iterated)
            detail::push_unique(relators, seen, rewrite(sd, apply_endo(e, r)));
    }

    LPresentation pres;
    pres.alphabet = default_alphabet(sd.rank());
    pres.substitutions = std::move(subs);
    pres.iterated = std::move(relators);
    pres.invariant = true;
    return {std::move(pres), "weakly-leaf-invariant-normal", sd, std::move(report.tree),
            sd.definitions()};
}

/* Intermediate sizes of the general pipeline, for reporting. */
struct GeneralPipelineInfo {
    int core_index = 0;          // index of the stabilizing core in F
    int core_rank = 0;           // Schreier rank of the core
    int quotient_order = 0;      // |U K / core|
    int quotient_generators = 0; // chosen generators of the finite quotient
    std::vector<Word> quotient_generator_words;
    LPresentation core_presentation;
};

/* Presentation of a subgroup with no invariance assumptions, as a
 * finite extension of the stabilizing core of the ascending cover. */
inline SubgroupPresentationResult general_subgroup_lpres(const LPresentation& lp,
                                                         const CosetTable& table,
                                                         GeneralPipelineInfo* info = nullptr,
                                                         std::size_t closure_cap = 1000000) {
    if (table.ngens() != lp.ngens())
        throw MalformedInputError("coset table alphabet differs from the presentation's");

    /* Step 1: the ascending cover drops the fixed relators. The cosets
     * of UK do not change, so the table carries over. */
    LPresentation cover;
    cover.alphabet = lp.alphabet;
    cover.substitutions = lp.substitutions;
    cover.iterated = lp.iterated;
    cover.invariant = true;

    SchreierData sd(table);
    SubstitutionTree tree = iterating_endomorphisms(cover.substitutions, table.action());

    /* Step 2: stabilizing core of UK in the cover. */
    CosetTable core = kernel_table(tree.node_actions, closure_cap);
    SchreierData core_sd(core);
    GeneratorAction core_action = core.action();

    /* Step 3: ascending presentation of the core. */
    SubgroupPresentationResult core_result =
        invariant_normal_lpres(cover, core, ConjugatorPolicy::per_generator);
    const LPresentation& core_lp = core_result.presentation;
    int rank = static_cast<int>(core_sd.definitions().size());

    /* Step 4: the finite quotient UK/core, generated by a greedy minimal
     * subset of the images of UK's Schreier generators. */
    std::vector<Word> quot_words;
    std::vector<Permutation> quot_perms;
    std::set<Permutation> reached{perm_identity(core.ncosets())};
    for (const Word& u : sd.definitions()) {
        Permutation p = act_word(core_action, u);
        if (reached.count(p))
            continue;
        quot_words.push_back(u);
        quot_perms.push_back(std::move(p));
        std::vector<Permutation> grown = closure(quot_perms, closure_cap);
        reached = std::set<Permutation>(grown.begin(), grown.end());
    }
    int na = static_cast<int>(quot_words.size());
    int quotient_order = core.ncosets() / table.ncosets();

    auto lift = [&](const Word& word_a) {
        Word w;
        for (int s : word_a) {
            const Word& base = quot_words[static_cast<std::size_t>(s > 0 ? s - 1 : -s - 1)];
            w = mul(w, s > 0 ? base : inverse(base));
        }
        return w;
    };
    auto shift = [&](const Word& word_a) {
        Word out;
        out.reserve(word_a.size());
        for (int s : word_a)
            out.push_back(s > 0 ? s + rank : s - rank);
        return out;
    };

    std::vector<Word> quot_relators;      // over the quotient alphabet
    std::vector<Word> quot_transversal;   // over the quotient alphabet
    if (na > 0) {
        CosetTable qt = restricted_orbit_table(core, quot_words);
        if (qt.ncosets() != quotient_order)
            throw Error("quotient orbit does not have the expected size");
        SchreierData qsd(qt);
        quot_relators = qsd.definitions();
        quot_transversal = qsd.transversal();
    } else {
        if (quotient_order != 1)
            throw Error("quotient orbit does not have the expected size");
        quot_transversal.push_back(Word{});
    }

    /* Step 5: extension relators. Quotient relators deviate from their
     * core-rewritten lifts; conjugation of each core generator by each
     * quotient generator is again expressed over the core. */
    std::vector<Word> fixed;
    for (const Word& ra : quot_relators)
        fixed.push_back(mul(shift(ra), inverse(rewrite(core_sd, lift(ra)))));
    for (int xi = 0; xi < rank; ++xi) {
        const Word& vx = core_sd.definitions()[static_cast<std::size_t>(xi)];
        for (int ti = 0; ti < na; ++ti) {
            const Word& ut = quot_words[static_cast<std::size_t>(ti)];
            Word g = rewrite(core_sd, mul(inverse(ut), vx, ut));
            int tsym = rank + ti + 1;
            fixed.push_back(mul(Word{-tsym, xi + 1, tsym}, inverse(g)));
        }
    }

    std::vector<FreeEndomorphism> subs;
    subs.reserve(core_lp.substitutions.size());
    for (const FreeEndomorphism& e : core_lp.substitutions)
        subs.push_back(detail::extend_identically(e, na));

    std::vector<std::string> names;
    for (int i = 1; i <= rank; ++i)
        names.push_back("x" + std::to_string(i));
    for (int i = 1; i <= na; ++i)
        names.push_back("t" + std::to_string(i));

    LPresentation ext;
    ext.alphabet = Alphabet(std::move(names));
    ext.fixed = std::move(fixed);
    ext.substitutions = std::move(subs);
    ext.iterated = core_lp.iterated;
    ext.invariant = false;

    /* Step 6: restore the dropped fixed relators. Each UK-conjugate of a
     * fixed relator splits as a quotient part times a core part. */
    if (!lp.fixed.empty()) {
        std::set<Word> seen;
        std::vector<Word> extra;
        for (int c = 0; c < table.ncosets(); ++c) {
            const Word& t = sd.transversal()[static_cast<std::size_t>(c)];
            for (const Word& q : lp.fixed) {
                Word w = mul(t, q, inverse(t));
                int target = act_point(core_action, 0, w);
                const Word* rep_a = nullptr;
                for (const Word& cand : quot_transversal)
                    if (act_point(core_action, 0, lift(cand)) == target) {
                        rep_a = &cand;
                        break;
                    }
                if (!rep_a)
                    throw Error("fixed relator image missed the quotient transversal");
                Word g = rewrite(core_sd, mul(inverse(lift(*rep_a)), w));
                detail::push_unique(extra, seen, mul(shift(*rep_a), g));
            }
        }
        ext.fixed.insert(ext.fixed.end(), extra.begin(), extra.end());
    }

    if (info) {
        info->core_index = core.ncosets();
        info->core_rank = rank;
        info->quotient_order = quotient_order;
        info->quotient_generators = na;
        info->quotient_generator_words = quot_words;
        info->core_presentation = core_lp;
    }

    std::vector<Word> dictionary = core_sd.definitions();
    dictionary.insert(dictionary.end(), quot_words.begin(), quot_words.end());
    return {std::move(ext), "general", sd, std::move(tree), std::move(dictionary)};
}

/* Dispatcher: strongest applicable construction first. */
inline SubgroupPresentationResult best_strategy(const LPresentation& lp, const CosetTable& table) {
    SubgroupReport report = classify_subgroup(lp, table);
    if (report.recommended == "invariant-normal")
        return invariant_normal_lpres(lp, table);
    if (report.recommended == "leaf-invariant")
        return leaf_invariant_lpres(lp, table);
    if (report.recommended == "weakly-leaf-invariant-normal")
        return weakly_leaf_invariant_normal_lpres(lp, table);
    return general_subgroup_lpres(lp, table);
}

} // namespace lpres
