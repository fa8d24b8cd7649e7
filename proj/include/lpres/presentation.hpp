#pragma once

/*
 * Presentation data model.
 *
 * An L-presentation <X | Q | Phi | R> presents the quotient of the free
 * group F(X) by the normal closure of
 *
 *     Q  union  { r^sigma : r in R, sigma in Phi* },
 *
 * where Phi* is the free monoid generated by the substitutions Phi. Q are
 * the fixed relators, R the iterated ones. When Q is empty the presentation
 * is called ascending; ascending presentations are invariant (every
 * substitution induces an endomorphism of the presented group), and an
 * invariant presentation can be rewritten in ascending form by moving Q
 * into R without changing the group.
 *
 * Monoid elements of Phi* are stored as factor index sequences with the
 * first factor applied first, consistent with the composition convention
 * of FreeEndomorphism. They are ordered by length and then lexicographically
 * from the RIGHT end, a well-ordering the tree algorithms traverse.
 */

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "endomorphism.hpp"
#include "errors.hpp"
#include "word.hpp"

namespace lpres {

struct Alphabet {
    std::vector<std::string> names;

    Alphabet() = default;

    explicit Alphabet(std::vector<std::string> gens) : names(std::move(gens)) {
        std::set<std::string> seen;
        for (const std::string& s : names) {
            if (s.empty())
                throw MalformedInputError("empty generator name");
            if (!seen.insert(s).second)
                throw MalformedInputError("duplicate generator name '" + s + "'");
        }
    }

    int size() const { return static_cast<int>(names.size()); }

    /* 1-based letter for a name, 0 if unknown. */
    int letter_of(const std::string& name) const {
        for (std::size_t i = 0; i < names.size(); ++i)
            if (names[i] == name)
                return static_cast<int>(i) + 1;
        return 0;
    }

    bool operator==(const Alphabet&) const = default;
};

/* Generators x1, x2, ... for alphabets created by the library itself. */
inline Alphabet default_alphabet(int n, const std::string& prefix = "x") {
    std::vector<std::string> names;
    names.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i)
        names.push_back(prefix + std::to_string(i));
    return Alphabet(std::move(names));
}

struct FinitePresentation {
    Alphabet alphabet;
    std::vector<Word> relators;

    int ngens() const { return alphabet.size(); }

    void validate() const {
        for (const Word& w : relators)
            validate_word(w, ngens());
    }
};

struct LPresentation {
    Alphabet alphabet;
    std::vector<Word> fixed;                      // Q
    std::vector<FreeEndomorphism> substitutions;  // Phi
    std::vector<Word> iterated;                   // R
    bool invariant = false;                       // asserted-invariant flag

    int ngens() const { return alphabet.size(); }

    void validate() const {
        int k = ngens();
        for (const Word& w : fixed)
            validate_word(w, k);
        for (const Word& w : iterated)
            validate_word(w, k);
        for (const FreeEndomorphism& e : substitutions) {
            if (e.ngens() != k)
                throw MalformedInputError("substitution image count differs from alphabet size");
            for (const Word& img : e.images)
                validate_word(img, k);
        }
    }
};

/* The ascending form <X | empty | Phi | Q union R> of an invariant
 * presentation; it defines the same group. */
inline LPresentation as_ascending(const LPresentation& lp) {
    if (!lp.invariant)
        throw InvarianceRequiredError("ascending form needs an asserted-invariant presentation");
    if (lp.fixed.empty())
        return lp;
    LPresentation out = lp;
    out.iterated.clear();
    out.iterated.reserve(lp.fixed.size() + lp.iterated.size());
    out.iterated.insert(out.iterated.end(), lp.fixed.begin(), lp.fixed.end());
    out.iterated.insert(out.iterated.end(), lp.iterated.begin(), lp.iterated.end());
    out.fixed.clear();
    return out;
}

/* ----- the monoid Phi* ----- */

using MonoidElement = std::vector<int>; // factor indices, first applied first

/* Length-then-right-lexicographic strict order. */
inline bool precedes(const MonoidElement& a, const MonoidElement& b) {
    if (a.size() != b.size())
        return a.size() < b.size();
    for (std::size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i])
            return a[i] < b[i];
    return false;
}

/* All monoid elements of length <= max_len, ascending in the order above. */
inline std::vector<MonoidElement> monoid_elements(int nphi, int max_len) {
    std::vector<MonoidElement> out{MonoidElement{}};
    std::vector<MonoidElement> level{MonoidElement{}};
    for (int d = 1; d <= max_len; ++d) {
        std::vector<MonoidElement> next;
        next.reserve(level.size() * static_cast<std::size_t>(nphi));
        for (const MonoidElement& delta : level) {
            for (int i = 0; i < nphi; ++i) {
                MonoidElement child;
                child.reserve(delta.size() + 1);
                child.push_back(i);
                child.insert(child.end(), delta.begin(), delta.end());
                next.push_back(std::move(child));
            }
        }
        out.insert(out.end(), next.begin(), next.end());
        level = std::move(next);
    }
    return out;
}

/* The endomorphism a monoid element denotes. */
inline FreeEndomorphism endo_of(const std::vector<FreeEndomorphism>& phi,
                                const MonoidElement& elem, int ngens) {
    FreeEndomorphism e = identity_endo(ngens);
    for (int f : elem)
        e = compose(e, phi[static_cast<std::size_t>(f)]);
    return e;
}

/* Print as "id", "sigma^3" when only one substitution exists, otherwise
 * "phi2*phi1" with the left factor applied first. */
inline std::string format_monoid_element(const MonoidElement& elem, int nphi) {
    if (elem.empty())
        return "id";
    if (nphi == 1)
        return elem.size() == 1 ? "sigma" : "sigma^" + std::to_string(elem.size());
    std::string out;
    for (std::size_t i = 0; i < elem.size(); ++i) {
        if (i)
            out += "*";
        out += "phi" + std::to_string(elem[i] + 1);
    }
    return out;
}

/* Finite truncation: Q plus every r^sigma with ||sigma|| <= depth, sigma
 * ascending in the monoid order and r in list order, exact duplicates and
 * empty words dropped. */
inline FinitePresentation instantiate(const LPresentation& lp, int depth) {
    FinitePresentation out;
    out.alphabet = lp.alphabet;
    std::set<Word> seen;
    auto push = [&](const Word& w) {
        if (!w.empty() && seen.insert(w).second)
            out.relators.push_back(w);
    };
    for (const Word& q : lp.fixed)
        push(q);
    for (const MonoidElement& elem :
         monoid_elements(static_cast<int>(lp.substitutions.size()), depth)) {
        FreeEndomorphism e = endo_of(lp.substitutions, elem, lp.ngens());
        for (const Word& r : lp.iterated)
            push(apply_endo(e, r));
    }
    return out;
}

/* ----- closure constructions ----- */

namespace detail {

/* Smallest numeric suffix making `base` distinct from everything in
 * `taken`; used when merging alphabets. */
inline std::string fresh_name(const std::string& base, const std::set<std::string>& taken) {
    if (!taken.count(base))
        return base;
    for (int s = 1;; ++s) {
        std::string cand = base + std::to_string(s);
        if (!taken.count(cand))
            return cand;
    }
}

/* Shift a word over the second factor's alphabet up by `offset`. */
inline Word shift_word(const Word& w, int offset) {
    Word out;
    out.reserve(w.size());
    for (int x : w)
        out.push_back(x > 0 ? x + offset : x - offset);
    return out;
}

/* Extend an endomorphism identically on `extra` new trailing generators. */
inline FreeEndomorphism extend_identically(const FreeEndomorphism& e, int extra) {
    FreeEndomorphism out = e;
    int base = e.ngens();
    for (int g = base + 1; g <= base + extra; ++g)
        out.images.push_back(Word{g});
    return out;
}

} // namespace detail

/* Free product <X union Y | Q union S | Phi union Psi | R union T>, each
 * substitution extended identically on the other factor's generators.
 * Invariant whenever both inputs are asserted-invariant. */
inline LPresentation free_product(const LPresentation& g, const LPresentation& h) {
    int n = g.ngens();
    int m = h.ngens();
    std::set<std::string> taken(g.alphabet.names.begin(), g.alphabet.names.end());
    std::vector<std::string> names = g.alphabet.names;
    for (const std::string& s : h.alphabet.names) {
        std::string fresh = detail::fresh_name(s, taken);
        taken.insert(fresh);
        names.push_back(fresh);
    }

    LPresentation out;
    out.alphabet = Alphabet(std::move(names));
    out.fixed = g.fixed;
    for (const Word& w : h.fixed)
        out.fixed.push_back(detail::shift_word(w, n));
    out.iterated = g.iterated;
    for (const Word& w : h.iterated)
        out.iterated.push_back(detail::shift_word(w, n));
    for (const FreeEndomorphism& e : g.substitutions)
        out.substitutions.push_back(detail::extend_identically(e, m));
    for (const FreeEndomorphism& e : h.substitutions) {
        FreeEndomorphism shifted;
        for (int x = 1; x <= n; ++x)
            shifted.images.push_back(Word{x});
        for (const Word& img : e.images)
            shifted.images.push_back(detail::shift_word(img, n));
        out.substitutions.push_back(std::move(shifted));
    }
    out.invariant = g.invariant && h.invariant;
    return out;
}

/* L-presentation of an extension 1 -> G -> K -> H -> 1 on generators
 * X union Y. `lifts` gives, per relator r of H, a word g_r over X with
 * r = g_r in K; `action` gives, per (generator x of X, generator t of Y),
 * a word g_{x,t} over X with t^-1 x t = g_{x,t} in K. The output is
 *
 *   < X u Y | Q u {r g_r^-1} u {t^-1 x t g_{x,t}^-1} | Phi extended | R >,
 *
 * never flagged invariant (whether such extensions stay invariantly
 * presentable is an open problem). */
inline LPresentation finite_extension(const LPresentation& g, const FinitePresentation& h,
                                      const std::vector<Word>& lifts,
                                      const std::vector<std::vector<Word>>& action) {
    if (lifts.size() != h.relators.size())
        throw MalformedInputError("finite_extension: one lift per quotient relator required");
    if (action.size() != static_cast<std::size_t>(g.ngens()))
        throw MalformedInputError("finite_extension: action row per kernel generator required");
    for (const auto& row : action)
        if (row.size() != static_cast<std::size_t>(h.ngens()))
            throw MalformedInputError("finite_extension: action entry per quotient generator required");

    int n = g.ngens();
    int m = h.ngens();
    std::set<std::string> taken(g.alphabet.names.begin(), g.alphabet.names.end());
    std::vector<std::string> names = g.alphabet.names;
    for (const std::string& s : h.alphabet.names) {
        std::string fresh = detail::fresh_name(s, taken);
        taken.insert(fresh);
        names.push_back(fresh);
    }

    LPresentation out;
    out.alphabet = Alphabet(std::move(names));
    out.fixed = g.fixed;
    for (std::size_t i = 0; i < h.relators.size(); ++i) {
        validate_word(lifts[i], n);
        out.fixed.push_back(mul(detail::shift_word(h.relators[i], n), inverse(lifts[i])));
    }
    for (int x = 1; x <= n; ++x) {
        for (int t = 1; t <= m; ++t) {
            const Word& gxt = action[static_cast<std::size_t>(x - 1)][static_cast<std::size_t>(t - 1)];
            validate_word(gxt, n);
            Word conj{-(n + t), x, n + t};
            out.fixed.push_back(mul(conj, inverse(gxt)));
        }
    }
    for (const FreeEndomorphism& e : g.substitutions)
        out.substitutions.push_back(detail::extend_identically(e, m));
    out.iterated = g.iterated;
    out.invariant = false;
    return out;
}

/* L-presentation of the factor group by the normal closure of
 * `normal_gens`. With `phi_invariant_closure` the caller asserts that the
 * closure is preserved by every substitution; for an invariant input this
 * allows the ascending invariant form <X | empty | Phi | Q u R u N>. */
inline LPresentation factor_lpres(const LPresentation& g, const std::vector<Word>& normal_gens,
                                  bool phi_invariant_closure = false) {
    for (const Word& w : normal_gens)
        validate_word(w, g.ngens());
    LPresentation out = g;
    if (phi_invariant_closure && g.invariant) {
        out = as_ascending(g);
        out.iterated.insert(out.iterated.end(), normal_gens.begin(), normal_gens.end());
        return out;
    }
    out.fixed.insert(out.fixed.end(), normal_gens.begin(), normal_gens.end());
    out.invariant = g.invariant && normal_gens.empty();
    return out;
}

} // namespace lpres
