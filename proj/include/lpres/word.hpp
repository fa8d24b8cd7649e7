#pragma once

/*
 * Freely reduced words over a finite generator alphabet.
 *
 * A word is a sequence of nonzero integers: letter +g stands for the g-th
 * generator (1-based) and letter -g for its inverse. Free reduction removes
 * adjacent inverse pairs, so group multiplication is concatenate-then-reduce
 * and inversion is reverse-with-sign-flip. All higher layers (endomorphisms,
 * rewriting, coset tracing) speak this representation.
 */

#include <cstdlib>
#include <initializer_list>
#include <string>
#include <vector>

#include "errors.hpp"

namespace lpres {

using Word = std::vector<int>;

/* The unique freely reduced form of a raw letter sequence. */
inline Word reduce(const Word& raw) {
    Word out;
    out.reserve(raw.size());
    for (int x : raw) {
        if (!out.empty() && out.back() == -x)
            out.pop_back();
        else
            out.push_back(x);
    }
    return out;
}

/* Check every letter references a generator of a k-letter alphabet. */
inline void validate_word(const Word& w, int ngens) {
    for (int x : w) {
        if (x == 0 || std::abs(x) > ngens)
            throw MalformedInputError("word letter " + std::to_string(x) +
                                      " outside alphabet of size " +
                                      std::to_string(ngens));
    }
}

inline Word inverse(const Word& w) {
    Word out;
    out.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it)
        out.push_back(-*it);
    return out;
}

/* Product of any number of words, freely reduced. */
template <class... Ws>
Word mul(const Ws&... parts) {
    Word cat;
    (cat.insert(cat.end(), parts.begin(), parts.end()), ...);
    return reduce(cat);
}

/* u^v = v^-1 u v, the conjugation convention used by the input grammar. */
inline Word conjugate(const Word& u, const Word& v) {
    return mul(inverse(v), u, v);
}

/* [u,v] = u^-1 v^-1 u v. */
inline Word commutator(const Word& u, const Word& v) {
    return mul(inverse(u), inverse(v), u, v);
}

inline Word power(const Word& w, int n) {
    Word base = n < 0 ? inverse(w) : w;
    int reps = n < 0 ? -n : n;
    Word cat;
    cat.reserve(base.size() * static_cast<std::size_t>(reps));
    for (int i = 0; i < reps; ++i)
        cat.insert(cat.end(), base.begin(), base.end());
    return reduce(cat);
}

} // namespace lpres
