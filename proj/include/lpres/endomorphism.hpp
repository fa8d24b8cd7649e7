#pragma once

/*
 * Endomorphisms of a finitely generated free group, stored as one image
 * word per generator. The composition convention is fixed once here and
 * used everywhere: in a product the LEFT factor acts first,
 *
 *     w^(ab) = (w^a)^b.
 *
 * Under this convention a monoid word over the substitution set reads
 * left to right in application order.
 */

#include <vector>

#include "word.hpp"

namespace lpres {

struct FreeEndomorphism {
    std::vector<Word> images; // images[i] is the image of generator i+1

    int ngens() const { return static_cast<int>(images.size()); }

    bool operator==(const FreeEndomorphism&) const = default;
};

inline FreeEndomorphism identity_endo(int ngens) {
    FreeEndomorphism e;
    e.images.reserve(static_cast<std::size_t>(ngens));
    for (int g = 1; g <= ngens; ++g)
        e.images.push_back(Word{g});
    return e;
}

/* Substitute each letter by its image (inverted for negative letters). */
inline Word apply_endo(const FreeEndomorphism& e, const Word& w) {
    Word cat;
    for (int x : w) {
        int g = x > 0 ? x : -x;
        if (g < 1 || g > e.ngens())
            throw MalformedInputError("letter outside the endomorphism's alphabet");
        const Word& img = e.images[static_cast<std::size_t>(g - 1)];
        if (x > 0) {
            cat.insert(cat.end(), img.begin(), img.end());
        } else {
            for (auto it = img.rbegin(); it != img.rend(); ++it)
                cat.push_back(-*it);
        }
    }
    return reduce(cat);
}

/* Composite with a applied first: apply_endo(compose(a,b), w) =
 * apply_endo(b, apply_endo(a, w)). */
inline FreeEndomorphism compose(const FreeEndomorphism& a, const FreeEndomorphism& b) {
    if (a.ngens() != b.ngens())
        throw MalformedInputError("endomorphism composition needs one alphabet");
    FreeEndomorphism out;
    out.images.reserve(a.images.size());
    for (const Word& img : a.images)
        out.images.push_back(apply_endo(b, img));
    return out;
}

inline FreeEndomorphism endo_power(const FreeEndomorphism& e, int n) {
    FreeEndomorphism out = identity_endo(e.ngens());
    for (int i = 0; i < n; ++i)
        out = compose(out, e);
    return out;
}

} // namespace lpres
