#pragma once

/*
 * Actions of a free group on finite coset spaces.
 *
 * A GeneratorAction assigns one permutation of {0..npoints-1} to each
 * generator; words act letter by letter (inverse letters through the
 * inverse permutation). Composing an action with an endomorphism gives
 * the action of the precomposed map, which is how substitution powers
 * are pushed through coset tables.
 *
 * factors_through decides whether one action is a quotient of another:
 * given sigma (through) and delta (target) on the same generators, it
 * looks for a map pi with pi(x^sigma) = x^delta pointwise, by closing
 * the set of paired permutations (sigma_g, delta_g) under products and
 * checking that no element acts trivially on the sigma side but not on
 * the delta side. The witness records where each generator pair maps
 * the base points and whether pi is a bijection.
 */

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "endomorphism.hpp"
#include "errors.hpp"
#include "permutation.hpp"
#include "word.hpp"

namespace lpres {

struct GeneratorAction {
    std::vector<Permutation> perms; // one per generator, 1-based letters

    int ngens() const { return static_cast<int>(perms.size()); }

    int npoints() const {
        return perms.empty() ? 0 : static_cast<int>(perms.front().size());
    }

    void validate() const {
        for (const Permutation& p : perms)
            if (static_cast<int>(p.size()) != npoints())
                throw MalformedInputError("action permutations act on different point counts");
    }

    bool operator==(const GeneratorAction&) const = default;
};

/* Image of a point under a word, first letter applied first. */
inline int act_point(const GeneratorAction& a, int point, const Word& w) {
    for (int letter : w) {
        int g = letter > 0 ? letter : -letter;
        if (g < 1 || g > a.ngens())
            throw MalformedInputError("word letter outside the action's alphabet");
        const Permutation& p = a.perms[static_cast<std::size_t>(g - 1)];
        if (letter > 0) {
            point = p[static_cast<std::size_t>(point)];
        } else {
            int pre = 0;
            while (p[static_cast<std::size_t>(pre)] != point)
                ++pre;
            point = pre;
        }
    }
    return point;
}

/* Permutation induced by a word. */
inline Permutation act_word(const GeneratorAction& a, const Word& w) {
    Permutation out = perm_identity(a.npoints());
    for (int letter : w) {
        int g = letter > 0 ? letter : -letter;
        if (g < 1 || g > a.ngens())
            throw MalformedInputError("word letter outside the action's alphabet");
        const Permutation& p = a.perms[static_cast<std::size_t>(g - 1)];
        out = letter > 0 ? perm_mul(out, p) : perm_mul(out, perm_inverse(p));
    }
    return out;
}

/* Action of the precomposition with e: generator x acts as x^e did. */
inline GeneratorAction compose_action(const GeneratorAction& a, const FreeEndomorphism& e) {
    if (e.ngens() != a.ngens())
        throw MalformedInputError("endomorphism alphabet differs from action alphabet");
    GeneratorAction out;
    out.perms.reserve(e.images.size());
    for (const Word& img : e.images)
        out.perms.push_back(act_word(a, img));
    return out;
}

inline bool actions_equal(const GeneratorAction& a, const GeneratorAction& b) {
    return a.perms == b.perms;
}

inline bool action_is_trivial(const GeneratorAction& a) {
    for (const Permutation& p : a.perms)
        if (!perm_is_identity(p))
            return false;
    return true;
}

/* Closure of a permutation set under right multiplication, identity
 * first, breadth first in generator order. Throws when the group would
 * exceed `cap` elements. */
inline std::vector<Permutation> closure(const std::vector<Permutation>& gens,
                                        std::size_t cap = 1000000) {
    if (gens.empty())
        return {};
    int n = static_cast<int>(gens.front().size());
    std::vector<Permutation> order{perm_identity(n)};
    std::map<Permutation, std::size_t> seen{{order.front(), 0}};
    for (std::size_t i = 0; i < order.size(); ++i) {
        for (const Permutation& g : gens) {
            Permutation next = perm_mul(order[i], g);
            if (seen.emplace(next, order.size()).second) {
                order.push_back(std::move(next));
                if (order.size() > cap)
                    throw ResourceLimitError("permutation closure exceeded element cap");
            }
        }
    }
    return order;
}

/* Witness for "target factors through `through`": for each generator,
 * the image of the base point on both sides, plus whether the induced
 * map is a bijection. */
struct PartialHom {
    std::vector<std::pair<int, int>> generator_pairs;
    bool bijective = false;
};

/* Decide whether there is a map pi of transitive point sets with
 * pi(p^{x^through}) = pi(p)^{x^target} for every generator x. Pairs
 * (through_g, target_g) are closed jointly; pi exists iff no closure
 * element is trivial on the through side and nontrivial on the target
 * side, and is bijective iff the converse also never happens. Returns
 * the witness, or nothing. */
inline std::optional<PartialHom> factors_through(const GeneratorAction& target,
                                                 const GeneratorAction& through,
                                                 std::size_t cap = 1000000) {
    if (target.ngens() != through.ngens())
        throw MalformedInputError("actions compare only over a common alphabet");
    int n1 = through.npoints();
    int n2 = target.npoints();
    int n = n1 + n2;

    std::vector<Permutation> joint;
    joint.reserve(static_cast<std::size_t>(through.ngens()));
    for (int g = 0; g < through.ngens(); ++g) {
        Permutation p(static_cast<std::size_t>(n));
        for (int i = 0; i < n1; ++i)
            p[static_cast<std::size_t>(i)] = through.perms[static_cast<std::size_t>(g)][static_cast<std::size_t>(i)];
        for (int i = 0; i < n2; ++i)
            p[static_cast<std::size_t>(n1 + i)] =
                n1 + target.perms[static_cast<std::size_t>(g)][static_cast<std::size_t>(i)];
        joint.push_back(std::move(p));
    }

    bool onto_only = true;
    bool one_to_one = true;
    for (const Permutation& p : closure(joint, cap)) {
        bool through_trivial = true;
        for (int i = 0; i < n1; ++i)
            if (p[static_cast<std::size_t>(i)] != i) {
                through_trivial = false;
                break;
            }
        bool target_trivial = true;
        for (int i = 0; i < n2; ++i)
            if (p[static_cast<std::size_t>(n1 + i)] != n1 + i) {
                target_trivial = false;
                break;
            }
        if (through_trivial && !target_trivial)
            onto_only = false;
        if (target_trivial && !through_trivial)
            one_to_one = false;
        if (!onto_only)
            break;
    }
    if (!onto_only)
        return std::nullopt;

    PartialHom hom;
    hom.bijective = one_to_one;
    for (int g = 0; g < through.ngens(); ++g)
        hom.generator_pairs.emplace_back(
            through.perms[static_cast<std::size_t>(g)][0],
            target.perms[static_cast<std::size_t>(g)][0]);
    return hom;
}

} // namespace lpres
