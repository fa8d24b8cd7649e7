#pragma once

/*
 * Dense permutations of {0,...,n-1}. Points are 0-based internally; the
 * cycle notation printer and parser use 1-based points so that displayed
 * output looks like (1,2)(3,5) with () for the identity.
 *
 * Products compose left to right: perm_mul(p, q) applies p first.
 */

#include <numeric>
#include <string>
#include <vector>

#include "errors.hpp"

namespace lpres {

using Permutation = std::vector<int>;

inline Permutation perm_identity(int n) {
    Permutation p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    return p;
}

/* Apply p, then q. */
inline Permutation perm_mul(const Permutation& p, const Permutation& q) {
    Permutation out(p.size());
    for (std::size_t i = 0; i < p.size(); ++i)
        out[i] = q[static_cast<std::size_t>(p[i])];
    return out;
}

inline Permutation perm_inverse(const Permutation& p) {
    Permutation out(p.size());
    for (std::size_t i = 0; i < p.size(); ++i)
        out[static_cast<std::size_t>(p[i])] = static_cast<int>(i);
    return out;
}

inline bool perm_is_identity(const Permutation& p) {
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p[i] != static_cast<int>(i))
            return false;
    return true;
}

/* Order of the permutation, the lcm of its cycle lengths. */
inline long long perm_order(const Permutation& p) {
    std::vector<bool> seen(p.size(), false);
    long long order = 1;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (seen[i])
            continue;
        long long len = 0;
        std::size_t j = i;
        while (!seen[j]) {
            seen[j] = true;
            j = static_cast<std::size_t>(p[j]);
            ++len;
        }
        order = std::lcm(order, len);
    }
    return order;
}

/* Cycle notation with 1-based points; identity prints as "()". */
inline std::string cycle_string(const Permutation& p) {
    std::vector<bool> seen(p.size(), false);
    std::string out;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (seen[i] || p[i] == static_cast<int>(i))
            continue;
        out += "(";
        out += std::to_string(i + 1);
        seen[i] = true;
        std::size_t j = static_cast<std::size_t>(p[i]);
        while (j != i) {
            out += ",";
            out += std::to_string(j + 1);
            seen[j] = true;
            j = static_cast<std::size_t>(p[j]);
        }
        out += ")";
    }
    return out.empty() ? "()" : out;
}

/* Parse "(1,2)(3,5)" style cycles into a degree-n permutation. */
inline Permutation parse_cycles(const std::string& text, int n) {
    Permutation p = perm_identity(n);
    std::string s;
    for (char c : text)
        if (c != ' ')
            s += c;
    if (s.empty() || s == "()")
        return p;
    std::size_t pos = 0;
    while (pos < s.size()) {
        if (s[pos] != '(')
            throw MalformedInputError("cycle notation: expected '('");
        std::size_t close = s.find(')', pos);
        if (close == std::string::npos)
            throw MalformedInputError("cycle notation: missing ')'");
        std::vector<int> pts;
        std::size_t start = pos + 1;
        while (start < close) {
            std::size_t comma = s.find(',', start);
            if (comma == std::string::npos || comma > close)
                comma = close;
            int v = std::stoi(s.substr(start, comma - start));
            if (v < 1 || v > n)
                throw MalformedInputError("cycle notation: point out of range");
            pts.push_back(v - 1);
            start = comma + 1;
        }
        for (std::size_t i = 0; i < pts.size(); ++i)
            p[static_cast<std::size_t>(pts[i])] = pts[(i + 1) % pts.size()];
        pos = close + 1;
    }
    return p;
}

} // namespace lpres
