#pragma once

#include <algorithm>
#include <memory>
#include <string>
#include <vector>

#include "pact/error.hpp"
#include "pact/limits.hpp"

namespace pact {

// Finite group given by its multiplication table.  Identity and inverses are
// inferred; associativity is checked on all triples at construction.
struct FiniteGroup {
    std::vector<std::string> elements;   // given order, duplicate-free
    std::vector<std::vector<int>> table; // table[g][h] = index of g·h
    int identity = -1;
    std::vector<int> inverse;

    std::size_t order() const { return elements.size(); }
    int mul(int g, int h) const { return table[static_cast<std::size_t>(g)][static_cast<std::size_t>(h)]; }
    int inv(int g) const { return inverse[static_cast<std::size_t>(g)]; }

    int index_of(const std::string& name) const {
        for (std::size_t i = 0; i < elements.size(); ++i)
            if (elements[i] == name) return static_cast<int>(i);
        return -1;
    }
    const std::string& name(int g) const { return elements[static_cast<std::size_t>(g)]; }

    bool operator==(const FiniteGroup& o) const { return elements == o.elements && table == o.table; }
};

using GroupRef = std::shared_ptr<const FiniteGroup>;

inline GroupRef share(FiniteGroup g) { return std::make_shared<const FiniteGroup>(std::move(g)); }

inline FiniteGroup make_group(std::vector<std::string> elements,
                              const std::vector<std::vector<std::string>>& table) {
    FiniteGroup g;
    g.elements = std::move(elements);
    const std::size_t n = g.elements.size();
    if (n == 0) throw error("group must have at least one element");
    if (n > limits::max_group_order())
        throw guard_error("group order " + std::to_string(n) + " exceeds guard of " +
                          std::to_string(limits::max_group_order()));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (g.elements[i] == g.elements[j]) throw error("duplicate group element '" + g.elements[i] + "'");

    if (table.size() != n) throw error("multiplication table must have one row per element");
    g.table.assign(n, std::vector<int>(n, -1));
    for (std::size_t i = 0; i < n; ++i) {
        if (table[i].size() != n) throw error("multiplication table row for '" + g.elements[i] + "' has wrong length");
        for (std::size_t j = 0; j < n; ++j) {
            const int k = g.index_of(table[i][j]);
            if (k < 0)
                throw error("table entry '" + table[i][j] + "' at (" + g.elements[i] + "," + g.elements[j] +
                            ") is not an element");
            g.table[i][j] = k;
        }
    }

    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c) {
                const int lhs = g.mul(g.mul(static_cast<int>(a), static_cast<int>(b)), static_cast<int>(c));
                const int rhs = g.mul(static_cast<int>(a), g.mul(static_cast<int>(b), static_cast<int>(c)));
                if (lhs != rhs)
                    throw error("table not associative at (" + g.elements[a] + "," + g.elements[b] + "," +
                                g.elements[c] + ")");
            }

    for (std::size_t e = 0; e < n; ++e) {
        bool ok = true;
        for (std::size_t a = 0; a < n; ++a)
            if (g.mul(static_cast<int>(e), static_cast<int>(a)) != static_cast<int>(a) ||
                g.mul(static_cast<int>(a), static_cast<int>(e)) != static_cast<int>(a)) {
                ok = false;
                break;
            }
        if (ok) {
            g.identity = static_cast<int>(e);
            break;
        }
    }
    if (g.identity < 0) throw error("table has no identity element");

    g.inverse.assign(n, -1);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b)
            if (g.mul(static_cast<int>(a), static_cast<int>(b)) == g.identity &&
                g.mul(static_cast<int>(b), static_cast<int>(a)) == g.identity) {
                g.inverse[a] = static_cast<int>(b);
                break;
            }
        if (g.inverse[a] < 0) throw error("element '" + g.elements[a] + "' has no inverse");
    }
    return g;
}

inline FiniteGroup trivial_group() { return make_group({"e"}, {{"e"}}); }

inline FiniteGroup cyclic_group(std::size_t n) {
    if (n < 1) throw error("cyclic group order must be >= 1");
    if (n > limits::max_group_order())
        throw guard_error("cyclic group order " + std::to_string(n) + " exceeds guard");
    std::vector<std::string> el;
    el.push_back("e");
    for (std::size_t i = 1; i < n; ++i) el.push_back("g" + std::to_string(i));
    std::vector<std::vector<std::string>> tab(n, std::vector<std::string>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) tab[i][j] = el[(i + j) % n];
    return make_group(el, tab);
}

inline FiniteGroup klein_four() {
    return make_group({"e", "a", "b", "c"}, {{"e", "a", "b", "c"},
                                             {"a", "e", "c", "b"},
                                             {"b", "c", "e", "a"},
                                             {"c", "b", "a", "e"}});
}

// Symmetric group on n letters, n <= 4.  Elements are labeled by the image
// word of "abcd…", identity first ("abc" for n = 3).
inline FiniteGroup symmetric_group(std::size_t n) {
    if (n < 1) throw error("symmetric group degree must be >= 1");
    if (n > 4) throw guard_error("symmetric group degree " + std::to_string(n) + " exceeds guard of 4");
    std::vector<std::vector<int>> perms;
    std::vector<int> p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = static_cast<int>(i);
    do {
        perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));

    const auto label = [&](const std::vector<int>& q) {
        std::string s;
        for (int v : q) s += static_cast<char>('a' + v);
        return s;
    };
    std::vector<std::string> el;
    for (const auto& q : perms) el.push_back(label(q));

    std::vector<std::vector<std::string>> tab(perms.size(), std::vector<std::string>(perms.size()));
    for (std::size_t i = 0; i < perms.size(); ++i)
        for (std::size_t j = 0; j < perms.size(); ++j) {
            std::vector<int> comp(n); // (p_i ∘ p_j)(k) = p_i(p_j(k))
            for (std::size_t k = 0; k < n; ++k)
                comp[k] = perms[i][static_cast<std::size_t>(perms[j][k])];
            tab[i][j] = label(comp);
        }
    return make_group(el, tab);
}

} // namespace pact
