#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <unordered_set>
#include <vector>

#include "pact/bits.hpp"
#include "pact/error.hpp"
#include "pact/limits.hpp"

namespace pact {

// ============================================================================
// Finite topological spaces
// ============================================================================
//
// A finite space is stored as its sorted point list plus the minimal open
// neighborhood of each point.  Finite spaces are Alexandrov: a set is open
// exactly when it contains the minimal open of each of its members, so the
// minimal-open table determines the topology and every operation (continuity,
// separation, products, quotients) can be computed from it directly.  The full
// open-set family is materialized on demand, under a size guard, for canonical
// output and for the extensional oracles in the test suite.

struct FiniteSpace {
    std::vector<std::string> points; // sorted, duplicate-free
    std::vector<Bits> min_open;      // min_open[i] = smallest open set containing points[i]

    std::size_t size() const { return points.size(); }

    int index_of(const std::string& name) const {
        auto it = std::lower_bound(points.begin(), points.end(), name);
        if (it == points.end() || *it != name) return -1;
        return static_cast<int>(it - points.begin());
    }

    bool is_open(const Bits& u) const {
        bool ok = true;
        u.for_each([&](std::size_t p) {
            if (!u.contains(min_open[p])) ok = false;
        });
        return ok;
    }

    bool is_closed(const Bits& a) const { return is_open(a.complement()); }

    // Smallest open superset: union of the minimal opens of the members.
    Bits open_hull(const Bits& a) const {
        Bits r(size());
        a.for_each([&](std::size_t p) { r |= min_open[p]; });
        return r;
    }

    // closure(A) = { p : every open around p meets A } = { p : min_open[p] ∩ A ≠ ∅ }
    Bits closure(const Bits& a) const {
        Bits r(size());
        for (std::size_t p = 0; p < size(); ++p)
            if (min_open[p].intersects(a)) r.set(p);
        return r;
    }

    Bits set_of(const std::vector<std::string>& names) const {
        Bits b(size());
        for (const auto& n : names) {
            const int i = index_of(n);
            if (i < 0) throw error("unknown point '" + n + "'");
            b.set(static_cast<std::size_t>(i));
        }
        return b;
    }

    std::vector<std::string> names_of(const Bits& b) const {
        std::vector<std::string> v;
        b.for_each([&](std::size_t p) { v.push_back(points[p]); });
        return v;
    }

    std::string set_name(const Bits& b) const {
        std::string s = "{";
        bool first = true;
        b.for_each([&](std::size_t p) {
            if (!first) s += ",";
            s += points[p];
            first = false;
        });
        return s + "}";
    }

    bool operator==(const FiniteSpace& o) const { return points == o.points && min_open == o.min_open; }
};

using SpaceRef = std::shared_ptr<const FiniteSpace>;

inline SpaceRef share(FiniteSpace s) { return std::make_shared<const FiniteSpace>(std::move(s)); }

namespace detail {

inline std::vector<std::string> sorted_unique_points(std::vector<std::string> pts) {
    std::sort(pts.begin(), pts.end());
    const auto dup = std::adjacent_find(pts.begin(), pts.end());
    if (dup != pts.end()) throw error("duplicate point '" + *dup + "'");
    return pts;
}

} // namespace detail

// Topology generated by an arbitrary family of subsets: the minimal open of p
// is the intersection of the generators containing p (and the whole set).
inline FiniteSpace make_space(std::vector<std::string> points,
                              const std::vector<std::vector<std::string>>& generators) {
    FiniteSpace s;
    s.points = detail::sorted_unique_points(std::move(points));
    const std::size_t n = s.points.size();

    std::vector<Bits> gens;
    gens.reserve(generators.size());
    for (const auto& g : generators) {
        Bits b(n);
        for (const auto& name : g) {
            const int i = s.index_of(name);
            if (i < 0) throw error("generator references unknown point '" + name + "'");
            b.set(static_cast<std::size_t>(i));
        }
        gens.push_back(std::move(b));
    }

    s.min_open.assign(n, Bits{});
    for (std::size_t p = 0; p < n; ++p) {
        Bits u = Bits::full(n);
        for (const auto& g : gens)
            if (g.test(p)) u &= g;
        s.min_open[p] = u;
    }
    return s;
}

// Construct from an explicitly listed open family, validating the topology
// axioms extensionally on the given family.
inline FiniteSpace space_from_opens(std::vector<std::string> points,
                                    const std::vector<std::vector<std::string>>& opens) {
    FiniteSpace s;
    s.points = detail::sorted_unique_points(std::move(points));
    const std::size_t n = s.points.size();

    std::vector<Bits> fam;
    std::unordered_set<Bits, Bits::Hash> seen;
    for (const auto& o : opens) {
        Bits b(n);
        for (const auto& name : o) {
            const int i = s.index_of(name);
            if (i < 0) throw error("open set references unknown point '" + name + "'");
            b.set(static_cast<std::size_t>(i));
        }
        if (!seen.insert(b).second) throw error("duplicate open set " + s.set_name(b));
        fam.push_back(std::move(b));
    }
    if (!seen.count(Bits(n))) throw error("open family does not contain the empty set");
    if (!seen.count(Bits::full(n))) throw error("open family does not contain the full point set");
    for (std::size_t i = 0; i < fam.size(); ++i)
        for (std::size_t j = i + 1; j < fam.size(); ++j) {
            if (!seen.count(fam[i] | fam[j]))
                throw error("open family not closed under union: " + s.set_name(fam[i]) + " ∪ " + s.set_name(fam[j]));
            if (!seen.count(fam[i] & fam[j]))
                throw error("open family not closed under intersection: " + s.set_name(fam[i]) + " ∩ " +
                            s.set_name(fam[j]));
        }

    s.min_open.assign(n, Bits{});
    for (std::size_t p = 0; p < n; ++p) {
        Bits u = Bits::full(n);
        for (const auto& o : fam)
            if (o.test(p)) u &= o;
        s.min_open[p] = u;
    }
    // The intersection of all opens around p is itself open in a finite
    // topology, so the derived table reproduces exactly the given family.
    return s;
}

inline FiniteSpace discrete_space(std::vector<std::string> points) {
    FiniteSpace s;
    s.points = detail::sorted_unique_points(std::move(points));
    s.min_open.assign(s.points.size(), Bits{});
    for (std::size_t p = 0; p < s.points.size(); ++p) {
        Bits b(s.points.size());
        b.set(p);
        s.min_open[p] = b;
    }
    return s;
}

inline FiniteSpace indiscrete_space(std::vector<std::string> points) {
    FiniteSpace s;
    s.points = detail::sorted_unique_points(std::move(points));
    s.min_open.assign(s.points.size(), Bits::full(s.points.size()));
    return s;
}

// Two points "0","1" with {"1"} open.
inline FiniteSpace sierpinski() { return make_space({"0", "1"}, {{"1"}}); }

inline FiniteSpace empty_space() { return FiniteSpace{}; }

// Full open family in canonical order (lexicographic on sorted member lists).
// Guarded: finite spaces can have exponentially many opens.
inline std::vector<Bits> enumerate_opens(const FiniteSpace& s, std::size_t guard = limits::max_opens()) {
    const std::size_t n = s.size();
    std::vector<Bits> found;
    std::unordered_set<Bits, Bits::Hash> seen;
    const auto push = [&](const Bits& b) {
        if (seen.insert(b).second) {
            found.push_back(b);
            if (found.size() > guard)
                throw guard_error("open family exceeds guard of " + std::to_string(guard) + " sets");
            return true;
        }
        return false;
    };
    push(Bits(n));
    for (const auto& u : s.min_open) push(u);
    // close under binary union; every open is a union of minimal opens
    for (std::size_t i = 0; i < found.size(); ++i) {
        const Bits u = found[i];
        for (std::size_t b = 0; b < n; ++b) push(u | s.min_open[b]);
    }
    if (n == 0) return {Bits(0)};
    std::sort(found.begin(), found.end(), Bits::lex_less);
    return found;
}

// ============================================================================
// Continuous maps
// ============================================================================

struct ContinuousMap {
    SpaceRef dom;
    SpaceRef cod;
    std::vector<int> map; // dom point index -> cod point index

    int operator()(int i) const { return map[static_cast<std::size_t>(i)]; }
    const std::string& apply_name(const std::string& p) const {
        const int i = dom->index_of(p);
        if (i < 0) throw error("map applied to unknown point '" + p + "'");
        return cod->points[static_cast<std::size_t>(map[static_cast<std::size_t>(i)])];
    }
};

inline Bits image_of(const ContinuousMap& m, const Bits& a) {
    Bits r(m.cod->size());
    a.for_each([&](std::size_t p) { r.set(static_cast<std::size_t>(m.map[p])); });
    return r;
}

inline Bits image_of(const ContinuousMap& m) { return image_of(m, Bits::full(m.dom->size())); }

inline Bits preimage_of(const ContinuousMap& m, const Bits& b) {
    Bits r(m.dom->size());
    for (std::size_t p = 0; p < m.dom->size(); ++p)
        if (b.test(static_cast<std::size_t>(m.map[p]))) r.set(p);
    return r;
}

// Preimage of every open is open; for finite spaces this is equivalent to
// f(min_open(p)) ⊆ min_open(f(p)) for every p, which is what gets checked.
inline bool is_continuous(const ContinuousMap& m) {
    for (std::size_t p = 0; p < m.dom->size(); ++p) {
        const Bits img = image_of(m, m.dom->min_open[p]);
        if (!m.cod->min_open[static_cast<std::size_t>(m.map[p])].contains(img)) return false;
    }
    return true;
}

inline bool is_injective(const ContinuousMap& m) {
    std::vector<char> hit(m.cod->size(), 0);
    for (int v : m.map) {
        if (hit[static_cast<std::size_t>(v)]) return false;
        hit[static_cast<std::size_t>(v)] = 1;
    }
    return true;
}

inline bool is_surjective(const ContinuousMap& m) { return image_of(m).count() == m.cod->size(); }

inline ContinuousMap make_map(SpaceRef dom, SpaceRef cod,
                              const std::map<std::string, std::string>& assignment) {
    ContinuousMap m{std::move(dom), std::move(cod), {}};
    m.map.assign(m.dom->size(), -1);
    for (const auto& [k, v] : assignment) {
        const int i = m.dom->index_of(k);
        if (i < 0) throw error("assignment key '" + k + "' is not a point of the domain");
        const int j = m.cod->index_of(v);
        if (j < 0) throw error("assignment value '" + v + "' is not a point of the codomain");
        m.map[static_cast<std::size_t>(i)] = j;
    }
    for (std::size_t p = 0; p < m.dom->size(); ++p)
        if (m.map[p] < 0) throw error("assignment not total: missing point '" + m.dom->points[p] + "'");
    return m;
}

inline ContinuousMap make_continuous_map(SpaceRef dom, SpaceRef cod,
                                         const std::map<std::string, std::string>& assignment) {
    ContinuousMap m = make_map(std::move(dom), std::move(cod), assignment);
    if (!is_continuous(m)) throw error("assignment is not continuous");
    return m;
}

inline ContinuousMap identity_map(SpaceRef s) {
    ContinuousMap m{s, s, {}};
    m.map.resize(s->size());
    for (std::size_t i = 0; i < s->size(); ++i) m.map[i] = static_cast<int>(i);
    return m;
}

inline ContinuousMap compose_map(const ContinuousMap& g, const ContinuousMap& f) {
    if (!(*f.cod == *g.dom)) throw error("composition mismatch: codomain of inner != domain of outer");
    ContinuousMap m{f.dom, g.cod, {}};
    m.map.reserve(f.map.size());
    for (int v : f.map) m.map.push_back(g.map[static_cast<std::size_t>(v)]);
    return m;
}

inline bool is_open_map(const ContinuousMap& m) {
    for (std::size_t p = 0; p < m.dom->size(); ++p)
        if (!m.cod->is_open(image_of(m, m.dom->min_open[p]))) return false;
    return true;
}

// Injective, continuous, and a homeomorphism onto the image with its subspace
// topology: the subspace-minimal open of each image point must pull back into
// the corresponding domain-minimal open.
inline bool is_embedding(const ContinuousMap& m) {
    if (!is_injective(m) || !is_continuous(m)) return false;
    const Bits img = image_of(m);
    for (std::size_t p = 0; p < m.dom->size(); ++p) {
        const Bits sub_min = m.cod->min_open[static_cast<std::size_t>(m.map[p])] & img;
        if (!image_of(m, m.dom->min_open[p]).contains(sub_min)) return false;
    }
    return true;
}

inline bool is_homeomorphism(const ContinuousMap& m) {
    if (m.dom->size() != m.cod->size()) return false;
    return is_surjective(m) && is_embedding(m);
}

// ============================================================================
// Subspace, product, quotient
// ============================================================================

inline FiniteSpace subspace(const FiniteSpace& s, const Bits& subset) {
    FiniteSpace r;
    const auto idx = subset.indices();
    std::vector<int> back(s.size(), -1);
    for (std::size_t k = 0; k < idx.size(); ++k) {
        r.points.push_back(s.points[static_cast<std::size_t>(idx[k])]);
        back[static_cast<std::size_t>(idx[k])] = static_cast<int>(k);
    }
    r.min_open.assign(idx.size(), Bits{});
    for (std::size_t k = 0; k < idx.size(); ++k) {
        Bits u(idx.size());
        (s.min_open[static_cast<std::size_t>(idx[k])] & subset).for_each([&](std::size_t p) {
            u.set(static_cast<std::size_t>(back[p]));
        });
        r.min_open[k] = u;
    }
    return r;
}

inline FiniteSpace subspace(const FiniteSpace& s, const std::vector<std::string>& names) {
    return subspace(s, s.set_of(names));
}

inline ContinuousMap inclusion_map(SpaceRef sub, SpaceRef ambient) {
    ContinuousMap m{std::move(sub), std::move(ambient), {}};
    m.map.reserve(m.dom->size());
    for (const auto& p : m.dom->points) {
        const int i = m.cod->index_of(p);
        if (i < 0) throw error("inclusion: point '" + p + "' absent from ambient space");
        m.map.push_back(i);
    }
    return m;
}

struct ProductSpace {
    FiniteSpace space;
    std::vector<SpaceRef> factors;
    std::vector<std::vector<int>> coord; // product point index -> factor point indices

    int index_of_tuple(const std::vector<int>& t) const {
        auto it = lookup_.find(t);
        return it == lookup_.end() ? -1 : it->second;
    }

    void build_lookup() {
        for (std::size_t i = 0; i < coord.size(); ++i) lookup_[coord[i]] = static_cast<int>(i);
    }

private:
    std::map<std::vector<int>, int> lookup_;
};

inline std::string tuple_name(const std::vector<SpaceRef>& factors, const std::vector<int>& t) {
    std::string s = "(";
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (i) s += ",";
        s += factors[i]->points[static_cast<std::size_t>(t[i])];
    }
    return s + ")";
}

// Product topology; the minimal open of a tuple is the product of the
// factor-wise minimal opens, which generates the same topology as cylinders.
inline ProductSpace product(std::vector<SpaceRef> factors) {
    if (factors.empty()) throw error("product of an empty list of spaces");
    ProductSpace prod;
    prod.factors = std::move(factors);

    std::vector<std::pair<std::string, std::vector<int>>> named;
    std::vector<int> t(prod.factors.size(), 0);
    const auto total = [&] {
        std::size_t n = 1;
        for (const auto& f : prod.factors) n *= f->size();
        return n;
    }();
    if (total > 0) {
        while (true) {
            named.emplace_back(tuple_name(prod.factors, t), t);
            std::size_t k = prod.factors.size();
            while (k > 0) {
                --k;
                if (++t[k] < static_cast<int>(prod.factors[k]->size())) break;
                t[k] = 0;
                if (k == 0) goto done;
            }
        }
    }
done:
    std::sort(named.begin(), named.end());
    FiniteSpace& s = prod.space;
    for (auto& [name, tup] : named) {
        s.points.push_back(name);
        prod.coord.push_back(tup);
    }
    prod.build_lookup();

    const std::size_t n = s.points.size();
    s.min_open.assign(n, Bits{});
    for (std::size_t i = 0; i < n; ++i) {
        Bits u(n);
        for (std::size_t j = 0; j < n; ++j) {
            bool inside = true;
            for (std::size_t f = 0; f < prod.factors.size(); ++f)
                if (!prod.factors[f]->min_open[static_cast<std::size_t>(prod.coord[i][f])].test(
                        static_cast<std::size_t>(prod.coord[j][f]))) {
                    inside = false;
                    break;
                }
            if (inside) u.set(j);
        }
        s.min_open[i] = u;
    }
    return prod;
}

inline ContinuousMap projection_map(const ProductSpace& prod, SpaceRef prod_space, std::size_t factor) {
    ContinuousMap m{std::move(prod_space), prod.factors[factor], {}};
    m.map.reserve(prod.coord.size());
    for (const auto& t : prod.coord) m.map.push_back(t[factor]);
    return m;
}

struct QuotientSpace {
    FiniteSpace space;
    std::vector<int> block_of; // ambient point index -> quotient point index
    ContinuousMap q;           // the projection, continuous by construction
};

/**
 * Quotient topology from a block assignment.  The minimal open of a class is
 * computed by a saturation fixpoint: grow the candidate class set V until the
 * preimage q⁻¹(V) is open in the ambient space.  A set of classes is open in
 * the quotient exactly when its preimage is open, so this yields the largest
 * topology making q continuous.
 *
 * `labeler` maps a block (list of ambient point indices) to the class label;
 * the default is the lexicographically least member name.
 */
inline QuotientSpace quotient_core(SpaceRef s, const std::vector<int>& block_of, std::size_t block_count,
                                   const std::function<std::string(const std::vector<int>&)>& labeler = nullptr) {
    const std::size_t n = s->size();
    std::vector<std::vector<int>> members(block_count);
    for (std::size_t p = 0; p < n; ++p) members[static_cast<std::size_t>(block_of[p])].push_back(static_cast<int>(p));
    for (std::size_t b = 0; b < block_count; ++b)
        if (members[b].empty()) throw error("quotient: empty block");

    std::vector<std::string> labels(block_count);
    for (std::size_t b = 0; b < block_count; ++b)
        labels[b] = labeler ? labeler(members[b]) : s->points[static_cast<std::size_t>(members[b][0])];

    // sort classes by label for the canonical point order
    std::vector<std::size_t> order(block_count);
    for (std::size_t b = 0; b < block_count; ++b) order[b] = b;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return labels[a] < labels[b]; });
    std::vector<int> rank(block_count);
    for (std::size_t k = 0; k < block_count; ++k) rank[order[k]] = static_cast<int>(k);

    QuotientSpace quo;
    quo.space.points.resize(block_count);
    for (std::size_t b = 0; b < block_count; ++b) quo.space.points[static_cast<std::size_t>(rank[b])] = labels[b];
    const auto dup = std::adjacent_find(quo.space.points.begin(), quo.space.points.end());
    if (dup != quo.space.points.end()) throw error("quotient: duplicate class label '" + *dup + "'");

    quo.block_of.resize(n);
    for (std::size_t p = 0; p < n; ++p) quo.block_of[p] = rank[static_cast<std::size_t>(block_of[p])];

    quo.space.min_open.assign(block_count, Bits{});
    for (std::size_t c = 0; c < block_count; ++c) {
        Bits v(block_count);
        v.set(c);
        while (true) {
            Bits pre(n);
            for (std::size_t p = 0; p < n; ++p)
                if (v.test(static_cast<std::size_t>(quo.block_of[p]))) pre.set(p);
            const Bits hull = s->open_hull(pre);
            Bits grown(block_count);
            hull.for_each([&](std::size_t p) { grown.set(static_cast<std::size_t>(quo.block_of[p])); });
            grown |= v;
            if (grown == v) break;
            v = grown;
        }
        quo.space.min_open[c] = v;
    }

    SpaceRef qs = share(quo.space);
    quo.q = ContinuousMap{std::move(s), qs, quo.block_of};
    quo.space = *qs;
    return quo;
}

inline QuotientSpace quotient(SpaceRef s, const std::vector<std::vector<std::string>>& partition) {
    const std::size_t n = s->size();
    std::vector<int> block_of(n, -1);
    for (std::size_t b = 0; b < partition.size(); ++b) {
        if (partition[b].empty()) throw error("quotient: block " + std::to_string(b) + " is empty");
        for (const auto& name : partition[b]) {
            const int i = s->index_of(name);
            if (i < 0) throw error("quotient: block references unknown point '" + name + "'");
            if (block_of[static_cast<std::size_t>(i)] >= 0)
                throw error("quotient: point '" + name + "' appears in two blocks");
            block_of[static_cast<std::size_t>(i)] = static_cast<int>(b);
        }
    }
    for (std::size_t p = 0; p < n; ++p)
        if (block_of[p] < 0) throw error("quotient: partition does not cover point '" + s->points[p] + "'");
    return quotient_core(std::move(s), block_of, partition.size());
}

// ============================================================================
// Separation axioms
// ============================================================================

enum class Separation { T0, T1, T2, Regular };

inline bool separation(const FiniteSpace& s, Separation axiom) {
    const std::size_t n = s.size();
    switch (axiom) {
    case Separation::T0:
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q)
                if (s.min_open[p] == s.min_open[q]) return false;
        return true;
    case Separation::T1:
        // all singletons closed <=> no point lies in another's minimal open
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = 0; q < n; ++q)
                if (p != q && s.min_open[q].test(p)) return false;
        return true;
    case Separation::T2:
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q)
                if (s.min_open[p].intersects(s.min_open[q])) return false;
        return true;
    case Separation::Regular:
        // enough to separate p from the largest closed set avoiding it
        for (std::size_t p = 0; p < n; ++p) {
            const Bits worst = s.min_open[p].complement();
            if (s.open_hull(worst).intersects(s.min_open[p])) return false;
        }
        return true;
    }
    return false;
}

} // namespace pact
