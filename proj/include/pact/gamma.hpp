#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "pact/topology.hpp"

namespace pact {

// ============================================================================
// Γ(X): the inverse monoid of homeomorphisms between open subsets
// ============================================================================

// A homeomorphism between two open subsets of an ambient space.  Only the
// forward assignment is stored; the inverse is recomputed.  The empty map 1_∅
// is the value with dom = cod = ∅ and is handled uniformly.
struct PartialHomeo {
    SpaceRef ambient;
    Bits dom;             // open subset (domain)
    Bits cod;             // open subset (image)
    std::vector<int> fwd; // ambient index -> ambient index, -1 outside dom

    int operator()(int i) const { return fwd[static_cast<std::size_t>(i)]; }
    bool defined_at(std::size_t i) const { return dom.test(i); }

    bool operator==(const PartialHomeo& o) const {
        return dom == o.dom && fwd == o.fwd && (ambient == o.ambient || *ambient == *o.ambient);
    }

    // canonical serialization, e.g. "{0→1,1→0}" (also the table-lookup key)
    std::string key() const {
        std::string s = "{";
        bool first = true;
        dom.for_each([&](std::size_t p) {
            if (!first) s += ",";
            s += ambient->points[p] + "→" + ambient->points[static_cast<std::size_t>(fwd[p])];
            first = false;
        });
        return s + "}";
    }
};

// Reason the data fails the PartialHomeo invariants, or nullopt if valid.
inline std::optional<std::string> partial_homeo_violation(const PartialHomeo& f) {
    const auto& s = *f.ambient;
    if (!s.is_open(f.dom)) return "domain " + s.set_name(f.dom) + " is not open";
    Bits img(s.size());
    bool bad = false;
    std::string why;
    f.dom.for_each([&](std::size_t p) {
        const int v = f.fwd[p];
        if (v < 0 || static_cast<std::size_t>(v) >= s.size()) {
            bad = true;
            why = "value out of range at '" + s.points[p] + "'";
            return;
        }
        if (img.test(static_cast<std::size_t>(v))) {
            bad = true;
            why = "not injective at '" + s.points[p] + "'";
            return;
        }
        img.set(static_cast<std::size_t>(v));
    });
    if (bad) return why;
    if (!(img == f.cod)) return "stored image does not match the forward assignment";
    if (!s.is_open(f.cod)) return "image " + s.set_name(f.cod) + " is not open";
    // bicontinuity between the subspace topologies
    bool cont = true;
    f.dom.for_each([&](std::size_t p) {
        const Bits sub_min = s.min_open[p] & f.dom;
        Bits img_min(s.size());
        sub_min.for_each([&](std::size_t q) { img_min.set(static_cast<std::size_t>(f.fwd[q])); });
        if (!(s.min_open[static_cast<std::size_t>(f.fwd[p])] & f.cod).contains(img_min)) cont = false;
    });
    if (!cont) return "forward map is not continuous on the subspace";
    std::vector<int> back(s.size(), -1);
    f.dom.for_each([&](std::size_t p) { back[static_cast<std::size_t>(f.fwd[p])] = static_cast<int>(p); });
    f.cod.for_each([&](std::size_t q) {
        const Bits sub_min = s.min_open[q] & f.cod;
        Bits pre_min(s.size());
        sub_min.for_each([&](std::size_t r) { pre_min.set(static_cast<std::size_t>(back[r])); });
        if (!(s.min_open[static_cast<std::size_t>(back[q])] & f.dom).contains(pre_min)) cont = false;
    });
    if (!cont) return "inverse map is not continuous on the subspace";
    return std::nullopt;
}

inline PartialHomeo raw_partial_homeo(SpaceRef ambient, const Bits& dom, const std::vector<int>& fwd) {
    PartialHomeo f{std::move(ambient), dom, Bits(dom.universe()), fwd};
    dom.for_each([&](std::size_t p) {
        const int v = fwd[p];
        if (v >= 0 && static_cast<std::size_t>(v) < f.cod.universe()) f.cod.set(static_cast<std::size_t>(v));
    });
    return f;
}

inline PartialHomeo make_partial_homeo(SpaceRef ambient, const std::map<std::string, std::string>& assignment) {
    const auto& s = *ambient;
    Bits dom(s.size());
    std::vector<int> fwd(s.size(), -1);
    for (const auto& [k, v] : assignment) {
        const int i = s.index_of(k);
        if (i < 0) throw error("partial map key '" + k + "' is not a point");
        const int j = s.index_of(v);
        if (j < 0) throw error("partial map value '" + v + "' is not a point");
        dom.set(static_cast<std::size_t>(i));
        fwd[static_cast<std::size_t>(i)] = j;
    }
    PartialHomeo f = raw_partial_homeo(std::move(ambient), dom, fwd);
    if (const auto why = partial_homeo_violation(f)) throw error("invalid partial homeomorphism: " + *why);
    return f;
}

inline PartialHomeo identity_homeo(SpaceRef ambient) {
    const std::size_t n = ambient->size();
    std::vector<int> fwd(n);
    for (std::size_t i = 0; i < n; ++i) fwd[i] = static_cast<int>(i);
    return raw_partial_homeo(std::move(ambient), Bits::full(n), fwd);
}

inline PartialHomeo empty_homeo(SpaceRef ambient) {
    const std::size_t n = ambient->size();
    return raw_partial_homeo(std::move(ambient), Bits(n), std::vector<int>(n, -1));
}

// identity on an open subset
inline PartialHomeo identity_on(SpaceRef ambient, const Bits& open_set) {
    std::vector<int> fwd(ambient->size(), -1);
    open_set.for_each([&](std::size_t p) { fwd[p] = static_cast<int>(p); });
    return raw_partial_homeo(std::move(ambient), open_set, fwd);
}

inline PartialHomeo invert(const PartialHomeo& f) {
    std::vector<int> back(f.ambient->size(), -1);
    f.dom.for_each([&](std::size_t p) { back[static_cast<std::size_t>(f.fwd[p])] = static_cast<int>(p); });
    return PartialHomeo{f.ambient, f.cod, f.dom, std::move(back)};
}

// ψ∘φ on φ⁻¹(dom(ψ) ∩ im(φ)); the largest domain on which the composite is defined.
inline PartialHomeo compose(const PartialHomeo& psi, const PartialHomeo& phi) {
    if (!(phi.ambient == psi.ambient || *phi.ambient == *psi.ambient))
        throw error("compose: ambient space mismatch");
    const std::size_t n = phi.ambient->size();
    Bits dom(n);
    std::vector<int> fwd(n, -1);
    phi.dom.for_each([&](std::size_t p) {
        const std::size_t mid = static_cast<std::size_t>(phi.fwd[p]);
        if (psi.dom.test(mid)) {
            dom.set(p);
            fwd[p] = psi.fwd[mid];
        }
    });
    return raw_partial_homeo(phi.ambient, dom, fwd);
}

// ψ ≤ φ iff ψ is a restriction of φ.
inline bool leq(const PartialHomeo& psi, const PartialHomeo& phi) {
    if (!phi.dom.contains(psi.dom)) return false;
    bool agree = true;
    psi.dom.for_each([&](std::size_t p) {
        if (psi.fwd[p] != phi.fwd[p]) agree = false;
    });
    return agree;
}

// ============================================================================
// Exhaustive enumeration of Γ(X)
// ============================================================================

// Complete duplicate-free list of Γ(X) in a deterministic (key-sorted) order.
// Guarded by the total number of candidate bijections between open pairs.
inline std::vector<PartialHomeo> enumerate_gamma(const SpaceRef& space,
                                                 std::size_t guard = limits::max_gamma_candidates()) {
    const auto opens = enumerate_opens(*space);
    std::vector<double> fact(space->size() + 1, 1.0);
    for (std::size_t k = 1; k < fact.size(); ++k) fact[k] = fact[k - 1] * static_cast<double>(k);

    double candidates = 0;
    std::map<std::size_t, std::vector<const Bits*>> by_size;
    for (const auto& o : opens) by_size[o.count()].push_back(&o);
    for (const auto& [sz, list] : by_size)
        candidates += static_cast<double>(list.size()) * static_cast<double>(list.size()) * fact[sz];
    if (candidates > static_cast<double>(guard))
        throw guard_error("Γ(X) enumeration would examine about " + std::to_string(static_cast<long long>(candidates)) +
                          " bijections, over the guard of " + std::to_string(guard));

    std::vector<PartialHomeo> gamma;
    for (const auto& [sz, list] : by_size) {
        for (const Bits* u : list) {
            const auto uidx = u->indices();
            for (const Bits* v : list) {
                auto vidx = v->indices();
                std::sort(vidx.begin(), vidx.end());
                do {
                    std::vector<int> fwd(space->size(), -1);
                    for (std::size_t k = 0; k < uidx.size(); ++k)
                        fwd[static_cast<std::size_t>(uidx[k])] = vidx[k];
                    PartialHomeo f = raw_partial_homeo(space, *u, fwd);
                    if (!partial_homeo_violation(f)) gamma.push_back(std::move(f));
                } while (std::next_permutation(vidx.begin(), vidx.end()));
            }
        }
    }
    std::sort(gamma.begin(), gamma.end(),
              [](const PartialHomeo& a, const PartialHomeo& b) { return a.key() < b.key(); });
    return gamma;
}

} // namespace pact
