#pragma once

// Definition-level brute-force oracles, independent of the library's
// minimal-basis computations.  Spaces here are small, so subsets are plain
// uint32 masks and families are std::set<uint32_t>.

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "pact/topology.hpp"

namespace oracle {

using Mask = std::uint32_t;
using Family = std::set<Mask>;

// Smallest topology containing the generators: add ∅ and X, close under
// pairwise union and intersection until a fixpoint.
inline Family close_family(std::size_t n, Family gens) {
    const Mask full = n >= 32 ? ~Mask{0} : ((Mask{1} << n) - 1);
    gens.insert(0);
    gens.insert(full);
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<Mask> fam(gens.begin(), gens.end());
        for (std::size_t i = 0; i < fam.size(); ++i)
            for (std::size_t j = i + 1; j < fam.size(); ++j) {
                if (gens.insert(fam[i] | fam[j]).second) changed = true;
                if (gens.insert(fam[i] & fam[j]).second) changed = true;
            }
    }
    return gens;
}

inline bool is_topology(std::size_t n, const Family& fam) {
    const Mask full = n >= 32 ? ~Mask{0} : ((Mask{1} << n) - 1);
    if (!fam.count(0) || !fam.count(full)) return false;
    for (Mask a : fam)
        for (Mask b : fam)
            if (!fam.count(a | b) || !fam.count(a & b)) return false;
    return true;
}

// All labeled topologies on n points (n small: brute force over families of
// proper nonempty subsets).
inline std::vector<Family> all_labeled_topologies(std::size_t n) {
    const Mask full = (Mask{1} << n) - 1;
    std::vector<Mask> proper;
    for (Mask m = 1; m < full; ++m) proper.push_back(m);
    std::vector<Family> out;
    for (Mask choice = 0; choice < (Mask{1} << proper.size()); ++choice) {
        Family fam = {0, full};
        for (std::size_t i = 0; i < proper.size(); ++i)
            if (choice & (Mask{1} << i)) fam.insert(proper[i]);
        if (is_topology(n, fam)) out.push_back(fam);
    }
    return out;
}

inline Mask to_mask(const pact::Bits& b) {
    Mask m = 0;
    b.for_each([&](std::size_t i) { m |= Mask{1} << i; });
    return m;
}

inline pact::Bits to_bits(Mask m, std::size_t n) {
    pact::Bits b(n);
    for (std::size_t i = 0; i < n; ++i)
        if (m & (Mask{1} << i)) b.set(i);
    return b;
}

inline Family family_of(const pact::FiniteSpace& s) {
    Family fam;
    for (const auto& o : pact::enumerate_opens(s)) fam.insert(to_mask(o));
    return fam;
}

inline pact::FiniteSpace space_from_family(const std::vector<std::string>& points, const Family& fam) {
    std::vector<std::vector<std::string>> opens;
    for (Mask m : fam) {
        std::vector<std::string> o;
        for (std::size_t i = 0; i < points.size(); ++i)
            if (m & (Mask{1} << i)) o.push_back(points[i]);
        opens.push_back(o);
    }
    return pact::space_from_opens(points, opens);
}

// Definition-level continuity: the preimage of every codomain open is open.
inline bool continuous(const Family& dom, const Family& cod, std::size_t ndom, const std::vector<int>& map) {
    for (Mask v : cod) {
        Mask pre = 0;
        for (std::size_t p = 0; p < ndom; ++p)
            if (v & (Mask{1} << static_cast<std::size_t>(map[p]))) pre |= Mask{1} << p;
        if (!dom.count(pre)) return false;
    }
    return true;
}

// Equivalence classes of an explicit binary relation, via repeated sweeps
// (no union-find; this is the independent path).
inline std::vector<int> classes_of_relation(std::size_t n, const std::vector<std::vector<bool>>& rel) {
    std::vector<int> cls(n, -1);
    int next = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (cls[i] >= 0) continue;
        cls[i] = next;
        bool grown = true;
        while (grown) {
            grown = false;
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t b = 0; b < n; ++b)
                    if (rel[a][b] && cls[a] == next && cls[b] < 0) {
                        cls[b] = next;
                        grown = true;
                    }
        }
        ++next;
    }
    return cls;
}

} // namespace oracle
