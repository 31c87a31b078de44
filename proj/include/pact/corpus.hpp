#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "pact/action.hpp"
#include "pact/gamma.hpp"
#include "pact/group.hpp"
#include "pact/topology.hpp"

namespace pact {

// ============================================================================
// Corpus generation: exhaustive small instances and a seeded random stream.
// Every emitted instance passes check_premorphism (asserted by construction).
// ============================================================================

struct CorpusSpec {
    bool exhaustive = false;
    std::size_t max_points = 2;  // |X| bound (exhaustive mode caps at 3)
    std::size_t max_group = 2;   // |G| bound
    std::size_t count = 100;     // random mode: number of instances
    std::uint64_t seed = 1;
};

namespace corpus_detail {

// all labeled topologies on n points, as open families encoded by bitmask
inline std::vector<std::vector<std::uint32_t>> labeled_topologies(std::size_t n) {
    const std::uint32_t full = (n >= 32) ? ~0u : ((1u << n) - 1);
    std::vector<std::uint32_t> proper;
    for (std::uint32_t m = 1; m < full; ++m) proper.push_back(m);
    std::vector<std::vector<std::uint32_t>> out;
    for (std::uint64_t choice = 0; choice < (std::uint64_t{1} << proper.size()); ++choice) {
        std::vector<std::uint32_t> fam = {0, full};
        for (std::size_t i = 0; i < proper.size(); ++i)
            if (choice & (std::uint64_t{1} << i)) fam.push_back(proper[i]);
        bool ok = true;
        for (std::size_t i = 0; i < fam.size() && ok; ++i)
            for (std::size_t j = i + 1; j < fam.size() && ok; ++j) {
                const auto u = fam[i] | fam[j];
                const auto v = fam[i] & fam[j];
                if (std::find(fam.begin(), fam.end(), u) == fam.end()) ok = false;
                if (std::find(fam.begin(), fam.end(), v) == fam.end()) ok = false;
            }
        if (ok) {
            std::sort(fam.begin(), fam.end());
            out.push_back(fam);
        }
    }
    return out;
}

inline std::uint32_t permute_mask(std::uint32_t m, const std::vector<int>& perm) {
    std::uint32_t r = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
        if (m & (1u << i)) r |= 1u << static_cast<std::uint32_t>(perm[i]);
    return r;
}

} // namespace corpus_detail

// Topologies on n points up to relabeling, returned as spaces on p0..p{n-1}.
inline std::vector<FiniteSpace> topologies_up_to_iso(std::size_t n) {
    std::vector<std::string> pts;
    for (std::size_t i = 0; i < n; ++i) pts.push_back("p" + std::to_string(i));
    if (n == 0) return {empty_space()};

    auto labeled = corpus_detail::labeled_topologies(n);
    std::vector<int> perm(n);
    std::vector<std::vector<std::uint32_t>> canon;
    std::vector<FiniteSpace> out;
    for (const auto& fam : labeled) {
        // canonical representative: the least family over all point relabelings
        std::vector<std::uint32_t> best = fam;
        for (std::size_t i = 0; i < n; ++i) perm[i] = static_cast<int>(i);
        while (std::next_permutation(perm.begin(), perm.end())) {
            std::vector<std::uint32_t> img;
            img.reserve(fam.size());
            for (auto m : fam) img.push_back(corpus_detail::permute_mask(m, perm));
            std::sort(img.begin(), img.end());
            if (img < best) best = img;
        }
        if (std::find(canon.begin(), canon.end(), best) != canon.end()) continue;
        canon.push_back(best);
        std::vector<std::vector<std::string>> opens;
        for (auto m : best) {
            std::vector<std::string> o;
            for (std::size_t i = 0; i < n; ++i)
                if (m & (1u << i)) o.push_back(pts[i]);
            opens.push_back(o);
        }
        out.push_back(space_from_opens(pts, opens));
    }
    return out;
}

// Self-inverse elements of Γ(X): exactly the legal values of theta(g) for an
// involution g (θ_g = θ_g⁻¹ forces dom = cod and φ∘φ = id there).
inline std::vector<PartialHomeo> self_inverse_gamma(const SpaceRef& s) {
    std::vector<PartialHomeo> out;
    for (auto& f : enumerate_gamma(s))
        if (f == invert(f)) out.push_back(std::move(f));
    return out;
}

// Exhaustive corpus: every topology up to relabeling on 1..max_points points,
// G ∈ {trivial, ℤ₂}, every valid theta.
inline std::vector<PartialAction> generate_exhaustive(std::size_t max_points) {
    if (max_points > 3) throw guard_error("exhaustive corpus is guarded to |X| <= 3");
    std::vector<PartialAction> out;
    const GroupRef triv = share(trivial_group());
    const GroupRef z2 = share(cyclic_group(2));
    for (std::size_t n = 1; n <= max_points; ++n)
        for (auto& sp : topologies_up_to_iso(n)) {
            const SpaceRef s = share(sp);
            out.push_back(make_partial_action(triv, s, {identity_homeo(s)}));
            for (const auto& phi : self_inverse_gamma(s))
                out.push_back(make_partial_action(z2, s, {identity_homeo(s), phi}));
        }
    return out;
}

namespace corpus_detail {

// subgroups of a small group, as sorted element-index lists
inline std::vector<std::vector<int>> subgroups(const FiniteGroup& g) {
    const std::size_t n = g.order();
    std::vector<std::vector<int>> out;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (!(mask & (1u << static_cast<std::uint32_t>(g.identity)))) continue;
        bool closed = true;
        for (std::size_t a = 0; a < n && closed; ++a) {
            if (!(mask & (1u << a))) continue;
            if (!(mask & (1u << static_cast<std::uint32_t>(g.inv(static_cast<int>(a)))))) closed = false;
            for (std::size_t b = 0; b < n && closed; ++b)
                if ((mask & (1u << b)) && !(mask & (1u << static_cast<std::uint32_t>(g.mul(static_cast<int>(a),
                                                                                          static_cast<int>(b))))))
                    closed = false;
        }
        if (!closed) continue;
        std::vector<int> sub;
        for (std::size_t a = 0; a < n; ++a)
            if (mask & (1u << a)) sub.push_back(static_cast<int>(a));
        out.push_back(sub);
    }
    return out;
}

} // namespace corpus_detail

/**
 * Seeded random instances built as restrictions of global actions — the shape
 * every validated action has at finite-discrete scale, since it is nice and
 * therefore the restriction of its own enveloping action to the open ι(X).
 *
 * Per instance: pick a group, assemble a G-set from random coset orbits, give
 * it a G-invariant topology generated by translated random subsets, and
 * restrict the translation action to a random nonempty open subset of at most
 * max_points points.
 */
inline std::vector<PartialAction> generate_random(const CorpusSpec& spec) {
    std::mt19937_64 rng(spec.seed);
    std::vector<GroupRef> groups;
    for (std::size_t k = 1; k <= spec.max_group; ++k) groups.push_back(share(cyclic_group(k)));
    if (spec.max_group >= 4) groups.push_back(share(klein_four()));

    std::vector<PartialAction> out;
    std::size_t attempts = 0;
    while (out.size() < spec.count) {
        if (++attempts > spec.count * 100 + 100)
            throw error("corpus sampler failed to produce enough valid instances");
        const GroupRef g = groups[rng() % groups.size()];
        const auto subs = corpus_detail::subgroups(*g);

        // assemble orbits until we have enough room for an |X| <= max_points subset
        struct Orbit {
            std::vector<std::vector<int>> cosets; // each coset = sorted element indices
        };
        std::vector<Orbit> orbits;
        std::size_t total = 0;
        const std::size_t want = spec.max_points + 1 + rng() % (spec.max_points + 1);
        while (total < want) {
            const auto& h = subs[rng() % subs.size()];
            Orbit orb;
            std::vector<char> seen(g->order(), 0);
            for (std::size_t a = 0; a < g->order(); ++a) {
                if (seen[a]) continue;
                std::vector<int> coset;
                for (int hh : h) {
                    const int el = g->mul(static_cast<int>(a), hh);
                    coset.push_back(el);
                    seen[static_cast<std::size_t>(el)] = 1;
                }
                std::sort(coset.begin(), coset.end());
                orb.cosets.push_back(coset);
            }
            total += orb.cosets.size();
            orbits.push_back(std::move(orb));
        }

        // points w<orbit>_<coset>; the action permutes cosets by translation
        std::vector<std::string> pts;
        for (std::size_t o = 0; o < orbits.size(); ++o)
            for (std::size_t ci = 0; ci < orbits[o].cosets.size(); ++ci)
                pts.push_back("w" + std::to_string(o) + "_" + std::to_string(ci));

        const std::size_t npts = pts.size();
        // permutation action: point index of g'·(coset)
        const auto act = [&](int gg, std::size_t point) {
            std::size_t base = 0;
            for (std::size_t o = 0; o < orbits.size(); ++o) {
                if (point < base + orbits[o].cosets.size()) {
                    const auto& cosets = orbits[o].cosets;
                    const auto& coset = cosets[point - base];
                    std::vector<int> moved;
                    for (int el : coset) moved.push_back(g->mul(gg, el));
                    std::sort(moved.begin(), moved.end());
                    for (std::size_t ci = 0; ci < cosets.size(); ++ci)
                        if (cosets[ci] == moved) return base + ci;
                    throw error("corpus sampler: translation left the orbit (internal)");
                }
                base += orbits[o].cosets.size();
            }
            throw error("corpus sampler: point out of range (internal)");
        };

        // G-invariant topology: random generators closed under translation
        std::vector<std::vector<std::string>> gens;
        const std::size_t ngen = rng() % 3;
        for (std::size_t k = 0; k < ngen; ++k) {
            std::uint64_t mask = rng() % (std::uint64_t{1} << npts);
            for (std::size_t gg = 0; gg < g->order(); ++gg) {
                std::vector<std::string> names;
                for (std::size_t p = 0; p < npts; ++p)
                    if (mask & (std::uint64_t{1} << p)) names.push_back(pts[act(static_cast<int>(gg), p)]);
                gens.push_back(names);
            }
        }
        FiniteSpace w = make_space(pts, gens); // pts are generated sorted
        const SpaceRef ws = share(std::move(w));

        std::vector<PartialHomeo> mu;
        for (std::size_t gg = 0; gg < g->order(); ++gg) {
            std::vector<int> fwd(npts);
            for (std::size_t p = 0; p < npts; ++p) fwd[p] = static_cast<int>(act(static_cast<int>(gg), p));
            mu.push_back(raw_partial_homeo(ws, Bits::full(npts), fwd));
        }
        PartialAction global;
        try {
            global = make_partial_action(g, ws, std::move(mu));
        } catch (const error&) {
            continue; // topology was not invariant (cannot happen, but resample)
        }

        // random nonempty open subset of bounded size
        const auto opens = enumerate_opens(*ws);
        std::vector<const Bits*> candidates;
        for (const auto& o : opens)
            if (o.any() && o.count() <= spec.max_points) candidates.push_back(&o);
        if (candidates.empty()) continue;
        const Bits& x = *candidates[rng() % candidates.size()];

        PartialAction inst = restrict_global(global, x);
        if (!check_premorphism(inst).passed()) continue; // rejection sampling, belt and braces
        out.push_back(std::move(inst));
    }
    return out;
}

inline std::vector<PartialAction> generate_corpus(const CorpusSpec& spec) {
    if (spec.exhaustive) return generate_exhaustive(spec.max_points);
    return generate_random(spec);
}

} // namespace pact
