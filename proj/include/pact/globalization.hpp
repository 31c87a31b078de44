#pragma once

#include <numeric>
#include <string>
#include <vector>

#include "pact/action.hpp"
#include "pact/gamma.hpp"
#include "pact/report.hpp"
#include "pact/topology.hpp"

namespace pact {

// ============================================================================
// Enveloping space X_G = (G×X)/R and the enveloping action
// ============================================================================

// (g,x) R (h,y)  ⟺  x ∈ X_{g⁻¹h} and θ_{h⁻¹g}(x) = y,  with X_k = im(θ_k).
inline bool enveloping_related(const PartialAction& a, int g, std::size_t x, int h, std::size_t y) {
    const auto& G = *a.group;
    const int ginv_h = G.mul(G.inv(g), h);
    const int hinv_g = G.mul(G.inv(h), g);
    return a.theta[static_cast<std::size_t>(ginv_h)].cod.test(x) &&
           a.theta[static_cast<std::size_t>(hinv_g)].dom.test(x) &&
           a.theta[static_cast<std::size_t>(hinv_g)].fwd[x] == static_cast<int>(y);
}

namespace detail {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int v) {
        while (parent[static_cast<std::size_t>(v)] != v) {
            parent[static_cast<std::size_t>(v)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
            v = parent[static_cast<std::size_t>(v)];
        }
        return v;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[static_cast<std::size_t>(a)] = b;
    }
};

} // namespace detail

// Partition of G×X under R, node id = g·|X| + x.  The equivalence axioms are
// re-verified against the raw relation rather than trusted from theory.
struct EnvelopingRelation {
    std::vector<int> block_of;                 // node -> block id (0..blocks-1, arbitrary order)
    std::size_t blocks = 0;
    Report verification;
};

inline EnvelopingRelation enveloping_relation(const PartialAction& a) {
    const auto& G = *a.group;
    const std::size_t nx = a.space->size();
    const std::size_t nodes = G.order() * nx;

    detail::UnionFind uf(nodes);
    for (std::size_t g = 0; g < G.order(); ++g)
        for (std::size_t x = 0; x < nx; ++x)
            for (std::size_t h = 0; h < G.order(); ++h) {
                const int k = G.mul(G.inv(static_cast<int>(h)), static_cast<int>(g));
                const auto& t = a.theta[static_cast<std::size_t>(k)];
                if (t.dom.test(x))
                    uf.unite(static_cast<int>(g * nx + x),
                             static_cast<int>(h * nx + static_cast<std::size_t>(t.fwd[x])));
            }

    EnvelopingRelation rel;
    rel.block_of.assign(nodes, -1);
    for (std::size_t v = 0; v < nodes; ++v) {
        const int root = uf.find(static_cast<int>(v));
        if (rel.block_of[static_cast<std::size_t>(root)] < 0)
            rel.block_of[static_cast<std::size_t>(root)] = static_cast<int>(rel.blocks++);
        rel.block_of[v] = rel.block_of[static_cast<std::size_t>(root)];
    }

    // cross-check against the definition of R
    const auto related = [&](std::size_t u, std::size_t v) {
        return enveloping_related(a, static_cast<int>(u / nx), u % nx, static_cast<int>(v / nx), v % nx);
    };
    Report& rep = rel.verification;
    rep.title = "enveloping relation";
    bool refl = true, sym = true, trans = true, match = true;
    std::string w;
    std::vector<std::vector<bool>> m(nodes, std::vector<bool>(nodes, false));
    for (std::size_t u = 0; u < nodes; ++u)
        for (std::size_t v = 0; v < nodes; ++v) m[u][v] = related(u, v);
    const auto node_name = [&](std::size_t u) {
        return "(" + G.name(static_cast<int>(u / nx)) + "," + a.space->points[u % nx] + ")";
    };
    for (std::size_t u = 0; u < nodes; ++u) {
        if (!m[u][u]) {
            refl = false;
            w = node_name(u);
        }
        for (std::size_t v = 0; v < nodes; ++v) {
            if (m[u][v] != m[v][u]) sym = false;
            if (m[u][v] != (rel.block_of[u] == rel.block_of[v])) {
                match = false;
                w = node_name(u) + " vs " + node_name(v);
            }
            if (m[u][v])
                for (std::size_t t = 0; t < nodes; ++t)
                    if (m[v][t] && !m[u][t]) trans = false;
        }
    }
    rep.add("R is reflexive", refl, refl ? "" : w);
    rep.add("R is symmetric", sym);
    rep.add("R is transitive", trans);
    rep.add("union-find partition equals the relation's classes", match, match ? "" : w);
    return rel;
}

struct EnvelopingSpace {
    PartialAction source;
    ActionGraph graph;         // G×X materialized via the product (G discrete)
    EnvelopingRelation rel;    // node-indexed partition
    SpaceRef space;            // X_G with quotient topology; class labels "[g,x]"
    std::vector<int> class_of; // product point index -> quotient point index
    PartialAction mu;          // enveloping action, global
    ContinuousMap iota;        // x ↦ [e,x]
    ContinuousMap q;           // (g,x) ↦ [g,x]
};

inline EnvelopingSpace globalize(const PartialAction& a) {
    EnvelopingSpace env;
    env.source = a;
    env.graph = action_graph(a);
    env.rel = enveloping_relation(a);
    if (!env.rel.verification.passed())
        throw error("globalize: R is not an equivalence relation: " +
                    env.rel.verification.first_failure()->label);

    const auto& G = *a.group;
    const std::size_t nx = a.space->size();
    const std::size_t npts = env.graph.space->size();

    // block assignment over product point indices
    std::vector<int> block_of(npts, -1);
    for (std::size_t g = 0; g < G.order(); ++g)
        for (std::size_t x = 0; x < nx; ++x)
            block_of[static_cast<std::size_t>(env.graph.point_of[g * nx + x])] = env.rel.block_of[g * nx + x];

    // class label "[g,x]" from the lexicographically least (g,x) member
    const auto& prod = env.graph.product_space;
    const auto labeler = [&](const std::vector<int>& members) {
        std::pair<std::string, std::string> best;
        bool first = true;
        for (int idx : members) {
            const auto& co = prod.coord[static_cast<std::size_t>(idx)];
            std::pair<std::string, std::string> cand{prod.factors[0]->points[static_cast<std::size_t>(co[0])],
                                                     prod.factors[1]->points[static_cast<std::size_t>(co[1])]};
            if (first || cand < best) {
                best = cand;
                first = false;
            }
        }
        return "[" + best.first + "," + best.second + "]";
    };
    auto quo = quotient_core(env.graph.space, block_of, env.rel.blocks, labeler);
    env.space = quo.q.cod;
    env.class_of = quo.block_of;
    env.q = quo.q;

    const auto class_of_pair = [&](std::size_t g, std::size_t x) {
        return env.class_of[static_cast<std::size_t>(env.graph.point_of[g * nx + x])];
    };

    // enveloping action μ(g,[h,x]) = [gh,x], checked well-defined on classes
    std::vector<PartialHomeo> mu_theta;
    for (std::size_t g = 0; g < G.order(); ++g) {
        std::vector<int> fwd(env.rel.blocks, -1);
        for (std::size_t h = 0; h < G.order(); ++h)
            for (std::size_t x = 0; x < nx; ++x) {
                const int c = class_of_pair(h, x);
                const int target = class_of_pair(static_cast<std::size_t>(G.mul(static_cast<int>(g), static_cast<int>(h))), x);
                if (fwd[static_cast<std::size_t>(c)] >= 0 && fwd[static_cast<std::size_t>(c)] != target)
                    throw error("globalize: mu(" + G.name(static_cast<int>(g)) + ") is not well-defined on class " +
                                env.space->points[static_cast<std::size_t>(c)]);
                fwd[static_cast<std::size_t>(c)] = target;
            }
        PartialHomeo f = raw_partial_homeo(env.space, Bits::full(env.rel.blocks), fwd);
        if (const auto why = partial_homeo_violation(f))
            throw error("globalize: mu(" + G.name(static_cast<int>(g)) + ") is not a homeomorphism: " + *why);
        mu_theta.push_back(std::move(f));
    }
    env.mu = make_partial_action(a.group, env.space, std::move(mu_theta));

    // ι(x) = [e,x]
    env.iota = ContinuousMap{a.space, env.space, std::vector<int>(nx, -1)};
    for (std::size_t x = 0; x < nx; ++x)
        env.iota.map[x] = class_of_pair(static_cast<std::size_t>(G.identity), x);
    if (!is_continuous(env.iota)) throw error("globalize: iota is not continuous (internal error)");
    return env;
}

inline Report verify_globalization(const EnvelopingSpace& env) {
    Report rep;
    rep.title = "globalization contract";
    const auto& a = env.source;
    const auto& G = *a.group;
    const std::size_t nx = a.space->size();

    rep.merge(env.rel.verification);

    // action axioms for mu, evaluated directly
    bool unit = true, assoc = true;
    const auto& mu = env.mu.theta;
    for (std::size_t c = 0; c < env.space->size(); ++c)
        if (mu[static_cast<std::size_t>(G.identity)].fwd[c] != static_cast<int>(c)) unit = false;
    std::string aw;
    for (std::size_t g = 0; g < G.order(); ++g)
        for (std::size_t h = 0; h < G.order(); ++h)
            for (std::size_t c = 0; c < env.space->size(); ++c) {
                const int lhs = mu[g].fwd[static_cast<std::size_t>(mu[h].fwd[c])];
                const int rhs = mu[static_cast<std::size_t>(G.mul(static_cast<int>(g), static_cast<int>(h)))].fwd[c];
                if (lhs != rhs) {
                    assoc = false;
                    aw = "(g,h,[.]) = (" + G.name(static_cast<int>(g)) + "," + G.name(static_cast<int>(h)) + "," +
                         env.space->points[c] + ")";
                }
            }
    rep.add("mu(e) = id", unit);
    rep.add("mu(g)∘mu(h) = mu(gh)", assoc, aw);

    bool mu_cont = true;
    std::string cw;
    for (std::size_t g = 0; g < G.order(); ++g) {
        ContinuousMap m{env.space, env.space, mu[g].fwd};
        if (!is_continuous(m)) {
            mu_cont = false;
            cw = "g = " + G.name(static_cast<int>(g));
        }
    }
    rep.add("mu is continuous (per element; G discrete)", mu_cont, cw);

    rep.add("iota is continuous", is_continuous(env.iota));
    rep.add("iota is injective", is_injective(env.iota));
    rep.add("q is continuous", is_continuous(env.q));
    rep.add("q is open", is_open_map(env.q));
    rep.add("q is surjective", is_surjective(env.q));

    // G·ι(X) = X_G
    const Bits covered = env.mu.orbit_of(image_of(env.iota));
    rep.add("G·iota(X) covers the enveloping space", covered.count() == env.space->size());

    // q(g,x) = mu(g, iota(x)) for all (g,x)
    bool consistent = true;
    for (std::size_t g = 0; g < G.order() && consistent; ++g)
        for (std::size_t x = 0; x < nx; ++x) {
            const int via_q = env.class_of[static_cast<std::size_t>(env.graph.point_of[g * nx + x])];
            const int via_mu = env.mu.theta[g].fwd[static_cast<std::size_t>(env.iota.map[x])];
            if (via_q != via_mu) {
                consistent = false;
                break;
            }
        }
    rep.add("q(g,x) = mu(g, iota(x))", consistent);

    rep.add("iota is an open embedding", is_embedding(env.iota) && env.space->is_open(image_of(env.iota)), "",
            "source is nice: finite discrete G makes every validated action nice");

    // restriction of mu to iota(X) recovers theta up to the iota relabeling
    bool recovers = true;
    std::string rw;
    try {
        const auto nu = restrict_global(env.mu, image_of(env.iota));
        for (std::size_t g = 0; g < G.order() && recovers; ++g) {
            for (std::size_t x = 0; x < nx; ++x) {
                const int ix = nu.space->index_of(env.space->points[static_cast<std::size_t>(env.iota.map[x])]);
                const bool in_theta = a.theta[g].dom.test(x);
                const bool in_nu = nu.theta[g].dom.test(static_cast<std::size_t>(ix));
                if (in_theta != in_nu) {
                    recovers = false;
                    rw = "domain mismatch at (g,x) = (" + G.name(static_cast<int>(g)) + "," + a.space->points[x] + ")";
                    break;
                }
                if (in_theta) {
                    const int expect =
                        nu.space->index_of(env.space->points[static_cast<std::size_t>(
                            env.iota.map[static_cast<std::size_t>(a.theta[g].fwd[x])])]);
                    if (nu.theta[g].fwd[static_cast<std::size_t>(ix)] != expect) {
                        recovers = false;
                        rw = "value mismatch at (g,x) = (" + G.name(static_cast<int>(g)) + "," + a.space->points[x] + ")";
                        break;
                    }
                }
            }
        }
    } catch (const error& e) {
        recovers = false;
        rw = e.what();
    }
    rep.add("restriction of mu to iota(X) recovers theta", recovers, rw);
    return rep;
}

// ============================================================================
// Open restrictions of global actions (Lemma: U_G ≅ open G·U)
// ============================================================================

struct OpenRestriction {
    EnvelopingSpace env; // globalization of the restriction to U
    ContinuousMap j;     // U_G ∋ [g,u] ↦ β(g,u) ∈ Y
    Report report;
};

inline OpenRestriction open_restriction_globalize(const PartialAction& global, const Bits& u) {
    if (!global.is_global()) throw error("open_restriction_globalize: action is not global");
    if (!global.space->is_open(u)) throw error("open_restriction_globalize: the subset is not open");
    if (u.none()) throw error("open_restriction_globalize: the subset is empty");

    OpenRestriction out;
    const PartialAction restricted = restrict_global(global, u);
    out.env = globalize(restricted);
    const auto& env = out.env;
    const auto& G = *global.group;
    const std::size_t nu = restricted.space->size();
    const auto uidx = u.indices();

    // j([g,u]) = β(g,u); well-definedness is checked member by member
    std::vector<int> jmap(env.space->size(), -1);
    bool well_defined = true;
    std::string ww;
    for (std::size_t g = 0; g < G.order(); ++g)
        for (std::size_t x = 0; x < nu; ++x) {
            const int cls = env.class_of[static_cast<std::size_t>(env.graph.point_of[g * nu + x])];
            const int beta = global.theta[g].fwd[static_cast<std::size_t>(uidx[x])];
            if (jmap[static_cast<std::size_t>(cls)] >= 0 && jmap[static_cast<std::size_t>(cls)] != beta) {
                well_defined = false;
                ww = "class " + env.space->points[static_cast<std::size_t>(cls)];
            }
            jmap[static_cast<std::size_t>(cls)] = beta;
        }
    out.j = ContinuousMap{env.space, global.space, jmap};

    Report& rep = out.report;
    rep.title = "open restriction globalization";
    rep.add("j is well-defined on classes", well_defined, ww);
    rep.add("j is injective", is_injective(out.j));
    rep.add("j is continuous", is_continuous(out.j));
    rep.add("j is open", is_open_map(out.j));
    rep.add("j is an embedding", is_embedding(out.j));

    const Bits orbit = global.orbit_of(u);
    rep.add("j(U_G) = G·U", image_of(out.j) == orbit);
    rep.add("j(U_G) is open in Y", global.space->is_open(image_of(out.j)));
    return out;
}

inline OpenRestriction open_restriction_globalize(const PartialAction& global, const std::vector<std::string>& u) {
    return open_restriction_globalize(global, global.space->set_of(u));
}

} // namespace pact
