#pragma once

#include <string>
#include <vector>

#include "pact/gamma.hpp"
#include "pact/group.hpp"
#include "pact/report.hpp"
#include "pact/topology.hpp"

namespace pact {

// ============================================================================
// Partial actions as unital premorphisms G → Γ(X)
// ============================================================================

struct PartialAction {
    GroupRef group;
    SpaceRef space;
    std::vector<PartialHomeo> theta; // indexed by group element

    const PartialHomeo& of(int g) const { return theta[static_cast<std::size_t>(g)]; }
    // X_g = im(θ_g) = dom(θ_{g⁻¹}) for validated actions
    const Bits& domain_of(int g) const { return theta[static_cast<std::size_t>(g)].dom; }
    Bits orbit_of(const Bits& a) const {
        Bits r(space->size());
        for (const auto& t : theta) r |= image_of_set(t, a);
        return r;
    }

    static Bits image_of_set(const PartialHomeo& t, const Bits& a) {
        Bits r(t.dom.universe());
        (a & t.dom).for_each([&](std::size_t p) { r.set(static_cast<std::size_t>(t.fwd[p])); });
        return r;
    }

    bool is_global() const {
        for (const auto& t : theta)
            if (t.dom.count() != space->size()) return false;
        return true;
    }
};

namespace detail {

inline std::string pair_witness(const PartialAction& a, int g, int h) {
    return "(g,h) = (" + a.group->name(g) + "," + a.group->name(h) + ")";
}

} // namespace detail

/**
 * Premorphism laws in the family form — θ_e = id, θ_{g⁻¹} = θ_g⁻¹,
 * θ_g∘θ_h ≤ θ_{gh} — followed by the set-theoretic axioms (PA1)–(PA3)
 * evaluated directly on the partial map (g,x) ↦ θ_g(x), and a final clause
 * asserting the two formulations agree.  Each failing clause carries a
 * minimal witness.
 */
inline Report check_premorphism(const PartialAction& a) {
    Report rep;
    rep.title = "premorphism laws for " + std::to_string(a.group->order()) + "-element group on " +
                std::to_string(a.space->size()) + "-point space";
    const auto& G = *a.group;
    const std::size_t n = a.space->size();

    bool structural = true;
    for (std::size_t g = 0; g < G.order(); ++g) {
        if (const auto why = partial_homeo_violation(a.theta[g])) {
            rep.add("theta(" + G.name(static_cast<int>(g)) + ") is a homeomorphism between open subsets", false, *why);
            structural = false;
        }
    }
    if (structural) rep.add("every theta(g) is a homeomorphism between open subsets", true);

    // --- family form ---
    const bool unit = a.theta[static_cast<std::size_t>(G.identity)] == identity_homeo(a.space);
    rep.add("theta(e) = id_X", unit,
            unit ? "" : "dom(theta(e)) = " + a.space->set_name(a.theta[static_cast<std::size_t>(G.identity)].dom));

    bool inverses = true;
    std::string inv_witness;
    for (std::size_t g = 0; g < G.order() && inverses; ++g)
        if (!(a.theta[static_cast<std::size_t>(G.inv(static_cast<int>(g)))] == invert(a.theta[g]))) {
            inverses = false;
            inv_witness = "g = " + G.name(static_cast<int>(g));
        }
    rep.add("theta(g⁻¹) = theta(g)⁻¹ for all g", inverses, inv_witness);

    bool premo = true;
    std::string premo_witness;
    for (std::size_t g = 0; g < G.order() && premo; ++g)
        for (std::size_t h = 0; h < G.order() && premo; ++h) {
            const auto comp = compose(a.theta[g], a.theta[h]);
            if (!leq(comp, a.theta[static_cast<std::size_t>(G.mul(static_cast<int>(g), static_cast<int>(h)))])) {
                premo = false;
                premo_witness = detail::pair_witness(a, static_cast<int>(g), static_cast<int>(h));
                comp.dom.for_each([&](std::size_t x) {
                    const auto& target = a.theta[static_cast<std::size_t>(G.mul(static_cast<int>(g), static_cast<int>(h)))];
                    if (!target.dom.test(x) || target.fwd[x] != comp.fwd[x])
                        premo_witness = "(g,h,x) = (" + G.name(static_cast<int>(g)) + "," + G.name(static_cast<int>(h)) +
                                        "," + a.space->points[x] + ")";
                });
            }
        }
    rep.add("theta(g)∘theta(h) ≤ theta(gh) for all g,h", premo, premo_witness);
    const bool family_ok = unit && inverses && premo && structural;

    // --- set-theoretic form, evaluated independently on the partial map ---
    const auto exists = [&](int g, std::size_t x) { return a.theta[static_cast<std::size_t>(g)].dom.test(x); };
    const auto act = [&](int g, std::size_t x) { return static_cast<std::size_t>(a.theta[static_cast<std::size_t>(g)].fwd[x]); };

    bool pa1 = true;
    std::string w1;
    for (std::size_t g = 0; g < G.order() && pa1; ++g)
        for (std::size_t x = 0; x < n && pa1; ++x)
            if (exists(static_cast<int>(g), x)) {
                const std::size_t gx = act(static_cast<int>(g), x);
                if (!exists(G.inv(static_cast<int>(g)), gx) || act(G.inv(static_cast<int>(g)), gx) != x) {
                    pa1 = false;
                    w1 = "(g,x) = (" + G.name(static_cast<int>(g)) + "," + a.space->points[x] + ")";
                }
            }
    rep.add("(PA1) g⁻¹·(g·x) exists and equals x", pa1, w1);

    bool pa2 = true;
    std::string w2;
    for (std::size_t g = 0; g < G.order() && pa2; ++g)
        for (std::size_t h = 0; h < G.order() && pa2; ++h)
            for (std::size_t x = 0; x < n && pa2; ++x)
                if (exists(static_cast<int>(h), x) && exists(static_cast<int>(g), act(static_cast<int>(h), x))) {
                    const int gh = G.mul(static_cast<int>(g), static_cast<int>(h));
                    const std::size_t lhs = act(static_cast<int>(g), act(static_cast<int>(h), x));
                    if (!exists(gh, x) || act(gh, x) != lhs) {
                        pa2 = false;
                        w2 = "(g,h,x) = (" + G.name(static_cast<int>(g)) + "," + G.name(static_cast<int>(h)) + "," +
                             a.space->points[x] + ")";
                    }
                }
    rep.add("(PA2) g·(h·x) defined implies (gh)·x defined and equal", pa2, w2);

    bool pa3 = true;
    std::string w3;
    for (std::size_t x = 0; x < n; ++x)
        if (!exists(G.identity, x) || act(G.identity, x) != x) {
            pa3 = false;
            w3 = "x = " + a.space->points[x];
            break;
        }
    rep.add("(PA3) e·x exists and equals x", pa3, w3);

    const bool set_ok = pa1 && pa2 && pa3 && structural;
    rep.add("family form and set form agree", family_ok == set_ok,
            family_ok == set_ok ? "" : std::string("family says ") + (family_ok ? "valid" : "invalid") +
                                           ", set form says " + (set_ok ? "valid" : "invalid"));
    return rep;
}

inline PartialAction raw_partial_action(GroupRef group, SpaceRef space, std::vector<PartialHomeo> theta) {
    return PartialAction{std::move(group), std::move(space), std::move(theta)};
}

inline PartialAction make_partial_action(GroupRef group, SpaceRef space, std::vector<PartialHomeo> theta) {
    PartialAction a = raw_partial_action(std::move(group), std::move(space), std::move(theta));
    if (a.theta.size() != a.group->order()) throw error("theta must assign a partial homeomorphism to every element");
    const Report rep = check_premorphism(a);
    if (!rep.passed()) {
        const Clause* c = rep.first_failure();
        throw error("not a partial action: " + c->label + (c->witness.empty() ? "" : " [" + c->witness + "]"));
    }
    return a;
}

// The trivial-group action, and global actions from a full-domain table.
inline PartialAction trivial_action(SpaceRef space) {
    return make_partial_action(share(trivial_group()), space, {identity_homeo(space)});
}

/**
 * Restriction of a global action μ to a subset: GxX = {(g,x) | μ(g,x) ∈ X}.
 * Valid whenever each induced domain is relatively open in the subset — which
 * holds automatically for open subsets; for other subsets validation may
 * reject, naming the offending domain.
 */
inline PartialAction restrict_global(const PartialAction& global, const Bits& subset) {
    if (!global.is_global()) throw error("restrict_global: the given action is not global");
    if (subset.none()) throw error("restrict_global: subset must be nonempty");
    const SpaceRef sub = share(subspace(*global.space, subset));
    const auto subset_idx = subset.indices();
    std::vector<int> to_sub(global.space->size(), -1);
    for (std::size_t k = 0; k < subset_idx.size(); ++k) to_sub[static_cast<std::size_t>(subset_idx[k])] = static_cast<int>(k);

    std::vector<PartialHomeo> theta;
    for (std::size_t g = 0; g < global.group->order(); ++g) {
        Bits dom(sub->size());
        std::vector<int> fwd(sub->size(), -1);
        for (std::size_t k = 0; k < subset_idx.size(); ++k) {
            const std::size_t amb = static_cast<std::size_t>(subset_idx[k]);
            const int img = global.theta[g].fwd[amb];
            if (subset.test(static_cast<std::size_t>(img))) {
                dom.set(k);
                fwd[k] = to_sub[static_cast<std::size_t>(img)];
            }
        }
        PartialHomeo f = raw_partial_homeo(sub, dom, fwd);
        if (const auto why = partial_homeo_violation(f))
            throw error("restriction at g = " + global.group->name(static_cast<int>(g)) + " is not in Γ(X): " + *why);
        theta.push_back(std::move(f));
    }
    return make_partial_action(global.group, sub, std::move(theta));
}

inline PartialAction restrict_global(const PartialAction& global, const std::vector<std::string>& subset) {
    return restrict_global(global, global.space->set_of(subset));
}

// ============================================================================
// Niceness and equivariance
// ============================================================================

// Builds G×X with G discrete and returns (product, G*X as a subset).
struct ActionGraph {
    ProductSpace product_space;
    Bits gstar;                  // {(g,x) : x ∈ dom θ_g} inside the product
    std::vector<int> point_of;   // [g * |X| + x] -> product point index
    SpaceRef space;              // shared product space
};

inline ActionGraph action_graph(const PartialAction& a) {
    ActionGraph gr;
    const SpaceRef gspace = share(discrete_space(a.group->elements));
    gr.product_space = product({gspace, a.space});
    gr.space = share(gr.product_space.space);
    const std::size_t nx = a.space->size();
    gr.gstar = Bits(gr.space->size());
    gr.point_of.assign(a.group->order() * nx, -1);
    for (std::size_t g = 0; g < a.group->order(); ++g) {
        const int gp = gspace->index_of(a.group->name(static_cast<int>(g)));
        for (std::size_t x = 0; x < nx; ++x) {
            const int idx = gr.product_space.index_of_tuple({gp, static_cast<int>(x)});
            gr.point_of[g * nx + x] = idx;
            if (a.theta[g].dom.test(x)) gr.gstar.set(static_cast<std::size_t>(idx));
        }
    }
    return gr;
}

/**
 * θ is nice when the action map is continuous on G*X and G*X is open in G×X.
 * With G finite discrete this reduces to per-element checks; both the reduced
 * and the direct product-level computations are performed and compared.
 */
inline Report is_nice(const PartialAction& a) {
    Report rep;
    rep.title = "niceness";
    const auto& G = *a.group;

    bool doms_open = true;
    std::string dw;
    for (std::size_t g = 0; g < G.order(); ++g)
        if (!a.space->is_open(a.theta[g].dom)) {
            doms_open = false;
            dw = "g = " + G.name(static_cast<int>(g));
            break;
        }
    rep.add("every dom(theta(g)) is open", doms_open, dw);

    bool each_cont = true;
    std::string cw;
    for (std::size_t g = 0; g < G.order(); ++g) {
        const auto& t = a.theta[g];
        bool ok = true;
        t.dom.for_each([&](std::size_t p) {
            Bits img(a.space->size());
            (a.space->min_open[p] & t.dom).for_each([&](std::size_t q) { img.set(static_cast<std::size_t>(t.fwd[q])); });
            if (!a.space->min_open[static_cast<std::size_t>(t.fwd[p])].contains(img)) ok = false;
        });
        if (!ok) {
            each_cont = false;
            cw = "g = " + G.name(static_cast<int>(g));
            break;
        }
    }
    rep.add("every theta(g) is continuous", each_cont, cw,
            "G discrete: continuity of θ on G*X reduces to continuity of each θ_g");

    const ActionGraph gr = action_graph(a);
    const bool gstar_open = gr.space->is_open(gr.gstar);
    rep.add("G*X is open in G×X", gstar_open, "",
            "computed on the materialized product; equals openness of every dom(theta(g))");
    if (doms_open != gstar_open)
        rep.add("discrete-G reduction agrees with the product computation", false,
                "per-element and product-level openness disagree");

    // θ as a single map on the subspace G*X of the product
    const SpaceRef gsub = share(subspace(*gr.space, gr.gstar));
    ContinuousMap theta_map{gsub, a.space, std::vector<int>(gsub->size(), -1)};
    const std::size_t nx = a.space->size();
    for (std::size_t g = 0; g < G.order(); ++g)
        for (std::size_t x = 0; x < nx; ++x)
            if (a.theta[g].dom.test(x)) {
                const int sub_idx = gsub->index_of(gr.space->points[static_cast<std::size_t>(gr.point_of[g * nx + x])]);
                theta_map.map[static_cast<std::size_t>(sub_idx)] = a.theta[g].fwd[x];
            }
    const bool theta_cont = is_continuous(theta_map);
    rep.add("θ: G*X → X is continuous", theta_cont);
    if (theta_cont != each_cont)
        rep.add("discrete-G reduction agrees with the subspace computation", false,
                "per-element and G*X-level continuity disagree");
    return rep;
}

// f is a G-map: f(x) lands in dom(η_g) and η_g(f(x)) = f(θ_g(x)) on all of G*X.
inline Report check_G_map(const ContinuousMap& f, const PartialAction& ax, const PartialAction& ay) {
    Report rep;
    rep.title = "G-map";
    if (!(*ax.group == *ay.group)) throw error("check_G_map: the two actions have different groups");
    if (!(*f.dom == *ax.space) || !(*f.cod == *ay.space))
        throw error("check_G_map: map endpoints do not match the action spaces");

    bool ok = true;
    std::string witness;
    for (std::size_t g = 0; g < ax.group->order() && ok; ++g) {
        const auto& tx = ax.theta[g];
        const auto& ty = ay.theta[g];
        tx.dom.for_each([&](std::size_t x) {
            if (!ok) return;
            const std::size_t fx = static_cast<std::size_t>(f.map[x]);
            if (!ty.dom.test(fx) || ty.fwd[fx] != f.map[static_cast<std::size_t>(tx.fwd[x])]) {
                ok = false;
                witness = "(g,x) = (" + ax.group->name(static_cast<int>(g)) + "," + ax.space->points[x] + ")";
            }
        });
    }
    rep.add("η(g,f(x)) = f(θ(g,x)) on G*X", ok, witness);
    return rep;
}

} // namespace pact
