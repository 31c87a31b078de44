#pragma once

#include <string>
#include <vector>

#include "pact/action.hpp"
#include "pact/embeddings.hpp"
#include "pact/globalization.hpp"
#include "pact/report.hpp"

namespace pact {

// ============================================================================
// The induced partial action θ̂ on C(X,Y) and the theorem checkers for it.
// Checkers never assume the theorems: both sides of every equivalence are
// computed independently and compared, so a discrepancy flags an upstream bug.
// ============================================================================

struct FuncSpaceBundle {
    SpaceRef x;                      // compact parameter space
    PartialAction a;                 // partial action on y
    FunctionSpaceEmbedding fse;      // C(x,y) with the Γ-embedding (c, σ)
    PartialAction ahat;              // induced action on C(x,y)
    std::vector<ContinuousMap> evs;  // evaluation maps ev_p per point of x

    const SpaceRef& y() const { return a.space; }
    const SpaceRef& cxy() const { return fse.fs.space; }
    const ContinuousMap& c() const { return fse.emb.c; }
};

inline FuncSpaceBundle build_bundle(SpaceRef x, const PartialAction& a) {
    FuncSpaceBundle b;
    b.x = std::move(x);
    b.a = a;
    b.fse = function_space(b.x, a.space);
    b.ahat = induce_action(b.fse.emb, a);

    const auto& fs = b.fse.fs;
    const auto& G = *a.group;

    // dom(θ̂(g)) = ⟨X, Y_{g⁻¹}⟩ and θ̂(g)(f) = θ_g∘f, recomputed from scratch
    for (std::size_t g = 0; g < G.order(); ++g) {
        const Bits& y_ginv = a.theta[g].dom; // Y_{g⁻¹} = dom θ_g
        for (std::size_t r = 0; r < fs.graph.size(); ++r) {
            bool inside = true;
            for (int v : fs.graph[r])
                if (!y_ginv.test(static_cast<std::size_t>(v))) inside = false;
            if (b.ahat.theta[g].dom.test(r) != inside)
                throw error("build_bundle: dom(θ̂(" + G.name(static_cast<int>(g)) + ")) differs from ⟨X, Y_g⁻¹⟩ at " +
                            fs.space->points[r]);
            if (!inside) continue;
            std::vector<int> comp(fs.graph[r].size());
            for (std::size_t p = 0; p < comp.size(); ++p)
                comp[p] = a.theta[g].fwd[static_cast<std::size_t>(fs.graph[r][p])];
            if (b.ahat.theta[g].fwd[r] != fs.index_of_map(comp))
                throw error("build_bundle: θ̂(" + G.name(static_cast<int>(g)) + ") is not θ_g∘f at " +
                            fs.space->points[r]);
        }
    }

    for (std::size_t p = 0; p < b.x->size(); ++p) {
        ContinuousMap ev{fs.space, a.space, {}};
        ev.map.reserve(fs.graph.size());
        for (const auto& f : fs.graph) ev.map.push_back(f[p]);
        if (!is_continuous(ev)) throw error("build_bundle: ev_" + b.x->points[p] + " is not continuous");
        if (!check_G_map(ev, b.ahat, a).passed())
            throw error("build_bundle: ev_" + b.x->points[p] + " is not a G-map");
        b.evs.push_back(std::move(ev));
    }
    if (!check_G_map(b.c(), a, b.ahat).passed()) throw error("build_bundle: c is not a G-map");
    for (std::size_t yy = 0; yy < a.space->size(); ++yy)
        for (const auto& ev : b.evs)
            if (ev.map[static_cast<std::size_t>(b.c().map[yy])] != static_cast<int>(yy))
                throw error("build_bundle: ev∘c is not the identity on Y");
    return b;
}

// ---------------------------------------------------------------------------
// θ continuous ⟺ θ̂ continuous (and the factorization θ = ev_x∘θ̂∘α)
// ---------------------------------------------------------------------------

namespace detail {

// continuity of the action map on its graph G*X ⊆ G×X, computed directly on
// the subspace, plus the discrete-G per-element reduction; both must agree.
struct ActionContinuity {
    bool direct;
    bool per_element;
};

inline ActionContinuity action_continuity(const PartialAction& a) {
    ActionContinuity out{true, true};
    for (const auto& t : a.theta) {
        bool ok = true;
        t.dom.for_each([&](std::size_t p) {
            Bits img(a.space->size());
            (a.space->min_open[p] & t.dom).for_each([&](std::size_t q) { img.set(static_cast<std::size_t>(t.fwd[q])); });
            if (!a.space->min_open[static_cast<std::size_t>(t.fwd[p])].contains(img)) ok = false;
        });
        if (!ok) out.per_element = false;
    }
    const ActionGraph gr = action_graph(a);
    const SpaceRef sub = share(subspace(*gr.space, gr.gstar));
    ContinuousMap theta_map{sub, a.space, std::vector<int>(sub->size(), -1)};
    const std::size_t nx = a.space->size();
    for (std::size_t g = 0; g < a.group->order(); ++g)
        for (std::size_t x = 0; x < nx; ++x)
            if (a.theta[g].dom.test(x)) {
                const int i = sub->index_of(gr.space->points[static_cast<std::size_t>(gr.point_of[g * nx + x])]);
                theta_map.map[static_cast<std::size_t>(i)] = a.theta[g].fwd[x];
            }
    out.direct = is_continuous(theta_map);
    return out;
}

} // namespace detail

inline Report check_continuity_equiv(const FuncSpaceBundle& b) {
    Report rep;
    rep.title = "continuity: θ vs θ̂";
    const auto left = detail::action_continuity(b.a);
    const auto right = detail::action_continuity(b.ahat);
    rep.add("θ: per-element continuity agrees with the G*Y computation", left.per_element == left.direct, "",
            "discrete G reduction");
    rep.add("θ̂: per-element continuity agrees with the G*C(X,Y) computation", right.per_element == right.direct, "",
            "discrete G reduction");
    rep.add("θ continuous ⟺ θ̂ continuous", left.direct == right.direct,
            left.direct == right.direct
                ? ""
                : std::string("θ ") + (left.direct ? "continuous" : "not continuous") + ", θ̂ " +
                      (right.direct ? "continuous" : "not continuous"));

    // θ = ev_x∘θ̂∘α with α(g,y) = (g,c_y), for every choice of x
    bool fact = true;
    std::string fw;
    const auto& G = *b.a.group;
    for (std::size_t g = 0; g < G.order() && fact; ++g)
        b.a.theta[g].dom.for_each([&](std::size_t y) {
            if (!fact) return;
            const std::size_t cy = static_cast<std::size_t>(b.c().map[y]);
            if (!b.ahat.theta[g].dom.test(cy)) {
                fact = false;
                fw = "(g,y) = (" + G.name(static_cast<int>(g)) + "," + b.y()->points[y] + ")";
                return;
            }
            const std::size_t img = static_cast<std::size_t>(b.ahat.theta[g].fwd[cy]);
            for (const auto& ev : b.evs)
                if (ev.map[img] != b.a.theta[g].fwd[y]) {
                    fact = false;
                    fw = "(g,y) = (" + G.name(static_cast<int>(g)) + "," + b.y()->points[y] + ")";
                }
        });
    rep.add("θ = ev_x∘θ̂∘α pointwise (all evaluation points)", fact, fw);
    return rep;
}

// ---------------------------------------------------------------------------
// G*Y open ⟺ G*C(X,Y) open, and niceness transfer
// ---------------------------------------------------------------------------

inline Report check_nice_equiv(const FuncSpaceBundle& b) {
    Report rep;
    rep.title = "niceness: θ vs θ̂";
    const ActionGraph gy = action_graph(b.a);
    const ActionGraph gc = action_graph(b.ahat);
    const bool y_open = gy.space->is_open(gy.gstar);
    const bool c_open = gc.space->is_open(gc.gstar);
    rep.add("G*Y open in G×Y ⟺ G*C(X,Y) open in G×C(X,Y)", y_open == c_open,
            y_open == c_open ? "" : std::string("G*Y ") + (y_open ? "open" : "not open") + ", G*C " +
                                        (c_open ? "open" : "not open"));
    const bool ny = is_nice(b.a).passed();
    const bool nc = is_nice(b.ahat).passed();
    rep.add("θ nice ⟺ θ̂ nice", ny == nc,
            ny == nc ? "" : std::string("θ ") + (ny ? "nice" : "not nice") + ", θ̂ " + (nc ? "nice" : "not nice"));
    return rep;
}

// ---------------------------------------------------------------------------
// J: Y_G → C(X,Y)_G, [g,y] ↦ [g,c_y]
// ---------------------------------------------------------------------------

struct JEmbedding {
    EnvelopingSpace env_y;
    EnvelopingSpace env_c;
    ContinuousMap J;
    Report report;
};

inline JEmbedding j_embed(const FuncSpaceBundle& b) {
    JEmbedding out;
    out.env_y = globalize(b.a);
    out.env_c = globalize(b.ahat);
    const auto& G = *b.a.group;
    const std::size_t ny = b.y()->size();
    const std::size_t nc = b.cxy()->size();
    Report& rep = out.report;
    rep.title = "J: Y_G → C(X,Y)_G";

    const auto cls_y = [&](std::size_t g, std::size_t yy) {
        return out.env_y.class_of[static_cast<std::size_t>(out.env_y.graph.point_of[g * ny + yy])];
    };
    const auto cls_c = [&](std::size_t g, std::size_t ff) {
        return out.env_c.class_of[static_cast<std::size_t>(out.env_c.graph.point_of[g * nc + ff])];
    };

    std::vector<int> jmap(out.env_y.space->size(), -1);
    bool well = true;
    std::string ww;
    for (std::size_t g = 0; g < G.order(); ++g)
        for (std::size_t yy = 0; yy < ny; ++yy) {
            const int from = cls_y(g, yy);
            const int to = cls_c(g, static_cast<std::size_t>(b.c().map[yy]));
            if (jmap[static_cast<std::size_t>(from)] >= 0 && jmap[static_cast<std::size_t>(from)] != to) {
                well = false;
                ww = "class " + out.env_y.space->points[static_cast<std::size_t>(from)];
            }
            jmap[static_cast<std::size_t>(from)] = to;
        }
    rep.add("J is well-defined on classes", well, ww);
    out.J = ContinuousMap{out.env_y.space, out.env_c.space, jmap};
    if (!well) return out;

    rep.merge(check_G_map(out.J, out.env_y.mu, out.env_c.mu), "J equivariant");
    rep.add("J is an embedding", is_embedding(out.J));

    const Bits z = image_of(out.J);
    bool invariant = true;
    for (std::size_t g = 0; g < G.order(); ++g)
        if (!(PartialAction::image_of_set(out.env_c.mu.theta[g], z) == z)) invariant = false;
    rep.add("Z = J(Y_G) is invariant under the enveloping action", invariant);

    // K_p([g,f]) = [g, f(p)]: well-defined for every p, with K∘J = id on Y_G
    // (p-independent) and J∘K = id on Z
    bool k_well = true, kj_id = true, jk_id = true;
    std::string kw;
    for (std::size_t p = 0; p < b.x->size(); ++p) {
        std::vector<int> kmap(out.env_c.space->size(), -1);
        for (std::size_t g = 0; g < G.order(); ++g)
            for (std::size_t ff = 0; ff < nc; ++ff) {
                const int from = cls_c(g, ff);
                const int to = cls_y(g, static_cast<std::size_t>(b.fse.fs.graph[ff][p]));
                if (kmap[static_cast<std::size_t>(from)] >= 0 && kmap[static_cast<std::size_t>(from)] != to) {
                    k_well = false;
                    kw = "p = " + b.x->points[p];
                }
                kmap[static_cast<std::size_t>(from)] = to;
            }
        for (std::size_t w = 0; w < out.env_y.space->size(); ++w)
            if (kmap[static_cast<std::size_t>(jmap[w])] != static_cast<int>(w)) kj_id = false;
        z.for_each([&](std::size_t zz) {
            if (jmap[static_cast<std::size_t>(kmap[zz])] != static_cast<int>(zz)) jk_id = false;
        });
    }
    rep.add("K is well-defined on classes for every evaluation point", k_well, kw);
    rep.add("K∘J = id on Y_G, independently of the evaluation point", kj_id);
    rep.add("J∘K = id on Z", jk_id);

    if (separation(*b.y(), Separation::T2))
        rep.add("Z is closed in C(X,Y)_G (Y Hausdorff)", out.env_c.space->is_closed(z));
    else
        rep.add("Z closed clause", true, "", "not applicable: Y is not Hausdorff");
    return out;
}

// ---------------------------------------------------------------------------
// T1/T2 equivalences and the clopen corollary
// ---------------------------------------------------------------------------

inline Report check_t1_t2_equiv(const FuncSpaceBundle& b) {
    Report rep;
    rep.title = "separation: Y_G vs C(X,Y)_G";
    const auto env_y = globalize(b.a);
    const auto env_c = globalize(b.ahat);
    const bool y1 = separation(*env_y.space, Separation::T1);
    const bool c1 = separation(*env_c.space, Separation::T1);
    rep.add("Y_G T1 ⟺ C(X,Y)_G T1", y1 == c1,
            y1 == c1 ? "" : std::string("Y_G ") + (y1 ? "T1" : "not T1") + ", C_G " + (c1 ? "T1" : "not T1"));
    const bool y2 = separation(*env_y.space, Separation::T2);
    const bool c2 = separation(*env_c.space, Separation::T2);
    rep.add("Y_G Hausdorff ⟺ C(X,Y)_G Hausdorff", y2 == c2,
            y2 == c2 ? "" : std::string("Y_G ") + (y2 ? "T2" : "not T2") + ", C_G " + (c2 ? "T2" : "not T2"));
    return rep;
}

// "Y_g clopen for all g ⟺ Y_G Hausdorff" needs Y compact Hausdorff: a
// non-Hausdorff Y with every θ(g) empty has all Y_g clopen while Y_G = G×Y is
// not Hausdorff.  The second equivalence is hypothesis-free.
inline Report check_clopen_corollary(const FuncSpaceBundle& b) {
    Report rep;
    rep.title = "clopen corollary";
    bool clopen = true;
    std::string cw;
    for (std::size_t g = 0; g < b.a.group->order(); ++g) {
        const Bits& yg = b.a.theta[g].cod; // Y_g = im θ_g
        if (!(b.y()->is_open(yg) && b.y()->is_closed(yg))) {
            clopen = false;
            cw = "g = " + b.a.group->name(static_cast<int>(g));
        }
    }
    const bool y2 = separation(*globalize(b.a).space, Separation::T2);
    const bool c2 = separation(*globalize(b.ahat).space, Separation::T2);
    if (separation(*b.y(), Separation::T2))
        rep.add("Y_g clopen for all g ⟺ Y_G Hausdorff", clopen == y2,
                clopen == y2 ? "" : (clopen ? "all clopen" : cw + " not clopen") + std::string(", Y_G ") +
                                        (y2 ? "T2" : "not T2"));
    else
        rep.add("Y_g clopen for all g ⟺ Y_G Hausdorff", true, "",
                "not applicable: Y is not Hausdorff (corollary hypothesis)");
    rep.add("Y_G Hausdorff ⟺ C(X,Y)_G Hausdorff", y2 == c2);
    return rep;
}

// ---------------------------------------------------------------------------
// ξ: C(X,Y)_G → C(X, Y_G), [g,ψ] ↦ μ_g∘ι∘ψ
// ---------------------------------------------------------------------------

struct XiEmbedding {
    EnvelopingSpace env_y;
    EnvelopingSpace env_c;
    FunctionSpace cyg; // C(X, Y_G)
    ContinuousMap xi;
    Report report;
};

inline XiEmbedding xi_embed(const FuncSpaceBundle& b) {
    XiEmbedding out;
    out.env_y = globalize(b.a);
    out.env_c = globalize(b.ahat);
    out.cyg = function_space_points(b.x, out.env_y.space);
    const auto& G = *b.a.group;
    const std::size_t nc = b.cxy()->size();
    Report& rep = out.report;
    rep.title = "ξ: C(X,Y)_G → C(X,Y_G)";

    rep.add("θ is nice", is_nice(b.a).passed(), "",
            "hypothesis of the open-embedding theorem; automatic for finite discrete G");

    const auto cls_c = [&](std::size_t g, std::size_t ff) {
        return out.env_c.class_of[static_cast<std::size_t>(out.env_c.graph.point_of[g * nc + ff])];
    };

    // ξ([g,ψ])(p) = μ_g(ι(ψ(p)))
    std::vector<int> ximap(out.env_c.space->size(), -1);
    bool well = true;
    std::string ww;
    for (std::size_t g = 0; g < G.order(); ++g)
        for (std::size_t ff = 0; ff < nc; ++ff) {
            std::vector<int> assignment(b.x->size());
            for (std::size_t p = 0; p < b.x->size(); ++p) {
                const int yv = b.fse.fs.graph[ff][p];
                const int iy = out.env_y.iota.map[static_cast<std::size_t>(yv)];
                assignment[p] = out.env_y.mu.theta[g].fwd[static_cast<std::size_t>(iy)];
            }
            const int target = out.cyg.index_of_map(assignment);
            if (target < 0) {
                well = false;
                ww = "image map is not continuous (internal error)";
                continue;
            }
            const int from = cls_c(g, ff);
            if (ximap[static_cast<std::size_t>(from)] >= 0 && ximap[static_cast<std::size_t>(from)] != target) {
                well = false;
                ww = "class " + out.env_c.space->points[static_cast<std::size_t>(from)];
            }
            ximap[static_cast<std::size_t>(from)] = target;
        }
    rep.add("ξ is well-defined on classes", well, ww);
    out.xi = ContinuousMap{out.env_c.space, out.cyg.space, ximap};
    if (!well) return out;

    rep.add("ξ is injective", is_injective(out.xi));
    rep.add("ξ is continuous", is_continuous(out.xi));
    rep.add("ξ(C(X,Y)_G) is open in C(X,Y_G)", out.cyg.space->is_open(image_of(out.xi)));
    rep.add("ξ is a homeomorphism onto its image", is_embedding(out.xi));

    // equivariance square: ξ(μ^θ̂(g,w)) = μ̂^θ(g, ξ(w)), where μ̂^θ(g,F) = μ_g∘F
    bool diag = true;
    std::string dw;
    for (std::size_t g = 0; g < G.order() && diag; ++g)
        for (std::size_t w = 0; w < out.env_c.space->size(); ++w) {
            const int lhs = ximap[static_cast<std::size_t>(out.env_c.mu.theta[g].fwd[w])];
            const auto& fgraph = out.cyg.graph[static_cast<std::size_t>(ximap[w])];
            std::vector<int> moved(fgraph.size());
            for (std::size_t p = 0; p < fgraph.size(); ++p)
                moved[p] = out.env_y.mu.theta[g].fwd[static_cast<std::size_t>(fgraph[p])];
            const int rhs = out.cyg.index_of_map(moved);
            if (lhs != rhs) {
                diag = false;
                dw = "(g,[.]) = (" + G.name(static_cast<int>(g)) + "," + out.env_c.space->points[w] + ")";
            }
        }
    rep.add("ξ∘μ^θ̂(g) = μ̂^θ(g)∘ξ (diagram commutes)", diag, dw);

    // J column: ξ(J([h,y])) is the constant map at [h,y]
    const std::size_t ny = b.y()->size();
    bool jcol = true;
    std::string jw;
    for (std::size_t h = 0; h < G.order() && jcol; ++h)
        for (std::size_t yy = 0; yy < ny; ++yy) {
            const int wy = out.env_y.class_of[static_cast<std::size_t>(out.env_y.graph.point_of[h * ny + yy])];
            const int wc = cls_c(h, static_cast<std::size_t>(b.c().map[yy]));
            const std::vector<int> cw_(b.x->size(), wy);
            if (ximap[static_cast<std::size_t>(wc)] != out.cyg.index_of_map(cw_)) {
                jcol = false;
                jw = "[g,y] = [" + G.name(static_cast<int>(h)) + "," + b.y()->points[yy] + "]";
            }
        }
    rep.add("ξ∘J sends [g,y] to the constant map at [g,y]", jcol, jw);
    return out;
}

} // namespace pact
