#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "pact/action.hpp"
#include "pact/gamma.hpp"
#include "pact/report.hpp"
#include "pact/topology.hpp"

namespace pact {

// ============================================================================
// Γ-embeddings: an embedding c: X → Z together with a semigroup homomorphism
// σ: Γ(X) → Γ(Z) whose evaluation diagram commutes.  σ is stored as a total
// table over enumerate_gamma(X), so every certificate check is a finite
// conjunction.
// ============================================================================

struct GammaEmbedding {
    SpaceRef source;
    SpaceRef target;
    ContinuousMap c;
    std::vector<PartialHomeo> gamma; // Γ(source), canonical order
    std::vector<PartialHomeo> sigma; // σ(gamma[i]) aligned by index
    std::string flavor;              // which construction produced it
    std::unordered_map<std::string, std::size_t> index; // key(f) -> row

    void build_index() {
        index.clear();
        for (std::size_t i = 0; i < gamma.size(); ++i) index[gamma[i].key()] = i;
    }

    const PartialHomeo& sigma_of(const PartialHomeo& f) const {
        const auto it = index.find(f.key());
        if (it == index.end()) throw error("σ is not defined at " + f.key());
        return sigma[it->second];
    }
};

inline Report verify_gamma_embedding(const GammaEmbedding& e) {
    Report rep;
    rep.title = "Γ-embedding certificate (" + e.flavor + ")";
    const std::string note = e.flavor.find("cone") != std::string::npos
                                 ? "finite-model cone: the apex is excluded from every dom(σ(f))"
                                 : "";

    rep.add("c is continuous", is_continuous(e.c));
    rep.add("c is an embedding", is_embedding(e.c), "", note);

    bool total = e.gamma.size() == e.sigma.size() && !e.gamma.empty();
    std::string tw;
    for (std::size_t i = 0; i < e.sigma.size() && total; ++i)
        if (const auto why = partial_homeo_violation(e.sigma[i])) {
            total = false;
            tw = "σ(" + e.gamma[i].key() + "): " + *why;
        }
    rep.add("σ maps Γ(X) into Γ(Z)", total, tw);

    bool hom = true;
    std::string hw;
    for (std::size_t i = 0; i < e.gamma.size() && hom; ++i)
        for (std::size_t j = 0; j < e.gamma.size() && hom; ++j) {
            const auto fg = compose(e.gamma[i], e.gamma[j]);
            const auto it = e.index.find(fg.key());
            if (it == e.index.end()) {
                hom = false;
                hw = "Γ(X) is not closed under the table at " + fg.key();
                break;
            }
            if (!(e.sigma[it->second] == compose(e.sigma[i], e.sigma[j]))) {
                hom = false;
                hw = "(f,g) = (" + e.gamma[i].key() + ", " + e.gamma[j].key() + ")";
            }
        }
    rep.add("σ(f∘g) = σ(f)∘σ(g) on all of Γ(X)×Γ(X)", hom, hw);

    bool invs = true;
    std::string iw;
    for (std::size_t i = 0; i < e.gamma.size() && invs; ++i) {
        const auto it = e.index.find(invert(e.gamma[i]).key());
        if (it == e.index.end() || !(e.sigma[it->second] == invert(e.sigma[i]))) {
            invs = false;
            iw = "f = " + e.gamma[i].key();
        }
    }
    rep.add("σ(f⁻¹) = σ(f)⁻¹", invs, iw);

    bool img = true;
    std::string mw;
    for (std::size_t i = 0; i < e.gamma.size() && img; ++i)
        e.gamma[i].dom.for_each([&](std::size_t x) {
            if (!img) return;
            if (!e.sigma[i].dom.test(static_cast<std::size_t>(e.c.map[x]))) {
                img = false;
                mw = "(f,x) = (" + e.gamma[i].key() + ", " + e.source->points[x] + ")";
            }
        });
    rep.add("im(σ×c) ⊆ Γ(Z)*Z", img, mw);

    bool diag = true;
    std::string dw;
    for (std::size_t i = 0; i < e.gamma.size() && diag; ++i)
        e.gamma[i].dom.for_each([&](std::size_t x) {
            if (!diag) return;
            const int lhs = e.sigma[i].fwd[static_cast<std::size_t>(e.c.map[x])];
            const int rhs = e.c.map[static_cast<std::size_t>(e.gamma[i].fwd[x])];
            if (lhs != rhs) {
                diag = false;
                dw = "(f,x) = (" + e.gamma[i].key() + ", " + e.source->points[x] + ")";
            }
        });
    rep.add("ev∘(σ×c) = c∘ev (diagram commutes)", diag, dw);
    return rep;
}

// θ̂ = σ∘θ; the premorphism laws transfer along σ and c becomes a G-map.
//
// θ̂(e) must be id_Z for the result to be a partial action on Z.  When σ is
// not unital (cone model, proper open subspaces) σ(θ_e) = σ(id) is a partial
// identity strictly below id_Z, and the value at the group identity is the
// unique unital extension; every other value is σ(θ(g)) verbatim.
inline PartialAction induce_action(const GammaEmbedding& e, const PartialAction& a) {
    if (!(*a.space == *e.source)) throw error("induce_action: the action does not live on the embedding source");
    std::vector<PartialHomeo> that;
    that.reserve(a.theta.size());
    for (const auto& t : a.theta) that.push_back(e.sigma_of(t));
    const auto id_target = identity_homeo(e.target);
    auto& at_e = that[static_cast<std::size_t>(a.group->identity)];
    if (!(at_e == id_target)) {
        if (!leq(at_e, id_target))
            throw error("induce_action: σ(id) is not a restriction of the identity");
        at_e = id_target;
    }
    PartialAction ahat = make_partial_action(a.group, e.target, std::move(that));
    const Report gmap = check_G_map(e.c, a, ahat);
    if (!gmap.passed())
        throw error("induce_action: c failed to be a G-map [" + gmap.first_failure()->witness + "]");
    return ahat;
}

namespace detail {

inline void finish_embedding(GammaEmbedding& e) {
    e.build_index();
    const Report rep = verify_gamma_embedding(e);
    if (!rep.passed()) {
        const Clause* c = rep.first_failure();
        throw error(e.flavor + " construction failed its certificate: " + c->label +
                    (c->witness.empty() ? "" : " [" + c->witness + "]"));
    }
}

} // namespace detail

// ============================================================================
// Construction 1: along an open embedding, σ(f) = c∘f∘c⁻¹
// ============================================================================

inline GammaEmbedding open_embedding_gamma(const ContinuousMap& c) {
    if (!is_embedding(c)) throw error("open_embedding_gamma: c is not an embedding");
    if (!c.cod->is_open(image_of(c))) throw error("open_embedding_gamma: the image of c is not open");
    GammaEmbedding e;
    e.source = c.dom;
    e.target = c.cod;
    e.c = c;
    e.flavor = "open-subspace";
    e.gamma = enumerate_gamma(e.source);
    for (const auto& f : e.gamma) {
        Bits dom(e.target->size());
        std::vector<int> fwd(e.target->size(), -1);
        f.dom.for_each([&](std::size_t x) {
            const std::size_t cx = static_cast<std::size_t>(c.map[x]);
            dom.set(cx);
            fwd[cx] = c.map[static_cast<std::size_t>(f.fwd[x])];
        });
        e.sigma.push_back(raw_partial_homeo(e.target, dom, fwd));
    }
    detail::finish_embedding(e);
    return e;
}

// ============================================================================
// Construction 2: the hyperspace 𝒦(X) with the Vietoris topology
// ============================================================================

struct Hyperspace {
    SpaceRef space;            // 𝒦(X): all nonempty subsets (all are compact)
    std::vector<Bits> member;  // hyperpoint index -> the subset of X it names
    GammaEmbedding emb;
};

/**
 * Vietoris topology from the subbasis { V⁻, V⁺ : V open nonempty }.  For a
 * finite space the minimal open around A works out to
 *   { B : B ⊆ hull(A) and B∩U_a ≠ ∅ for every a ∈ A },
 * where hull(A) is the smallest open superset and U_a the minimal opens; the
 * test suite checks this against the brute-force subbasis closure.
 */
inline Hyperspace hyperspace(const SpaceRef& s) {
    if (s->size() > limits::max_hyperspace_points())
        throw guard_error("hyperspace guard: " + std::to_string(s->size()) + " points exceeds " +
                          std::to_string(limits::max_hyperspace_points()));
    Hyperspace hs;
    const std::size_t n = s->size();

    std::vector<std::pair<std::string, Bits>> named;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
        Bits b(n);
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (std::uint64_t{1} << i)) b.set(i);
        named.emplace_back(s->set_name(b), b);
    }
    std::sort(named.begin(), named.end(), [](const auto& a, const auto& b) { return a.first < b.first; });

    FiniteSpace k;
    for (auto& [name, bits] : named) {
        k.points.push_back(name);
        hs.member.push_back(bits);
    }
    const std::size_t m = k.points.size();
    k.min_open.assign(m, Bits{});
    for (std::size_t i = 0; i < m; ++i) {
        const Bits hull = s->open_hull(hs.member[i]);
        Bits u(m);
        for (std::size_t j = 0; j < m; ++j) {
            if (!hull.contains(hs.member[j])) continue;
            bool meets_all = true;
            hs.member[i].for_each([&](std::size_t a) {
                if (!hs.member[j].intersects(s->min_open[a])) meets_all = false;
            });
            if (meets_all) u.set(j);
        }
        k.min_open[i] = u;
    }
    hs.space = share(std::move(k));

    const auto hyperindex = [&](const Bits& subset) {
        const int i = hs.space->index_of(s->set_name(subset));
        if (i < 0) throw error("hyperspace: internal index failure");
        return i;
    };

    GammaEmbedding& e = hs.emb;
    e.source = s;
    e.target = hs.space;
    e.flavor = "hyperspace";
    e.c = ContinuousMap{s, hs.space, std::vector<int>(n, -1)};
    for (std::size_t x = 0; x < n; ++x) {
        Bits single(n);
        single.set(x);
        e.c.map[x] = hyperindex(single);
    }
    e.gamma = enumerate_gamma(s);
    for (const auto& f : e.gamma) {
        // σ(f): dom(f)⁺ ∋ A ↦ f(A);  for f = 1_∅ this is 1_∅
        Bits dom(m);
        std::vector<int> fwd(m, -1);
        for (std::size_t j = 0; j < m; ++j)
            if (f.dom.contains(hs.member[j])) {
                dom.set(j);
                fwd[j] = hyperindex(PartialAction::image_of_set(f, hs.member[j]));
            }
        e.sigma.push_back(raw_partial_homeo(hs.space, dom, fwd));
    }
    detail::finish_embedding(e);
    return hs;
}

// ============================================================================
// Construction 3: the cone, realized on a finite model
// ============================================================================
//
// The classical Cone(X) = ([0,1]×X)/({0}×X) is infinite; here the interval is
// replaced by the Sierpiński space ({1} open, standing in for (0,1], the
// closed point for the collapsed 0-level).  This preserves the structure the
// construction uses — η((0,1]×dom f) is open and the tip level is a copy of X
// — and every report carries the "finite-model cone" flag.

struct ConeSpace {
    SpaceRef space;
    int apex = -1;         // -1 when the source is empty
    std::vector<int> tip;  // source point index -> cone point index of 1·x
    GammaEmbedding emb;
};

inline ConeSpace cone_finite(const SpaceRef& s) {
    ConeSpace cone;
    const SpaceRef t = share(sierpinski());
    auto prod = product({t, s});
    const SpaceRef ps = share(prod.space);
    const int one = t->index_of("1");

    std::vector<int> block_of(ps->size(), -1);
    int blocks = 0;
    const int apex_block = s->size() > 0 ? blocks++ : -1;
    std::vector<int> tip_block(s->size(), -1);
    for (std::size_t x = 0; x < s->size(); ++x) tip_block[x] = blocks++;
    for (std::size_t p = 0; p < ps->size(); ++p) {
        const auto& co = prod.coord[p];
        block_of[p] = (co[0] == one) ? tip_block[static_cast<std::size_t>(co[1])] : apex_block;
    }

    const auto labeler = [&](const std::vector<int>& members) -> std::string {
        const auto& co = prod.coord[static_cast<std::size_t>(members[0])];
        if (co[0] != one || members.size() > 1) return "apex";
        return "1·" + s->points[static_cast<std::size_t>(co[1])];
    };
    auto quo = quotient_core(ps, block_of, static_cast<std::size_t>(blocks), labeler);
    cone.space = quo.q.cod;
    cone.apex = cone.space->index_of("apex");
    cone.tip.assign(s->size(), -1);
    for (std::size_t x = 0; x < s->size(); ++x)
        cone.tip[x] = cone.space->index_of("1·" + s->points[x]);

    GammaEmbedding& e = cone.emb;
    e.source = s;
    e.target = cone.space;
    e.flavor = "cone(finite-model)";
    e.c = ContinuousMap{s, cone.space, std::vector<int>(s->size(), -1)};
    for (std::size_t x = 0; x < s->size(); ++x) e.c.map[x] = cone.tip[x];
    e.gamma = enumerate_gamma(s);
    for (const auto& f : e.gamma) {
        // σ(f): tips of dom(f) ↦ tips of f; the apex stays outside every domain
        Bits dom(cone.space->size());
        std::vector<int> fwd(cone.space->size(), -1);
        f.dom.for_each([&](std::size_t x) {
            const std::size_t tx = static_cast<std::size_t>(cone.tip[x]);
            dom.set(tx);
            fwd[tx] = cone.tip[static_cast<std::size_t>(f.fwd[x])];
        });
        e.sigma.push_back(raw_partial_homeo(cone.space, dom, fwd));
    }
    detail::finish_embedding(e);
    return cone;
}

// ============================================================================
// Construction 4: coordinate embedding into a product
// ============================================================================

// basepoints: one point name per factor other than `slot`, in factor order.
inline GammaEmbedding product_embedding(const std::vector<SpaceRef>& factors, std::size_t slot,
                                        const std::vector<std::string>& basepoints) {
    if (slot >= factors.size()) throw error("product_embedding: factor index out of range");
    if (basepoints.size() + 1 != factors.size())
        throw error("product_embedding: need exactly one basepoint per other factor");
    auto prod = product(factors);
    const SpaceRef ps = share(prod.space);

    std::vector<int> base(factors.size(), -1);
    std::size_t bp = 0;
    for (std::size_t f = 0; f < factors.size(); ++f) {
        if (f == slot) continue;
        base[f] = factors[f]->index_of(basepoints[bp]);
        if (base[f] < 0)
            throw error("product_embedding: basepoint '" + basepoints[bp] + "' is not a point of factor " +
                        std::to_string(f));
        ++bp;
    }

    GammaEmbedding e;
    e.source = factors[slot];
    e.target = ps;
    e.flavor = "product";
    e.c = ContinuousMap{e.source, ps, std::vector<int>(e.source->size(), -1)};
    for (std::size_t x = 0; x < e.source->size(); ++x) {
        auto tup = base;
        tup[slot] = static_cast<int>(x);
        e.c.map[x] = prod.index_of_tuple(tup);
    }
    e.gamma = enumerate_gamma(e.source);
    for (const auto& f : e.gamma) {
        // σ(f) acts on coordinate `slot` over the cylinder π_slot⁻¹(dom f)
        Bits dom(ps->size());
        std::vector<int> fwd(ps->size(), -1);
        for (std::size_t p = 0; p < ps->size(); ++p) {
            const int xi = prod.coord[p][slot];
            if (!f.dom.test(static_cast<std::size_t>(xi))) continue;
            auto tup = prod.coord[p];
            tup[slot] = f.fwd[static_cast<std::size_t>(xi)];
            dom.set(p);
            fwd[p] = prod.index_of_tuple(tup);
        }
        e.sigma.push_back(raw_partial_homeo(ps, dom, fwd));
    }
    detail::finish_embedding(e);
    return e;
}

// ============================================================================
// Construction 5: the function space C(X,Y) with the compact-open topology
// ============================================================================

struct FunctionSpace {
    SpaceRef param;                      // X (compact: finite)
    SpaceRef values;                     // Y
    SpaceRef space;                      // C(X,Y)
    std::vector<std::vector<int>> graph; // C-point -> assignment X → Y
    std::vector<int> constant;           // y index -> index of the constant map

    int index_of_map(const std::vector<int>& assignment) const {
        const auto it = lookup_.find(assignment);
        return it == lookup_.end() ? -1 : it->second;
    }
    void build_lookup() {
        for (std::size_t i = 0; i < graph.size(); ++i) lookup_[graph[i]] = static_cast<int>(i);
    }

private:
    std::map<std::vector<int>, int> lookup_;
};

inline std::string function_point_name(const FiniteSpace& x, const FiniteSpace& y, const std::vector<int>& f) {
    std::string s = "f{";
    for (std::size_t p = 0; p < x.points.size(); ++p) {
        if (p) s += ",";
        s += x.points[p] + "→" + y.points[static_cast<std::size_t>(f[p])];
    }
    return s + "}";
}

/**
 * All continuous maps X → Y as a finite space under the compact-open topology,
 * generated by ⟨K,V⟩ over every (automatically compact) subset K and open V.
 * At finite scale this is the topology of pointwise convergence: the minimal
 * open around f is { r : r(p) ∈ U_{f(p)} for all p }.
 */
inline FunctionSpace function_space_points(SpaceRef x, SpaceRef y) {
    if (x->size() == 0)
        throw error("function_space: the parameter space must be nonempty (constants would collapse)");
    double count = 1;
    for (std::size_t p = 0; p < x->size(); ++p) count *= static_cast<double>(y->size());
    if (count > static_cast<double>(limits::max_funcspace_points()))
        throw guard_error("function space guard: |Y|^|X| exceeds " +
                          std::to_string(limits::max_funcspace_points()));

    FunctionSpace fs;
    fs.param = x;
    fs.values = y;

    std::vector<std::pair<std::string, std::vector<int>>> named;
    std::vector<int> f(x->size(), 0);
    if (y->size() > 0) {
        while (true) {
            ContinuousMap cand{x, y, f};
            if (is_continuous(cand)) named.emplace_back(function_point_name(*x, *y, f), f);
            std::size_t k = x->size();
            while (k > 0) {
                --k;
                if (++f[k] < static_cast<int>(y->size())) break;
                f[k] = 0;
                if (k == 0) goto done;
            }
        }
    }
done:
    std::sort(named.begin(), named.end());
    FiniteSpace c;
    for (auto& [name, g] : named) {
        c.points.push_back(name);
        fs.graph.push_back(g);
    }
    const std::size_t m = c.points.size();
    c.min_open.assign(m, Bits{});
    for (std::size_t i = 0; i < m; ++i) {
        Bits u(m);
        for (std::size_t j = 0; j < m; ++j) {
            bool inside = true;
            for (std::size_t p = 0; p < x->size(); ++p)
                if (!y->min_open[static_cast<std::size_t>(fs.graph[i][p])].test(
                        static_cast<std::size_t>(fs.graph[j][p]))) {
                    inside = false;
                    break;
                }
            if (inside) u.set(j);
        }
        c.min_open[i] = u;
    }
    fs.space = share(std::move(c));
    fs.build_lookup();
    fs.constant.assign(y->size(), -1);
    for (std::size_t yy = 0; yy < y->size(); ++yy) {
        const std::vector<int> cf(x->size(), static_cast<int>(yy));
        fs.constant[yy] = fs.index_of_map(cf); // constants are always continuous
    }
    return fs;
}

struct FunctionSpaceEmbedding {
    FunctionSpace fs;
    GammaEmbedding emb;
};

inline FunctionSpaceEmbedding function_space(SpaceRef x, SpaceRef y) {
    FunctionSpaceEmbedding out;
    out.fs = function_space_points(std::move(x), std::move(y));
    const auto& fs = out.fs;
    const std::size_t m = fs.space->size();

    GammaEmbedding& e = out.emb;
    e.source = fs.values;
    e.target = fs.space;
    e.flavor = "function-space";
    e.c = ContinuousMap{fs.values, fs.space, fs.constant};
    e.gamma = enumerate_gamma(fs.values);
    for (const auto& f : e.gamma) {
        // σ(f): ⟨X, dom f⟩ ∋ r ↦ f∘r
        Bits dom(m);
        std::vector<int> fwd(m, -1);
        for (std::size_t r = 0; r < m; ++r) {
            bool inside = true;
            for (int v : fs.graph[r])
                if (!f.dom.test(static_cast<std::size_t>(v))) {
                    inside = false;
                    break;
                }
            if (!inside) continue;
            std::vector<int> comp(fs.graph[r].size());
            for (std::size_t p = 0; p < comp.size(); ++p)
                comp[p] = f.fwd[static_cast<std::size_t>(fs.graph[r][p])];
            dom.set(r);
            fwd[r] = fs.index_of_map(comp);
            if (fwd[r] < 0) throw error("function_space: composite left the space (internal error)");
        }
        e.sigma.push_back(raw_partial_homeo(fs.space, dom, fwd));
    }
    detail::finish_embedding(e);
    return out;
}

} // namespace pact
