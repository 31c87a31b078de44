#include <doctest.h>

#include <random>

#include "pact/action.hpp"

using namespace pact;

namespace {

GroupRef z2() { return share(cyclic_group(2)); }

// ℤ₂ swap on the discrete pair {0,1}
PartialAction swap_action() {
    const auto d2 = share(discrete_space({"0", "1"}));
    return make_partial_action(z2(), d2, {identity_homeo(d2), make_partial_homeo(d2, {{"0", "1"}, {"1", "0"}})});
}

// ℤ₂ with theta(g1) the identity on {0} ⊂ discrete {0,1} — the running example
PartialAction id0_action() {
    const auto d2 = share(discrete_space({"0", "1"}));
    return make_partial_action(z2(), d2, {identity_homeo(d2), make_partial_homeo(d2, {{"0", "0"}})});
}

} // namespace

TEST_SUITE_BEGIN("action");

TEST_CASE("global swap action passes all premorphism laws") {
    const auto a = swap_action();
    const auto rep = check_premorphism(a);
    CHECK(rep.passed());
    CHECK(a.is_global());
}

TEST_CASE("partial identity on {0} is a valid action") {
    const auto a = id0_action();
    CHECK(check_premorphism(a).passed());
    CHECK_FALSE(a.is_global());
    CHECK(a.domain_of(1) == a.space->set_of({"0"}));
}

TEST_CASE("asymmetric theta fails the inverse law with a witness") {
    const auto d2 = share(discrete_space({"0", "1"}));
    const auto bad =
        raw_partial_action(z2(), d2, {identity_homeo(d2), make_partial_homeo(d2, {{"0", "1"}})});
    const auto rep = check_premorphism(bad);
    CHECK_FALSE(rep.passed());
    bool inverse_failed = false, set_form_failed = false, agree = false;
    for (const auto& c : rep.clauses) {
        if (c.label == "theta(g⁻¹) = theta(g)⁻¹ for all g" && !c.pass) {
            inverse_failed = true;
            CHECK(c.witness == "g = g1");
        }
        if (c.label == "(PA1) g⁻¹·(g·x) exists and equals x" && !c.pass) set_form_failed = true;
        if (c.label == "family form and set form agree") agree = c.pass;
    }
    CHECK(inverse_failed);
    CHECK(set_form_failed);
    CHECK(agree); // both formulations reject the instance
    CHECK_THROWS_AS(make_partial_action(z2(), d2, {identity_homeo(d2), make_partial_homeo(d2, {{"0", "1"}})}),
                    error);
}

TEST_CASE("premorphism law failure: non-unital theta(e)") {
    const auto d2 = share(discrete_space({"0", "1"}));
    const auto bad = raw_partial_action(z2(), d2, {empty_homeo(d2), empty_homeo(d2)});
    const auto rep = check_premorphism(bad);
    CHECK_FALSE(rep.passed());
    CHECK(rep.first_failure()->label == "theta(e) = id_X");
}

TEST_CASE("restrict_global: invariant subset stays global") {
    const auto d4 = share(discrete_space({"0", "1", "2", "3"}));
    // ℤ₂ acting by swapping 0↔1 and 2↔3; {0,1} is invariant
    const auto swap = make_partial_homeo(d4, {{"0", "1"}, {"1", "0"}, {"2", "3"}, {"3", "2"}});
    const auto a = make_partial_action(z2(), d4, {identity_homeo(d4), swap});
    const auto r = restrict_global(a, {"0", "1"});
    CHECK(r.is_global());
    CHECK(r.space->size() == 2);
}

TEST_CASE("restrict_global: swap restricted to one point kills theta(g1)") {
    const auto a = swap_action();
    const auto r = restrict_global(a, {"0"});
    CHECK(r.space->size() == 1);
    CHECK(r.theta[1].dom.none()); // 0 maps to 1 ∉ subset
    CHECK(check_premorphism(r).passed());
}

TEST_CASE("restrict_global: Z4 shift restricted to {0,1}") {
    const auto d4 = share(discrete_space({"0", "1", "2", "3"}));
    const auto z4 = share(cyclic_group(4));
    std::vector<PartialHomeo> theta;
    for (int k = 0; k < 4; ++k) {
        std::map<std::string, std::string> m;
        for (int x = 0; x < 4; ++x) m[std::to_string(x)] = std::to_string((x + k) % 4);
        theta.push_back(make_partial_homeo(d4, m));
    }
    const auto a = make_partial_action(z4, d4, theta);
    const auto r = restrict_global(a, {"0", "1"});
    CHECK(r.domain_of(0).count() == 2);               // identity
    CHECK(r.domain_of(1) == r.space->set_of({"0"}));  // 0 ↦ 1 only for the generator
    CHECK(r.theta[1].fwd[static_cast<std::size_t>(r.space->index_of("0"))] == r.space->index_of("1"));
    CHECK(r.domain_of(2).none());                     // +2 leaves {0,1}
    CHECK(r.domain_of(3) == r.space->set_of({"1"}));  // 1 ↦ 0
    CHECK(check_premorphism(r).passed());
}

TEST_CASE("restrict_global rejects non-global input and non-workable subsets") {
    CHECK_THROWS_AS(restrict_global(id0_action(), {"0"}), error);
    CHECK_THROWS_AS(restrict_global(swap_action(), std::vector<std::string>{}), error);

    // two sierpinski components swapped; {a,b,d} induces a non-open domain
    const auto w = share(make_space({"a", "b", "c", "d"}, {{"a"}, {"c"}, {"a", "b"}, {"c", "d"}}));
    const auto cross = make_partial_homeo(w, {{"a", "c"}, {"b", "d"}, {"c", "a"}, {"d", "b"}});
    const auto g = make_partial_action(z2(), w, {identity_homeo(w), cross});
    CHECK_THROWS_AS(restrict_global(g, {"a", "b", "d"}), error);
}

TEST_CASE("is_nice: validated actions over finite discrete groups are nice") {
    for (const auto& a : {swap_action(), id0_action()}) {
        const auto rep = is_nice(a);
        CHECK(rep.passed());
    }
}

TEST_CASE("is_nice flags a corrupted action with the offending element") {
    const auto sp = share(sierpinski());
    // raw: theta(g1) = identity on the non-open {0}
    std::vector<int> fwd = {0, -1};
    Bits dom(2);
    dom.set(0);
    const auto bad = raw_partial_action(z2(), sp, {identity_homeo(sp), raw_partial_homeo(sp, dom, fwd)});
    const auto rep = is_nice(bad);
    CHECK_FALSE(rep.passed());
    CHECK(rep.first_failure()->label == "every dom(theta(g)) is open");
    CHECK(rep.first_failure()->witness == "g = g1");
}

TEST_CASE("check_G_map: identity, constant into fixed point, and a failing collapse") {
    const auto a = id0_action();
    CHECK(check_G_map(identity_map(a.space), a, a).passed());

    // constant map onto the fixed point 0 is equivariant
    const auto c0 = make_map(a.space, a.space, {{"0", "0"}, {"1", "0"}});
    CHECK(check_G_map(c0, a, a).passed());

    // constant map onto 1 breaks: theta(g1) undefined at 1
    const auto c1 = make_map(a.space, a.space, {{"0", "1"}, {"1", "1"}});
    const auto rep = check_G_map(c1, a, a);
    CHECK_FALSE(rep.passed());
    CHECK(rep.clauses[0].witness == "(g,x) = (g1,0)");

    // identity between actions with different values also fails equivariance
    CHECK_FALSE(check_G_map(identity_map(a.space), a, swap_action()).passed());

    const auto z3_triv = trivial_action(a.space);
    CHECK_THROWS_AS(check_G_map(identity_map(a.space), a, z3_triv), error); // group mismatch
}

TEST_CASE("family form and set form agree on randomly mutated theta tables") {
    // replace theta(g) entries by arbitrary elements of Γ(X): the resulting
    // data is usually NOT a partial action, but the two formulations must
    // still reach the same verdict
    std::mt19937 rng(97);
    const auto spaces = {share(discrete_space({"0", "1"})), share(sierpinski()),
                         share(make_space({"a", "b", "c"}, {{"a"}, {"a", "b"}}))};
    const auto groups = {share(cyclic_group(2)), share(cyclic_group(3)), share(cyclic_group(4))};
    for (const auto& s : spaces) {
        const auto gamma = enumerate_gamma(s);
        for (const auto& g : groups) {
            for (int trial = 0; trial < 60; ++trial) {
                std::vector<PartialHomeo> theta;
                theta.push_back(identity_homeo(s));
                for (std::size_t k = 1; k < g->order(); ++k) theta.push_back(gamma[rng() % gamma.size()]);
                const auto raw = raw_partial_action(g, s, theta);
                const auto rep = check_premorphism(raw);
                for (const auto& c : rep.clauses)
                    if (c.label == "family form and set form agree") CHECK(c.pass);
            }
        }
    }
}

TEST_CASE("(PA2') consequence: theta_g(X_g⁻¹ ∩ X_g⁻¹h) ⊆ X_g ∩ X_h") {
    for (const auto& a : {swap_action(), id0_action()}) {
        const auto& G = *a.group;
        for (std::size_t g = 0; g < G.order(); ++g)
            for (std::size_t h = 0; h < G.order(); ++h) {
                const int gi = G.inv(static_cast<int>(g));
                const int gih = G.mul(gi, static_cast<int>(h));
                const Bits lhs_dom = a.theta[static_cast<std::size_t>(gi)].cod &
                                     a.theta[static_cast<std::size_t>(gih)].cod;
                const Bits img = PartialAction::image_of_set(a.theta[g], lhs_dom);
                const Bits rhs = a.theta[g].cod & a.theta[h].cod;
                CHECK(rhs.contains(img));
            }
    }
}

TEST_SUITE_END();
