#include <doctest.h>

#include "pact/gamma.hpp"

using namespace pact;

TEST_SUITE_BEGIN("gamma");

TEST_CASE("compose: unit, empty, and pointwise evaluation") {
    const auto d3 = share(discrete_space({"a", "b", "c"}));
    const auto psi = make_partial_homeo(d3, {{"a", "b"}});
    const auto phi = make_partial_homeo(d3, {{"c", "a"}});

    CHECK(compose(identity_homeo(d3), phi) == phi);
    CHECK(compose(phi, identity_homeo(d3)) == phi);
    CHECK(compose(phi, empty_homeo(d3)) == empty_homeo(d3));
    CHECK(compose(empty_homeo(d3), phi) == empty_homeo(d3));

    const auto comp = compose(psi, phi); // c ↦ a ↦ b
    CHECK(comp.key() == "{c→b}");
    CHECK(comp.dom == d3->set_of({"c"}));
    CHECK(comp.cod == d3->set_of({"b"}));

    const auto other = share(discrete_space({"x"}));
    CHECK_THROWS_AS(compose(psi, make_partial_homeo(other, {{"x", "x"}})), error);
}

TEST_CASE("invert swaps domain and image") {
    const auto d3 = share(discrete_space({"a", "b", "c"}));
    const auto phi = make_partial_homeo(d3, {{"a", "b"}, {"b", "c"}});
    const auto inv = invert(phi);
    CHECK(inv.dom == phi.cod);
    CHECK(inv.cod == phi.dom);
    CHECK(compose(inv, phi) == identity_on(d3, phi.dom));
    CHECK(compose(phi, inv) == identity_on(d3, phi.cod));
}

TEST_CASE("leq: empty below everything, reflexive, agreement check") {
    const auto d3 = share(discrete_space({"a", "b", "c"}));
    const auto phi = make_partial_homeo(d3, {{"a", "b"}, {"c", "a"}});
    CHECK(leq(empty_homeo(d3), phi));
    CHECK(leq(phi, phi));
    const auto psi = make_partial_homeo(d3, {{"a", "b"}});
    CHECK(leq(psi, phi));
    CHECK_FALSE(leq(phi, psi));
    const auto disagree = make_partial_homeo(d3, {{"a", "c"}});
    CHECK_FALSE(leq(disagree, phi));
}

TEST_CASE("partial homeo invariants: non-open domain and non-bijective data rejected") {
    const auto sp = share(sierpinski());
    CHECK_THROWS_AS(make_partial_homeo(sp, {{"0", "0"}}), error); // {0} not open
    const auto ok = make_partial_homeo(sp, {{"1", "1"}});
    CHECK(ok.key() == "{1→1}");

    const auto d2 = share(discrete_space({"a", "b"}));
    PartialHomeo bad = raw_partial_homeo(d2, Bits::full(2), {0, 0});
    CHECK(partial_homeo_violation(bad).has_value());
}

TEST_CASE("enumerate_gamma: singleton, sierpinski, discrete pair") {
    const auto one = share(discrete_space({"p"}));
    auto g1 = enumerate_gamma(one);
    CHECK(g1.size() == 2); // 1_∅ and id

    const auto sp = share(sierpinski());
    auto gs = enumerate_gamma(sp);
    CHECK(gs.size() == 3); // 1_∅, id_{{1}}, id_X — the swap is not continuous
    bool has_swap = false;
    for (const auto& f : gs)
        if (f.key() == "{0→1,1→0}") has_swap = true;
    CHECK_FALSE(has_swap);

    const auto d2 = share(discrete_space({"a", "b"}));
    auto gd = enumerate_gamma(d2);
    CHECK(gd.size() == 7);
}

TEST_CASE("enumerate_gamma guard") {
    const auto big = share(discrete_space({"0", "1", "2", "3", "4", "5", "6", "7", "8"}));
    CHECK_THROWS_AS(enumerate_gamma(big), guard_error);
}

TEST_CASE("Γ(X) is an inverse monoid on guarded spaces") {
    for (const auto& space : {share(sierpinski()), share(discrete_space({"a", "b"})),
                              share(make_space({"a", "b", "c"}, {{"a"}, {"a", "b"}}))}) {
        const auto gamma = enumerate_gamma(space);
        const auto id = identity_homeo(space);
        for (const auto& f : gamma) {
            CHECK(compose(id, f) == f);
            CHECK(compose(f, id) == f);
            CHECK(compose(compose(f, invert(f)), f) == f); // φ∘φ⁻¹∘φ = φ
            for (const auto& g : gamma) {
                const auto fg = compose(f, g);
                for (const auto& h : gamma) CHECK(compose(fg, h) == compose(f, compose(g, h)));
            }
        }
    }
}

TEST_CASE("leq is compatible with composition") {
    const auto d2 = share(discrete_space({"a", "b"}));
    const auto gamma = enumerate_gamma(d2);
    for (const auto& phi1 : gamma)
        for (const auto& psi1 : gamma) {
            if (!leq(psi1, phi1)) continue;
            for (const auto& phi2 : gamma)
                for (const auto& psi2 : gamma) {
                    if (!leq(psi2, phi2)) continue;
                    CHECK(leq(compose(psi1, psi2), compose(phi1, phi2)));
                }
        }
}

TEST_SUITE_END();
