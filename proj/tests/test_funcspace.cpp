#include <doctest.h>

#include "pact/funcspace.hpp"

using namespace pact;

namespace {

GroupRef z2() { return share(cyclic_group(2)); }

PartialAction id0_action() {
    const auto d2 = share(discrete_space({"0", "1"}));
    return make_partial_action(z2(), d2, {identity_homeo(d2), make_partial_homeo(d2, {{"0", "0"}})});
}

PartialAction swap_action() {
    const auto d2 = share(discrete_space({"0", "1"}));
    return make_partial_action(z2(), d2, {identity_homeo(d2), make_partial_homeo(d2, {{"0", "1"}, {"1", "0"}})});
}

PartialAction sierpinski_id1_action() {
    const auto sp = share(sierpinski());
    return make_partial_action(z2(), sp, {identity_homeo(sp), make_partial_homeo(sp, {{"1", "1"}})});
}

SpaceRef discrete2() { return share(discrete_space({"p", "q"})); }

// raw corruption helper: swap the two constant maps inside θ̂(g1)
FuncSpaceBundle corrupted_bundle() {
    auto b = build_bundle(discrete2(), sierpinski_id1_action());
    const std::size_t m = b.cxy()->size();
    const int c0 = b.cxy()->index_of("f{p→0,q→0}");
    const int c1 = b.cxy()->index_of("f{p→1,q→1}");
    std::vector<int> fwd(m);
    for (std::size_t i = 0; i < m; ++i) fwd[i] = static_cast<int>(i);
    fwd[static_cast<std::size_t>(c0)] = c1;
    fwd[static_cast<std::size_t>(c1)] = c0;
    b.ahat.theta[1] = raw_partial_homeo(b.cxy(), Bits::full(m), fwd);
    return b;
}

} // namespace

TEST_SUITE_BEGIN("funcspace");

TEST_CASE("build_bundle: singleton parameter reproduces the action through ev") {
    const auto b = build_bundle(share(discrete_space({"*"})), id0_action());
    CHECK(b.cxy()->size() == 2);
    const auto& ev = b.evs[0];
    for (std::size_t g = 0; g < 2; ++g) {
        CHECK(b.ahat.theta[g].dom.count() == b.a.theta[g].dom.count());
        b.ahat.theta[g].dom.for_each([&](std::size_t f) {
            CHECK(ev.map[static_cast<std::size_t>(b.ahat.theta[g].fwd[f])] ==
                  b.a.theta[g].fwd[static_cast<std::size_t>(ev.map[f])]);
        });
    }
}

TEST_CASE("build_bundle: dom(θ̂(g1)) is the single constant-0 map") {
    const auto b = build_bundle(discrete2(), id0_action());
    CHECK(b.cxy()->size() == 4);
    CHECK(b.ahat.theta[1].dom.count() == 1);
    const int c0 = b.cxy()->index_of("f{p→0,q→0}");
    CHECK(b.ahat.theta[1].dom.test(static_cast<std::size_t>(c0)));
    CHECK(b.ahat.theta[1].fwd[static_cast<std::size_t>(c0)] == c0);
}

TEST_CASE("build_bundle: trivial group on sierpinski-to-sierpinski maps") {
    const auto sp = share(sierpinski());
    const auto b = build_bundle(sp, trivial_action(sp));
    CHECK(b.cxy()->size() == 3);
    CHECK(b.ahat.theta[0].dom.count() == 3);
}

TEST_CASE("check_continuity_equiv: positive bundles and the factorization identity") {
    for (const auto& b : {build_bundle(discrete2(), id0_action()), build_bundle(discrete2(), swap_action()),
                          build_bundle(share(sierpinski()), sierpinski_id1_action())}) {
        const auto rep = check_continuity_equiv(b);
        CHECK(rep.passed());
    }
}

TEST_CASE("check_continuity_equiv: corrupted θ̂ breaks the biconditional with a witness") {
    const auto rep = check_continuity_equiv(corrupted_bundle());
    CHECK_FALSE(rep.passed());
    bool bicond_failed = false;
    for (const auto& c : rep.clauses)
        if (c.label == "θ continuous ⟺ θ̂ continuous" && !c.pass) {
            bicond_failed = true;
            CHECK(c.witness.find("θ̂ not continuous") != std::string::npos);
        }
    CHECK(bicond_failed);
}

TEST_CASE("check_nice_equiv: positive and corrupted") {
    CHECK(check_nice_equiv(build_bundle(discrete2(), id0_action())).passed());
    CHECK(check_nice_equiv(build_bundle(share(sierpinski()), sierpinski_id1_action())).passed());
    const auto rep = check_nice_equiv(corrupted_bundle());
    CHECK_FALSE(rep.passed());
}

TEST_CASE("j_embed: trivial group gives a bijection onto constant classes") {
    const auto sp = share(sierpinski());
    const auto out = j_embed(build_bundle(discrete2(), trivial_action(sp)));
    CHECK(out.report.passed());
    CHECK(image_of(out.J).count() == sp->size());
}

TEST_CASE("j_embed: Z2 id_{{0}} example — 3 classes land in 7, closed image") {
    const auto out = j_embed(build_bundle(discrete2(), id0_action()));
    CHECK(out.env_y.space->size() == 3);
    CHECK(out.env_c.space->size() == 7);
    CHECK(image_of(out.J).count() == 3);
    CHECK(out.report.passed());
    bool closed_clause = false;
    for (const auto& c : out.report.clauses)
        if (c.label == "Z is closed in C(X,Y)_G (Y Hausdorff)") {
            closed_clause = true;
            CHECK(c.pass);
        }
    CHECK(closed_clause);
}

TEST_CASE("j_embed: non-Hausdorff Y reports the closedness clause as not applicable") {
    const auto out = j_embed(build_bundle(discrete2(), sierpinski_id1_action()));
    CHECK(out.report.passed());
    bool na = false;
    for (const auto& c : out.report.clauses)
        if (c.label == "Z closed clause" && c.note.find("not applicable") != std::string::npos) na = true;
    CHECK(na);
}

TEST_CASE("check_t1_t2_equiv across the three running instances") {
    CHECK(check_t1_t2_equiv(build_bundle(discrete2(), swap_action())).passed());
    CHECK(check_t1_t2_equiv(build_bundle(discrete2(), id0_action())).passed());
    const auto b = build_bundle(discrete2(), sierpinski_id1_action());
    const auto rep = check_t1_t2_equiv(b);
    CHECK(rep.passed());
    // and the sides really are negative here
    CHECK_FALSE(separation(*globalize(b.a).space, Separation::T1));
}

TEST_CASE("check_clopen_corollary: clopen, discrete, and open-but-not-closed domains") {
    CHECK(check_clopen_corollary(build_bundle(discrete2(), swap_action())).passed());
    CHECK(check_clopen_corollary(build_bundle(discrete2(), id0_action())).passed());
    const auto b = build_bundle(discrete2(), sierpinski_id1_action());
    const auto rep = check_clopen_corollary(b);
    CHECK(rep.passed());
    CHECK_FALSE(separation(*globalize(b.a).space, Separation::T2)); // Y_1 = {1} open, not closed
}

TEST_CASE("xi_embed: trivial group lands openly in C(X, Y_G)") {
    const auto sp = share(sierpinski());
    const auto out = xi_embed(build_bundle(discrete2(), trivial_action(sp)));
    CHECK(out.report.passed());
    CHECK(image_of(out.xi).count() == out.env_c.space->size());
}

TEST_CASE("xi_embed: Z2 id_{{0}} example — 7 classes into 9 maps, image open") {
    const auto out = xi_embed(build_bundle(discrete2(), id0_action()));
    CHECK(out.env_c.space->size() == 7);
    CHECK(out.cyg.space->size() == 9);
    CHECK(image_of(out.xi).count() == 7);
    CHECK(out.report.passed());
}

TEST_CASE("xi_embed: sierpinski instance — full battery including the diagram") {
    const auto out = xi_embed(build_bundle(discrete2(), sierpinski_id1_action()));
    CHECK(out.report.passed());
    const auto out2 = xi_embed(build_bundle(share(sierpinski()), sierpinski_id1_action()));
    CHECK(out2.report.passed());
}

TEST_SUITE_END();
