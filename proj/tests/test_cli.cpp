#include <doctest.h>

#include <fstream>
#include <sstream>

#include "pact/cli.hpp"
#include "pact/corpus.hpp"
#include "pact/json_io.hpp"

using namespace pact;

namespace {

int run(std::vector<std::string> args, std::string* captured = nullptr) {
    std::ostringstream out, err;
    const int code = cli::run(std::move(args), out, err);
    if (captured) *captured = out.str() + err.str();
    return code;
}

std::string write_temp(const std::string& name, const std::string& content) {
    const std::string path = "/tmp/pact_test_" + name;
    std::ofstream f(path);
    f << content;
    return path;
}

std::string instance_file(const std::string& name) { return std::string(PACT_SOURCE_DIR) + "/instances/" + name; }

} // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("json round-trip: spaces, groups, actions re-parse to equal objects") {
    const auto sp = share(make_space({"a", "b", "c"}, {{"a"}, {"a", "b"}}));
    CHECK(space_from_json(space_to_json(*sp)) == *sp);

    const auto g = cyclic_group(3);
    CHECK(group_from_json(group_to_json(g)) == g);

    const auto z2 = share(cyclic_group(2));
    const auto d2 = share(discrete_space({"0", "1"}));
    const auto a = make_partial_action(z2, d2, {identity_homeo(d2), make_partial_homeo(d2, {{"0", "0"}})});
    const auto back = action_from_json(action_to_json(a));
    CHECK(*back.space == *a.space);
    CHECK(*back.group == *a.group);
    for (std::size_t i = 0; i < a.theta.size(); ++i) CHECK(back.theta[i] == a.theta[i]);

    // byte-identical canonical emission
    CHECK(action_to_json(a).dump() == action_to_json(back).dump());
}

TEST_CASE("parse_instance: minimal file, running example, and rejections") {
    const auto ok = write_temp("min.json", R"({"group": {"cyclic": 1},
        "space": {"points": ["p"], "opens": [[], ["p"]]}, "theta": {}})");
    const Instance inst = parse_instance(ok);
    CHECK(inst.action.group->order() == 1);

    const Instance z2 = parse_instance(instance_file("z2_id0.json"));
    CHECK(check_premorphism(z2.action).passed());

    // theta(g1) with a non-open domain is rejected naming theta and the reason
    const auto bad = write_temp("baddom.json", R"({"group": {"cyclic": 2},
        "space": {"points": ["0", "1"], "opens": [[], ["1"], ["0", "1"]]},
        "theta": {"g1": {"dom": ["0"], "map": {"0": "0"}}}})");
    CHECK_THROWS_WITH_AS(parse_instance(bad),
                         doctest::Contains("theta(g1)"), error);

    // omitted non-identity element: no silent defaults
    const auto missing = write_temp("missing.json", R"({"group": {"cyclic": 2},
        "space": {"points": ["0"], "opens": [[], ["0"]]}, "theta": {}})");
    CHECK_THROWS_WITH_AS(parse_instance(missing), doctest::Contains("missing non-identity"), error);

    CHECK_THROWS_AS(parse_instance("/nonexistent/file.json"), error);
    const auto garbage = write_temp("garbage.json", "{not json");
    CHECK_THROWS_AS(parse_instance(garbage), error);
}

TEST_CASE("topologies_up_to_iso counts: 1, 3, 9") {
    CHECK(topologies_up_to_iso(1).size() == 1);
    CHECK(topologies_up_to_iso(2).size() == 3);
    CHECK(topologies_up_to_iso(3).size() == 9);
}

TEST_CASE("exhaustive corpus: |X| = 1 gives the trivial instances") {
    const auto one = generate_exhaustive(1);
    // trivial group id, Z2 with theta(g1) ∈ {1_∅, id}
    CHECK(one.size() == 3);
    for (const auto& a : one) CHECK(check_premorphism(a).passed());
}

TEST_CASE("exhaustive corpus: |X| <= 2 with Z2 matches the by-hand count") {
    const auto corpus = generate_exhaustive(2);
    // n=1: 1 trivial + 2 Z2; n=2 per iso class: discrete 1+5, sierpinski 1+3, indiscrete 1+3
    CHECK(corpus.size() == 17);
    std::size_t z2_count = 0;
    for (const auto& a : corpus) {
        CHECK(check_premorphism(a).passed());
        if (a.group->order() == 2) ++z2_count;
    }
    CHECK(z2_count == 13);
}

TEST_CASE("random corpus: deterministic per seed, every instance valid") {
    CorpusSpec spec;
    spec.count = 40;
    spec.max_points = 4;
    spec.max_group = 4;
    spec.seed = 77;
    const auto first = generate_random(spec);
    const auto second = generate_random(spec);
    REQUIRE(first.size() == 40);
    REQUIRE(second.size() == 40);
    for (std::size_t i = 0; i < first.size(); ++i) {
        CHECK(check_premorphism(first[i]).passed());
        CHECK(action_to_json(first[i]).dump() == action_to_json(second[i]).dump());
        CHECK(first[i].space->size() <= 4);
        CHECK(first[i].group->order() <= 4);
    }
}

TEST_CASE("cli: exit codes follow the contract") {
    CHECK(run({"check", instance_file("z2_id0.json")}) == cli::exit_ok);
    CHECK(run({"globalize", instance_file("z2_sierpinski.json")}) == cli::exit_ok);
    CHECK(run({"--bogus-flag"}) == cli::exit_usage);
    CHECK(run({"check", "/nonexistent.json"}) == cli::exit_usage);

    // guard exceeded: hyperspace of a 13-point space
    std::string pts = "[";
    for (int i = 0; i < 13; ++i) pts += (i ? ",\"p" : "\"p") + std::to_string(i) + "\"";
    pts += "]";
    const auto big = write_temp("big.json", R"({"group": {"cyclic": 1}, "space": {"points": )" + pts +
                                                R"(, "generators": []}, "theta": {}})");
    CHECK(run({"induce", big, "--target", "kx"}) == cli::exit_guard);

    // clause failure: verify must report FAIL through the exit code; build one
    // via a corrupted instance is impossible through the parser (it validates),
    // so use demo determinism instead: both demos pass
    CHECK(run({"demo", "zline", "--samples", "500", "--seed", "3"}) == cli::exit_ok);
    CHECK(run({"demo", "mobius", "--samples", "500", "--seed", "3"}) == cli::exit_ok);
}

TEST_CASE("cli: reports are byte-identical across runs (determinism)") {
    std::string a, b;
    CHECK(run({"corpus", "--count", "10", "--max-points", "3", "--seed", "5", "--theorem", "all"}, &a) == cli::exit_ok);
    CHECK(run({"corpus", "--count", "10", "--max-points", "3", "--seed", "5", "--theorem", "all"}, &b) == cli::exit_ok);
    CHECK(a == b);
    std::string j1, j2;
    CHECK(run({"globalize", instance_file("z2_id0.json"), "--format", "json"}, &j1) == cli::exit_ok);
    CHECK(run({"globalize", instance_file("z2_id0.json"), "--format", "json"}, &j2) == cli::exit_ok);
    CHECK(j1 == j2);
    CHECK(json::parse(j1).contains("classes"));
}

TEST_CASE("cli: verify with aux and corpus spec file") {
    CHECK(run({"verify", instance_file("z2_id0.json"), "--theorem", "all"}) == cli::exit_ok);
    const auto corpus_spec = write_temp("corpus.json", R"({"exhaustive": true, "max_points": 2})");
    std::string outp;
    CHECK(run({"verify", "--corpus", corpus_spec, "--theorem", "t1t2"}, &outp) == cli::exit_ok);
    CHECK(outp.find("corpus sweep: PASS") != std::string::npos);
}

TEST_CASE("cli: induce across all four targets") {
    CHECK(run({"induce", instance_file("z2_id0.json"), "--target", "kx"}) == cli::exit_ok);
    CHECK(run({"induce", instance_file("z2_id0.json"), "--target", "cone"}) == cli::exit_ok);
    const auto prod_aux = write_temp("prodaux.json",
                                     R"({"factors": ["source", {"points": ["0","1"], "opens": [[], ["1"], ["0","1"]]}],
                                         "index": 0, "basepoints": ["1"]})");
    CHECK(run({"induce", instance_file("z2_id0.json"), "--target", "prod", "--aux", prod_aux}) == cli::exit_ok);
    const auto fs_aux = write_temp("fsaux.json", R"({"space": {"points": ["p","q"], "generators": [["p"]]}})");
    CHECK(run({"induce", instance_file("z2_id0.json"), "--target", "funcspace", "--aux", fs_aux}) == cli::exit_ok);
    CHECK(run({"induce", instance_file("z2_id0.json"), "--target", "bogus"}) == cli::exit_usage);
}

TEST_SUITE_END();
