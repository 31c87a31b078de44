#pragma once

#include <algorithm>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pact/corpus.hpp"
#include "pact/embeddings.hpp"
#include "pact/funcspace.hpp"
#include "pact/globalization.hpp"
#include "pact/json_io.hpp"
#include "pact/numeric.hpp"

namespace pact::cli {

// exit-code contract: 0 all-pass, 1 clause failure, 2 usage/parse error, 3 guard exceeded
enum ExitCode { exit_ok = 0, exit_clause_failure = 1, exit_usage = 2, exit_guard = 3 };

namespace detail {

inline json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw error("cannot open '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw error("parse error in '" + path + "': " + e.what());
    }
    return j;
}

inline SpaceRef aux_space(const json& aux) {
    if (aux.is_object() && aux.contains("space")) return share(space_from_json(aux.at("space")));
    return share(space_from_json(aux)); // allow a bare space literal
}

inline void emit_report(const Report& rep, bool as_json, bool witness, std::ostream& out) {
    if (as_json)
        out << report_to_json(rep).dump(2) << "\n";
    else
        out << rep.text(witness);
}

struct TheoremSet {
    bool continuity = false, nice = false, jembed = false, t1t2 = false, clopen = false, xi = false;

    static TheoremSet parse(const std::string& name) {
        TheoremSet t;
        if (name == "all") {
            t.continuity = t.nice = t.jembed = t.t1t2 = t.clopen = t.xi = true;
        } else if (name == "continuity") {
            t.continuity = true;
        } else if (name == "nice") {
            t.nice = true;
        } else if (name == "j-embed") {
            t.jembed = true;
        } else if (name == "t1t2") {
            t.t1t2 = true;
        } else if (name == "clopen") {
            t.clopen = true;
        } else if (name == "xi") {
            t.xi = true;
        } else {
            throw error("unknown theorem '" + name + "' (continuity|nice|j-embed|t1t2|clopen|xi|all)");
        }
        return t;
    }
};

inline std::vector<Report> run_theorems(const FuncSpaceBundle& b, const TheoremSet& t) {
    std::vector<Report> reports;
    if (t.continuity) reports.push_back(check_continuity_equiv(b));
    if (t.nice) reports.push_back(check_nice_equiv(b));
    if (t.jembed) reports.push_back(j_embed(b).report);
    if (t.t1t2) reports.push_back(check_t1_t2_equiv(b));
    if (t.clopen) reports.push_back(check_clopen_corollary(b));
    if (t.xi) reports.push_back(xi_embed(b).report);
    return reports;
}

} // namespace detail

inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"pact — partial actions, Γ-embeddings and enveloping spaces on finite instances"};
    app.require_subcommand(1);
    app.footer("Guards scale uniformly with the PACT_GUARD_SCALE environment variable (at your own risk).");

    std::string format = "text";
    bool witness = false;

    // ---- check ----
    auto* cmd_check = app.add_subcommand("check", "validate an instance file and print the premorphism report");
    std::string check_file;
    cmd_check->add_option("file", check_file, "instance JSON")->required();
    cmd_check->add_option("--format", format, "text|json");
    cmd_check->add_flag("--witness", witness, "print minimal failing witnesses");

    // ---- globalize ----
    auto* cmd_glob = app.add_subcommand("globalize", "compute the enveloping space X_G with mu, iota, q");
    std::string glob_file;
    cmd_glob->add_option("file", glob_file, "instance JSON")->required();
    cmd_glob->add_option("--format", format, "text|json");
    cmd_glob->add_flag("--witness", witness, "print minimal failing witnesses");

    // ---- induce ----
    auto* cmd_induce = app.add_subcommand("induce", "transport the action along a Γ-embedding");
    std::string induce_file, induce_target, induce_aux;
    cmd_induce->add_option("file", induce_file, "instance JSON")->required();
    cmd_induce->add_option("--target", induce_target, "kx|cone|prod|funcspace")->required();
    cmd_induce->add_option("--aux", induce_aux, "aux JSON (parameter space / factors+basepoints)");
    cmd_induce->add_option("--format", format, "text|json");

    // ---- verify ----
    auto* cmd_verify = app.add_subcommand("verify", "check the function-space theorems on an instance");
    std::string verify_file, verify_theorem = "all", verify_aux, verify_corpus;
    cmd_verify->add_option("file", verify_file, "instance JSON");
    cmd_verify->add_option("--theorem", verify_theorem, "continuity|nice|j-embed|t1t2|clopen|xi|all");
    cmd_verify->add_option("--aux", verify_aux, "parameter space X (JSON; default Sierpiński)");
    cmd_verify->add_option("--corpus", verify_corpus, "corpus spec JSON: sweep generated instances");
    cmd_verify->add_flag("--witness", witness, "print minimal failing witnesses");
    cmd_verify->add_option("--format", format, "text|json");

    // ---- demo ----
    auto* cmd_demo = app.add_subcommand("demo", "sampled numeric checks of the worked examples");
    std::string demo_name;
    std::size_t demo_samples = 10000, demo_grid = 5;
    std::uint64_t demo_seed = 1;
    cmd_demo->add_option("example", demo_name, "zline|mobius")->required();
    cmd_demo->add_option("--samples", demo_samples, "sample count");
    cmd_demo->add_option("--seed", demo_seed, "rng seed (printed in the report)");
    cmd_demo->add_option("--grid", demo_grid, "grid size for the zline function-space check");
    cmd_demo->add_option("--format", format, "text|json");

    // ---- corpus ----
    auto* cmd_corpus = app.add_subcommand("corpus", "generate instances and sweep the theorem checkers");
    bool corpus_exhaustive = false;
    std::size_t corpus_points = 2, corpus_group = 2, corpus_count = 50;
    std::uint64_t corpus_seed = 1;
    std::string corpus_theorem = "all";
    bool corpus_emit = false;
    cmd_corpus->add_flag("--exhaustive", corpus_exhaustive, "every topology up to relabeling, G ∈ {1, ℤ₂}");
    cmd_corpus->add_option("--max-points", corpus_points, "bound on |X|");
    cmd_corpus->add_option("--max-group", corpus_group, "bound on |G| (random mode)");
    cmd_corpus->add_option("--count", corpus_count, "instance count (random mode)");
    cmd_corpus->add_option("--seed", corpus_seed, "rng seed");
    cmd_corpus->add_option("--theorem", corpus_theorem, "continuity|nice|j-embed|t1t2|clopen|xi|all|none");
    cmd_corpus->add_flag("--emit", corpus_emit, "print each instance as JSON instead of sweeping");
    cmd_corpus->add_flag("--witness", witness, "print minimal failing witnesses");
    cmd_corpus->add_option("--format", format, "text|json");

    std::reverse(args.begin(), args.end());
    try {
        app.parse(std::move(args));
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return exit_usage;
    }
    const bool as_json = format == "json";

    try {
        if (*cmd_check) {
            const Instance inst = parse_instance(check_file);
            Report rep = check_premorphism(inst.action);
            rep.merge(is_nice(inst.action), "nice");
            detail::emit_report(rep, as_json, witness || !as_json, out);
            return rep.passed() ? exit_ok : exit_clause_failure;
        }

        if (*cmd_glob) {
            const Instance inst = parse_instance(glob_file);
            const EnvelopingSpace env = globalize(inst.action);
            const Report rep = verify_globalization(env);
            const auto& G = *inst.action.group;
            const std::size_t nx = inst.action.space->size();
            if (as_json) {
                json j;
                json classes = json::object();
                for (std::size_t g = 0; g < G.order(); ++g)
                    for (std::size_t x = 0; x < nx; ++x) {
                        const int c = env.class_of[static_cast<std::size_t>(env.graph.point_of[g * nx + x])];
                        classes[env.space->points[static_cast<std::size_t>(c)]].push_back(
                            "(" + G.name(static_cast<int>(g)) + "," + inst.action.space->points[x] + ")");
                    }
                j["classes"] = classes;
                j["space"] = space_to_json(*env.space);
                j["mu"] = action_to_json(env.mu);
                j["report"] = report_to_json(rep);
                out << j.dump(2) << "\n";
            } else {
                out << "classes (" << env.space->size() << "):\n";
                for (std::size_t c = 0; c < env.space->size(); ++c) {
                    out << "  " << env.space->points[c] << " = {";
                    bool first = true;
                    for (std::size_t g = 0; g < G.order(); ++g)
                        for (std::size_t x = 0; x < nx; ++x)
                            if (env.class_of[static_cast<std::size_t>(env.graph.point_of[g * nx + x])] ==
                                static_cast<int>(c)) {
                                if (!first) out << ", ";
                                out << "(" << G.name(static_cast<int>(g)) << "," << inst.action.space->points[x]
                                    << ")";
                                first = false;
                            }
                    out << "}\n";
                }
                const auto opens = enumerate_opens(*env.space);
                out << "quotient opens (" << opens.size() << "):\n";
                for (const auto& o : opens) out << "  " << env.space->set_name(o) << "\n";
                out << "mu:\n";
                for (std::size_t g = 0; g < G.order(); ++g) {
                    out << "  " << G.name(static_cast<int>(g)) << ": ";
                    for (std::size_t c = 0; c < env.space->size(); ++c) {
                        if (c) out << ", ";
                        out << env.space->points[c] << "→"
                            << env.space->points[static_cast<std::size_t>(env.mu.theta[g].fwd[c])];
                    }
                    out << "\n";
                }
                out << rep.text(true);
            }
            return rep.passed() ? exit_ok : exit_clause_failure;
        }

        if (*cmd_induce) {
            const Instance inst = parse_instance(induce_file);
            const json aux = !induce_aux.empty() ? detail::load_json(induce_aux) : inst.aux;
            GammaEmbedding emb;
            if (induce_target == "kx") {
                emb = hyperspace(inst.action.space).emb;
            } else if (induce_target == "cone") {
                emb = cone_finite(inst.action.space).emb;
            } else if (induce_target == "prod") {
                if (!aux.is_object() || !aux.contains("factors") || !aux.contains("index"))
                    throw error("induce --target prod needs aux {\"factors\":[...],\"index\":i,\"basepoints\":[...]}");
                const std::size_t slot = aux.at("index").get<std::size_t>();
                std::vector<SpaceRef> factors;
                const auto& fj = aux.at("factors");
                for (std::size_t i = 0; i < fj.size(); ++i) {
                    if (i == slot && (fj[i].is_null() || (fj[i].is_string() && fj[i] == "source")))
                        factors.push_back(inst.action.space);
                    else
                        factors.push_back(share(space_from_json(fj[i])));
                }
                if (slot >= factors.size() || !(*factors[slot] == *inst.action.space))
                    throw error("induce --target prod: factors[index] must be the instance space (or \"source\")");
                std::vector<std::string> basepoints;
                if (aux.contains("basepoints")) basepoints = aux.at("basepoints").get<std::vector<std::string>>();
                emb = product_embedding(factors, slot, basepoints);
            } else if (induce_target == "funcspace") {
                if (aux.is_null() || (aux.is_object() && aux.empty()))
                    throw error("induce --target funcspace needs aux {\"space\": ...} for the parameter space X");
                emb = function_space(detail::aux_space(aux), inst.action.space).emb;
            } else {
                throw error("unknown target '" + induce_target + "' (kx|cone|prod|funcspace)");
            }
            const PartialAction ahat = induce_action(emb, inst.action);
            const Report cert = verify_gamma_embedding(emb);
            if (as_json) {
                json j;
                j["induced"] = action_to_json(ahat);
                j["certificate"] = report_to_json(cert);
                out << j.dump(2) << "\n";
            } else {
                out << cert.text(true);
                out << "induced action on " << emb.target->size() << " points:\n"
                    << action_to_json(ahat).dump(2) << "\n";
            }
            return cert.passed() ? exit_ok : exit_clause_failure;
        }

        if (*cmd_verify) {
            const detail::TheoremSet theorems = detail::TheoremSet::parse(verify_theorem);
            bool all_pass = true;
            const auto sweep_instance = [&](const PartialAction& a, const std::string& tag,
                                            const std::vector<SpaceRef>& params) {
                for (const auto& x : params) {
                    const FuncSpaceBundle b = build_bundle(x, a);
                    for (const auto& rep : detail::run_theorems(b, theorems)) {
                        if (!rep.passed()) all_pass = false;
                        if (as_json)
                            out << report_to_json(rep).dump(2) << "\n";
                        else
                            out << tag << " | X = " << x->size() << "pt | " << rep.text(witness);
                    }
                }
            };
            if (!verify_corpus.empty()) {
                const json cj = detail::load_json(verify_corpus);
                CorpusSpec spec;
                spec.exhaustive = cj.value("exhaustive", false);
                spec.max_points = cj.value("max_points", std::size_t{2});
                spec.max_group = cj.value("max_group", std::size_t{2});
                spec.count = cj.value("count", std::size_t{50});
                spec.seed = cj.value("seed", std::uint64_t{1});
                const auto instances = generate_corpus(spec);
                const std::vector<SpaceRef> params = {share(discrete_space({"*"})),
                                                      share(discrete_space({"p", "q"})), share(sierpinski())};
                std::size_t i = 0;
                for (const auto& a : instances) sweep_instance(a, "instance " + std::to_string(i++), params);
                out << (all_pass ? "corpus sweep: PASS" : "corpus sweep: FAIL") << " (" << instances.size()
                    << " instances)\n";
            } else {
                if (verify_file.empty()) throw error("verify needs an instance file or --corpus");
                const Instance inst = parse_instance(verify_file);
                json aux = !verify_aux.empty() ? detail::load_json(verify_aux) : inst.aux;
                const SpaceRef x = (aux.is_null() || (aux.is_object() && aux.empty()))
                                       ? share(sierpinski())
                                       : detail::aux_space(aux);
                sweep_instance(inst.action, verify_file, {x});
            }
            return all_pass ? exit_ok : exit_clause_failure;
        }

        if (*cmd_demo) {
            NumericReport rep;
            if (demo_name == "zline") {
                rep = ray_phi_check(demo_samples, demo_seed);
                const NumericReport rep2 = ray_funcspace_check(demo_grid, std::max<std::size_t>(demo_samples / 10, 1),
                                                               demo_seed + 1);
                if (as_json) {
                    json j = json::array({numeric_report_to_json(rep), numeric_report_to_json(rep2)});
                    out << j.dump(2) << "\n";
                } else {
                    out << rep.text() << rep2.text();
                }
                return rep.passed() && rep2.passed() ? exit_ok : exit_clause_failure;
            }
            if (demo_name == "mobius") {
                rep = mobius_axiom_check(demo_samples, demo_seed);
                if (as_json)
                    out << numeric_report_to_json(rep).dump(2) << "\n";
                else
                    out << rep.text();
                return rep.passed() ? exit_ok : exit_clause_failure;
            }
            throw error("unknown demo '" + demo_name + "' (zline|mobius)");
        }

        if (*cmd_corpus) {
            CorpusSpec spec;
            spec.exhaustive = corpus_exhaustive;
            spec.max_points = corpus_points;
            spec.max_group = corpus_group;
            spec.count = corpus_count;
            spec.seed = corpus_seed;
            const auto instances = generate_corpus(spec);
            if (corpus_emit) {
                json arr = json::array();
                for (const auto& a : instances) arr.push_back(action_to_json(a));
                out << arr.dump(2) << "\n";
                return exit_ok;
            }
            bool all_pass = true;
            const std::vector<SpaceRef> params = {share(discrete_space({"*"})), share(discrete_space({"p", "q"})),
                                                  share(sierpinski())};
            std::size_t idx = 0;
            for (const auto& a : instances) {
                const Report prem = check_premorphism(a);
                if (!prem.passed()) all_pass = false;
                if (corpus_theorem != "none") {
                    const detail::TheoremSet theorems = detail::TheoremSet::parse(corpus_theorem);
                    for (const auto& x : params) {
                        const FuncSpaceBundle b = build_bundle(x, a);
                        for (const auto& rep : detail::run_theorems(b, theorems)) {
                            if (!rep.passed()) {
                                all_pass = false;
                                out << "instance " << idx << ": " << rep.text(true);
                            }
                        }
                    }
                }
                ++idx;
            }
            out << (all_pass ? "corpus: PASS" : "corpus: FAIL") << " (" << instances.size() << " instances, "
                << (corpus_exhaustive ? "exhaustive" : ("seed " + std::to_string(spec.seed))) << ")\n";
            return all_pass ? exit_ok : exit_clause_failure;
        }
    } catch (const guard_error& e) {
        err << "guard: " << e.what() << "\n";
        return exit_guard;
    } catch (const error& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const json::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_usage;
}

} // namespace pact::cli
