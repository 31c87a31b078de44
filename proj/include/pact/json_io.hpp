#pragma once

#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "pact/action.hpp"
#include "pact/group.hpp"
#include "pact/numeric.hpp"
#include "pact/report.hpp"
#include "pact/topology.hpp"

namespace pact {

using json = nlohmann::json;

// ============================================================================
// Canonical JSON interchange. Output always carries the full closed open-set
// family, each set sorted, the family sorted lexicographically; nlohmann's
// ordered std::map keys make emission canonical.
// ============================================================================

inline json space_to_json(const FiniteSpace& s) {
    json j;
    j["points"] = s.points;
    json fam = json::array();
    for (const auto& o : enumerate_opens(s)) fam.push_back(s.names_of(o));
    j["opens"] = fam;
    return j;
}

inline FiniteSpace space_from_json(const json& j) {
    if (!j.is_object()) throw error("space literal must be an object");
    if (!j.contains("points")) throw error("space literal needs \"points\"");
    const auto points = j.at("points").get<std::vector<std::string>>();
    if (j.contains("opens") && j.contains("generators"))
        throw error("space literal: give \"opens\" or \"generators\", not both");
    if (j.contains("opens"))
        return space_from_opens(points, j.at("opens").get<std::vector<std::vector<std::string>>>());
    if (j.contains("generators"))
        return make_space(points, j.at("generators").get<std::vector<std::vector<std::string>>>());
    throw error("space literal needs \"opens\" or \"generators\"");
}

inline json group_to_json(const FiniteGroup& g) {
    json j;
    j["elements"] = g.elements;
    json table = json::array();
    for (std::size_t a = 0; a < g.order(); ++a) {
        json row = json::array();
        for (std::size_t b = 0; b < g.order(); ++b)
            row.push_back(g.elements[static_cast<std::size_t>(g.table[a][b])]);
        table.push_back(row);
    }
    j["table"] = table;
    return j;
}

inline FiniteGroup group_from_json(const json& j) {
    if (!j.is_object()) throw error("group literal must be an object");
    if (j.contains("cyclic")) return cyclic_group(j.at("cyclic").get<std::size_t>());
    if (j.contains("symmetric")) return symmetric_group(j.at("symmetric").get<std::size_t>());
    if (j.contains("klein")) return klein_four();
    if (!j.contains("elements") || !j.contains("table"))
        throw error("group literal needs \"elements\" and \"table\" (or a named constructor)");
    return make_group(j.at("elements").get<std::vector<std::string>>(),
                      j.at("table").get<std::vector<std::vector<std::string>>>());
}

inline json action_to_json(const PartialAction& a) {
    json j;
    j["group"] = group_to_json(*a.group);
    j["space"] = space_to_json(*a.space);
    json theta = json::object();
    for (std::size_t g = 0; g < a.group->order(); ++g) {
        if (static_cast<int>(g) == a.group->identity) continue; // implied identity
        json entry;
        entry["dom"] = a.space->names_of(a.theta[g].dom);
        json map = json::object();
        a.theta[g].dom.for_each([&](std::size_t p) {
            map[a.space->points[p]] = a.space->points[static_cast<std::size_t>(a.theta[g].fwd[p])];
        });
        entry["map"] = map;
        theta[a.group->name(static_cast<int>(g))] = entry;
    }
    j["theta"] = theta;
    return j;
}

// theta(e) may be omitted (implied identity); any other omitted element is an
// error — no silent defaults.
inline PartialAction action_from_json(const json& j) {
    if (!j.is_object()) throw error("action literal must be an object");
    const GroupRef group = share(group_from_json(j.at("group")));
    const SpaceRef space = share(space_from_json(j.at("space")));
    const json theta_j = j.contains("theta") ? j.at("theta") : json::object();
    if (!theta_j.is_object()) throw error("\"theta\" must be an object keyed by group element");

    for (const auto& [key, val] : theta_j.items())
        if (group->index_of(key) < 0) throw error("theta key '" + key + "' is not a group element");

    std::vector<PartialHomeo> theta;
    for (std::size_t g = 0; g < group->order(); ++g) {
        const std::string& name = group->name(static_cast<int>(g));
        if (!theta_j.contains(name)) {
            if (static_cast<int>(g) == group->identity) {
                theta.push_back(identity_homeo(space));
                continue;
            }
            throw error("theta is missing non-identity element '" + name + "' (no silent defaults)");
        }
        const json& entry = theta_j.at(name);
        if (!entry.contains("map")) throw error("theta entry for '" + name + "' needs a \"map\"");
        std::map<std::string, std::string> assignment;
        for (const auto& [k, v] : entry.at("map").items()) assignment[k] = v.get<std::string>();
        if (entry.contains("dom")) {
            const auto dom_names = entry.at("dom").get<std::vector<std::string>>();
            if (dom_names.size() != assignment.size())
                throw error("theta entry for '" + name + "': \"dom\" disagrees with the map keys");
            for (const auto& d : dom_names)
                if (!assignment.count(d))
                    throw error("theta entry for '" + name + "': dom point '" + d + "' is not a map key");
        }
        try {
            theta.push_back(make_partial_homeo(space, assignment));
        } catch (const error& e) {
            throw error("theta(" + name + "): " + e.what());
        }
    }
    return make_partial_action(group, space, std::move(theta));
}

struct Instance {
    PartialAction action;
    json aux; // optional: parameter space, product factors, basepoints
};

inline Instance parse_instance_json(const json& j) {
    Instance inst{action_from_json(j), json::object()};
    if (j.contains("aux")) inst.aux = j.at("aux");
    return inst;
}

inline Instance parse_instance(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw error("cannot open '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw error("parse error in '" + path + "': " + e.what());
    }
    try {
        return parse_instance_json(j);
    } catch (const guard_error&) {
        throw;
    } catch (const error& e) {
        throw error(path + ": " + e.what());
    }
}

inline json report_to_json(const Report& rep) {
    json j;
    j["title"] = rep.title;
    j["passed"] = rep.passed();
    json clauses = json::array();
    for (const auto& c : rep.clauses) {
        json cj;
        cj["label"] = c.label;
        cj["pass"] = c.pass;
        if (!c.witness.empty()) cj["witness"] = c.witness;
        if (!c.note.empty()) cj["note"] = c.note;
        clauses.push_back(cj);
    }
    j["clauses"] = clauses;
    return j;
}

inline json numeric_report_to_json(const NumericReport& rep) {
    json j;
    j["title"] = rep.title;
    j["seed"] = rep.seed;
    j["passed"] = rep.passed();
    j["domain_misses"] = rep.domain_misses;
    json laws = json::array();
    for (const auto& l : rep.laws) {
        json lj;
        lj["law"] = l.law;
        lj["checked"] = l.checked;
        lj["passed"] = l.passed;
        lj["worst_error"] = l.worst_error;
        lj["witness"] = l.witness;
        laws.push_back(lj);
    }
    j["laws"] = laws;
    return j;
}

} // namespace pact
