#pragma once

#include <sstream>
#include <string>
#include <vector>

namespace pact {

// One checked law or theorem clause. `witness` carries the minimal failing
// data when pass is false; `note` carries caveats (e.g. finite-model flags).
struct Clause {
    std::string label;
    bool pass = false;
    std::string witness;
    std::string note;
};

struct Report {
    std::string title;
    std::vector<Clause> clauses;

    void add(std::string label, bool pass, std::string witness = "", std::string note = "") {
        clauses.push_back({std::move(label), pass, std::move(witness), std::move(note)});
    }

    bool passed() const {
        for (const auto& c : clauses)
            if (!c.pass) return false;
        return true;
    }

    const Clause* first_failure() const {
        for (const auto& c : clauses)
            if (!c.pass) return &c;
        return nullptr;
    }

    void merge(const Report& other, const std::string& prefix = "") {
        for (const auto& c : other.clauses)
            clauses.push_back({prefix.empty() ? c.label : prefix + ": " + c.label, c.pass, c.witness, c.note});
    }

    std::string text(bool with_witness = true) const {
        std::ostringstream os;
        os << title << ": " << (passed() ? "PASS" : "FAIL") << "\n";
        for (const auto& c : clauses) {
            os << "  [" << (c.pass ? "ok" : "FAIL") << "] " << c.label;
            if (!c.note.empty()) os << "  (" << c.note << ")";
            if (with_witness && !c.pass && !c.witness.empty()) os << "  witness: " << c.witness;
            os << "\n";
        }
        return os.str();
    }
};

} // namespace pact
