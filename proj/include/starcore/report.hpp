#pragma once

#include <chrono>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "starcore/closure.hpp"
#include "starcore/star_core.hpp"

namespace starcore {

using json = nlohmann::ordered_json;

struct CheckResult {
    std::string id;
    std::string text;      // raw check statement
    std::string expected;
    std::string actual;
    bool passed = false;
};

// A closure verdict together with the inputs it talks about, so the whole
// certificate can be replayed later.
struct VerdictRecord {
    std::string kind;     // "star" or "starsp"
    std::string element;  // printed form
    std::string ideal;    // printed name or expression
    Polynomial f;
    IdealHandle target;
    TestIdealInput tau;
    ClosureVerdict verdict;
};

struct LabeledCriteria {
    std::string label;
    CriteriaReport criteria;
};

struct LabeledBracket {
    std::string label;
    CoreBracket bracket;
};

struct LabeledScaling {
    std::string label;
    ScalingReport scaling;
};

struct ScenarioReport {
    std::string id;
    std::optional<QuotientRing> ring;
    std::vector<std::string> notes;
    std::vector<std::string> warnings;
    std::vector<VerdictRecord> verdicts;
    std::vector<LabeledCriteria> criteria;
    std::vector<LabeledBracket> brackets;
    std::vector<LabeledScaling> scalings;
    std::vector<std::pair<std::string, IdealHandle>> ideals;  // declaration order
    std::vector<CheckResult> checks;
    double total_ms = 0.0;

    bool all_passed() const {
        for (const CheckResult& c : checks)
            if (!c.passed) return false;
        return true;
    }
};

namespace detail {

inline json verdict_to_json(const ClosureVerdict& v) {
    json out;
    out["status"] = to_string(v.status);
    out["rule"] = to_string(v.rule);
    out["q_max"] = v.q_max;
    if (v.witness_multiplier) out["witness"] = v.witness_multiplier->to_string();
    if (v.witness_q) out["witness_q"] = *v.witness_q;
    json caveats = json::array();
    if (v.over_kbar_caveat) caveats.push_back("valid over the algebraic closure");
    out["caveats"] = caveats;
    if (!v.note.empty()) out["note"] = v.note;
    json evidence = json::array();
    for (const EvidenceRow& row : v.evidence) {
        json r;
        r["q"] = row.q;
        r["check"] = row.check;
        r["holds"] = row.holds;
        if (row.skipped) r["skipped"] = true;
        evidence.push_back(std::move(r));
    }
    out["evidence"] = std::move(evidence);
    return out;
}

inline json criteria_to_json(const CriteriaReport& c) {
    json out;
    out["a1"] = c.hypothesis_a1;
    out["a2"] = c.hypothesis_a2;
    out["b"] = c.hypothesis_b;
    out["conclusion"] = to_string(c.conclusion);
    return out;
}

inline json ideal_to_json(const IdealHandle& h) {
    json out;
    json gens = json::array();
    for (const Polynomial& g : h.user_gens()) gens.push_back(g.to_string());
    out["generators"] = std::move(gens);
    json gb = json::array();
    for (const Polynomial& g : h.groebner().elements) gb.push_back(g.to_string());
    out["groebner"] = std::move(gb);
    return out;
}

inline json bracket_to_json(const CoreBracket& b) {
    json out;
    out["lower_tau_I"] = ideal_to_json(b.lower);
    out["formula_J_JI"] = ideal_to_json(b.formula);
    out["alt_formula_I_JI"] = ideal_to_json(b.alt_formula);
    out["finite_intersection"] = ideal_to_json(b.finite_intersection);
    out["sandwich_holds"] = b.sandwich_holds;
    out["criteria_conclusion"] = to_string(b.criteria);
    out["formula_eq_alt"] = b.formula_eq_alt;
    out["formula_eq_intersection"] = b.formula_eq_intersection;
    out["confirmed_equalities_ok"] = b.confirmed_equalities_ok();
    return out;
}

inline json scaling_to_json(const ScalingReport& s) {
    json rows = json::array();
    for (const ScalingRow& row : s.rows) {
        json r;
        r["e"] = row.e;
        r["q"] = row.q;
        r["special_a"] = row.special_a;
        r["special_b"] = row.special_b;
        r["criteria"] = criteria_to_json(row.criteria);
        r["bracket"] = bracket_to_json(row.bracket);
        rows.push_back(std::move(r));
    }
    json out;
    out["rows"] = std::move(rows);
    if (s.least_confirmed_e)
        out["least_confirmed_e"] = *s.least_confirmed_e;
    else
        out["least_confirmed_e"] = nullptr;
    return out;
}

}  // namespace detail

// Schema: top-level keys {scenario, ring, verdicts, criteria, ideals,
// timings}. Everything except "timings" is deterministic for a fixed input.
inline json report_to_json(const ScenarioReport& rep) {
    json out;

    json scenario;
    scenario["id"] = rep.id;
    scenario["notes"] = rep.notes;
    scenario["warnings"] = rep.warnings;
    json checks;
    json values;
    for (const CheckResult& c : rep.checks) {
        json entry;
        entry["text"] = c.text;
        entry["expected"] = c.expected;
        entry["actual"] = c.actual;
        entry["passed"] = c.passed;
        checks[c.id] = std::move(entry);
        if (c.actual == "true")
            values[c.id] = true;
        else if (c.actual == "false")
            values[c.id] = false;
        else
            values[c.id] = c.actual;
    }
    scenario["checks"] = std::move(checks);
    scenario["values"] = std::move(values);
    scenario["all_passed"] = rep.all_passed();
    out["scenario"] = std::move(scenario);

    json ring;
    if (rep.ring) {
        ring["characteristic"] = rep.ring->p();
        ring["variables"] = rep.ring->ambient().variables();
        json rels = json::array();
        for (const Polynomial& r : rep.ring->relations()) rels.push_back(r.to_string());
        ring["relations"] = std::move(rels);
        ring["order"] = rep.ring->ambient().order().name();
    }
    out["ring"] = std::move(ring);

    json verdicts = json::array();
    for (const VerdictRecord& v : rep.verdicts) {
        json entry;
        entry["kind"] = v.kind;
        entry["element"] = v.element;
        entry["ideal"] = v.ideal;
        entry["verdict"] = detail::verdict_to_json(v.verdict);
        verdicts.push_back(std::move(entry));
    }
    out["verdicts"] = std::move(verdicts);

    json criteria;
    for (const LabeledCriteria& c : rep.criteria)
        criteria[c.label] = detail::criteria_to_json(c.criteria);
    for (const LabeledBracket& b : rep.brackets)
        criteria[b.label + ".bracket"] = detail::bracket_to_json(b.bracket);
    for (const LabeledScaling& s : rep.scalings)
        criteria[s.label + ".scaling"] = detail::scaling_to_json(s.scaling);
    out["criteria"] = std::move(criteria);

    json ideals;
    for (const auto& [name, handle] : rep.ideals)
        ideals[name] = detail::ideal_to_json(handle);
    out["ideals"] = std::move(ideals);

    json timings;
    timings["total_ms"] = rep.total_ms;
    out["timings"] = std::move(timings);
    return out;
}

// Human-readable rendering of the same content.
inline std::string report_to_text(const ScenarioReport& rep) {
    std::string s;
    s += "scenario: " + rep.id + "\n";
    if (rep.ring) s += "ring: " + rep.ring->to_string() + "\n";
    for (const std::string& n : rep.notes) s += "note: " + n + "\n";
    for (const std::string& w : rep.warnings) s += "warning: " + w + "\n";
    for (const auto& [name, handle] : rep.ideals) {
        s += "ideal " + name + " = (";
        const auto& gens = handle.user_gens();
        for (std::size_t i = 0; i < gens.size(); ++i) {
            if (i) s += ", ";
            s += gens[i].to_string();
        }
        s += ")\n  groebner: {";
        const auto& gb = handle.groebner().elements;
        for (std::size_t i = 0; i < gb.size(); ++i) {
            if (i) s += ", ";
            s += gb[i].to_string();
        }
        s += "}\n";
    }
    for (const VerdictRecord& v : rep.verdicts) {
        s += v.kind + " " + v.element + " vs " + v.ideal + ": " +
             to_string(v.verdict.status) + " [" + to_string(v.verdict.rule) + "]";
        if (v.verdict.over_kbar_caveat) s += " (valid over the algebraic closure)";
        s += "\n";
    }
    for (const LabeledCriteria& c : rep.criteria) {
        s += "criteria " + c.label + ": " + to_string(c.criteria.conclusion) +
             " (a1=" + (c.criteria.a1_holds() ? "true" : "false") +
             ", a2=" + (c.criteria.a2_holds() ? "true" : "false") +
             ", b=" + (c.criteria.b_holds() ? "true" : "false") + ")\n";
    }
    for (const LabeledBracket& b : rep.brackets) {
        s += "bracket " + b.label + ": sandwich=" +
             (b.bracket.sandwich_holds ? "true" : "false") +
             " formula==alt=" + (b.bracket.formula_eq_alt ? "true" : "false") +
             " formula==intersection=" +
             (b.bracket.formula_eq_intersection ? "true" : "false") + "\n";
    }
    for (const LabeledScaling& sc : rep.scalings) {
        s += "scaling " + sc.label + ":\n";
        for (const ScalingRow& row : sc.scaling.rows) {
            s += "  e=" + std::to_string(row.e) + " q=" + std::to_string(row.q) +
                 " special_a=" + (row.special_a_holds() ? "true" : "false") +
                 " special_b=" + (row.special_b_holds() ? "true" : "false") +
                 " criteria=" + to_string(row.criteria.conclusion) +
                 " formula==intersection=" +
                 (row.bracket.formula_eq_intersection ? "true" : "false") + "\n";
        }
        if (sc.scaling.least_confirmed_e)
            s += "  least confirmed e: " +
                 std::to_string(*sc.scaling.least_confirmed_e) + "\n";
        else
            s += "  least confirmed e: none observed\n";
    }
    for (const CheckResult& c : rep.checks) {
        s += std::string(c.passed ? "[ok]   " : "[FAIL] ") + c.id + ": " + c.text +
             " -> " + c.actual;
        if (!c.passed) s += " (expected " + c.expected + ")";
        s += "\n";
    }
    s += rep.all_passed() ? "all checks passed\n" : "SOME CHECKS FAILED\n";
    return s;
}

}  // namespace starcore
