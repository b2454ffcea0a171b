#pragma once

#include "qlorentz/scalar.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace qlorentz {

inline std::string format_real(const Real& v) {
    if (v == 0) return "0";
    return v.str(3, std::ios_base::scientific);
}

/// One identity verification at one parameter point.
struct CheckRecord {
    std::string suite;
    std::string id;          // identity label, e.g. "eq31-orthogonality-upper"
    Real residual{0};
    Real tolerance{0};
    bool pass = false;
    bool expected_fail = false;  // the check passes when the residual exceeds tolerance
    bool applies = true;         // e.g. classical-limit checks only at (1,0)
    double wall_ms = 0;
    std::string note;
};

struct EngineRecord {
    bool fallback_engaged = false;
    std::string diamond_initial, diamond_final, diamond_degree4;
    int new_rules_deg2 = 0, new_rules_deg3 = 0, new_rules_deg4 = 0;
    std::size_t canonical_dim2 = 0, canonical_dim3 = 0, canonical_dim4 = 0;
};

struct FixtureRecord {
    std::string matrix;  // "G_upper" / "G_lower"
    int sign, i, j;
    std::string expr;
    std::string displayed_re, displayed_im, computed_re, computed_im, diff;
    bool match, required;
};

struct PointReport {
    std::string q, r;
    int branch = +1;
    unsigned precision = 60;
    std::string tolerance;
    std::vector<CheckRecord> checks;
    EngineRecord engine;
    std::vector<FixtureRecord> fixtures;
    std::string error;  // populated when the point failed to build

    bool verdict() const {
        if (!error.empty()) return false;
        for (const auto& c : checks) {
            if (!c.applies) continue;
            if (!c.pass) return false;
        }
        return true;
    }
};

struct Report {
    std::vector<PointReport> points;
    std::vector<std::string> suites;
    std::string note;

    bool verdict() const {
        if (points.empty()) return false;
        for (const auto& p : points)
            if (!p.verdict()) return false;
        return true;
    }

    nlohmann::ordered_json to_json(bool include_timing = true) const {
        nlohmann::ordered_json out;
        out["suites"] = suites;
        if (!note.empty()) out["note"] = note;
        out["points"] = nlohmann::ordered_json::array();
        for (const auto& p : points) {
            nlohmann::ordered_json jp;
            jp["q"] = p.q;
            jp["r"] = p.r;
            jp["branch"] = p.branch;
            jp["precision_digits"] = p.precision;
            jp["tolerance"] = p.tolerance;
            if (!p.error.empty()) jp["error"] = p.error;
            jp["engine"] = {{"fallback_engaged", p.engine.fallback_engaged},
                            {"diamond_initial", p.engine.diamond_initial},
                            {"diamond_final", p.engine.diamond_final},
                            {"diamond_degree4", p.engine.diamond_degree4},
                            {"new_rules", {p.engine.new_rules_deg2, p.engine.new_rules_deg3,
                                           p.engine.new_rules_deg4}},
                            {"canonical_dims", {p.engine.canonical_dim2, p.engine.canonical_dim3,
                                                p.engine.canonical_dim4}}};
            jp["checks"] = nlohmann::ordered_json::array();
            for (const auto& c : p.checks) {
                nlohmann::ordered_json jc;
                jc["suite"] = c.suite;
                jc["id"] = c.id;
                jc["residual"] = format_real(c.residual);
                jc["tolerance"] = format_real(c.tolerance);
                jc["pass"] = c.pass;
                if (c.expected_fail) jc["expected_fail"] = true;
                if (!c.applies) jc["applies"] = false;
                if (!c.note.empty()) jc["note"] = c.note;
                if (include_timing) jc["wall_ms"] = c.wall_ms;
                jp["checks"].push_back(std::move(jc));
            }
            if (!p.fixtures.empty()) {
                jp["fixture_diff"] = nlohmann::ordered_json::array();
                for (const auto& f : p.fixtures) {
                    nlohmann::ordered_json jf;
                    jf["matrix"] = f.matrix;
                    jf["sign"] = f.sign;
                    jf["entry"] = {f.i, f.j};
                    jf["expr"] = f.expr;
                    jf["displayed"] = {f.displayed_re, f.displayed_im};
                    jf["computed"] = {f.computed_re, f.computed_im};
                    jf["diff"] = f.diff;
                    jf["match"] = f.match;
                    if (f.required) jf["required"] = true;
                    jp["fixture_diff"].push_back(std::move(jf));
                }
            }
            jp["verdict"] = p.verdict() ? "pass" : "fail";
            out["points"].push_back(std::move(jp));
        }
        out["verdict"] = verdict() ? "pass" : "fail";
        return out;
    }

    std::string to_text(bool include_timing = true) const {
        std::string out;
        for (const auto& p : points) {
            out += "== point q=" + p.q + " r=" + p.r + " branch=" + (p.branch > 0 ? "+" : "-") +
                   " precision=" + std::to_string(p.precision) + " tolerance=" + p.tolerance + "\n";
            if (!p.error.empty()) {
                out += "   ERROR " + p.error + "\n";
                continue;
            }
            out += "   engine: fallback=" + std::string(p.engine.fallback_engaged ? "yes" : "no") +
                   " diamond=" + p.engine.diamond_final +
                   " rules(d2,d3,d4)=(" + std::to_string(p.engine.new_rules_deg2) + "," +
                   std::to_string(p.engine.new_rules_deg3) + "," +
                   std::to_string(p.engine.new_rules_deg4) + ")\n";
            for (const auto& c : p.checks) {
                std::string status = !c.applies ? "  n/a" : (c.pass ? " pass" : " FAIL");
                out += "  [" + status + "] " + c.suite + "/" + c.id + "  residual=" +
                       format_real(c.residual);
                if (c.expected_fail) out += "  (expected to exceed tolerance)";
                if (include_timing) out += "  (" + std::to_string(c.wall_ms) + " ms)";
                if (!c.note.empty()) out += "\n          " + c.note;
                out += "\n";
            }
            for (const auto& f : p.fixtures) {
                if (f.match) continue;
                out += "  fixture mismatch " + f.matrix + (f.sign > 0 ? "(+)" : "(-)") + " entry (" +
                       std::to_string(f.i) + "," + std::to_string(f.j) + "): displayed " + f.expr +
                       " = " + f.displayed_re + (f.displayed_im == "0" ? "" : " + i*" + f.displayed_im) +
                       ", computed " + f.computed_re +
                       (f.computed_im == "0" ? "" : " + i*" + f.computed_im) + ", diff " + f.diff + "\n";
            }
            out += "   point verdict: " + std::string(p.verdict() ? "pass" : "FAIL") + "\n";
        }
        out += "overall verdict: " + std::string(verdict() ? "pass" : "FAIL") + "\n";
        return out;
    }
};

}  // namespace qlorentz
