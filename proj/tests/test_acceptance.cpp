// Acceptance suite: runs every criterion at the default tolerance over the
// four sample parameter points and prints one line per criterion.

#include "qlorentz/suites.hpp"

#include <cstdio>
#include <string>
#include <vector>

using namespace qlorentz;

namespace {

struct Criterion {
    std::string label;
    bool ok = true;
    Real worst{0};
    std::string where;
    std::string note;

    void fold(const CheckRecord& c, const std::string& point) {
        if (!c.applies) return;
        if (!c.pass) ok = false;
        if (c.residual > worst) {
            worst = c.residual;
            where = point;
        }
    }
};

const CheckRecord* find(const PointReport& p, const std::string& id) {
    for (const auto& c : p.checks)
        if (c.id == id) return &c;
    return nullptr;
}

}  // namespace

int main() {
    SuiteConfig cfg;
    cfg.points = {{"1", "0", +1}, {"2", "0", +1}, {"2", "1/3", +1}, {"1/2", "1/5", +1}};
    std::printf("acceptance: 4 parameter points, precision 60, tolerance 1e-30\n");
    Report rep = run_suites(cfg);

    for (const auto& p : rep.points)
        if (!p.error.empty()) {
            std::printf("point (%s, %s) failed to build: %s\n", p.q.c_str(), p.r.c_str(),
                        p.error.c_str());
            return 1;
        }

    auto pt_name = [](const PointReport& p) { return "(" + p.q + ", " + p.r + ")"; };

    std::vector<std::pair<Criterion, bool>> results;  // criterion, expected_ok
    auto fold_ids = [&](Criterion& c, const std::vector<std::string>& ids) {
        for (const auto& p : rep.points)
            for (const auto& id : ids)
                if (const CheckRecord* r = find(p, id)) c.fold(*r, pt_name(p));
    };

    {
        Criterion c{"criterion 01: spinor metric star relations and inverse identities"};
        fold_ids(c, {"eq16-star-relations", "eps-inverse-pairs", "eps-contraction-minus-Q"});
        results.push_back({c, true});
    }
    {
        Criterion c{"criterion 02: R-matrix inverse pair, Hecke, YBE, eps-R, mixed inverses"};
        fold_ids(c, {"r-inverse-pair", "hecke-plus", "hecke-minus", "ybe-plus", "ybe-minus",
                     "eps-r-plus", "eps-r-minus", "eq19-mixed-inverse", "eq20-mixed-inverse",
                     "r-spectrum"});
        results.push_back({c, true});
    }
    {
        Criterion c{"criterion 03: sigma layer round trip, completeness, closed forms, hermiticity"};
        fold_ids(c, {"eq23-round-trip", "eq24-trace-orders", "eq25-closed-form", "eq28-closed-form",
                     "eq26-completeness", "eq27-completeness", "sigma-hermiticity",
                     "g-metric-inverse", "sbar-sign-independence", "eq33-dual", "eq36-dual",
                     "sbar-contraction", "bispinor-round-trip"});
        results.push_back({c, true});
    }
    {
        Criterion c{"criterion 04: classical limit G = diag(-1,1,1,1) at (1, 0)"};
        for (const auto& p : rep.points)
            if (p.q == "1" && p.r == "0")
                if (const CheckRecord* r = find(p, "classical-limit-metric")) c.fold(*r, pt_name(p));
        results.push_back({c, true});
    }
    {
        Criterion c{"criterion 05: displayed metric fixture, required entries at (2, 1/3)"};
        int tolerated = 0;
        for (const auto& p : rep.points) {
            if (!(p.q == "2" && p.r == "1/3")) continue;
            if (const CheckRecord* r = find(p, "fixture-required-entries")) c.fold(*r, pt_name(p));
            for (const auto& f : p.fixtures)
                if (!f.match) ++tolerated;
        }
        c.note = std::to_string(tolerated) + " non-required displayed entries differ (reported)";
        results.push_back({c, true});
    }
    {
        Criterion c{"criterion 06: relation reduction, Hopf axioms, confluence certificate"};
        fold_ids(c, {"relations-reduce", "relations-star-closure", "relations-counit",
                     "relations-times-letters", "hopf-coassociativity", "hopf-counit-axiom",
                     "hopf-antipode-axiom", "diamond-certificate", "diamond-certificate-degree4"});
        for (const auto& p : rep.points)
            if (p.engine.fallback_engaged)
                c.note += (c.note.empty() ? "fallback engaged at " : ", ") + pt_name(p);
        results.push_back({c, true});
    }
    {
        Criterion c{"criterion 07: Lambda reality, constructions, Hopf structure, orthogonality"};
        fold_ids(c, {"lambda-reality", "eq29-eq30-agreement", "counit-lambda", "eq34-coproduct",
                     "antipode-closed-form", "eq31-orthogonality-lower", "eq31-orthogonality-upper"});
        results.push_back({c, true});
    }
    {
        Criterion c{"criterion 08a: big R metric compatibility, cubic Hecke, spectrum, YBE"};
        fold_ids(c, {"eq43-metric-compatibility", "eq44-cubic-hecke", "bigr-spectrum", "bigr-ybe",
                     "bigr-antipode-inverse"});
        results.push_back({c, true});
    }
    {
        Criterion c{"criterion 08b: literal R+ R- = identity"};
        fold_ids(c, {"rplus-rminus-identity"});
        c.note = "unattainable as specified away from a = 1; the eq42 antipode partner is the "
                 "inverse (08a) - see README and the verification notes";
        results.push_back({c, false});
    }
    {
        Criterion c{"criterion 09: functional laws eq38-eq42 and twisted inverses eq46/eq47"};
        fold_ids(c, {"eq38-commutation", "eq39-star-law", "eq40-multiplicativity", "eq41-unit",
                     "eq42-convolution-inverse", "eq46-twisted-inverse-upper",
                     "eq47-twisted-inverse-lower"});
        results.push_back({c, true});
    }
    {
        Criterion c{"criterion 10: corepresentation, biinvariance, centrality, witnesses"};
        fold_ids(c, {"eq32-coassociativity", "eq32-counit-axiom", "norm-biinvariance",
                     "witness-biinvariance", "eq49-centrality-generators",
                     "eq50-centrality-coordinates", "eq50-centrality-spinors",
                     "witness-noncentrality", "push-round-trip"});
        results.push_back({c, true});
    }
    {
        Criterion c{"criterion 11: determinism of reports modulo timing"};
        SuiteConfig d;
        d.points = {{"2", "0", +1}};
        d.suites = {"metric", "rmatrix", "sigma", "hopf"};
        Report a = run_suites(d);
        Report b = run_suites(d);
        bool same = a.to_json(false).dump() == b.to_json(false).dump() &&
                    a.to_text(false) == b.to_text(false);
        c.ok = same;
        c.worst = Real(0);
        c.where = "(2, 0)";
        results.push_back({c, true});
    }

    int unexpected = 0;
    for (const auto& [c, expected_ok] : results) {
        bool as_expected = c.ok == expected_ok;
        if (!as_expected) ++unexpected;
        std::printf("%s %s  worst residual %s%s%s%s\n", c.ok ? "[pass]" : "[FAIL]", c.label.c_str(),
                    format_real(c.worst).c_str(),
                    c.where.empty() ? "" : (" at " + c.where).c_str(),
                    c.note.empty() ? "" : ("\n       note: " + c.note).c_str(),
                    as_expected ? "" : "\n       UNEXPECTED OUTCOME");
    }
    std::printf("acceptance outcome: %d unexpected criterion states\n", unexpected);
    return unexpected == 0 ? 0 : 1;
}
