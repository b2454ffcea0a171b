#include <catch2/catch_amalgamated.hpp>

#include "qlorentz/suites.hpp"

#include <cstdlib>
#include <fstream>

using namespace qlorentz;

TEST_CASE("suite selection and config validation") {
    SuiteConfig cfg;
    cfg.points.push_back({"1", "0", +1});
    cfg.suites = {"metric", "zap"};
    CHECK_THROWS_AS(run_suites(cfg), ConfigError);
    cfg.suites.clear();
    CHECK_THROWS_AS(run_suites(SuiteConfig{}), ConfigError);
}

TEST_CASE("metric suite report on one point") {
    SuiteConfig cfg;
    cfg.points.push_back({"2", "0", +1});
    cfg.suites = {"metric", "rmatrix"};
    Report rep = run_suites(cfg);
    REQUIRE(rep.points.size() == 1);
    CHECK(rep.points[0].verdict());
    CHECK(rep.verdict());
    bool saw = false;
    for (const auto& c : rep.points[0].checks)
        if (c.id == "eps-contraction-minus-Q") saw = c.pass;
    CHECK(saw);
    // serializations carry every enabled check exactly once
    auto j = rep.to_json();
    CHECK(j["points"][0]["checks"].size() == rep.points[0].checks.size());
    CHECK(rep.to_text().find("overall verdict: pass") != std::string::npos);
}

TEST_CASE("reports are deterministic modulo timing") {
    SuiteConfig cfg;
    cfg.points.push_back({"2", "0", +1});
    cfg.suites = {"metric", "rmatrix", "sigma"};
    Report a = run_suites(cfg);
    Report b = run_suites(cfg);
    CHECK(a.to_json(false).dump() == b.to_json(false).dump());
    CHECK(a.to_text(false) == b.to_text(false));
}

#ifdef QLZ_BIN_DIR
TEST_CASE("cli exit codes and config file handling") {
    std::string bin = std::string(QLZ_BIN_DIR) + "/tools/qlv";
    // degenerate parameter point is a config error (exit 2)
    int rc = std::system((bin + " run --q 1 --r 1 --suite metric > /dev/null 2>&1").c_str());
    CHECK(WEXITSTATUS(rc) == 2);
    rc = std::system((bin + " run --q 2 --r 0 --suite zap > /dev/null 2>&1").c_str());
    CHECK(WEXITSTATUS(rc) == 2);
    // passing run exits 0
    rc = std::system((bin + " run --q 2 --r 0 --suite metric --format json --out /tmp/qlv_t1.json"
                            " > /dev/null 2>&1")
                         .c_str());
    CHECK(WEXITSTATUS(rc) == 0);
    // config file route produces the identical report (timing aside)
    {
        std::ofstream f("/tmp/qlv_cfg.cfg");
        f << "point = 2,0,+\nsuites = metric\nformat = json\nout = /tmp/qlv_t2.json\n";
    }
    rc = std::system((bin + " run --config /tmp/qlv_cfg.cfg > /dev/null 2>&1").c_str());
    CHECK(WEXITSTATUS(rc) == 0);
    auto strip_timing = [](const std::string& path) {
        std::ifstream f(path);
        nlohmann::ordered_json j;
        f >> j;
        for (auto& p : j["points"])
            for (auto& c : p["checks"]) c.erase("wall_ms");
        return j.dump();
    };
    CHECK(strip_timing("/tmp/qlv_t1.json") == strip_timing("/tmp/qlv_t2.json"));
    // metrics subcommand
    rc = std::system((bin + " metrics --q 2 --r 0 > /dev/null 2>&1").c_str());
    CHECK(WEXITSTATUS(rc) == 0);
}
#endif
