// qlv: verification front end. Configure parameter points, run identity
// suites, and emit machine- or human-readable reports.

#include "qlorentz/suites.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

using namespace qlorentz;

SuiteConfig::Point parse_point(const std::string& text) {
    SuiteConfig::Point pt;
    auto c1 = text.find(',');
    if (c1 == std::string::npos) throw ConfigError("point must be q,r[,branch]: " + text);
    auto c2 = text.find(',', c1 + 1);
    pt.q = text.substr(0, c1);
    pt.r = text.substr(c1 + 1, c2 == std::string::npos ? std::string::npos : c2 - c1 - 1);
    if (c2 != std::string::npos) {
        std::string b = text.substr(c2 + 1);
        if (b == "+" || b == "+1" || b == "1")
            pt.branch = +1;
        else if (b == "-" || b == "-1")
            pt.branch = -1;
        else
            throw ConfigError("branch must be + or -: " + text);
    }
    return pt;
}

void load_config_file(const std::string& path, SuiteConfig& cfg) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open config file: " + path);
    bool is_json = path.size() > 5 && path.substr(path.size() - 5) == ".json";
    if (is_json) {
        nlohmann::json j;
        try {
            in >> j;
        } catch (const std::exception& e) {
            throw ConfigError(std::string("bad json config: ") + e.what());
        }
        if (j.contains("points"))
            for (const auto& p : j["points"]) {
                SuiteConfig::Point pt;
                pt.q = p.at("q").get<std::string>();
                pt.r = p.at("r").get<std::string>();
                if (p.contains("branch")) pt.branch = p["branch"].get<int>() >= 0 ? +1 : -1;
                cfg.points.push_back(std::move(pt));
            }
        if (j.contains("precision")) cfg.precision = j["precision"].get<unsigned>();
        if (j.contains("tolerance")) cfg.tolerance = j["tolerance"].get<std::string>();
        if (j.contains("max_degree")) cfg.max_degree = j["max_degree"].get<std::size_t>();
        if (j.contains("suites")) cfg.suites = j["suites"].get<std::vector<std::string>>();
        if (j.contains("format")) cfg.format = j["format"].get<std::string>();
        if (j.contains("out")) cfg.out_path = j["out"].get<std::string>();
        if (j.contains("fixture")) cfg.fixture_path = j["fixture"].get<std::string>();
        return;
    }
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        auto eq = line.find('=');
        if (eq == std::string::npos) throw ConfigError("bad config line: " + line);
        auto trim = [](std::string s) {
            while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.erase(s.begin());
            while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.pop_back();
            return s;
        };
        std::string key = trim(line.substr(0, eq)), val = trim(line.substr(eq + 1));
        if (key == "point")
            cfg.points.push_back(parse_point(val));
        else if (key == "precision")
            cfg.precision = static_cast<unsigned>(std::stoul(val));
        else if (key == "tolerance")
            cfg.tolerance = val;
        else if (key == "max_degree")
            cfg.max_degree = std::stoul(val);
        else if (key == "suites") {
            cfg.suites.clear();
            std::size_t pos = 0;
            while (pos <= val.size()) {
                auto comma = val.find(',', pos);
                cfg.suites.push_back(trim(val.substr(pos, comma - pos)));
                if (comma == std::string::npos) break;
                pos = comma + 1;
            }
        } else if (key == "format")
            cfg.format = val;
        else if (key == "out")
            cfg.out_path = val;
        else if (key == "fixture")
            cfg.fixture_path = val;
        else
            throw ConfigError("unknown config key: " + key);
    }
}

void validate(const SuiteConfig& cfg) {
    if (cfg.points.empty()) throw ConfigError("no parameter points given (use --q/--r or --point)");
    if (cfg.format != "text" && cfg.format != "json")
        throw ConfigError("format must be text or json");
    for (const auto& s : cfg.suites) {
        bool known = false;
        for (const auto& name : all_suites()) known = known || s == name;
        if (!known) throw ConfigError("unknown suite: " + s);
    }
    for (const auto& pt : cfg.points) {
        try {
            make_params_str(pt.q, pt.r, pt.branch, cfg.precision, cfg.tolerance);
        } catch (const Error& e) {
            throw ConfigError("invalid point (" + pt.q + ", " + pt.r + "): " + e.what());
        }
    }
}

void write_output(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw IoError("cannot open output file: " + path);
    out << text;
    if (!out) throw IoError("write failed: " + path);
}

int cmd_run(const SuiteConfig& cfg) {
    validate(cfg);
    Report rep = run_suites(cfg);
    if (cfg.format == "json")
        write_output(rep.to_json().dump(2) + "\n", cfg.out_path);
    else
        write_output(rep.to_text(), cfg.out_path);
    return rep.verdict() ? 0 : 1;
}

int cmd_metrics(const SuiteConfig& cfg) {
    validate(cfg);
    const auto& pt = cfg.points.front();
    // the metric layer does not need the reduction engine
    struct {
        ParameterSet p;
        SpinorMetric metric;
        RMatrixPair rmat;
        SigmaSet sigma;
        MinkowskiMetric mink;
    } w{make_params_str(pt.q, pt.r, pt.branch, cfg.precision, cfg.tolerance), {}, {}, {}, {}};
    w.metric = make_spinor_metric(w.p);
    w.rmat = make_r(w.p, w.metric);
    w.sigma = make_sigma(w.p, w.metric, w.rmat);
    w.mink = make_metric(w.p, w.metric, w.sigma);
    auto rows = cfg.fixture_path.empty() ? builtin_fixture_rows() : load_fixture_file(cfg.fixture_path);
    auto fx = fixture_diff_rows(w.p, w.mink, rows);
    if (cfg.format == "json") {
        nlohmann::ordered_json out;
        out["q"] = pt.q;
        out["r"] = pt.r;
        out["a"] = format_real(w.p.a);
        out["Q"] = format_real(w.p.Q);
        for (int s : {+1, -1}) {
            std::string key = s > 0 ? "plus" : "minus";
            nlohmann::ordered_json gu = nlohmann::ordered_json::array(),
                                   gl = nlohmann::ordered_json::array();
            for (int i = 0; i < 4; ++i) {
                nlohmann::ordered_json ru = nlohmann::ordered_json::array(),
                                       rl = nlohmann::ordered_json::array();
                for (int j = 0; j < 4; ++j) {
                    ru.push_back({format_real(w.mink.upper(s)(i, j).re),
                                  format_real(w.mink.upper(s)(i, j).im)});
                    rl.push_back({format_real(w.mink.lower(s)(i, j).re),
                                  format_real(w.mink.lower(s)(i, j).im)});
                }
                gu.push_back(std::move(ru));
                gl.push_back(std::move(rl));
            }
            out["G_upper_" + key] = std::move(gu);
            out["G_lower_" + key] = std::move(gl);
        }
        out["fixture_diff"] = nlohmann::ordered_json::array();
        for (const auto& e : fx) {
            nlohmann::ordered_json jf;
            jf["matrix"] = e.upper ? "G_upper" : "G_lower";
            jf["sign"] = e.sign;
            jf["entry"] = {e.i, e.j};
            jf["expr"] = e.expr;
            jf["diff"] = format_real(e.diff);
            jf["match"] = e.diff <= w.p.tolerance;
            out["fixture_diff"].push_back(std::move(jf));
        }
        write_output(out.dump(2) + "\n", cfg.out_path);
    } else {
        std::string out = "metrics at q=" + pt.q + " r=" + pt.r + "  (a=" + format_real(w.p.a) +
                          ", Q=" + format_real(w.p.Q) + ")\n";
        auto dump = [&](const char* name, const Mat& g) {
            out += std::string(name) + ":\n";
            for (int i = 0; i < 4; ++i) {
                out += "  ";
                for (int j = 0; j < 4; ++j)
                    out += "(" + format_real(g(i, j).re) + ", " + format_real(g(i, j).im) + ") ";
                out += "\n";
            }
        };
        dump("G^IJ (+)", w.mink.upper(+1));
        dump("G^IJ (-)", w.mink.upper(-1));
        dump("G_IJ (+)", w.mink.lower(+1));
        dump("G_IJ (-)", w.mink.lower(-1));
        for (const auto& e : fx) {
            bool match = e.diff <= w.p.tolerance;
            out += std::string(match ? "  match    " : "  MISMATCH ") +
                   (e.upper ? "G_upper" : "G_lower") + (e.sign > 0 ? "(+)" : "(-)") + " [" +
                   std::to_string(e.i) + "," + std::to_string(e.j) + "] = " + e.expr;
            if (!match)
                out += "   displayed " + format_real(e.displayed.re) + " vs computed " +
                       format_real(e.computed.re) + " (diff " + format_real(e.diff) + ")";
            out += "\n";
        }
        write_output(out, cfg.out_path);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Verification engine for a two-parameter quantum Lorentz group construction"};
    app.require_subcommand(1);

    SuiteConfig cfg;
    std::string q, r, branch = "+", config_path;
    std::vector<std::string> points, suites;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--q", q, "deformation parameter q (decimal or p/q fraction)");
        sub->add_option("--r", r, "deformation parameter r");
        sub->add_option("--branch", branch, "root branch + or -");
        sub->add_option("--point", points, "parameter point q,r[,branch] (repeatable)");
        sub->add_option("--precision", cfg.precision, "working precision in decimal digits");
        sub->add_option("--tolerance", cfg.tolerance, "residual acceptance threshold");
        sub->add_option("--max-degree", cfg.max_degree, "degree cap for the reduction engine");
        sub->add_option("--format", cfg.format, "output format: text or json");
        sub->add_option("--out", cfg.out_path, "output file (default stdout)");
        sub->add_option("--fixture", cfg.fixture_path, "fixture file overriding the builtin table");
        sub->add_option("--config", config_path, "config file (key=value, or .json)");
    };

    CLI::App* run = app.add_subcommand("run", "run verification suites");
    add_common(run);
    run->add_option("--suite", suites, "suite subset (repeatable); default all");

    CLI::App* metrics = app.add_subcommand("metrics", "emit the Minkowski metrics and fixture diff");
    add_common(metrics);

    CLI11_PARSE(app, argc, argv);

    try {
        if (!config_path.empty()) load_config_file(config_path, cfg);
        if (!q.empty() || !r.empty()) {
            if (q.empty() || r.empty()) throw qlorentz::ConfigError("--q and --r go together");
            cfg.points.push_back(parse_point(q + "," + r + "," + branch));
        }
        for (const auto& p : points) cfg.points.push_back(parse_point(p));
        if (!suites.empty()) cfg.suites = suites;
        if (app.got_subcommand(run)) return cmd_run(cfg);
        return cmd_metrics(cfg);
    } catch (const qlorentz::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const qlorentz::IoError& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return 2;
    } catch (const qlorentz::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
