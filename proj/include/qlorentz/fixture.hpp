#pragma once

#include "qlorentz/sigma.hpp"

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace qlorentz {

/// One displayed-matrix entry: which metric (upper/lower, sign), the entry
/// position, and its expression in the shorthands A1..A4, Qh, Qm, Q, r, d, i.
struct FixtureRow {
    bool upper;
    int sign;
    int i, j;
    std::string expr;
    bool required;
};

namespace fixture_detail {

/// Expression grammar: terms joined by + or -, factors joined by *,
/// each factor a symbol or rational with an optional integer power:
///   A1, A2, A3, A4, Qh, Qm, Q, r, d, i, integers, p/q rationals, x^n.
inline Cplx eval_factor(const std::string& tok, const ParameterSet& p) {
    std::string base = tok;
    int power = 1;
    if (auto caret = tok.find('^'); caret != std::string::npos) {
        base = tok.substr(0, caret);
        power = std::stoi(tok.substr(caret + 1));
    }
    Cplx v;
    if (base == "A1")
        v = Cplx(half_power(p, -3));
    else if (base == "A2")
        v = Cplx(half_power(p, 1));
    else if (base == "A3")
        v = Cplx(half_power(p, -1));
    else if (base == "A4")
        v = Cplx(half_power(p, 3));
    else if (base == "Qh")
        v = Cplx(sqrt_positive(p.q) + 1 / sqrt_positive(p.q));
    else if (base == "Qm")
        v = Cplx((p.q - 1 / p.q) / p.Q);
    else if (base == "Q")
        v = Cplx(p.Q);
    else if (base == "r")
        v = Cplx(p.r);
    else if (base == "d")
        v = Cplx(p.d);
    else if (base == "i")
        v = Cplx::i();
    else
        v = Cplx(parse_real(base));
    if (power == 1) return v;
    Cplx out(Real(1));
    for (int k = 0; k < (power > 0 ? power : -power); ++k) out = out * v;
    if (power < 0) out = Cplx(Real(1)) / out;
    return out;
}

/// The A-shorthands flip with the metric sign: A1 = a^{-3s/2} etc.
inline Cplx eval_expr(const std::string& expr, const ParameterSet& p, int sign) {
    ParameterSet flipped = p;
    if (sign < 0) {
        flipped.a = 1 / p.a;
        flipped.sqrt_a = 1 / p.sqrt_a;
    }
    std::istringstream in(expr);
    Cplx total;
    Cplx term(Real(1));
    int term_sign = +1;
    bool have_term = false;
    std::string tok;
    while (in >> tok) {
        if (tok == "+" || tok == "-") {
            if (have_term) total += Cplx(term_sign) * term;
            term = Cplx(Real(1));
            term_sign = tok == "-" ? -1 : +1;
            have_term = false;
            continue;
        }
        std::size_t pos = 0;
        while (pos < tok.size()) {
            auto star = tok.find('*', pos);
            std::string f = tok.substr(pos, star == std::string::npos ? std::string::npos : star - pos);
            term *= eval_factor(f, flipped);
            have_term = true;
            if (star == std::string::npos) break;
            pos = star + 1;
        }
    }
    if (have_term) total += Cplx(term_sign) * term;
    return total;
}

}  // namespace fixture_detail

/// The displayed metric matrices, as shipped in data/metric_fixture.txt.
/// One line per entry: <U|L> <i> <j> [!] <expr>, '!' marking the entries the
/// acceptance gate requires to match. The same rows apply to both signs
/// through the sign-flipped shorthands.
inline std::vector<FixtureRow> builtin_fixture_rows() {
    static const char* lines[] = {
        "U 0 0 ! - A1",
        "U 0 1 0",
        "U 0 2 2*A1*r*d^-1*Qh*Q^-1",
        "U 0 3 ! A1*d^-1*Qm",
        "U 1 0 0",
        "U 1 1 ! A2",
        "U 1 2 - i*A2*d^-1*Qm",
        "U 1 3 2*i*A2*r*d^-1*Qh*Q^-1",
        "U 2 0 2*A1*r*d^-1*Qh*Q^-1",
        "U 2 1 i*A2*d^-1*Qm",
        "U 2 2 A2 - 4*A3*r^2*d^-2*Qh^2*Q^-1",
        "U 2 3 - 2*A2*r*d^-2*Qm*Qh",
        "U 3 0 ! A1*d^-1*Qm",
        "U 3 1 - 2*i*A2*r*d^-1*Qh*Q^-1",
        "U 3 2 - 2*A2*r*d^-2*Qm*Qh",
        "U 3 3 A2 - A3*d^-2*Qm^2*Q",
        "L 0 0 - A4*Q^2*1/4 + 1/4*d^-1*A2*Qh^2*Q^2 - 1/2*d^-1*A2*Qh^2*Q",
        "L 0 1 0",
        "L 0 2 1/2*r*d^-1*A3*Qh*Q",
        "L 0 3 1/4*d^-1*A3*Qm*Q^2",
        "L 1 0 0",
        "L 1 1 1/4*Q^2*A3",
        "L 1 2 1/4*i*d^-1*A3*Qm*Q^2",
        "L 1 3 - 1/2*i*r*d^-1*A3*Qh*Q",
        "L 2 0 1/2*r*d^-1*A3*Qh*Q",
        "L 2 1 - 1/4*i*d^-1*A3*Qm*Q^2",
        "L 2 2 1/4*Q^2*A3",
        "L 2 3 0",
        "L 3 0 1/4*d^-1*A3*Qm*Q^2",
        "L 3 1 1/2*i*r*d^-1*A3*Qh*Q",
        "L 3 2 0",
        "L 3 3 1/4*Q^2*A3",
    };
    std::vector<FixtureRow> rows;
    for (const char* line : lines) {
        std::istringstream in(line);
        std::string kind;
        int i, j;
        in >> kind >> i >> j;
        std::string rest, tok;
        bool required = false;
        while (in >> tok) {
            if (tok == "!") {
                required = true;
                continue;
            }
            if (!rest.empty()) rest += ' ';
            rest += tok;
        }
        for (int sign : {+1, -1}) rows.push_back({kind == "U", sign, i, j, rest, required});
    }
    return rows;
}

inline std::vector<FixtureRow> load_fixture_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open fixture file: " + path);
    std::vector<FixtureRow> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::string kind;
        int i, j;
        if (!(ls >> kind >> i >> j)) throw IoError("bad fixture line: " + line);
        std::string rest, tok;
        bool required = false;
        while (ls >> tok) {
            if (tok == "!") {
                required = true;
                continue;
            }
            if (!rest.empty()) rest += ' ';
            rest += tok;
        }
        for (int sign : {+1, -1}) rows.push_back({kind == "U", sign, i, j, rest, required});
    }
    return rows;
}

/// Ground truth stays the Eq.-(24) metric; every row is evaluated and diffed.
inline std::vector<FixtureEntry> fixture_diff_rows(const ParameterSet& p, const MinkowskiMetric& mm,
                                                   const std::vector<FixtureRow>& rows) {
    std::vector<FixtureEntry> out;
    for (const auto& row : rows) {
        Cplx displayed = fixture_detail::eval_expr(row.expr, p, row.sign);
        const Mat& g = row.upper ? mm.upper(row.sign) : mm.lower(row.sign);
        const Cplx& computed = g(row.i, row.j);
        out.push_back(FixtureEntry{row.i, row.j, row.upper, row.sign, row.expr, displayed, computed,
                                   (computed - displayed).abs(), row.required});
    }
    return out;
}

}  // namespace qlorentz
