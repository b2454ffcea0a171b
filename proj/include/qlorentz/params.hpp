#pragma once

#include "qlorentz/scalar.hpp"

namespace qlorentz {

/// Deformation parameters and the derived scalars shared by every module.
///
/// Q is defined through the spinor metric contraction Q = -eps_{ab} eps^{ab}
/// = (q + q^-1 + 2 r^2) / d, the combination the R-matrix inverse and Hecke
/// identities require, and a solves a + 1/a = Q.
struct ParameterSet {
    Real q, r;
    Real d;        // 1 - r^2
    Real Q;        // a + 1/a
    int branch;    // +1 / -1 selects the root of a^2 - Q a + 1 = 0
    Real a;
    Real sqrt_a;
    unsigned precision_digits;
    Real tolerance;
};

inline ParameterSet make_params(const Real& q, const Real& r, int branch,
                                unsigned precision_digits, const Real* tolerance_override = nullptr) {
    if (precision_digits < 30) throw ConfigError("precision_digits must be >= 30");
    set_precision_digits(precision_digits);
    if (!(q > 0)) throw ConfigError("q must be positive");
    if (branch != +1 && branch != -1) throw ConfigError("branch must be +1 or -1");

    ParameterSet p;
    p.q = q;
    p.r = r;
    p.branch = branch;
    p.precision_digits = precision_digits;
    p.tolerance = tolerance_override ? *tolerance_override
                                     : pow(Real(10), -(static_cast<int>(precision_digits) / 2));
    p.d = 1 - r * r;
    if (r == 1 || r == -1) throw DegenerateParameter("r = +-1 makes d = 0");
    p.Q = (q + 1 / q + 2 * r * r) / p.d;
    Real disc = p.Q * p.Q - 4;
    if (p.Q < 2) throw SubcriticalQ("Q < 2: complex root a is not supported");
    p.a = (p.Q + branch * sqrt_positive(disc)) / 2;
    p.sqrt_a = sqrt_positive(p.a);
    return p;
}

/// String front end: sets the working precision before parsing so q and r
/// carry full precision (fractions like "1/3" are exact at working precision).
inline ParameterSet make_params_str(const std::string& q, const std::string& r, int branch,
                                    unsigned precision_digits,
                                    const std::string& tolerance = std::string()) {
    if (precision_digits < 30) throw ConfigError("precision_digits must be >= 30");
    set_precision_digits(precision_digits);
    if (tolerance.empty()) return make_params(parse_real(q), parse_real(r), branch, precision_digits);
    Real tol = parse_real(tolerance);
    return make_params(parse_real(q), parse_real(r), branch, precision_digits, &tol);
}

/// a^(k/2) for integer k (the half-integer powers the formulas use).
inline Real half_power(const ParameterSet& p, int k) {
    Real v(1);
    Real base = k >= 0 ? p.sqrt_a : 1 / p.sqrt_a;
    for (int i = 0; i < (k >= 0 ? k : -k); ++i) v *= base;
    return v;
}

}  // namespace qlorentz
