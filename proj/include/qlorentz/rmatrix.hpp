#pragma once

#include "qlorentz/linalg.hpp"
#include "qlorentz/spinor_metric.hpp"

namespace qlorentz {

inline int sidx(int sign) { return sign > 0 ? 0 : 1; }

/// R^{+-} = delta delta + a^{+-1} eps eps, the dotted copies, and the mixed
/// dotted/undotted value tensors derived from them.
///
/// mixed1[s] carries R^{(s) ddot g}_{a sdot} = a^{s/2} R^{(-s) g s}_{d a}
/// (the values f_{s,a}^{g}(M_{sdot}^{ddot})); mixed2[s] carries
/// R^{(s) g ddot}_{sdot a} = a^{-s/2} eps_{d l} R^{(s) g l}_{n a} eps^{n s}
/// (the values f_{-s,a}^{g}(S(M_{sdot}^{ddot}))).
struct RMatrixPair {
    Tensor r[2];       // undotted, +/-
    Tensor r_dot[2];   // dotted, +/-
    Tensor mixed1[2];  // pattern (up dot, up, lo, lo dot)
    Tensor mixed2[2];  // pattern (up, up dot, lo dot, lo)
};

namespace detail {

inline Tensor build_r(Family fam, const Tensor& eu, const Tensor& el, const Real& apow) {
    Tensor t({up(fam), up(fam), lo(fam), lo(fam)});
    for (std::size_t a = 0; a < 2; ++a)
        for (std::size_t b = 0; b < 2; ++b)
            for (std::size_t c = 0; c < 2; ++c)
                for (std::size_t d = 0; d < 2; ++d) {
                    Cplx v = apow * (eu.at({a, b}) * el.at({c, d}));
                    if (a == c && b == d) v += Cplx(1);
                    t.at({a, b, c, d}) = v;
                }
    return t;
}

/// 4x4 operator view of an R tensor: row index (a,b), column (c,d).
inline Mat as_op4(const Tensor& r) {
    Mat m(4, 4);
    for (std::size_t a = 0; a < 2; ++a)
        for (std::size_t b = 0; b < 2; ++b)
            for (std::size_t c = 0; c < 2; ++c)
                for (std::size_t d = 0; d < 2; ++d) m(2 * a + b, 2 * c + d) = r.at({a, b, c, d});
    return m;
}

}  // namespace detail

inline RMatrixPair make_r(const ParameterSet& p, const SpinorMetric& m) {
    RMatrixPair rm;
    rm.r[0] = detail::build_r(Family::Spinor, m.eps_upper, m.eps_lower, p.a);
    rm.r[1] = detail::build_r(Family::Spinor, m.eps_upper, m.eps_lower, 1 / p.a);
    rm.r_dot[0] = detail::build_r(Family::SpinorDot, m.eps_upper_dotted, m.eps_lower_dotted, p.a);
    rm.r_dot[1] = detail::build_r(Family::SpinorDot, m.eps_upper_dotted, m.eps_lower_dotted, 1 / p.a);

    for (int s : {+1, -1}) {
        Tensor m1({up(Family::SpinorDot), up(Family::Spinor), lo(Family::Spinor), lo(Family::SpinorDot)});
        const Tensor& rneg = rm.r[sidx(-s)];
        Real pref = half_power(p, s);
        for (std::size_t dd = 0; dd < 2; ++dd)
            for (std::size_t g = 0; g < 2; ++g)
                for (std::size_t a = 0; a < 2; ++a)
                    for (std::size_t sd = 0; sd < 2; ++sd)
                        m1.at({dd, g, a, sd}) = pref * rneg.at({g, sd, dd, a});
        rm.mixed1[sidx(s)] = std::move(m1);

        Tensor m2({up(Family::Spinor), up(Family::SpinorDot), lo(Family::SpinorDot), lo(Family::Spinor)});
        const Tensor& rs = rm.r[sidx(s)];
        Real pref2 = half_power(p, -s);
        for (std::size_t g = 0; g < 2; ++g)
            for (std::size_t dd = 0; dd < 2; ++dd)
                for (std::size_t sd = 0; sd < 2; ++sd)
                    for (std::size_t a = 0; a < 2; ++a) {
                        Cplx acc;
                        for (std::size_t l = 0; l < 2; ++l)
                            for (std::size_t n = 0; n < 2; ++n)
                                acc += m.eps_lower.at({dd, l}) * rs.at({g, l, n, a}) * m.eps_upper.at({n, sd});
                        m2.at({g, dd, sd, a}) = pref2 * acc;
                    }
        rm.mixed2[sidx(s)] = std::move(m2);
    }

    // construction-time invariants: mutual inverse and Hecke
    Mat rp = detail::as_op4(rm.r[0]), rn = detail::as_op4(rm.r[1]), id = Mat::eye(4);
    if ((rp * rn - id).max_abs() > p.tolerance)
        throw ConstructionIdentityFailure("R+ R- deviates from identity");
    Real a2 = p.a * p.a;
    if (((rp + Cplx(a2) * id) * (rp - id)).max_abs() > p.tolerance)
        throw ConstructionIdentityFailure("Hecke relation fails for R+");
    if (((rn + Cplx(1 / a2) * id) * (rn - id)).max_abs() > p.tolerance)
        throw ConstructionIdentityFailure("Hecke relation fails for R-");
    return rm;
}

/// Braid-form Yang-Baxter residual R12 R23 R12 - R23 R12 R23 on the 8-dim
/// triple space (this R is of braid type: the flip at the classical point).
inline Real ybe_residual(const Tensor& r) {
    Mat rop = detail::as_op4(r);
    Mat r12(8, 8), r23(8, 8);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            for (std::size_t k = 0; k < 2; ++k) {
                r12(2 * i + k, 2 * j + k) = rop(i, j);   // R (x) I
                r23(4 * k + i, 4 * k + j) = rop(i, j);   // I (x) R
            }
    Mat lhs = r12 * r23 * r12;
    Mat rhs = r23 * r12 * r23;
    return (lhs - rhs).max_abs();
}

struct RmatReport {
    Real inverse_pair;
    Real hecke_plus, hecke_minus;
    Real ybe_plus, ybe_minus;
    Real eps_r_plus, eps_r_minus;
    Real mixed_eq19, mixed_eq20;
    Real eigen_membership;  // |det(R - lambda)| over claimed eigenvalues
};

inline Real eps_r_residual(const Tensor& r, const SpinorMetric& m, const Real& afac) {
    // eps_{ab} R^{a l}_{s g} R^{b rho}_{l d} = a^{+-1} eps_{gd} delta^rho_s
    Real worst(0);
    for (std::size_t g = 0; g < 2; ++g)
        for (std::size_t d = 0; d < 2; ++d)
            for (std::size_t rho = 0; rho < 2; ++rho)
                for (std::size_t s = 0; s < 2; ++s) {
                    Cplx acc;
                    for (std::size_t a = 0; a < 2; ++a)
                        for (std::size_t b = 0; b < 2; ++b)
                            for (std::size_t l = 0; l < 2; ++l)
                                acc += m.eps_lower.at({a, b}) * r.at({a, l, s, g}) * r.at({b, rho, l, d});
                    Cplx tgt = rho == s ? Cplx(afac) * m.eps_lower.at({g, d}) : Cplx(0);
                    Real v = (acc - tgt).abs();
                    if (v > worst) worst = v;
                }
    return worst;
}

inline RmatReport verify_rmatrices(const ParameterSet& p, const SpinorMetric& m, const RMatrixPair& rm) {
    RmatReport rep;
    Mat rp = detail::as_op4(rm.r[0]), rn = detail::as_op4(rm.r[1]), id = Mat::eye(4);
    rep.inverse_pair = (rp * rn - id).max_abs();
    Real a2 = p.a * p.a;
    rep.hecke_plus = ((rp + Cplx(a2) * id) * (rp - id)).max_abs();
    rep.hecke_minus = ((rn + Cplx(1 / a2) * id) * (rn - id)).max_abs();
    rep.ybe_plus = ybe_residual(rm.r[0]);
    rep.ybe_minus = ybe_residual(rm.r[1]);
    rep.eps_r_plus = eps_r_residual(rm.r[0], m, p.a);
    rep.eps_r_minus = eps_r_residual(rm.r[1], m, 1 / p.a);

    // Eq. (19): R^{(s) d g}_{a sd} R^{(-s) b r}_{d g} = delta^b_a delta^r_sd
    Real worst(0);
    for (int s : {+1, -1}) {
        const Tensor& m1 = rm.mixed1[sidx(s)];
        const Tensor& m2 = rm.mixed2[sidx(-s)];
        for (std::size_t a = 0; a < 2; ++a)
            for (std::size_t sd = 0; sd < 2; ++sd)
                for (std::size_t b = 0; b < 2; ++b)
                    for (std::size_t r = 0; r < 2; ++r) {
                        Cplx acc;
                        for (std::size_t d = 0; d < 2; ++d)
                            for (std::size_t g = 0; g < 2; ++g)
                                acc += m1.at({d, g, a, sd}) * m2.at({b, r, d, g});
                        Cplx tgt = (a == b && sd == r) ? Cplx(1) : Cplx(0);
                        Real v = (acc - tgt).abs();
                        if (v > worst) worst = v;
                    }
    }
    rep.mixed_eq19 = worst;

    // Eq. (20): R^{(-s) g d}_{sd a} R^{(s) r b}_{g d} = delta^b_a delta^r_sd
    worst = Real(0);
    for (int s : {+1, -1}) {
        const Tensor& m2 = rm.mixed2[sidx(-s)];
        const Tensor& m1 = rm.mixed1[sidx(s)];
        for (std::size_t a = 0; a < 2; ++a)
            for (std::size_t sd = 0; sd < 2; ++sd)
                for (std::size_t b = 0; b < 2; ++b)
                    for (std::size_t r = 0; r < 2; ++r) {
                        Cplx acc;
                        for (std::size_t g = 0; g < 2; ++g)
                            for (std::size_t d = 0; d < 2; ++d)
                                acc += m2.at({g, d, sd, a}) * m1.at({r, b, g, d});
                        Cplx tgt = (a == b && sd == r) ? Cplx(1) : Cplx(0);
                        Real v = (acc - tgt).abs();
                        if (v > worst) worst = v;
                    }
    }
    rep.mixed_eq20 = worst;

    // eigenvalue membership from the Hecke factorization: {1, -a^{+-2}}
    worst = Real(0);
    for (int s : {+1, -1}) {
        Mat rop = detail::as_op4(rm.r[sidx(s)]);
        Real lam2 = s > 0 ? a2 : 1 / a2;
        for (const Cplx& lambda : {Cplx(Real(1)), Cplx(-lam2)}) {
            Real v = determinant(rop - lambda * id).abs();
            if (v > worst) worst = v;
        }
    }
    rep.eigen_membership = worst;
    return rep;
}

}  // namespace qlorentz
