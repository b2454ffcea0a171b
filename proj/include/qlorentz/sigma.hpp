#pragma once

#include "qlorentz/rmatrix.hpp"

#include <array>
#include <string>
#include <vector>

namespace qlorentz {

/// Quantum Pauli matrices sigma^I_{a bdot}, their duals sbar_{+-}^{I adot b},
/// and the metric-lowered, sign-independent dual sbar_I.
struct SigmaSet {
    std::array<Tensor, 4> sigma;          // (lo S, lo SD)
    std::array<Tensor, 4> sbar_plus;      // (up SD, up S)
    std::array<Tensor, 4> sbar_minus;
    std::array<Tensor, 4> sbar_metric;    // sbar_I = G_{+-IJ} sbar_{+-}^J (sign independent)

    const std::array<Tensor, 4>& sbar(int s) const { return s > 0 ? sbar_plus : sbar_minus; }
};

/// G_{+-}^{IJ} from the Eq.-(24) quantum trace and the lowered metrics by
/// numeric inversion.
struct MinkowskiMetric {
    Mat g_upper[2];
    Mat g_lower[2];

    const Mat& upper(int s) const { return g_upper[sidx(s)]; }
    const Mat& lower(int s) const { return g_lower[sidx(s)]; }
};

namespace detail {

inline std::array<Tensor, 4> classical_sigma() {
    std::array<Tensor, 4> sig;
    for (auto& t : sig) t = Tensor({lo(Family::Spinor), lo(Family::SpinorDot)});
    sig[0].at({0, 0}) = Cplx(1);
    sig[0].at({1, 1}) = Cplx(1);
    sig[1].at({0, 1}) = Cplx(1);
    sig[1].at({1, 0}) = Cplx(1);
    sig[2].at({0, 1}) = Cplx(Real(0), Real(-1));
    sig[2].at({1, 0}) = Cplx(Real(0), Real(1));
    sig[3].at({0, 0}) = Cplx(1);
    sig[3].at({1, 1}) = Cplx(-1);
    return sig;
}

}  // namespace detail

/// sbar_{+-}^{I adot b} = eps^{adot l} R^{(-+) s rdot}_{l n} eps^{n b} sigma^I_{s rdot}
inline SigmaSet make_sigma(const ParameterSet& p, const SpinorMetric& m, const RMatrixPair& rm) {
    SigmaSet ss;
    ss.sigma = detail::classical_sigma();
    for (int s : {+1, -1}) {
        auto& dst = s > 0 ? ss.sbar_plus : ss.sbar_minus;
        const Tensor& r2 = rm.mixed2[sidx(-s)];
        for (int I = 0; I < 4; ++I) {
            Tensor t({up(Family::SpinorDot), up(Family::Spinor)});
            for (std::size_t a = 0; a < 2; ++a)
                for (std::size_t b = 0; b < 2; ++b) {
                    Cplx acc;
                    for (std::size_t l = 0; l < 2; ++l)
                        for (std::size_t sg = 0; sg < 2; ++sg)
                            for (std::size_t rd = 0; rd < 2; ++rd)
                                for (std::size_t n = 0; n < 2; ++n)
                                    acc += m.eps_upper_dotted.at({a, l}) * r2.at({sg, rd, l, n}) *
                                           m.eps_upper.at({n, b}) * ss.sigma[I].at({sg, rd});
                    t.at({a, b}) = acc;
                }
            dst[I] = std::move(t);
        }
    }

    // Eq. (23) round trip gates the construction
    Real worst(0);
    for (int s : {+1, -1}) {
        const Tensor& r1 = rm.mixed1[sidx(s)];
        const auto& sb = ss.sbar(s);
        for (int I = 0; I < 4; ++I)
            for (std::size_t a = 0; a < 2; ++a)
                for (std::size_t b = 0; b < 2; ++b) {
                    Cplx acc;
                    for (std::size_t l = 0; l < 2; ++l)
                        for (std::size_t g = 0; g < 2; ++g)
                            for (std::size_t n = 0; n < 2; ++n)
                                for (std::size_t mm = 0; mm < 2; ++mm)
                                    acc += m.eps_lower_dotted.at({l, g}) * r1.at({l, n, a, b}) *
                                           m.eps_lower.at({mm, n}) * sb[I].at({g, mm});
                    Real v = (acc - ss.sigma[I].at({a, b})).abs();
                    if (v > worst) worst = v;
                }
    }
    if (worst > p.tolerance)
        throw ConstructionIdentityFailure("sigma round trip through sbar fails");
    return ss;
}

/// Eq. (24) traces with the eps weighting, lowered metrics by inversion;
/// sbar_metric filled on the SigmaSet afterwards.
inline MinkowskiMetric make_metric(const ParameterSet& p, const SpinorMetric& m, SigmaSet& ss) {
    MinkowskiMetric mm;
    for (int s : {+1, -1}) {
        Mat g(4, 4);
        const auto& sb = ss.sbar(s);
        for (int I = 0; I < 4; ++I)
            for (int J = 0; J < 4; ++J) {
                Cplx acc;
                for (std::size_t a = 0; a < 2; ++a)
                    for (std::size_t n = 0; n < 2; ++n)
                        for (std::size_t b = 0; b < 2; ++b)
                            for (std::size_t g = 0; g < 2; ++g)
                                acc += m.eps_upper.at({a, n}) * ss.sigma[I].at({a, b}) *
                                       sb[J].at({b, g}) * m.eps_lower.at({g, n});
                g(I, J) = acc / Cplx(p.Q);
            }
        mm.g_upper[sidx(s)] = g;
        mm.g_lower[sidx(s)] = invert(g, p.tolerance);
    }
    for (int I = 0; I < 4; ++I) {
        Tensor t({up(Family::SpinorDot), up(Family::Spinor)});
        for (std::size_t a = 0; a < 2; ++a)
            for (std::size_t b = 0; b < 2; ++b) {
                Cplx acc;
                for (int J = 0; J < 4; ++J) acc += mm.g_lower[0](I, J) * ss.sbar_plus[J].at({a, b});
                t.at({a, b}) = acc;
            }
        ss.sbar_metric[I] = std::move(t);
    }
    return mm;
}

// ---- raised/lowered families used across the verification layer ----

struct SigmaFrames {
    std::array<Tensor, 4> sig_ru;    // sigma^{I x}_{~ mdot}   [x, mdot]
    std::array<Tensor, 4> sig_rd;    // sigma^{I ~ xdot}_{m}    [m, xdot]
    std::array<Tensor, 4> sig_both;  // sigma^{I y xdot}        [y, xdot]
    std::array<Tensor, 4> sbar_lu;   // sbar_{I ~ d}^{~ bdot}   [bdot, d]
    std::array<Tensor, 4> sbar_ld;   // sbar_{I ddot}^{~~ b}    [ddot, b]
    std::array<Tensor, 4> sbar_both; // sbar_{I ddot d}         [ddot, d]
};

inline SigmaFrames make_frames(const SpinorMetric& m, const SigmaSet& ss) {
    SigmaFrames f;
    for (int I = 0; I < 4; ++I) {
        f.sig_ru[I] = apply_metric(ss.sigma[I], 0, m.eps_upper, true, Variance::Upper);
        // result indices: [x(was a), mdot]; apply_metric keeps axis position
        f.sig_rd[I] = apply_metric(ss.sigma[I], 1, m.eps_upper_dotted, false, Variance::Upper);
        f.sig_both[I] = apply_metric(f.sig_rd[I], 0, m.eps_upper, true, Variance::Upper);
        f.sbar_lu[I] = apply_metric(ss.sbar_metric[I], 1, m.eps_lower, true, Variance::Lower);
        f.sbar_ld[I] = apply_metric(ss.sbar_metric[I], 0, m.eps_lower_dotted, false, Variance::Lower);
        f.sbar_both[I] = apply_metric(f.sbar_ld[I], 1, m.eps_lower, true, Variance::Lower);
    }
    return f;
}

struct SigmaReport {
    Real round_trip_eq23;        // sigma reconstructed from sbar
    Real trace_order_equality;   // the two Eq.-(24) trace orders agree
    Real hermiticity;            // sigma, sbar_{+-}, and G
    Real metric_inverse;         // G^{IJ} G_{JK} = delta
    Real closed_form_eq25;
    Real closed_form_eq28;
    Real sign_independence;      // both lowered-dual identifications
    Real completeness_eq26;
    Real completeness_eq27;
    Real classical_limit;        // only at q=1, r=0: G = diag(-1,1,1,1)
    bool classical_applies;
};

inline SigmaReport verify_sigma(const ParameterSet& p, const SpinorMetric& m, const RMatrixPair& rm,
                                const SigmaSet& ss, const MinkowskiMetric& mm) {
    SigmaReport rep{Real(0), Real(0), Real(0), Real(0), Real(0), Real(0), Real(0), Real(0), Real(0), Real(0), false};
    auto upd = [](Real& m0, const Real& v) { if (v > m0) m0 = v; };

    for (int s : {+1, -1}) {
        const Tensor& r1 = rm.mixed1[sidx(s)];
        const auto& sb = ss.sbar(s);
        for (int I = 0; I < 4; ++I)
            for (std::size_t a = 0; a < 2; ++a)
                for (std::size_t b = 0; b < 2; ++b) {
                    Cplx acc;
                    for (std::size_t l = 0; l < 2; ++l)
                        for (std::size_t g = 0; g < 2; ++g)
                            for (std::size_t n = 0; n < 2; ++n)
                                for (std::size_t mm2 = 0; mm2 < 2; ++mm2)
                                    acc += m.eps_lower_dotted.at({l, g}) * r1.at({l, n, a, b}) *
                                           m.eps_lower.at({mm2, n}) * sb[I].at({g, mm2});
                    upd(rep.round_trip_eq23, (acc - ss.sigma[I].at({a, b})).abs());
                }
    }

    for (int s : {+1, -1}) {
        const auto& sb = ss.sbar(s);
        for (int I = 0; I < 4; ++I)
            for (int J = 0; J < 4; ++J) {
                Cplx second;
                for (std::size_t n = 0; n < 2; ++n)
                    for (std::size_t g = 0; g < 2; ++g)
                        for (std::size_t a = 0; a < 2; ++a)
                            for (std::size_t b = 0; b < 2; ++b)
                                second += m.eps_lower_dotted.at({n, g}) * sb[I].at({g, a}) *
                                          ss.sigma[J].at({a, b}) * m.eps_upper_dotted.at({n, b});
                upd(rep.trace_order_equality, (second / Cplx(p.Q) - mm.upper(s)(I, J)).abs());
            }
    }

    for (int I = 0; I < 4; ++I) {
        upd(rep.hermiticity, residual_between(star_tensor(ss.sigma[I]), ss.sigma[I]));
        upd(rep.hermiticity, residual_between(star_tensor(ss.sbar_plus[I]), ss.sbar_plus[I]));
        upd(rep.hermiticity, residual_between(star_tensor(ss.sbar_minus[I]), ss.sbar_minus[I]));
    }
    for (int s : {+1, -1})
        for (int I = 0; I < 4; ++I)
            for (int J = 0; J < 4; ++J)
                upd(rep.hermiticity, (mm.upper(s)(I, J).conj() - mm.upper(s)(J, I)).abs());

    for (int s : {+1, -1})
        upd(rep.metric_inverse, (mm.upper(s) * mm.lower(s) - Mat::eye(4)).max_abs());

    SigmaFrames f = make_frames(m, ss);

    // Eq. (25): repeated labels are numeric-diagonal sums
    for (int s : {+1, -1}) {
        Real ah = half_power(p, s), amh = half_power(p, -s);
        for (int I = 0; I < 4; ++I)
            for (int J = 0; J < 4; ++J) {
                Cplx t1, trI, trJ;
                for (std::size_t x = 0; x < 2; ++x) {
                    for (std::size_t mu = 0; mu < 2; ++mu)
                        t1 += f.sig_ru[I].at({x, mu}) * f.sig_rd[J].at({mu, x});
                    trI += f.sig_both[I].at({x, x});
                    trJ += f.sig_both[J].at({x, x});
                }
                Cplx cf = (Cplx(ah) * t1 - Cplx(amh) * (trI * trJ)) / Cplx(p.Q);
                upd(rep.closed_form_eq25, (cf - mm.upper(s)(I, J)).abs());
            }
    }
    // Eq. (28)
    for (int s : {+1, -1}) {
        Real ah = half_power(p, s), amh = half_power(p, -s);
        for (int I = 0; I < 4; ++I)
            for (int J = 0; J < 4; ++J) {
                Cplx t1, trI, trJ;
                for (std::size_t b = 0; b < 2; ++b) {
                    for (std::size_t dd = 0; dd < 2; ++dd)
                        t1 += f.sbar_lu[I].at({b, dd}) * f.sbar_ld[J].at({dd, b});
                    trI += f.sbar_both[I].at({b, b});
                    trJ += f.sbar_both[J].at({b, b});
                }
                Cplx cf = (Cplx(amh) * t1 - Cplx(ah) * (trI * trJ)) / Cplx(p.Q);
                upd(rep.closed_form_eq28, (cf - mm.lower(s)(I, J)).abs());
            }
    }

    // sign independence of the lowered dual, both index placements
    for (int I = 0; I < 4; ++I)
        for (std::size_t a = 0; a < 2; ++a)
            for (std::size_t b = 0; b < 2; ++b) {
                Cplx lp, lm, rp2, rm2;
                for (int J = 0; J < 4; ++J) {
                    lp += mm.lower(+1)(I, J) * ss.sbar_plus[J].at({a, b});
                    lm += mm.lower(-1)(I, J) * ss.sbar_minus[J].at({a, b});
                    rp2 += ss.sbar_plus[J].at({a, b}) * mm.lower(+1)(J, I);
                    rm2 += ss.sbar_minus[J].at({a, b}) * mm.lower(-1)(J, I);
                }
                upd(rep.sign_independence, (lp - lm).abs());
                upd(rep.sign_independence, (rp2 - rm2).abs());
            }

    // Eq. (26)
    for (std::size_t a = 0; a < 2; ++a)
        for (std::size_t b = 0; b < 2; ++b)
            for (std::size_t r = 0; r < 2; ++r)
                for (std::size_t s2 = 0; s2 < 2; ++s2) {
                    Cplx acc;
                    for (int I = 0; I < 4; ++I) acc += ss.sigma[I].at({a, b}) * ss.sbar_metric[I].at({r, s2});
                    Cplx tgt;
                    if (s2 == a)
                        for (std::size_t dd = 0; dd < 2; ++dd)
                            tgt += Cplx(p.Q) * (m.eps_lower_dotted.at({b, dd}) * m.eps_upper_dotted.at({r, dd}));
                    upd(rep.completeness_eq26, (acc - tgt).abs());
                }
    for (int s : {+1, -1}) {
        const auto& sb = ss.sbar(s);
        for (std::size_t a = 0; a < 2; ++a)
            for (std::size_t b = 0; b < 2; ++b)
                for (std::size_t r = 0; r < 2; ++r)
                    for (std::size_t s2 = 0; s2 < 2; ++s2) {
                        Cplx acc;
                        for (int I = 0; I < 4; ++I)
                            for (int J = 0; J < 4; ++J)
                                acc += mm.lower(s)(I, J) * ss.sigma[J].at({a, b}) * sb[I].at({r, s2});
                        Cplx tgt;
                        if (r == b)
                            for (std::size_t dd = 0; dd < 2; ++dd)
                                tgt += Cplx(p.Q) * (m.eps_lower.at({dd, a}) * m.eps_upper.at({dd, s2}));
                        upd(rep.completeness_eq26, (acc - tgt).abs());
                    }
    }

    // Eq. (27): sigma^{I ~ bdot}_a sbar_{I rdot}^{~ s} = Q delta^s_a delta^bdot_rdot
    for (std::size_t a = 0; a < 2; ++a)
        for (std::size_t b = 0; b < 2; ++b)
            for (std::size_t r = 0; r < 2; ++r)
                for (std::size_t s2 = 0; s2 < 2; ++s2) {
                    Cplx acc;
                    for (int I = 0; I < 4; ++I) acc += f.sig_rd[I].at({a, b}) * f.sbar_ld[I].at({r, s2});
                    Cplx tgt = (s2 == a && b == r) ? Cplx(p.Q) : Cplx(0);
                    upd(rep.completeness_eq27, (acc - tgt).abs());
                }
    for (int s : {+1, -1}) {
        const auto& sb = ss.sbar(s);
        for (std::size_t a = 0; a < 2; ++a)
            for (std::size_t b = 0; b < 2; ++b)
                for (std::size_t r = 0; r < 2; ++r)
                    for (std::size_t s2 = 0; s2 < 2; ++s2) {
                        Cplx acc;
                        for (int I = 0; I < 4; ++I) {
                            Cplx low_ru, sb_lu;
                            for (int J = 0; J < 4; ++J)
                                for (std::size_t rho = 0; rho < 2; ++rho)
                                    low_ru += mm.lower(s)(I, J) * ss.sigma[J].at({rho, b}) * m.eps_upper.at({rho, a});
                            for (std::size_t g = 0; g < 2; ++g)
                                sb_lu += sb[I].at({r, g}) * m.eps_lower.at({g, s2});
                            acc += low_ru * sb_lu;
                        }
                        Cplx tgt = (a == s2 && r == b) ? Cplx(p.Q) : Cplx(0);
                        upd(rep.completeness_eq27, (acc - tgt).abs());
                    }
    }

    if (p.q == 1 && p.r == 0) {
        rep.classical_applies = true;
        Mat eta(4, 4);
        eta(0, 0) = Cplx(-1);
        eta(1, 1) = Cplx(1);
        eta(2, 2) = Cplx(1);
        eta(3, 3) = Cplx(1);
        for (int s : {+1, -1}) upd(rep.classical_limit, (mm.upper(s) - eta).max_abs());
    }
    return rep;
}

struct DualReport {
    Real eq33;
    Real eq36;
    Real sbar_contraction;  // G^{LK} sbar_L sbar_K = -Q(a^{s/2} ee + a^{-s/2} ee)
};

inline DualReport verify_dual_identities(const ParameterSet& p, const SpinorMetric& m,
                                         const RMatrixPair& rm, const SigmaSet& ss,
                                         const MinkowskiMetric& mm) {
    DualReport rep{Real(0), Real(0), Real(0)};
    auto upd = [](Real& m0, const Real& v) { if (v > m0) m0 = v; };
    SigmaFrames f = make_frames(m, ss);

    for (int s : {+1, -1}) {
        const auto& sb = ss.sbar(s);
        for (int L = 0; L < 4; ++L)
            for (std::size_t a = 0; a < 2; ++a)
                for (std::size_t b = 0; b < 2; ++b) {
                    Cplx lhs, rhs;
                    for (int N = 0; N < 4; ++N)
                        for (std::size_t d = 0; d < 2; ++d)
                            for (std::size_t g = 0; g < 2; ++g)
                                lhs += m.eps_upper.at({a, d}) * sb[N].at({b, g}) * m.eps_lower.at({g, d}) *
                                       mm.lower(s)(N, L);
                    for (std::size_t n = 0; n < 2; ++n)
                        for (std::size_t mu = 0; mu < 2; ++mu)
                            rhs += m.eps_lower_dotted.at({n, mu}) * ss.sbar_metric[L].at({mu, a}) *
                                   m.eps_upper_dotted.at({n, b});
                    upd(rep.eq33, (lhs - rhs).abs());
                }
    }

    for (int s : {+1, -1}) {
        const Tensor& r2 = rm.mixed2[sidx(-s)];
        for (int K = 0; K < 4; ++K)
            for (std::size_t a = 0; a < 2; ++a)
                for (std::size_t b = 0; b < 2; ++b) {
                    Cplx lhs, rhs;
                    for (int N = 0; N < 4; ++N) lhs += f.sbar_ld[N].at({a, b}) * mm.upper(s)(N, K);
                    for (std::size_t r = 0; r < 2; ++r)
                        for (std::size_t n = 0; n < 2; ++n)
                            for (std::size_t s2 = 0; s2 < 2; ++s2)
                                for (std::size_t d = 0; d < 2; ++d)
                                    rhs += m.eps_lower_dotted.at({r, a}) * r2.at({b, r, n, s2}) *
                                           m.eps_upper.at({s2, d}) * f.sig_rd[K].at({d, n});
                    upd(rep.eq36, (lhs - rhs).abs());
                }
    }

    for (int s : {+1, -1}) {
        Real ah = half_power(p, s), amh = half_power(p, -s);
        for (std::size_t t = 0; t < 2; ++t)
            for (std::size_t d = 0; d < 2; ++d)
                for (std::size_t n = 0; n < 2; ++n)
                    for (std::size_t s2 = 0; s2 < 2; ++s2) {
                        Cplx lhs;
                        for (int L = 0; L < 4; ++L)
                            for (int K = 0; K < 4; ++K)
                                lhs += mm.upper(s)(L, K) * f.sbar_ld[L].at({t, d}) * f.sbar_ld[K].at({n, s2});
                        Cplx rhs = Cplx(-p.Q) * (Cplx(ah) * (m.eps_upper.at({d, n}) * m.eps_upper.at({t, s2})) +
                                                 Cplx(amh) * (m.eps_upper.at({d, t}) * m.eps_upper.at({s2, n})));
                        upd(rep.sbar_contraction, (lhs - rhs).abs());
                    }
    }
    return rep;
}

// ---- vector <-> bispinor conversion ----

inline Tensor vector_to_bispinor(const std::array<Cplx, 4>& x, const SigmaSet& ss) {
    Tensor t({lo(Family::Spinor), lo(Family::SpinorDot)});
    for (std::size_t a = 0; a < 2; ++a)
        for (std::size_t b = 0; b < 2; ++b) {
            Cplx acc;
            for (int I = 0; I < 4; ++I) acc += x[I] * ss.sigma[I].at({a, b});
            t.at({a, b}) = acc;
        }
    return t;
}

/// Both displayed inverse formulas; they agree to tolerance (tested).
inline std::array<Cplx, 4> bispinor_to_vector(const Tensor& xb, const ParameterSet& p,
                                              const SpinorMetric& m, const SigmaSet& ss,
                                              const MinkowskiMetric& mm, int route_sign = +1,
                                              bool metric_route = false) {
    std::array<Cplx, 4> out;
    if (!metric_route) {
        const auto& sb = ss.sbar(route_sign);
        for (int I = 0; I < 4; ++I) {
            Cplx acc;
            for (int J = 0; J < 4; ++J)
                for (std::size_t a = 0; a < 2; ++a)
                    for (std::size_t n = 0; n < 2; ++n)
                        for (std::size_t b = 0; b < 2; ++b)
                            for (std::size_t d = 0; d < 2; ++d)
                                acc += m.eps_upper.at({a, n}) * xb.at({a, b}) * sb[J].at({b, d}) *
                                       m.eps_lower.at({d, n}) * mm.lower(route_sign)(J, I);
            out[I] = acc / Cplx(p.Q);
        }
    } else {
        for (int I = 0; I < 4; ++I) {
            Cplx acc;
            for (std::size_t n = 0; n < 2; ++n)
                for (std::size_t b = 0; b < 2; ++b)
                    for (std::size_t a = 0; a < 2; ++a)
                        for (std::size_t d = 0; d < 2; ++d)
                            acc += m.eps_lower_dotted.at({n, b}) * ss.sbar_metric[I].at({b, a}) *
                                   xb.at({a, d}) * m.eps_upper_dotted.at({n, d});
            out[I] = acc / Cplx(p.Q);
        }
    }
    return out;
}

// ---- the displayed metric fixtures ----

struct FixtureEntry {
    int i, j;
    bool upper;      // G^{IJ} vs G_{IJ}
    int sign;        // +1 / -1
    std::string expr;
    Cplx displayed;
    Cplx computed;
    Real diff;
    bool required;   // criterion entries that must match
};

}  // namespace qlorentz
