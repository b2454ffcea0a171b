#pragma once

#include "qlorentz/params.hpp"
#include "qlorentz/tensor.hpp"

namespace qlorentz {

/// The four spinor metric tensors.
///
/// eps_lower = d^{-1/2} [[ir, -q^{-1/2}], [q^{1/2}, ir]] and its upper /
/// dotted partners, normalized so that the upper and lower forms are mutual
/// inverses in both index orders and eps_{ab} eps^{ab} = -Q.
struct SpinorMetric {
    Tensor eps_lower;         // eps_{ab}
    Tensor eps_upper;         // eps^{ab}
    Tensor eps_lower_dotted;  // eps_{adot bdot}
    Tensor eps_upper_dotted;  // eps^{adot bdot}
};

inline SpinorMetric make_spinor_metric(const ParameterSet& p) {
    Real s = 1 / sqrt_positive(p.d);
    Real qh = sqrt_positive(p.q);
    Real qmh = 1 / qh;
    Cplx ir = Cplx(Real(0), p.r);

    SpinorMetric m{Tensor({lo(Family::Spinor), lo(Family::Spinor)}),
                   Tensor({up(Family::Spinor), up(Family::Spinor)}),
                   Tensor({lo(Family::SpinorDot), lo(Family::SpinorDot)}),
                   Tensor({up(Family::SpinorDot), up(Family::SpinorDot)})};

    auto fill = [&](Tensor& t, Cplx a00, Cplx a01, Cplx a10, Cplx a11) {
        t.at({0, 0}) = s * a00;
        t.at({0, 1}) = s * a01;
        t.at({1, 0}) = s * a10;
        t.at({1, 1}) = s * a11;
    };
    fill(m.eps_lower, ir, Cplx(-qmh), Cplx(qh), ir);
    fill(m.eps_upper, ir, Cplx(qmh), Cplx(-qh), ir);
    fill(m.eps_lower_dotted, -ir, Cplx(qh), Cplx(-qmh), -ir);
    fill(m.eps_upper_dotted, -ir, Cplx(-qh), Cplx(qmh), -ir);
    return m;
}

/// theta^a = theta_b eps^{ba} and theta^{adot} = eps^{adot bdot} theta_{bdot}:
/// undotted indices contract the metric's first slot, dotted its second.
inline Tensor raise_index(const Tensor& t, std::size_t axis, const SpinorMetric& m) {
    const auto& k = t.signature().at(axis);
    if (k.variance != Variance::Lower) throw IndexMismatch("raise_index: index already upper");
    if (k.family == Family::Spinor) return apply_metric(t, axis, m.eps_upper, true, Variance::Upper);
    return apply_metric(t, axis, m.eps_upper_dotted, false, Variance::Upper);
}

inline Tensor lower_index(const Tensor& t, std::size_t axis, const SpinorMetric& m) {
    const auto& k = t.signature().at(axis);
    if (k.variance != Variance::Upper) throw IndexMismatch("lower_index: index already lower");
    if (k.family == Family::Spinor) return apply_metric(t, axis, m.eps_lower, true, Variance::Lower);
    return apply_metric(t, axis, m.eps_lower_dotted, false, Variance::Lower);
}

/// eps_{ab} eps^{ab} (same-slot full contraction; equals -Q by construction).
inline Cplx eps_full_contraction(const SpinorMetric& m) {
    Cplx acc;
    for (std::size_t a = 0; a < 2; ++a)
        for (std::size_t b = 0; b < 2; ++b) acc += m.eps_lower.at({a, b}) * m.eps_upper.at({a, b});
    return acc;
}

struct MetricCheck {
    Real inverse_pairs;      // both families, both orders, vs identity
    Real full_contraction;   // |eps eps + Q|
    Real star_relations;     // Eq. (16), all four statements
};

inline MetricCheck verify_spinor_metric(const ParameterSet& p, const SpinorMetric& m) {
    MetricCheck c{Real(0), Real(0), Real(0)};
    const Tensor id_s = identity2(Family::Spinor);
    const Tensor id_d = identity2(Family::SpinorDot);
    auto upd = [](Real& m0, const Real& v) { if (v > m0) m0 = v; };

    upd(c.inverse_pairs, residual_between(contract(m.eps_upper, 1, m.eps_lower, 0), id_s));
    // eps_{bg} eps^{ga} = delta_b^a: contract lower's 2nd with upper's 1st; result (b, a) lower-upper
    {
        Tensor t = contract(m.eps_lower, 1, m.eps_upper, 0);
        Tensor id_lu(std::vector<IndexKind>{lo(Family::Spinor), up(Family::Spinor)});
        id_lu.at({0, 0}) = Cplx(1);
        id_lu.at({1, 1}) = Cplx(1);
        upd(c.inverse_pairs, residual_between(t, id_lu));
    }
    upd(c.inverse_pairs, residual_between(contract(m.eps_upper_dotted, 1, m.eps_lower_dotted, 0), id_d));
    {
        Tensor t = contract(m.eps_lower_dotted, 1, m.eps_upper_dotted, 0);
        Tensor id_lu(std::vector<IndexKind>{lo(Family::SpinorDot), up(Family::SpinorDot)});
        id_lu.at({0, 0}) = Cplx(1);
        id_lu.at({1, 1}) = Cplx(1);
        upd(c.inverse_pairs, residual_between(t, id_lu));
    }

    c.full_contraction = (eps_full_contraction(m) + Cplx(p.Q)).abs();

    // (eps_{ab})* = eps_{bdot adot} = -eps^{ab} and the upper-index mirror;
    // star_tensor reverses order, so star(eps_lower) == eps_lower_dotted entrywise
    upd(c.star_relations, residual_between(star_tensor(m.eps_lower), m.eps_lower_dotted));
    upd(c.star_relations, residual_between(star_tensor(m.eps_upper), m.eps_upper_dotted));
    for (std::size_t a = 0; a < 2; ++a)
        for (std::size_t b = 0; b < 2; ++b) {
            upd(c.star_relations, (m.eps_lower.at({a, b}).conj() + m.eps_upper.at({a, b})).abs());
            upd(c.star_relations, (m.eps_upper.at({a, b}).conj() + m.eps_lower.at({a, b})).abs());
        }
    return c;
}

}  // namespace qlorentz
