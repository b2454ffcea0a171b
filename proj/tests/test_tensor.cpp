#include <catch2/catch_amalgamated.hpp>

#include "qlorentz/spinor_metric.hpp"

#include <random>

using namespace qlorentz;

namespace {
Real tol() { return pow(Real(10), -30); }
}  // namespace

TEST_CASE("contract with identity returns the tensor") {
    auto p = make_params_str("2", "1/3", +1, 60);
    auto m = make_spinor_metric(p);
    Tensor id = identity2(Family::Spinor);
    // delta^a_g eps^{g b} = eps^{a b}
    Tensor out = contract(id, 1, m.eps_upper, 0);
    CHECK(residual_between(out, m.eps_upper) == 0);
}

TEST_CASE("metric inverse pairs and full contraction") {
    for (auto [q, r] : {std::pair{"1", "0"}, {"2", "0"}, {"2", "1/3"}, {"1/2", "1/5"}}) {
        auto p = make_params_str(q, r, +1, 60);
        auto m = make_spinor_metric(p);
        auto chk = verify_spinor_metric(p, m);
        INFO("q=" << q << " r=" << r);
        CHECK(chk.inverse_pairs <= p.tolerance);
        CHECK(chk.full_contraction <= p.tolerance);
        CHECK(chk.star_relations <= p.tolerance);
    }
}

TEST_CASE("classical metric matches the antisymmetric form") {
    auto p = make_params_str("1", "0", +1, 60);
    auto m = make_spinor_metric(p);
    CHECK(m.eps_lower.at({0, 0}) == Cplx(0));
    CHECK(m.eps_lower.at({0, 1}) == Cplx(-1));
    CHECK(m.eps_lower.at({1, 0}) == Cplx(1));
    CHECK(m.eps_lower.at({1, 1}) == Cplx(0));
}

TEST_CASE("full eps contraction equals -Q numerically") {
    auto p = make_params_str("2", "1/3", +1, 60);
    auto m = make_spinor_metric(p);
    // oracle: explicit 2x2 sum of entry products
    Cplx acc;
    for (std::size_t a = 0; a < 2; ++a)
        for (std::size_t b = 0; b < 2; ++b) acc += m.eps_lower.at({a, b}) * m.eps_upper.at({a, b});
    CHECK(abs(acc + Cplx(Real(49) / 16)) <= tol());
}

TEST_CASE("illegal contractions fail loudly") {
    auto p = make_params_str("1", "0", +1, 60);
    auto m = make_spinor_metric(p);
    CHECK_THROWS_AS(contract(m.eps_lower, 0, m.eps_lower_dotted, 0), IndexMismatch);   // family
    CHECK_THROWS_AS(contract(m.eps_lower, 0, m.eps_lower, 0), IndexMismatch);          // variance
    Tensor vec({lo(Family::Vector)});
    CHECK_THROWS_AS(raise_index(vec, 0, m), IndexMismatch);
    CHECK_THROWS_AS(star_tensor(vec), IndexMismatch);
}

TEST_CASE("lower then raise is the identity on both families") {
    auto p = make_params_str("1/2", "1/5", +1, 60);
    auto m = make_spinor_metric(p);
    std::mt19937_64 rng(12345);
    auto rnd = [&] {
        return Cplx(Real(static_cast<int>(rng() % 17)) / 7, Real(static_cast<int>(rng() % 11)) / 5);
    };
    Tensor t({up(Family::Spinor), lo(Family::SpinorDot), up(Family::SpinorDot)});
    for (std::size_t i = 0; i < t.size(); ++i) t.flat(i) = rnd();
    Tensor back = raise_index(lower_index(t, 0, m), 0, m);
    CHECK(residual_between(back, t) <= p.tolerance);
    Tensor back2 = lower_index(raise_index(t, 1, m), 1, m);
    CHECK(residual_between(back2, t) <= p.tolerance);
    Tensor back3 = raise_index(lower_index(t, 2, m), 2, m);
    CHECK(residual_between(back3, t) <= p.tolerance);
}

TEST_CASE("star is an involution and matches eq16 on the metric") {
    auto p = make_params_str("2", "1/3", +1, 60);
    auto m = make_spinor_metric(p);
    CHECK(residual_between(star_tensor(star_tensor(m.eps_lower)), m.eps_lower) == 0);
    // (eps_{ab})* = -eps^{ab} entrywise, and star_tensor lands on the dotted metric
    Real worst(0);
    for (std::size_t i = 0; i < m.eps_lower.size(); ++i) {
        Real v = (m.eps_lower.flat(i).conj() + m.eps_upper.flat(i)).abs();
        if (v > worst) worst = v;
    }
    CHECK(worst <= p.tolerance);
    CHECK(residual_between(star_tensor(m.eps_lower), m.eps_lower_dotted) <= p.tolerance);
}

TEST_CASE("raising the dotted axis of sigma0 at the classical point") {
    auto p = make_params_str("1", "0", +1, 60);
    auto m = make_spinor_metric(p);
    Tensor sig0({lo(Family::Spinor), lo(Family::SpinorDot)});
    sig0.at({0, 0}) = Cplx(1);
    sig0.at({1, 1}) = Cplx(1);
    Tensor r = apply_metric(sig0, 1, m.eps_upper_dotted, false, Variance::Upper);
    // sigma^{0 ~ bdot}_a = eps^{bdot rdot} delta_{a rdot}: explicit 2x2 values
    CHECK(r.at({0, 0}) == Cplx(0));
    CHECK(r.at({0, 1}) == Cplx(1));
    CHECK(r.at({1, 0}) == Cplx(-1));
    CHECK(r.at({1, 1}) == Cplx(0));
}

TEST_CASE("contract is associative across disjoint contractions") {
    auto p = make_params_str("2", "1/3", +1, 60);
    std::mt19937_64 rng(99);
    auto rnd = [&] {
        return Cplx(Real(static_cast<int>(rng() % 13)) / 3, Real(static_cast<int>(rng() % 7)) / 2);
    };
    Tensor A({up(Family::Spinor), lo(Family::SpinorDot)});
    Tensor B({lo(Family::Spinor), up(Family::SpinorDot)});
    Tensor C({lo(Family::SpinorDot), up(Family::Spinor)});
    for (auto* t : {&A, &B, &C})
        for (std::size_t i = 0; i < t->size(); ++i) t->flat(i) = rnd();
    // ((A.B).C) vs (A.(B.C)) over disjoint axis pairs
    Tensor AB = contract(A, 0, B, 0);          // [A1=loSD, B1=upSD]
    Tensor left = contract(AB, 1, C, 0);       // [loSD, upS]
    Tensor BC = contract(B, 1, C, 0);          // [loS, upS]... B1 upSD with C0 loSD -> [B0 loS, C1 upS]
    Tensor right = contract(A, 0, BC, 0);      // A0 upS with BC0 loS -> [A1 loSD, C1 upS]
    CHECK(residual_between(left, right) <= p.tolerance);
}
