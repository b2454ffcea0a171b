#include <catch2/catch_amalgamated.hpp>

#include "qlorentz/engine.hpp"

using namespace qlorentz;

namespace {
struct Ctx {
    ParameterSet p;
    SpinorMetric m;
    RMatrixPair rm;
    HopfOps hopf;
    NormalFormEngine eng;
    Ctx(const char* q, const char* r)
        : p(make_params_str(q, r, +1, 60)),
          m(make_spinor_metric(p)),
          rm(make_r(p, m)),
          hopf(p, m),
          eng(p, m, rm) {}
};
}  // namespace

TEST_CASE("classical table is confluent without fallback") {
    Ctx c("1", "0");
    CHECK_FALSE(c.eng.status().fallback_engaged);
    CHECK(c.eng.status().diamond_initial <= c.p.tolerance);
    // PBW-type dimensions of the filtered components
    CHECK(c.eng.status().canonical_dim[2] == 34);
    CHECK(c.eng.status().canonical_dim[3] == 104);
    CHECK(c.eng.status().canonical_dim[4] == 259);
}

TEST_CASE("generic points engage the completion fallback and certify") {
    for (auto [q, r] : {std::pair{"2", "0"}, {"2", "1/3"}, {"1/2", "1/5"}}) {
        Ctx c(q, r);
        INFO("q=" << q << " r=" << r);
        CHECK(c.eng.status().fallback_engaged);
        CHECK(c.eng.status().diamond_final <= c.p.tolerance);
        CHECK(c.eng.status().diamond_degree4 <= c.p.tolerance);
        CHECK(c.eng.status().canonical_dim[2] == 19);
        CHECK(c.eng.status().canonical_dim[3] == 32);
        CHECK(c.eng.status().canonical_dim[4] == 50);
    }
}

TEST_CASE("every relation reduces to zero, with star closure and counit kill") {
    for (auto [q, r] : {std::pair{"1", "0"}, {"2", "1/3"}}) {
        Ctx c(q, r);
        INFO("q=" << q << " r=" << r);
        Real worst(0), worst_star(0), worst_eps(0);
        for (const auto& v : c.eng.relations()) {
            Real x = c.eng.reduce_residual(v);
            if (x > worst) worst = x;
            x = c.eng.reduce_residual(c.hopf.star(v));
            if (x > worst_star) worst_star = x;
            Real e = c.hopf.counit(v).abs();
            if (e > worst_eps) worst_eps = e;
        }
        CHECK(worst <= c.p.tolerance);
        CHECK(worst_star <= c.p.tolerance);
        CHECK(worst_eps <= c.p.tolerance);
    }
}

TEST_CASE("relations times letters still reduce to zero") {
    Ctx c("2", "1/3");
    Real worst(0);
    for (const auto& v : c.eng.relations())
        for (std::uint8_t g = 0; g < 8; ++g) {
            AlgebraElement l = mul(AlgebraElement::generator(g), v, c.hopf.drop());
            AlgebraElement r = mul(v, AlgebraElement::generator(g), c.hopf.drop());
            Real x = c.eng.reduce_residual(l);
            if (x > worst) worst = x;
            x = c.eng.reduce_residual(r);
            if (x > worst) worst = x;
        }
    CHECK(worst <= c.p.tolerance);
}

TEST_CASE("classical point: all generators commute") {
    Ctx c("1", "0");
    // nf(g h) = nf(h g) for every pair, including across families
    Real worst(0);
    for (std::uint8_t g = 0; g < 8; ++g)
        for (std::uint8_t h = 0; h < 8; ++h) {
            AlgebraElement d = c.eng.nf_word(Word::pair(g, h));
            d.add_scaled(c.eng.nf_word(Word::pair(h, g)), Cplx(-1), c.hopf.drop());
            Real v = d.max_abs();
            if (v > worst) worst = v;
        }
    CHECK(worst <= c.p.tolerance);
    // a reordering that avoids the determinant words is the pure transposition
    const AlgebraElement& nf = c.eng.nf_word(Word::pair(2, 1));
    if (c.eng.is_canonical(Word::pair(1, 2))) {
        REQUIRE(nf.terms().size() == 1);
        CHECK(nf.terms().begin()->first == Word::pair(1, 2));
        CHECK((nf.terms().begin()->second - Cplx(1)).abs() <= c.p.tolerance);
    }
}

TEST_CASE("unimodularity instance reduces to its scalar") {
    Ctx c("2", "1/3");
    // eps_{ab} M_1^a M_2^b = eps_{12} I
    AlgebraElement e;
    for (std::uint8_t a = 0; a < 2; ++a)
        for (std::uint8_t b = 0; b < 2; ++b)
            e.add(Word::pair(GeneratorId{false, 0, a}.id(), GeneratorId{false, 1, b}.id()),
                  c.m.eps_lower.at({a, b}), c.hopf.drop());
    AlgebraElement nf = c.eng.normal_form(e);
    REQUIRE(nf.terms().size() == 1);
    CHECK(nf.terms().begin()->first == Word::unit());
    CHECK((nf.terms().begin()->second - c.m.eps_lower.at({0, 1})).abs() <= c.p.tolerance);
}

TEST_CASE("normal form is idempotent and linear") {
    Ctx c("2", "1/3");
    AlgebraElement e;
    e.add(Word::pair(5, 1), Cplx(Real(2), Real(1)), c.hopf.drop());
    e.add(Word::pair(3, 0), Cplx(Real(-1), Real(3)), c.hopf.drop());
    AlgebraElement n1 = c.eng.normal_form(e);
    AlgebraElement n2 = c.eng.normal_form(n1);
    n2.add_scaled(n1, Cplx(-1), c.hopf.drop());
    CHECK(n2.max_abs() <= c.p.tolerance);
    CHECK(c.eng.normal_form(AlgebraElement::unit()).coeff(Word::unit()) == Cplx(1));
}

TEST_CASE("degree overflow is reported") {
    Ctx c("1", "0");
    Word w;
    for (int i = 0; i < 5; ++i) w = w.appended(0);
    CHECK_THROWS_AS(c.eng.nf_word(w), DegreeOverflow);
}

TEST_CASE("engine construction is deterministic") {
    Ctx a("2", "1/3"), b("2", "1/3");
    Word w = Word::pair(6, 2).concat(Word::pair(4, 1));
    const AlgebraElement &na = a.eng.nf_word(w), &nb = b.eng.nf_word(w);
    REQUIRE(na.terms().size() == nb.terms().size());
    auto ia = na.terms().begin();
    for (auto ib = nb.terms().begin(); ib != nb.terms().end(); ++ib, ++ia) {
        CHECK(ia->first == ib->first);
        CHECK((ia->second - ib->second).abs() == 0);
    }
}
