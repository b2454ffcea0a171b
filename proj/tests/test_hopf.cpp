#include <catch2/catch_amalgamated.hpp>

#include "qlorentz/engine.hpp"

#include <random>

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

std::vector<AlgebraElement> random_degree2(const HopfOps& hopf, int count, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::vector<AlgebraElement> out;
    for (int n = 0; n < count; ++n) {
        AlgebraElement e;
        for (int t = 0; t < 3; ++t) {
            Word w = Word::pair(rng() % 8, rng() % 8);
            Cplx c(Real(static_cast<int>(rng() % 19) - 9) / 4,
                   Real(static_cast<int>(rng() % 19) - 9) / 4);
            e.add(w, c, hopf.drop());
        }
        out.push_back(std::move(e));
    }
    return out;
}

/// m(S (x) id)Delta and m(id (x) S)Delta against eta.eps.
Real antipode_axiom_residual(const Ctx& c, const AlgebraElement& e, bool s_first) {
    AlgebraElement acc;
    for (const auto& [pair, coef] : c.hopf.coproduct(e).terms) {
        AlgebraElement w1, w2;
        w1.add(pair.first, Cplx(1), c.hopf.drop());
        w2.add(pair.second, Cplx(1), c.hopf.drop());
        AlgebraElement prod = s_first ? mul(c.hopf.antipode(w1), w2, c.hopf.drop())
                                      : mul(w1, c.hopf.antipode(w2), c.hopf.drop());
        acc.add_scaled(prod, coef, c.hopf.drop());
    }
    acc.add(Word::unit(), -c.hopf.counit(e), c.hopf.drop());
    return c.eng.reduce_residual(acc);
}
}  // namespace

TEST_CASE("counit on generators") {
    Ctx c("2", "1/3");
    CHECK(c.hopf.counit(AlgebraElement::generator(GeneratorId{false, 0, 0}.id())) == Cplx(1));
    CHECK(c.hopf.counit(AlgebraElement::generator(GeneratorId{false, 0, 1}.id())) == Cplx(0));
    CHECK(c.hopf.counit(AlgebraElement::unit()) == Cplx(1));
}

TEST_CASE("coproduct of a generator and the counit axiom") {
    Ctx c("2", "1/3");
    // Delta(M_1^2) = sum_g M_1^g (x) M_g^2
    auto cop = c.hopf.coproduct(AlgebraElement::generator(GeneratorId{false, 0, 1}.id()));
    CHECK(cop.terms.size() == 2);
    // (eps (x) id) Delta = id on random degree-2 elements
    for (const auto& e : random_degree2(c.hopf, 5, 42)) {
        AlgebraElement lhs;
        for (const auto& [pair, coef] : c.hopf.coproduct(e).terms) {
            AlgebraElement w1;
            w1.add(pair.first, Cplx(1), c.hopf.drop());
            lhs.add(pair.second, coef * c.hopf.counit(w1), c.hopf.drop());
        }
        lhs.add_scaled(e, Cplx(-1), c.hopf.drop());
        CHECK(lhs.max_abs() <= c.p.tolerance);
    }
}

TEST_CASE("coassociativity on random degree-2 elements") {
    Ctx c("2", "1/3");
    for (const auto& e : random_degree2(c.hopf, 5, 7)) {
        // (Delta (x) id)Delta vs (id (x) Delta)Delta as coefficient maps on word triples
        std::map<std::tuple<Word, Word, Word>, Cplx> a, b;
        for (const auto& [pair, coef] : c.hopf.coproduct(e).terms) {
            AlgebraElement w1;
            w1.add(pair.first, Cplx(1), c.hopf.drop());
            for (const auto& [p2, c2] : c.hopf.coproduct(w1).terms)
                a[{p2.first, p2.second, pair.second}] += coef * c2;
            AlgebraElement w2;
            w2.add(pair.second, Cplx(1), c.hopf.drop());
            for (const auto& [p2, c2] : c.hopf.coproduct(w2).terms)
                b[{pair.first, p2.first, p2.second}] += coef * c2;
        }
        Real worst(0);
        for (const auto& [k, v] : a) {
            Real x = (v - b[k]).abs();
            if (x > worst) worst = x;
        }
        for (const auto& [k, v] : b) {
            Real x = (v - a[k]).abs();
            if (x > worst) worst = x;
        }
        CHECK(worst <= c.p.tolerance);
    }
}

TEST_CASE("antipode axioms on generators and random elements") {
    for (auto [q, r] : {std::pair{"1", "0"}, {"2", "1/3"}}) {
        Ctx c(q, r);
        INFO("q=" << q << " r=" << r);
        Real worst(0);
        for (std::uint8_t g = 0; g < 8; ++g) {
            Real v = antipode_axiom_residual(c, AlgebraElement::generator(g), true);
            if (v > worst) worst = v;
            v = antipode_axiom_residual(c, AlgebraElement::generator(g), false);
            if (v > worst) worst = v;
        }
        for (const auto& e : random_degree2(c.hopf, 20, 2026)) {
            Real v = antipode_axiom_residual(c, e, true);
            if (v > worst) worst = v;
            v = antipode_axiom_residual(c, e, false);
            if (v > worst) worst = v;
        }
        CHECK(worst <= c.p.tolerance);
    }
}

TEST_CASE("antipode inverse and star compatibility") {
    Ctx c("2", "1/3");
    Real worst(0);
    for (std::uint8_t g = 0; g < 8; ++g) {
        AlgebraElement e = AlgebraElement::generator(g);
        AlgebraElement back = c.hopf.antipode(c.hopf.antipode(e), true);
        back.add_scaled(e, Cplx(-1), c.hopf.drop());
        Real v = back.max_abs();
        if (v > worst) worst = v;
        // (S(x))* = S^{-1}(x*)
        AlgebraElement lhs = c.hopf.star(c.hopf.antipode(e));
        AlgebraElement rhs = c.hopf.antipode(c.hopf.star(e), true);
        lhs.add_scaled(rhs, Cplx(-1), c.hopf.drop());
        v = lhs.max_abs();
        if (v > worst) worst = v;
    }
    CHECK(worst <= c.p.tolerance);
}

TEST_CASE("star involution and generator dotting") {
    Ctx c("2", "1/3");
    AlgebraElement g12 = AlgebraElement::generator(GeneratorId{false, 0, 1}.id());
    AlgebraElement starred = c.hopf.star(g12);
    REQUIRE(starred.terms().size() == 1);
    CHECK(starred.terms().begin()->first == Word::single(GeneratorId{true, 0, 1}.id()));
    for (const auto& e : random_degree2(c.hopf, 5, 4096)) {
        AlgebraElement b = c.hopf.star(c.hopf.star(e));
        b.add_scaled(e, Cplx(-1), c.hopf.drop());
        CHECK(b.max_abs() <= c.p.tolerance);
    }
}

TEST_CASE("classical antipode is the adjugate") {
    Ctx c("1", "0");
    auto one = [&](std::uint8_t g, std::uint8_t tg, int sign) {
        AlgebraElement s = c.hopf.antipode(AlgebraElement::generator(g));
        REQUIRE(s.terms().size() == 1);
        CHECK(s.terms().begin()->first == Word::single(tg));
        CHECK((s.terms().begin()->second - Cplx(sign)).abs() <= c.p.tolerance);
    };
    one(0, 3, +1);   // S(M_1^1) = M_2^2
    one(1, 1, -1);   // S(M_1^2) = -M_1^2
    one(2, 2, -1);
    one(3, 0, +1);
}
