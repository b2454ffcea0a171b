#include <catch2/catch_amalgamated.hpp>

#include "qlorentz/functionals.hpp"

using namespace qlorentz;

namespace {
struct Ctx {
    ParameterSet p;
    SpinorMetric m;
    RMatrixPair rm;
    HopfOps hopf;
    NormalFormEngine eng;
    LittleF f;
    Ctx(const char* q, const char* r)
        : p(make_params_str(q, r, +1, 60)),
          m(make_spinor_metric(p)),
          rm(make_r(p, m)),
          hopf(p, m),
          eng(p, m, rm),
          f(p, m, rm, hopf) {}
};

Real mat2_residual(const LittleF::Mat2& a, const LittleF::Mat2& b) {
    Real worst(0);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            Real v = (a[i][j] - b[i][j]).abs();
            if (v > worst) worst = v;
        }
    return worst;
}
}  // namespace

TEST_CASE("unit law: functionals evaluate to delta on the empty word") {
    Ctx c("2", "1/3");
    for (FKind k : {FKind::F, FKind::Ftilde})
        for (bool dotted : {false, true})
            for (int s : {+1, -1}) {
                auto v = c.f.on_word(k, dotted, s, Word::unit());
                CHECK((v[0][0] - Cplx(1)).abs() == 0);
                CHECK(v[0][1].abs() == 0);
            }
}

TEST_CASE("classical f values are Kronecker patterns") {
    Ctx c("1", "0");
    // with the flip R: f_{+a}^{b}(M_d^r) = delta^r_d delta^b_a
    for (std::uint8_t gid = 0; gid < 4; ++gid) {
        GeneratorId g = GeneratorId::from_id(gid);
        auto v = c.f.value(FKind::F, false, +1, gid);
        for (int al = 0; al < 2; ++al)
            for (int be = 0; be < 2; ++be) {
                Cplx tgt = (g.row == g.col && al == be) ? Cplx(1) : Cplx(0);
                CHECK((v[al][be] - tgt).abs() <= c.p.tolerance);
            }
    }
}

TEST_CASE("all functional families kill the whole relation ideal") {
    for (auto [q, r] : {std::pair{"2", "0"}, {"2", "1/3"}, {"1/2", "1/5"}}) {
        Ctx c(q, r);
        INFO("q=" << q << " r=" << r);
        Real worst(0);
        for (const auto& v : c.eng.relations())
            for (FKind k : {FKind::F, FKind::Ftilde})
                for (bool dotted : {false, true})
                    for (int s : {+1, -1}) {
                        auto mval = c.f.on_elem(k, dotted, s, v);
                        for (int i = 0; i < 2; ++i)
                            for (int j = 0; j < 2; ++j) {
                                Real x = mval[i][j].abs();
                                if (x > worst) worst = x;
                            }
                    }
        CHECK(worst <= c.p.tolerance);
    }
}

TEST_CASE("eq11: f equals ftilde composed with the antipode") {
    Ctx c("2", "1/3");
    Real worst(0);
    for (int s : {+1, -1})
        for (std::uint8_t g = 0; g < 8; ++g) {
            auto lhs = c.f.value(FKind::F, false, s, g);
            LittleF::Mat2 rhs{};
            for (const auto& [w, coef] : c.hopf.antipode_gen(g).terms()) {
                auto base = c.f.value(FKind::Ftilde, false, s, w[0]);
                for (int i = 0; i < 2; ++i)
                    for (int j = 0; j < 2; ++j) rhs[i][j] += coef * base[i][j];
            }
            Real v = mat2_residual(lhs, rhs);
            if (v > worst) worst = v;
            // dotted family: f_dot = ftilde_dot o S^{-1}
            auto lhs2 = c.f.value(FKind::F, true, s, g);
            LittleF::Mat2 rhs2{};
            for (const auto& [w, coef] : c.hopf.antipode_inv_gen(g).terms()) {
                auto base = c.f.value(FKind::Ftilde, true, s, w[0]);
                for (int i = 0; i < 2; ++i)
                    for (int j = 0; j < 2; ++j) rhs2[i][j] += coef * base[i][j];
            }
            v = mat2_residual(lhs2, rhs2);
            if (v > worst) worst = v;
        }
    CHECK(worst <= c.p.tolerance);
}

TEST_CASE("eq15: eps conjugation relates f and ftilde") {
    Ctx c("2", "1/3");
    Real worst(0);
    for (int s : {+1, -1})
        for (std::uint8_t g = 0; g < 8; ++g) {
            auto ft = c.f.value(FKind::Ftilde, false, s, g);
            auto fv = c.f.value(FKind::F, false, s, g);
            for (int a = 0; a < 2; ++a)
                for (int b = 0; b < 2; ++b) {
                    Cplx rhs;
                    for (std::size_t dd = 0; dd < 2; ++dd)
                        for (std::size_t gg = 0; gg < 2; ++gg)
                            rhs += c.m.eps_upper.at({std::size_t(b), dd}) * ft[dd][gg] *
                                   c.m.eps_lower.at({gg, std::size_t(a)});
                    Real v = (fv[a][b] - rhs).abs();
                    if (v > worst) worst = v;
                }
        }
    CHECK(worst <= c.p.tolerance);
}

TEST_CASE("eq14 star law and eq17 transposition ties") {
    Ctx c("2", "1/3");
    Real worst(0);
    for (int s : {+1, -1})
        for (std::uint8_t g = 0; g < 8; ++g) {
            // (f_{s a}^{b}(x))* = f_{-s adot}^{bdot}(S(x*))
            auto lhs = c.f.value(FKind::F, false, s, g);
            AlgebraElement arg = c.hopf.antipode(c.hopf.star(AlgebraElement::generator(g)));
            auto rhs = c.f.on_elem(FKind::F, true, -s, arg);
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j) {
                    Real v = (lhs[i][j].conj() - rhs[i][j]).abs();
                    if (v > worst) worst = v;
                }
            // ftilde_dot = f o S on the dotted family matches the transposed table
            AlgebraElement sarg = c.hopf.antipode(AlgebraElement::generator(g));
            auto viaS = c.f.on_elem(FKind::F, true, s, sarg);
            auto tbl = c.f.value(FKind::Ftilde, true, s, g);
            Real v = mat2_residual(viaS, tbl);
            if (v > worst) worst = v;
        }
    CHECK(worst <= c.p.tolerance);
}

TEST_CASE("eq9 compatibility reduces to zero under the engine") {
    Ctx c("2", "1/3");
    Real worst(0);
    for (int s : {+1, -1})
        for (std::uint8_t g = 0; g < 8; ++g) {
            AlgebraElement a = AlgebraElement::generator(g);
            auto conv_fa = c.f.conv_f_elem(a, FKind::F, false, s, c.hopf);
            auto conv_af = c.f.conv_elem_f(a, FKind::F, false, s, c.hopf);
            for (std::uint8_t al = 0; al < 2; ++al)
                for (std::uint8_t be = 0; be < 2; ++be) {
                    AlgebraElement lhs, rhs;
                    for (std::uint8_t gm = 0; gm < 2; ++gm) {
                        lhs.add_scaled(mul(AlgebraElement::generator(GeneratorId{false, al, gm}.id()),
                                           conv_fa[gm][be], c.hopf.drop()),
                                       Cplx(1), c.hopf.drop());
                        rhs.add_scaled(mul(conv_af[al][gm],
                                           AlgebraElement::generator(GeneratorId{false, gm, be}.id()),
                                           c.hopf.drop()),
                                       Cplx(1), c.hopf.drop());
                    }
                    lhs.add_scaled(rhs, Cplx(-1), c.hopf.drop());
                    Real v = c.eng.reduce_residual(lhs);
                    if (v > worst) worst = v;
                }
        }
    CHECK(worst <= c.p.tolerance);
}

TEST_CASE("convolution inverse: f * (f o S) is the counit") {
    Ctx c("2", "1/3");
    Real worst(0);
    for (int s : {+1, -1})
        for (bool dotted : {false, true})
            for (std::uint8_t g = 0; g < 8; ++g) {
                AlgebraElement e = AlgebraElement::generator(g);
                LittleF::Mat2 acc{};
                for (const auto& [pair, coef] : c.hopf.coproduct(e).terms) {
                    Word w1 = pair.first;
                    AlgebraElement w2;
                    w2.add(pair.second, Cplx(1), c.hopf.drop());
                    auto m1 = c.f.on_word(FKind::F, dotted, s, w1);
                    auto m2 = c.f.on_elem(FKind::F, dotted, s, c.hopf.antipode(w2));
                    for (int i = 0; i < 2; ++i)
                        for (int j = 0; j < 2; ++j)
                            for (int k = 0; k < 2; ++k) acc[i][j] += coef * (m1[i][k] * m2[k][j]);
                }
                Cplx eps = c.hopf.counit(e);
                for (int i = 0; i < 2; ++i)
                    for (int j = 0; j < 2; ++j) {
                        Cplx tgt = i == j ? eps : Cplx(0);
                        Real v = (acc[i][j] - tgt).abs();
                        if (v > worst) worst = v;
                    }
            }
    CHECK(worst <= c.p.tolerance);
}

TEST_CASE("I * f returns the scaled unit") {
    Ctx c("2", "1/3");
    auto conv = c.f.conv_elem_f(AlgebraElement::unit(), FKind::F, false, +1, c.hopf);
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
            if (a == b) {
                CHECK((conv[a][b].coeff(Word::unit()) - Cplx(1)).abs() <= c.p.tolerance);
            } else {
                CHECK(conv[a][b].max_abs() <= c.p.tolerance);
            }
        }
}
