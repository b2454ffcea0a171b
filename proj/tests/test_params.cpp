#include <catch2/catch_amalgamated.hpp>

#include "qlorentz/params.hpp"

using namespace qlorentz;

static Real tol() { return pow(Real(10), -30); }

TEST_CASE("classical point: all deformation off") {
    auto p = make_params_str("1", "0", +1, 60);
    CHECK(p.d == 1);
    CHECK(p.Q == 2);
    CHECK(abs(Cplx(p.a - 1)) <= tol());
    CHECK(abs(Cplx(p.sqrt_a - 1)) <= tol());
    auto pm = make_params_str("1", "0", -1, 60);
    CHECK(abs(Cplx(pm.a - 1)) <= tol());
}

TEST_CASE("q=2, r=0: solve a^2 - Q a + 1 = 0") {
    auto p = make_params_str("2", "0", +1, 60);
    // oracle: substitute back into the defining quadratic
    CHECK(abs(Cplx(p.a + 1 / p.a - p.Q)) <= tol());
    CHECK(abs(Cplx(p.Q - Real("2.5"))) <= tol());
    CHECK(abs(Cplx(p.a - 2)) <= tol());
    CHECK(abs(Cplx(p.sqrt_a * p.sqrt_a - p.a)) <= tol());
}

TEST_CASE("generic point derived scalars") {
    auto p = make_params_str("2", "1/3", +1, 60);
    CHECK(abs(Cplx(p.d - Real(8) / 9)) <= tol());
    CHECK(abs(Cplx(p.Q - Real(49) / 16)) <= tol());
    CHECK(abs(Cplx(p.a + 1 / p.a - p.Q)) <= tol());
    CHECK(abs(Cplx(p.sqrt_a * p.sqrt_a - p.a)) <= tol());
}

TEST_CASE("branches are mutually inverse roots") {
    auto pp = make_params_str("2", "1/3", +1, 60);
    auto pm = make_params_str("2", "1/3", -1, 60);
    CHECK(abs(Cplx(pp.a * pm.a - 1)) <= tol());
}

TEST_CASE("degenerate and subcritical parameters rejected") {
    CHECK_THROWS_AS(make_params(Real(1), Real(1), +1, 60), DegenerateParameter);
    CHECK_THROWS_AS(make_params(Real(1), Real(-1), +1, 60), DegenerateParameter);
    CHECK_THROWS_AS(make_params(Real(1), Real(2), +1, 60), SubcriticalQ);  // d < 0 makes Q < 2
    CHECK_THROWS_AS(make_params(Real(-1), Real(0), +1, 60), ConfigError);
    CHECK_THROWS_AS(make_params(Real(1), Real(0), +1, 10), ConfigError);
}

TEST_CASE("scalar arithmetic policy") {
    make_params_str("1", "0", +1, 60);
    Cplx i = Cplx::i();
    CHECK(conj(i) == Cplx(Real(0), Real(-1)));
    CHECK(sqrt_positive(Real(4)) == 2);
    Real s2 = sqrt_positive(Real(2));
    CHECK(abs(Cplx(s2 * s2 - 2)) <= tol());
    CHECK_THROWS_AS(checked_div(Cplx(1), Cplx(Real(0)), tol()), DivisionByNearZero);
    // star of a product reverses under conjugation: (zw)* = z* w*
    Cplx z(Real(2), Real(3)), w(Real(-1), Real(5));
    CHECK(abs(conj(z * w) - conj(z) * conj(w)) == 0);
}

TEST_CASE("parse_real accepts fractions") {
    CHECK(abs(Cplx(parse_real("1/3") - Real(1) / 3)) == 0);
    CHECK(abs(Cplx(parse_real("2.5") - Real("2.5"))) == 0);
    CHECK_THROWS_AS(parse_real("zap"), ConfigError);
}
