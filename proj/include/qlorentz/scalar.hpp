#pragma once

#include <boost/multiprecision/mpfr.hpp>

#include <stdexcept>
#include <string>

namespace qlorentz {

using Real = boost::multiprecision::mpfr_float;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DegenerateParameter : Error { using Error::Error; };
struct SubcriticalQ : Error { using Error::Error; };
struct DivisionByNearZero : Error { using Error::Error; };
struct IndexMismatch : Error { using Error::Error; };
struct ConstructionIdentityFailure : Error { using Error::Error; };
struct RankDeficiency : Error { using Error::Error; };
struct ConfluenceFailure : Error { using Error::Error; };
struct DegreeOverflow : Error { using Error::Error; };
struct SingularMetric : Error { using Error::Error; };
struct UnknownGenerator : Error { using Error::Error; };
struct ConfigError : Error { using Error::Error; };
struct IoError : Error { using Error::Error; };

/// Sets the working precision for every Real/Cplx constructed afterwards.
inline void set_precision_digits(unsigned digits10) {
    Real::default_precision(digits10);
}

/// Complex number over Real. std::complex is only specified for builtin
/// floating types, so we carry our own minimal arithmetic.
struct Cplx {
    Real re{0}, im{0};

    Cplx() = default;
    Cplx(Real r) : re(std::move(r)) {}
    Cplx(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
    Cplx(int n) : re(n) {}
    Cplx(long n) : re(n) {}
    Cplx(double d) : re(d) {}

    static Cplx i() { return Cplx(Real(0), Real(1)); }

    Cplx operator-() const { return Cplx(-re, -im); }
    Cplx conj() const { return Cplx(re, -im); }

    Cplx& operator+=(const Cplx& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    Cplx& operator-=(const Cplx& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    Cplx& operator*=(const Cplx& o) { return *this = *this * o; }

    friend Cplx operator+(const Cplx& a, const Cplx& b) { return Cplx(a.re + b.re, a.im + b.im); }
    friend Cplx operator-(const Cplx& a, const Cplx& b) { return Cplx(a.re - b.re, a.im - b.im); }
    friend Cplx operator*(const Cplx& a, const Cplx& b) {
        return Cplx(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
    }
    friend Cplx operator*(const Real& a, const Cplx& b) { return Cplx(a * b.re, a * b.im); }
    friend Cplx operator*(const Cplx& a, const Real& b) { return Cplx(a.re * b, a.im * b); }

    Real abs2() const { return re * re + im * im; }
    Real abs() const { return sqrt(abs2()); }

    bool operator==(const Cplx& o) const { return re == o.re && im == o.im; }
};

inline Cplx operator/(const Cplx& a, const Cplx& b) {
    Real d = b.abs2();
    if (d == 0) throw DivisionByNearZero("complex division by zero");
    return Cplx((a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d);
}

inline Cplx conj(const Cplx& a) { return a.conj(); }
inline Real abs(const Cplx& a) { return a.abs(); }

/// Square root of a nonnegative real scalar (the only case this project needs).
inline Real sqrt_positive(const Real& x) {
    if (x < 0) throw Error("sqrt_positive: negative argument");
    return sqrt(x);
}

/// Division with a near-zero guard keyed to the working tolerance.
inline Cplx checked_div(const Cplx& a, const Cplx& b, const Real& tolerance) {
    if (b.abs2() <= tolerance * tolerance) throw DivisionByNearZero("divisor magnitude below tolerance");
    return a / b;
}

/// Parses "p/q" or a plain decimal literal into a Real at working precision.
inline Real parse_real(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Real(s);
        return Real(s.substr(0, slash)) / Real(s.substr(slash + 1));
    } catch (const std::exception&) {
        throw ConfigError("cannot parse real number: '" + s + "'");
    }
}

}  // namespace qlorentz
