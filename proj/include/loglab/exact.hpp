#pragma once

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace loglab {

using Rational = mpq_class;

// base^e with integer (possibly negative) exponent.
inline Rational rational_pow(long base, long e) {
    if (base == 0) throw std::invalid_argument("rational_pow: zero base");
    mpz_class b(base);
    mpz_class num;
    mpz_pow_ui(num.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(e < 0 ? -e : e));
    Rational r;
    if (e < 0)
        r = Rational(1, num);
    else
        r = Rational(num);
    r.canonicalize();
    return r;
}

// Exact conversion; every finite double is a dyadic rational.
inline Rational rational_from_double(double x) {
    if (!std::isfinite(x)) throw std::invalid_argument("rational_from_double: non-finite");
    Rational r;
    mpq_set_d(r.get_mpq_t(), x);
    return r;
}

inline double to_double(const Rational& r) { return r.get_d(); }

// Element of Q(sqrt(base)): rat + irr*sqrt(base).  When base is a perfect
// square the irrational part is folded away so that equality stays canonical.
struct SqrtExt {
    Rational rat;
    Rational irr;
    long base = 0;

    SqrtExt() = default;
    SqrtExt(Rational a, Rational b, long q) : rat(std::move(a)), irr(std::move(b)), base(q) {
        normalize();
    }
    static SqrtExt zero(long q) { return SqrtExt(Rational(0), Rational(0), q); }
    static SqrtExt one(long q) { return SqrtExt(Rational(1), Rational(0), q); }

    // base^(e/2) for integer e (possibly negative or odd).
    static SqrtExt half_power(long q, long e) {
        if ((e & 1) == 0) return SqrtExt(rational_pow(q, e / 2), Rational(0), q);
        // q^(e/2) = q^((e-1)/2) * sqrt(q)
        return SqrtExt(Rational(0), rational_pow(q, (e - 1) / 2), q);
    }

    void normalize() {
        long s = std::lround(std::sqrt(static_cast<double>(base)));
        if (base > 0 && s * s == base && irr != 0) {
            rat += irr * s;
            irr = 0;
        }
    }

    SqrtExt& operator+=(const SqrtExt& o) {
        rat += o.rat;
        irr += o.irr;
        return *this;
    }
    friend SqrtExt operator+(SqrtExt a, const SqrtExt& b) { return a += b; }
    friend SqrtExt operator*(const SqrtExt& a, const SqrtExt& b) {
        SqrtExt r;
        r.base = a.base;
        r.rat = a.rat * b.rat + a.irr * b.irr * a.base;
        r.irr = a.rat * b.irr + a.irr * b.rat;
        return r;
    }
    friend SqrtExt operator*(const SqrtExt& a, const Rational& c) {
        SqrtExt r = a;
        r.rat *= c;
        r.irr *= c;
        return r;
    }
    friend bool operator==(const SqrtExt& a, const SqrtExt& b) {
        return a.rat == b.rat && a.irr == b.irr;
    }
    double value() const { return to_double(rat) + to_double(irr) * std::sqrt(static_cast<double>(base)); }
};

}  // namespace loglab
