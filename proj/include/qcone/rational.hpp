#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qcone {

/// Exact rational number with 64-bit numerator and denominator.
/// Stored in lowest terms, denominator > 0. Intermediate products use
/// 128-bit arithmetic; a result that does not fit 64 bits throws
/// std::overflow_error rather than wrapping.
struct Rat {
    long long num = 0;
    long long den = 1;

    Rat() = default;
    Rat(long long n) : num(n), den(1) {}
    Rat(long long n, long long d);

    bool is_zero() const { return num == 0; }
    bool is_integer() const { return den == 1; }
    bool is_negative() const { return num < 0; }

    Rat operator-() const;
    Rat abs() const;

    friend Rat operator+(const Rat&, const Rat&);
    friend Rat operator-(const Rat&, const Rat&);
    friend Rat operator*(const Rat&, const Rat&);
    friend Rat operator/(const Rat&, const Rat&);
    Rat& operator+=(const Rat& o) { return *this = *this + o; }
    Rat& operator-=(const Rat& o) { return *this = *this - o; }
    Rat& operator*=(const Rat& o) { return *this = *this * o; }
    Rat& operator/=(const Rat& o) { return *this = *this / o; }

    friend bool operator==(const Rat&, const Rat&) = default;
    friend bool operator<(const Rat& a, const Rat& b);

    std::string str() const;

    // builds from a possibly unreduced 128-bit fraction
    static Rat make(__int128 n, __int128 d);
};

/// Gaussian rational a + b*i.
struct GaussRat {
    Rat re;
    Rat im;

    GaussRat() = default;
    GaussRat(Rat r) : re(r) {}
    GaussRat(long long r) : re(r) {}
    GaussRat(Rat r, Rat i) : re(r), im(i) {}

    static GaussRat unit_i() { return GaussRat(Rat(0), Rat(1)); }

    bool is_zero() const { return re.is_zero() && im.is_zero(); }
    bool is_real() const { return im.is_zero(); }

    GaussRat conj() const { return GaussRat(re, -im); }
    GaussRat operator-() const { return GaussRat(-re, -im); }

    friend GaussRat operator+(const GaussRat& a, const GaussRat& b) {
        return GaussRat(a.re + b.re, a.im + b.im);
    }
    friend GaussRat operator-(const GaussRat& a, const GaussRat& b) {
        return GaussRat(a.re - b.re, a.im - b.im);
    }
    friend GaussRat operator*(const GaussRat& a, const GaussRat& b) {
        return GaussRat(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
    }
    GaussRat& operator+=(const GaussRat& o) { return *this = *this + o; }
    GaussRat& operator-=(const GaussRat& o) { return *this = *this - o; }
    GaussRat& operator*=(const GaussRat& o) { return *this = *this * o; }

    friend bool operator==(const GaussRat&, const GaussRat&) = default;

    std::string str() const;
};

} // namespace qcone
