#include "qcone/rational.hpp"

#include <limits>

namespace qcone {

namespace {

__int128 gcd128(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        __int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

long long narrow(__int128 v) {
    if (v > std::numeric_limits<long long>::max() ||
        v < std::numeric_limits<long long>::min())
        throw std::overflow_error("rational arithmetic overflow");
    return (long long)v;
}

} // namespace

Rat Rat::make(__int128 n, __int128 d) {
    if (d == 0) throw std::invalid_argument("rational with zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    __int128 g = gcd128(n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    Rat r;
    r.num = narrow(n);
    r.den = narrow(d);
    return r;
}

Rat::Rat(long long n, long long d) { *this = make(n, d); }

Rat Rat::operator-() const {
    Rat r;
    r.num = -num;
    r.den = den;
    return r;
}

Rat Rat::abs() const { return num < 0 ? -*this : *this; }

Rat operator+(const Rat& a, const Rat& b) {
    return Rat::make((__int128)a.num * b.den + (__int128)b.num * a.den,
                     (__int128)a.den * b.den);
}

Rat operator-(const Rat& a, const Rat& b) {
    return Rat::make((__int128)a.num * b.den - (__int128)b.num * a.den,
                     (__int128)a.den * b.den);
}

Rat operator*(const Rat& a, const Rat& b) {
    return Rat::make((__int128)a.num * b.num, (__int128)a.den * b.den);
}

Rat operator/(const Rat& a, const Rat& b) {
    if (b.is_zero()) throw std::invalid_argument("rational division by zero");
    return Rat::make((__int128)a.num * b.den, (__int128)a.den * b.num);
}

bool operator<(const Rat& a, const Rat& b) {
    return (__int128)a.num * b.den < (__int128)b.num * a.den;
}

std::string Rat::str() const {
    std::string s = std::to_string(num);
    if (den != 1) s += "/" + std::to_string(den);
    return s;
}

std::string GaussRat::str() const {
    if (is_zero()) return "0";
    if (im.is_zero()) return re.str();
    std::string imag = im == Rat(1)    ? "i"
                       : im == Rat(-1) ? "-i"
                                       : im.str() + "*i";
    if (re.is_zero()) return imag;
    if (im.is_negative()) return re.str() + " - " + (-im == Rat(1) ? "i" : (-im).str() + "*i");
    return re.str() + " + " + (im == Rat(1) ? "i" : im.str() + "*i");
}

} // namespace qcone
