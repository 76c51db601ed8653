#include "qcone/qlaurent.hpp"

namespace qcone {

GaussRat QLaurent::coeff(int doubled_exp) const {
    auto it = terms_.find(doubled_exp);
    return it == terms_.end() ? GaussRat() : it->second;
}

void QLaurent::set(int doubled_exp, const GaussRat& c) {
    if (c.is_zero())
        terms_.erase(doubled_exp);
    else
        terms_[doubled_exp] = c;
}

void QLaurent::add(int doubled_exp, const GaussRat& c) {
    set(doubled_exp, coeff(doubled_exp) + c);
}

QLaurent QLaurent::operator-() const {
    QLaurent r;
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
}

QLaurent operator+(const QLaurent& a, const QLaurent& b) {
    QLaurent r = a;
    for (const auto& [e, c] : b.terms_) r.add(e, c);
    return r;
}

QLaurent operator-(const QLaurent& a, const QLaurent& b) {
    QLaurent r = a;
    for (const auto& [e, c] : b.terms_) r.add(e, -c);
    return r;
}

QLaurent operator*(const QLaurent& a, const QLaurent& b) {
    QLaurent r;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) r.add(ea + eb, ca * cb);
    return r;
}

QLaurent QLaurent::star() const {
    QLaurent r;
    for (const auto& [e, c] : terms_) r.terms_[-e] = c.conj();
    return r;
}

QLaurent QLaurent::invert_q() const {
    QLaurent r;
    for (const auto& [e, c] : terms_) r.terms_[-e] = c;
    return r;
}

namespace {

// renders a doubled exponent as "2", "-2", "(1/2)", "(-3/2)"
std::string exp_str(int doubled) {
    if (doubled % 2 == 0) return std::to_string(doubled / 2);
    return "(" + std::to_string(doubled) + "/2)";
}

} // namespace

std::string QLaurent::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        std::string mono = e == 0 ? "" : "q^" + exp_str(e);
        // emit re and im parts separately so each piece is a plain
        // rational (or i-multiple) times a q-power
        for (int part = 0; part < 2; ++part) {
            Rat v = part == 0 ? c.re : c.im;
            if (v.is_zero()) continue;
            std::string piece;
            Rat mag = v.abs();
            bool mag_one = mag == Rat(1);
            if (!mag_one || (mono.empty() && part == 0)) piece = mag.str();
            if (part == 1) piece += piece.empty() ? "i" : "*i";
            if (!mono.empty()) piece += piece.empty() ? mono : "*" + mono;
            if (first) {
                s += (v.is_negative() ? "-" : "") + piece;
                first = false;
            } else {
                s += (v.is_negative() ? " - " : " + ") + piece;
            }
        }
    }
    return s;
}

bool HSeries::is_zero() const {
    for (const auto& c : coeffs)
        if (!c.is_zero()) return false;
    return true;
}

HSeries operator+(const HSeries& a, const HSeries& b) {
    if (a.order != b.order)
        throw std::invalid_argument("h-series order mismatch");
    HSeries r(a.order);
    for (int m = 0; m <= a.order; ++m) r.coeffs[m] = a.coeffs[m] + b.coeffs[m];
    return r;
}

HSeries operator-(const HSeries& a, const HSeries& b) {
    if (a.order != b.order)
        throw std::invalid_argument("h-series order mismatch");
    HSeries r(a.order);
    for (int m = 0; m <= a.order; ++m) r.coeffs[m] = a.coeffs[m] - b.coeffs[m];
    return r;
}

HSeries operator*(const HSeries& a, const HSeries& b) {
    if (a.order != b.order)
        throw std::invalid_argument("h-series order mismatch");
    HSeries r(a.order);
    for (int i = 0; i <= a.order; ++i)
        for (int j = 0; i + j <= a.order; ++j)
            r.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
    return r;
}

HSeries HSeries::truncated(int new_order) const {
    HSeries r(new_order);
    for (int m = 0; m <= new_order && m <= order; ++m) r.coeffs[m] = coeffs[m];
    return r;
}

std::string HSeries::str() const {
    std::string s;
    bool first = true;
    for (int m = 0; m <= order; ++m) {
        if (coeffs[m].is_zero()) continue;
        if (!first) s += " + ";
        s += "(" + coeffs[m].str() + ")";
        if (m == 1) s += "*h";
        if (m > 1) s += "*h^" + std::to_string(m);
        first = false;
    }
    return first ? "0" : s;
}

HSeries expand_h(const QLaurent& a, int order) {
    if (order < 0) throw std::invalid_argument("negative truncation order");
    HSeries r(order);
    for (const auto& [e, c] : a.terms()) {
        // q^k = sum_m (ik)^m h^m / m!  with k = e/2
        Rat k(e, 2);
        GaussRat ik_pow(1);
        Rat fact(1);
        for (int m = 0; m <= order; ++m) {
            if (m > 0) {
                ik_pow *= GaussRat(Rat(0), k);
                fact *= Rat(m);
            }
            GaussRat term = c * ik_pow;
            r.coeffs[m] += GaussRat(term.re / fact, term.im / fact);
        }
    }
    return r;
}

} // namespace qcone
