#pragma once

#include <map>
#include <vector>

#include "qcone/rational.hpp"

namespace qcone {

/// Laurent polynomial in q^{1/2} with Gaussian-rational coefficients.
/// Exponents are half-integers stored doubled, so q^{1/2} has key 1 and
/// q^2 has key 4. Canonical form: no zero coefficients; the zero
/// polynomial is the empty term map.
class QLaurent {
  public:
    QLaurent() = default;
    QLaurent(const GaussRat& c) { set(0, c); }
    QLaurent(long long c) { set(0, GaussRat(c)); }

    /// q^(half/2), i.e. q_pow(2) == q and q_pow(1) == q^{1/2}.
    static QLaurent q_pow(int doubled_exp, GaussRat c = GaussRat(1)) {
        QLaurent p;
        p.set(doubled_exp, c);
        return p;
    }
    static QLaurent one() { return QLaurent(1); }
    static QLaurent unit_i() { return QLaurent(GaussRat::unit_i()); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
    }
    GaussRat coeff(int doubled_exp) const;
    const std::map<int, GaussRat>& terms() const { return terms_; }
    size_t term_count() const { return terms_.size(); }

    void set(int doubled_exp, const GaussRat& c);
    void add(int doubled_exp, const GaussRat& c);

    QLaurent operator-() const;
    friend QLaurent operator+(const QLaurent&, const QLaurent&);
    friend QLaurent operator-(const QLaurent&, const QLaurent&);
    friend QLaurent operator*(const QLaurent&, const QLaurent&);
    QLaurent& operator+=(const QLaurent& o) { return *this = *this + o; }
    QLaurent& operator-=(const QLaurent& o) { return *this = *this - o; }
    QLaurent& operator*=(const QLaurent& o) { return *this = *this * o; }

    friend bool operator==(const QLaurent&, const QLaurent&) = default;

    /// Hermitian star: q -> q^{-1} together with complex conjugation of
    /// every coefficient.
    QLaurent star() const;

    /// q -> q^{-1} alone (coefficients untouched). This is the scalar
    /// action of the quantum-plane automorphism, which is linear, not
    /// antilinear.
    QLaurent invert_q() const;

    std::string str() const;

  private:
    std::map<int, GaussRat> terms_;
};

/// Truncated power series in h with Gaussian-rational coefficients,
/// used for the q = exp(ih) classical limit. coeffs[m] multiplies h^m;
/// the vector always has order+1 entries.
struct HSeries {
    int order = 0;
    std::vector<GaussRat> coeffs;

    HSeries() : coeffs(1) {}
    explicit HSeries(int ord) : order(ord), coeffs(ord + 1) {}

    GaussRat at(int m) const { return m <= order ? coeffs[m] : GaussRat(); }
    bool is_zero() const;

    friend HSeries operator+(const HSeries&, const HSeries&);
    friend HSeries operator-(const HSeries&, const HSeries&);
    friend HSeries operator*(const HSeries&, const HSeries&);
    friend bool operator==(const HSeries&, const HSeries&) = default;

    HSeries truncated(int new_order) const;
    std::string str() const;
};

/// Substitutes q = exp(ih) into a Laurent polynomial and truncates:
/// q^k = sum_m (ik h)^m / m!, with half-integer k allowed.
HSeries expand_h(const QLaurent& a, int order);

} // namespace qcone
