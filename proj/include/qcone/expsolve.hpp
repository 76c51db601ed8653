#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "qcone/rational.hpp"

namespace qcone::expsolve {

/// Affine-linear form  constant + sum coeff[v] * v  over named integer
/// unknowns. Canonical: no zero coefficients stored.
struct ExponentForm {
    Rat constant;
    std::map<std::string, Rat> coeffs;

    ExponentForm() = default;
    ExponentForm(Rat c) : constant(c) {}
    ExponentForm(long long c) : constant(c) {}
    static ExponentForm var(const std::string& name, Rat scale = Rat(1));

    bool is_constant() const { return coeffs.empty(); }
    bool is_zero() const { return constant.is_zero() && coeffs.empty(); }
    Rat coeff(const std::string& v) const;

    ExponentForm operator-() const;
    friend ExponentForm operator+(const ExponentForm&, const ExponentForm&);
    friend ExponentForm operator-(const ExponentForm&, const ExponentForm&);
    ExponentForm scaled(Rat s) const;
    ExponentForm& operator+=(const ExponentForm& o) { return *this = *this + o; }
    ExponentForm& operator-=(const ExponentForm& o) { return *this = *this - o; }

    friend bool operator==(const ExponentForm&, const ExponentForm&) = default;
    friend bool operator<(const ExponentForm& a, const ExponentForm& b);

    std::string str() const; // e.g. "m - n - 1"
};

/// One linear equation  form = 0  with the composite relation that
/// produced it. An unsatisfiable matching is recorded as a constraint
/// whose form is a nonzero constant.
struct LinearConstraint {
    ExponentForm form;
    std::string provenance;
};

struct ExponentSystem {
    std::vector<std::string> unknown_order; // fixed column order
    std::vector<LinearConstraint> equations;
};

/// The commutation ansatz between the twistor components and their
/// conjugates: x*xb = q^n xb*x, x*yb = q^m yb*x, y*xb = q^k xb*y,
/// y*yb = q^l yb*y, on top of the two quantum-plane relations.
struct ExponentAnsatz {
    ExponentForm n, m, k, l;
    static ExponentAnsatz general();       // four independent unknowns
    static ExponentAnsatz constant_zero(); // all exponents fixed to 0
    std::vector<std::string> unknowns() const;
};

/// Normalizes each selected null-vector component relation, written in
/// twistor bilinears, under the symbolic-exponent coefficient ring and
/// emits one linear equation per consistent monomial matching.
/// relation_indices selects rows of the component table (default all 6).
ExponentSystem generate_constraints(const ExponentAnsatz& ansatz,
                                    const std::vector<int>& relation_indices = {0, 1, 2, 3, 4, 5});

/// Equations forced by closing the ansatz itself under the Hermitian
/// star (q -> q^{-1} plus word reversal and conjugation).
std::vector<LinearConstraint> star_closure_constraints(const ExponentAnsatz& ansatz);

/// The reality condition: x commutes with xb, i.e. n = 0.
LinearConstraint reality_constraint(const ExponentAnsatz& ansatz);

class InconsistentSystem : public std::runtime_error {
  public:
    explicit InconsistentSystem(const std::string& what)
        : std::runtime_error(what) {}
};

/// Affine solution set: every pivot unknown expressed as a form in the
/// remaining free unknowns.
struct SolutionFamily {
    std::vector<std::string> unknown_order;
    std::map<std::string, ExponentForm> pivot_values;
    std::vector<std::string> free_unknowns;

    bool unique() const { return free_unknowns.empty(); }
    std::map<std::string, Rat> point() const; // requires unique()
    bool integral() const;
    /// value of an unknown in this family (free unknowns map to themselves)
    ExponentForm value_of(const std::string& v) const;
};

/// Reduced row echelon form of the system (plus extras), one canonical
/// form per row; throws nothing, inconsistency shows up as a row with a
/// nonzero constant and no unknowns.
std::vector<ExponentForm> row_reduce(const ExponentSystem& system,
                                     const std::vector<LinearConstraint>& extras = {});

/// Gaussian elimination over the rationals. Throws InconsistentSystem
/// when no assignment satisfies every equation.
SolutionFamily solve(const ExponentSystem& system,
                     const std::vector<LinearConstraint>& extras = {});

/// Substitutes a solution family into the ansatz exponents.
ExponentAnsatz substitute(const ExponentAnsatz& ansatz, const SolutionFamily& sol);

/// Checks that every component relation cancels identically under the
/// (substituted) ansatz; exact, works with free unknowns left symbolic.
bool closure_holds(const ExponentAnsatz& ansatz);

} // namespace qcone::expsolve
