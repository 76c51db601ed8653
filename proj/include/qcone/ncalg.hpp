#pragma once

#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "qcone/qlaurent.hpp"

namespace qcone {

enum class Parity { Even, Odd };

enum class GenFamily { Coordinate, Differential, Derivative, Twistor, Momentum };

struct Generator {
    int id = 0;
    std::string name;
    Parity parity = Parity::Even;
    std::optional<int> conjugate; // id of the starred partner, if any
    GenFamily family = GenFamily::Coordinate;
};

/// A word is a finite product of generators, stored by id. The empty
/// word is the multiplicative unit.
using Word = std::vector<int>;

/// Finite linear combination of words with QLaurent coefficients.
/// Canonical: no zero coefficients stored.
struct Element {
    std::map<Word, QLaurent> terms;

    static Element zero() { return {}; }
    static Element unit(QLaurent c = QLaurent::one()) {
        Element e;
        e.add(Word{}, c);
        return e;
    }
    static Element from_word(Word w, QLaurent c = QLaurent::one()) {
        Element e;
        e.add(std::move(w), c);
        return e;
    }

    bool is_zero() const { return terms.empty(); }
    void add(const Word& w, const QLaurent& c);
    size_t max_degree() const;

    Element operator-() const;
    friend Element operator+(const Element&, const Element&);
    friend Element operator-(const Element&, const Element&);
    friend Element operator*(const QLaurent& c, const Element& e);
    Element& operator+=(const Element& o) { return *this = *this + o; }
    Element& operator-=(const Element& o) { return *this = *this - o; }

    friend bool operator==(const Element&, const Element&) = default;
};

enum class RuleKind {
    Coordinate,
    CoordDifferential,
    DifferentialDifferential,
    CoordDerivative,
    DerivativeDerivative,
};

/// Directed relation on an adjacent generator pair. lhs is the redex
/// (always two letters); rhs is what replaces it. Termination invariant:
/// every rhs word is strictly smaller than lhs under (length, inversion
/// count).
struct RewriteRule {
    std::array<int, 2> lhs{};
    Element rhs;
    RuleKind kind = RuleKind::Coordinate;
};

/// A finitely presented algebra: alphabet with a fixed total order
/// (position = id), quadratic rewrite rules keyed by their lhs pair, and
/// the set of nilpotent generators (g*g -> 0).
struct Presentation {
    std::string name;
    std::vector<Generator> alphabet;
    std::map<std::pair<int, int>, RewriteRule> rules;
    std::set<int> nilpotents;

    const Generator* find_generator(std::string_view gname) const;
    const RewriteRule* find_rule(int a, int b) const;
    bool is_nilpotent_square(int a, int b) const {
        return a == b && nilpotents.count(a) > 0;
    }
    /// true when (w[pos], w[pos+1]) is reducible
    bool redex_at(const Word& w, size_t pos) const;
};

struct ValidationReport {
    std::vector<std::string> issues;
    bool valid() const { return issues.empty(); }
};

ValidationReport validate_presentation(const Presentation& p);

/// Number of out-of-order adjacent-or-distant pairs in w; the second
/// component of the termination measure (first is word length).
int inversion_count(const Word& w);

/// Applies the reduction available at position pos of w (rule or
/// nilpotent square) exactly once. Precondition: redex_at(w, pos).
Element apply_rule_at(const Word& w, size_t pos, const Presentation& p);

/// Rewrites to the unique fixed point using the leftmost-innermost
/// strategy. Linear; terminates for every validated presentation.
Element normalize(const Element& e, const Presentation& p);

/// Concatenation-bilinear product followed by normalize.
Element mul(const Element& a, const Element& b, const Presentation& p);

/// Hermitian conjugation: reverses words, swaps generators with their
/// conjugates, stars coefficients, then normalizes.
Element star_element(const Element& e, const Presentation& p);

/// Values of the exterior differential on generators. Images of odd
/// generators must be zero.
struct DerivationTable {
    std::map<int, Element> images;
};

/// Graded Leibniz extension of the table: d(uv) = d(u)v + (-1)^|u| u d(v).
Element apply_derivation(const Element& e, const DerivationTable& d,
                         const Presentation& p);

enum class CoeffAction { Identity, InvertQ };

/// Algebra map determined by generator images, extended multiplicatively.
/// coeff_action InvertQ sends q to q^{-1} in every coefficient.
struct Morphism {
    CoeffAction coeff_action = CoeffAction::Identity;
    std::map<int, Element> images;
};

Element apply_morphism(const Element& e, const Morphism& m,
                       const Presentation& src, const Presentation& dst);

std::string word_to_string(const Word& w, const Presentation& p);
std::string element_to_string(const Element& e, const Presentation& p);

} // namespace qcone
