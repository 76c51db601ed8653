#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "qcone/ncalg.hpp"

namespace qcone {

class ParseError : public std::runtime_error {
  public:
    ParseError(const std::string& what, size_t position)
        : std::runtime_error(what + " at position " + std::to_string(position)),
          position_(position) {}
    size_t position() const { return position_; }

  private:
    size_t position_;
};

/// One parsed summand: an optional scalar prefix times a generator word.
struct ExprTerm {
    QLaurent scalar = QLaurent::one();
    Word word;
    friend bool operator==(const ExprTerm&, const ExprTerm&) = default;
};

struct ExprAst {
    std::vector<ExprTerm> terms;
    friend bool operator==(const ExprAst&, const ExprAst&) = default;
};

/// Grammar:  expr := ['-'] term (('+'|'-') term)*
///           term := factor ('*'? factor)*
///           factor := rational | 'i' | q-power | generator token
///           q-power := 'q' ['^' exponent], exponent integer or k/2,
///           optionally parenthesized: q^2, q^-2, q^(1/2), q^(-3/2)
/// Generator tokens must name generators of the given presentation.
ExprAst parse(const std::string& input, const Presentation& p);

/// Sum of the AST terms as an algebra element (no normalization).
Element to_element(const ExprAst& ast);

} // namespace qcone
