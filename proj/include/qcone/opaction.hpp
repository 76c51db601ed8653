#pragma once

#include <map>

#include "qcone/presets.hpp"

namespace qcone::opaction {

/// Linear combination of derivative words, normalized in the deriv-only
/// preset.
using OperatorExpr = Element;

/// Push-through data for a derivative crossing a coordinate: the
/// q-weight picked up, plus the unit split when the derivative meets its
/// own coordinate. Indices run over 11,12,21,22 in that order.
struct OperatorTable {
    QLaurent weight[4][4]; // [derivative][coordinate]

    static OperatorTable standard(); // corrected published table

    /// D_d applied to one coordinate monomial (coordinate letters only).
    Element act_letter(int d, const Word& w) const;
};

/// Left action of an operator expression on a normal-form coordinate
/// polynomial; the rightmost derivative letter acts first. Output is
/// normalized in the null-vector coordinate preset.
Element act(const OperatorExpr& op, const Element& f,
            const OperatorTable& table = OperatorTable::standard());

/// Operator product: concatenation normalized by the derivative
/// commutation rules. act(compose(a,b), f) == act(a, act(b, f)).
OperatorExpr compose(const OperatorExpr& a, const OperatorExpr& b);

/// The q-D'Alembertian D11*D22 - q^2 D12*D21.
OperatorExpr box_q();

/// Expands every coefficient under q = exp(ih) and regroups by power of
/// h. Keys with an identically zero part are absent.
std::map<int, OperatorExpr> classical_limit(const OperatorExpr& op, int order);

} // namespace qcone::opaction
