#include "qcone/opaction.hpp"

#include <stdexcept>

namespace qcone::opaction {

using presets::PresetName;

OperatorTable OperatorTable::standard() {
    const Presentation& cd = presets::preset(PresetName::CoordDeriv);
    OperatorTable t;
    for (int d = 0; d < 4; ++d)
        for (int c = 0; c < 4; ++c) {
            const RewriteRule* r = cd.find_rule(d + 4, c);
            if (!r) throw std::logic_error("incomplete derivative table");
            auto it = r->rhs.terms.find(Word{c, d + 4});
            if (it == r->rhs.terms.end())
                throw std::logic_error("derivative rule lacks its crossing term");
            t.weight[d][c] = it->second;
        }
    return t;
}

Element OperatorTable::act_letter(int d, const Word& w) const {
    if (w.empty()) return Element::zero();
    int x = w[0];
    Word rest(w.begin() + 1, w.end());
    Element out;
    // crossing term: q-weight, derivative keeps moving right
    Element tail = act_letter(d, rest);
    for (const auto& [tw, tc] : tail.terms) {
        Word nw;
        nw.reserve(tw.size() + 1);
        nw.push_back(x);
        nw.insert(nw.end(), tw.begin(), tw.end());
        out.add(nw, weight[d][x] * tc);
    }
    // unit split when the derivative meets its own coordinate
    if (d == x) out.add(rest, QLaurent::one());
    return out;
}

Element act(const OperatorExpr& op, const Element& f, const OperatorTable& table) {
    const Presentation& coords = presets::preset(PresetName::NullVector);
    for (const auto& [w, c] : f.terms)
        for (int g : w)
            if (g < 0 || g >= 4)
                throw std::invalid_argument(
                    "operator action requires coordinate letters only");
    // the action is defined on the normal-form basis; reduce first so a
    // non-normal representative cannot smuggle in the two-term ambiguity
    Element nf = normalize(f, coords);
    Element result;
    for (const auto& [opw, opc] : op.terms) {
        Element acc = nf;
        for (auto it = opw.rbegin(); it != opw.rend(); ++it) {
            Element next;
            for (const auto& [w, c] : acc.terms) next += c * table.act_letter(*it, w);
            acc = std::move(next);
        }
        result += opc * acc;
    }
    return normalize(result, coords);
}

OperatorExpr compose(const OperatorExpr& a, const OperatorExpr& b) {
    return mul(a, b, presets::preset(PresetName::DerivOnly));
}

OperatorExpr box_q() { return presets::named_element("qdalembertian"); }

std::map<int, OperatorExpr> classical_limit(const OperatorExpr& op, int order) {
    std::map<int, OperatorExpr> parts;
    for (const auto& [w, c] : op.terms) {
        HSeries s = expand_h(c, order);
        for (int m = 0; m <= order; ++m)
            if (!s.coeffs[m].is_zero()) parts[m].add(w, QLaurent(s.coeffs[m]));
    }
    return parts;
}

} // namespace qcone::opaction
