#include "qcone/presets.hpp"

#include <mutex>
#include <stdexcept>

namespace qcone::presets {

namespace {

QLaurent qp(int k) { return QLaurent::q_pow(2 * k); } // integer power of q

Element el(QLaurent c, Word w) { return Element::from_word(std::move(w), std::move(c)); }
Element word(Word w) { return Element::from_word(std::move(w)); }

Generator gen(int id, std::string name, Parity par, GenFamily fam,
              std::optional<int> conj = std::nullopt) {
    return Generator{id, std::move(name), par, conj, fam};
}

void add_rule(Presentation& p, int a, int b, Element rhs, RuleKind kind) {
    // the published tables restate one relation twice; keep the first
    if (p.rules.count({a, b})) return;
    p.rules.emplace(std::make_pair(a, b), RewriteRule{{a, b}, std::move(rhs), kind});
}

void swap_rule(Presentation& p, int a, int b, QLaurent c, RuleKind kind) {
    add_rule(p, a, b, el(std::move(c), {b, a}), kind);
}

// ---- quantum plane -------------------------------------------------
// generators x(0) y(1) dx(2) dy(3)

enum { QP_X = 0, QP_Y = 1, QP_DX = 2, QP_DY = 3 };

void qplane_alphabet(Presentation& p) {
    p.alphabet = {
        gen(0, "x", Parity::Even, GenFamily::Coordinate),
        gen(1, "y", Parity::Even, GenFamily::Coordinate),
        gen(2, "dx", Parity::Odd, GenFamily::Differential),
        gen(3, "dy", Parity::Odd, GenFamily::Differential),
    };
    p.nilpotents = {QP_DX, QP_DY};
}

Presentation build_qplane(PresetName which) {
    Presentation p;
    p.name = to_string(which);
    qplane_alphabet(p);
    swap_rule(p, QP_Y, QP_X, qp(-1), RuleKind::Coordinate);
    switch (which) {
    case PresetName::QPlaneA:
        swap_rule(p, QP_DX, QP_X, qp(2), RuleKind::CoordDifferential);
        add_rule(p, QP_DX, QP_Y,
                 el(qp(1), {QP_Y, QP_DX}) + el(qp(2) - qp(0), {QP_X, QP_DY}),
                 RuleKind::CoordDifferential);
        swap_rule(p, QP_DY, QP_X, qp(1), RuleKind::CoordDifferential);
        swap_rule(p, QP_DY, QP_Y, qp(-2), RuleKind::CoordDifferential);
        break;
    case PresetName::QPlaneB:
        swap_rule(p, QP_DX, QP_X, qp(2), RuleKind::CoordDifferential);
        swap_rule(p, QP_DX, QP_Y, qp(-1), RuleKind::CoordDifferential);
        add_rule(p, QP_DY, QP_X,
                 el(qp(-1), {QP_X, QP_DY}) + el(qp(-2) - qp(0), {QP_Y, QP_DX}),
                 RuleKind::CoordDifferential);
        swap_rule(p, QP_DY, QP_Y, qp(-2), RuleKind::CoordDifferential);
        break;
    case PresetName::QPlaneShort:
        swap_rule(p, QP_DX, QP_X, qp(0), RuleKind::CoordDifferential);
        swap_rule(p, QP_DX, QP_Y, qp(1), RuleKind::CoordDifferential);
        swap_rule(p, QP_DY, QP_X, qp(-1), RuleKind::CoordDifferential);
        swap_rule(p, QP_DY, QP_Y, qp(0), RuleKind::CoordDifferential);
        break;
    default:
        throw std::logic_error("not a quantum-plane preset");
    }
    // the published text states dx dy = -q dy dx for all three calculi,
    // but applying the differential to the long tables forces
    // dx dy = -q^-1 dy dx there (the printed relation breaks d^2 = 0 and
    // local confluence); the short calculus keeps the printed one
    if (which == PresetName::QPlaneShort)
        swap_rule(p, QP_DY, QP_DX, -qp(-1), RuleKind::DifferentialDifferential);
    else
        swap_rule(p, QP_DY, QP_DX, -qp(1), RuleKind::DifferentialDifferential);
    return p;
}

std::vector<Relation> qplane_relations(PresetName which) {
    std::vector<Relation> rels;
    rels.push_back({"coordinate[0]", word({QP_X, QP_Y}), el(qp(1), {QP_Y, QP_X})});
    auto cd = [&](int i, Element lhs, Element rhs) {
        rels.push_back({"coord-differential[" + std::to_string(i) + "]",
                        std::move(lhs), std::move(rhs)});
    };
    switch (which) {
    case PresetName::QPlaneA:
        cd(0, word({QP_DX, QP_X}), el(qp(2), {QP_X, QP_DX}));
        cd(1, word({QP_DX, QP_Y}),
           el(qp(1), {QP_Y, QP_DX}) + el(qp(2) - qp(0), {QP_X, QP_DY}));
        cd(2, word({QP_DY, QP_X}), el(qp(1), {QP_X, QP_DY}));
        cd(3, word({QP_DY, QP_Y}), el(qp(-2), {QP_Y, QP_DY}));
        break;
    case PresetName::QPlaneB:
        cd(0, word({QP_DX, QP_X}), el(qp(2), {QP_X, QP_DX}));
        cd(1, word({QP_DX, QP_Y}), el(qp(-1), {QP_Y, QP_DX}));
        cd(2, word({QP_DY, QP_X}),
           el(qp(-1), {QP_X, QP_DY}) + el(qp(-2) - qp(0), {QP_Y, QP_DX}));
        cd(3, word({QP_DY, QP_Y}), el(qp(-2), {QP_Y, QP_DY}));
        break;
    case PresetName::QPlaneShort:
        cd(0, word({QP_DX, QP_X}), word({QP_X, QP_DX}));
        cd(1, word({QP_DX, QP_Y}), el(qp(1), {QP_Y, QP_DX}));
        cd(2, word({QP_DY, QP_X}), el(qp(-1), {QP_X, QP_DY}));
        cd(3, word({QP_DY, QP_Y}), word({QP_Y, QP_DY}));
        break;
    default:
        throw std::logic_error("not a quantum-plane preset");
    }
    rels.push_back({"differential-differential[0]", word({QP_DX, QP_DY}),
                    which == PresetName::QPlaneShort ? el(-qp(1), {QP_DY, QP_DX})
                                                     : el(-qp(-1), {QP_DY, QP_DX})});
    rels.push_back({"nilpotency[dx]", word({QP_DX, QP_DX}), Element::zero()});
    rels.push_back({"nilpotency[dy]", word({QP_DY, QP_DY}), Element::zero()});
    return rels;
}

// ---- twistor pair --------------------------------------------------
// generators x(0) xb(1) y(2) yb(3) dx(4) dxb(5) dy(6) dyb(7)

enum { TW_X = 0, TW_XB = 1, TW_Y = 2, TW_YB = 3, TW_DX = 4, TW_DXB = 5, TW_DY = 6, TW_DYB = 7 };

Presentation build_twistor() {
    Presentation p;
    p.name = "twistor";
    p.alphabet = {
        gen(0, "x", Parity::Even, GenFamily::Twistor, 1),
        gen(1, "xb", Parity::Even, GenFamily::Twistor, 0),
        gen(2, "y", Parity::Even, GenFamily::Twistor, 3),
        gen(3, "yb", Parity::Even, GenFamily::Twistor, 2),
        gen(4, "dx", Parity::Odd, GenFamily::Differential, 5),
        gen(5, "dxb", Parity::Odd, GenFamily::Differential, 4),
        gen(6, "dy", Parity::Odd, GenFamily::Differential, 7),
        gen(7, "dyb", Parity::Odd, GenFamily::Differential, 6),
    };
    p.nilpotents = {TW_DX, TW_DXB, TW_DY, TW_DYB};

    swap_rule(p, TW_Y, TW_X, qp(-1), RuleKind::Coordinate);
    swap_rule(p, TW_YB, TW_X, qp(-1), RuleKind::Coordinate);
    swap_rule(p, TW_Y, TW_XB, qp(-1), RuleKind::Coordinate);
    swap_rule(p, TW_YB, TW_XB, qp(-1), RuleKind::Coordinate);
    swap_rule(p, TW_XB, TW_X, qp(0), RuleKind::Coordinate);
    swap_rule(p, TW_YB, TW_Y, qp(0), RuleKind::Coordinate);

    for (int d : {TW_DX, TW_DXB}) {
        swap_rule(p, d, TW_X, qp(0), RuleKind::CoordDifferential);
        swap_rule(p, d, TW_XB, qp(0), RuleKind::CoordDifferential);
        swap_rule(p, d, TW_Y, qp(1), RuleKind::CoordDifferential);
        swap_rule(p, d, TW_YB, qp(1), RuleKind::CoordDifferential);
    }
    for (int d : {TW_DY, TW_DYB}) {
        swap_rule(p, d, TW_X, qp(-1), RuleKind::CoordDifferential);
        swap_rule(p, d, TW_XB, qp(-1), RuleKind::CoordDifferential);
        swap_rule(p, d, TW_Y, qp(0), RuleKind::CoordDifferential);
        swap_rule(p, d, TW_YB, qp(0), RuleKind::CoordDifferential);
    }

    swap_rule(p, TW_DXB, TW_DX, -qp(0), RuleKind::DifferentialDifferential);
    swap_rule(p, TW_DY, TW_DX, -qp(-1), RuleKind::DifferentialDifferential);
    swap_rule(p, TW_DYB, TW_DX, -qp(-1), RuleKind::DifferentialDifferential);
    swap_rule(p, TW_DY, TW_DXB, -qp(-1), RuleKind::DifferentialDifferential);
    // the published table restates dx-dy instead of giving the dxb-dyb
    // pair; this line is its image under the star structure
    swap_rule(p, TW_DYB, TW_DXB, -qp(-1), RuleKind::DifferentialDifferential);
    swap_rule(p, TW_DYB, TW_DY, -qp(0), RuleKind::DifferentialDifferential);
    return p;
}

std::vector<Relation> twistor_relations() {
    std::vector<Relation> rels;
    auto add = [&](const char* kind, int i, Element lhs, Element rhs) {
        rels.push_back({std::string(kind) + "[" + std::to_string(i) + "]",
                        std::move(lhs), std::move(rhs)});
    };
    add("coordinate", 0, word({TW_X, TW_Y}), el(qp(1), {TW_Y, TW_X}));
    add("coordinate", 1, word({TW_X, TW_YB}), el(qp(1), {TW_YB, TW_X}));
    add("coordinate", 2, word({TW_XB, TW_Y}), el(qp(1), {TW_Y, TW_XB}));
    add("coordinate", 3, word({TW_XB, TW_YB}), el(qp(1), {TW_YB, TW_XB}));
    add("coordinate", 4, word({TW_XB, TW_X}), word({TW_X, TW_XB}));
    add("coordinate", 5, word({TW_YB, TW_Y}), word({TW_Y, TW_YB}));

    int i = 0;
    for (int d : {TW_DX, TW_DXB}) {
        add("coord-differential", i++, word({d, TW_X}), word({TW_X, d}));
        add("coord-differential", i++, word({d, TW_XB}), word({TW_XB, d}));
        add("coord-differential", i++, word({d, TW_Y}), el(qp(1), {TW_Y, d}));
        add("coord-differential", i++, word({d, TW_YB}), el(qp(1), {TW_YB, d}));
    }
    for (int d : {TW_DY, TW_DYB}) {
        add("coord-differential", i++, word({d, TW_X}), el(qp(-1), {TW_X, d}));
        add("coord-differential", i++, word({d, TW_XB}), el(qp(-1), {TW_XB, d}));
        add("coord-differential", i++, word({d, TW_Y}), word({TW_Y, d}));
        add("coord-differential", i++, word({d, TW_YB}), word({TW_YB, d}));
    }

    // the six published differential-differential lines, including the
    // restated dy-dx pair
    add("differential-differential", 0, word({TW_DX, TW_DXB}), el(-qp(0), {TW_DXB, TW_DX}));
    add("differential-differential", 1, word({TW_DX, TW_DY}), el(-qp(1), {TW_DY, TW_DX}));
    add("differential-differential", 2, word({TW_DX, TW_DYB}), el(-qp(1), {TW_DYB, TW_DX}));
    add("differential-differential", 3, word({TW_DY, TW_DX}), el(-qp(-1), {TW_DX, TW_DY}));
    add("differential-differential", 4, word({TW_DY, TW_DXB}), el(-qp(-1), {TW_DXB, TW_DY}));
    add("differential-differential", 5, word({TW_DY, TW_DYB}), el(-qp(0), {TW_DYB, TW_DY}));

    const char* dn[] = {"dx", "dxb", "dy", "dyb"};
    for (int d = TW_DX; d <= TW_DYB; ++d)
        rels.push_back({std::string("nilpotency[") + dn[d - TW_DX] + "]",
                        word({d, d}), Element::zero()});
    return rels;
}

// ---- null-vector family --------------------------------------------
// coordinate ids X11(0) X12(1) X21(2) X22(3); the second index is the
// dotted one, flattened into the name

enum { NV_X11 = 0, NV_X12 = 1, NV_X21 = 2, NV_X22 = 3 };

void nullvector_coordinate_rules(Presentation& p) {
    swap_rule(p, NV_X12, NV_X11, qp(-2), RuleKind::Coordinate);
    swap_rule(p, NV_X21, NV_X11, qp(-2), RuleKind::Coordinate);
    swap_rule(p, NV_X21, NV_X12, qp(0), RuleKind::Coordinate);
    swap_rule(p, NV_X22, NV_X12, qp(-2), RuleKind::Coordinate);
    swap_rule(p, NV_X22, NV_X21, qp(-2), RuleKind::Coordinate);
    add_rule(p, NV_X22, NV_X11,
             word({NV_X11, NV_X22}) - (qp(2) - qp(-2)) * word({NV_X12, NV_X21}),
             RuleKind::Coordinate);
}

std::vector<Relation> nullvector_coordinate_relations() {
    std::vector<Relation> rels;
    auto add = [&](int i, Element lhs, Element rhs) {
        rels.push_back({"coordinate[" + std::to_string(i) + "]", std::move(lhs),
                        std::move(rhs)});
    };
    add(0, word({NV_X11, NV_X12}), el(qp(2), {NV_X12, NV_X11}));
    add(1, word({NV_X11, NV_X21}), el(qp(2), {NV_X21, NV_X11}));
    add(2, word({NV_X12, NV_X21}), word({NV_X21, NV_X12}));
    add(3, word({NV_X12, NV_X22}), el(qp(2), {NV_X22, NV_X12}));
    add(4, word({NV_X21, NV_X22}), el(qp(2), {NV_X22, NV_X21}));
    add(5, word({NV_X11, NV_X22}) - word({NV_X22, NV_X11}),
        (qp(2) - qp(-2)) * word({NV_X12, NV_X21}));
    return rels;
}

Presentation build_nullvector() {
    Presentation p;
    p.name = "nullvector";
    p.alphabet = {
        gen(0, "X11", Parity::Even, GenFamily::Coordinate, 0),
        gen(1, "X12", Parity::Even, GenFamily::Coordinate, 2),
        gen(2, "X21", Parity::Even, GenFamily::Coordinate, 1),
        gen(3, "X22", Parity::Even, GenFamily::Coordinate, 3),
    };
    nullvector_coordinate_rules(p);
    return p;
}

// null-vector differentials dX11(4) dX12(5) dX21(6) dX22(7)
enum { NV_DX11 = 4, NV_DX12 = 5, NV_DX21 = 6, NV_DX22 = 7 };

// coordinate-differential weights: row = differential index, col =
// coordinate index, entry = integer power of q in  dX_r * X_c -> q^w X_c * dX_r
constexpr int kDiffWeight[4][4] = {
    {0, 2, 2, 4},
    {-2, 0, 0, 2},
    {-2, 0, 0, 2},
    {-4, -2, -2, 0},
};

Presentation build_nullvector_diff() {
    Presentation p = build_nullvector();
    p.name = "nullvector-diff";
    p.alphabet.push_back(gen(4, "dX11", Parity::Odd, GenFamily::Differential, 4));
    p.alphabet.push_back(gen(5, "dX12", Parity::Odd, GenFamily::Differential, 6));
    p.alphabet.push_back(gen(6, "dX21", Parity::Odd, GenFamily::Differential, 5));
    p.alphabet.push_back(gen(7, "dX22", Parity::Odd, GenFamily::Differential, 7));
    p.nilpotents = {NV_DX11, NV_DX12, NV_DX21, NV_DX22};

    for (int d = 0; d < 4; ++d)
        for (int c = 0; c < 4; ++c)
            swap_rule(p, NV_DX11 + d, c, qp(kDiffWeight[d][c]),
                      RuleKind::CoordDifferential);

    swap_rule(p, NV_DX12, NV_DX11, -qp(-2), RuleKind::DifferentialDifferential);
    swap_rule(p, NV_DX21, NV_DX11, -qp(-2), RuleKind::DifferentialDifferential);
    swap_rule(p, NV_DX22, NV_DX11, -qp(-4), RuleKind::DifferentialDifferential);
    swap_rule(p, NV_DX21, NV_DX12, -qp(0), RuleKind::DifferentialDifferential);
    swap_rule(p, NV_DX22, NV_DX12, -qp(-2), RuleKind::DifferentialDifferential);
    swap_rule(p, NV_DX22, NV_DX21, -qp(-2), RuleKind::DifferentialDifferential);
    return p;
}

std::vector<Relation> nullvector_diff_relations() {
    std::vector<Relation> rels = nullvector_coordinate_relations();
    // published blocks list the diagonal coordinate first, then the rest;
    // the content is one line per (differential, coordinate) pair
    int i = 0;
    for (int d = 0; d < 4; ++d)
        for (int c = 0; c < 4; ++c)
            rels.push_back({"coord-differential[" + std::to_string(i++) + "]",
                            word({NV_DX11 + d, c}),
                            el(qp(kDiffWeight[d][c]), {c, NV_DX11 + d})});
    auto dd = [&](int j, int a, int b, int w) {
        rels.push_back({"differential-differential[" + std::to_string(j) + "]",
                        word({a, b}), el(-qp(w), {b, a})});
    };
    dd(0, NV_DX11, NV_DX12, 2);
    dd(1, NV_DX11, NV_DX21, 2);
    dd(2, NV_DX11, NV_DX22, 4);
    dd(3, NV_DX12, NV_DX21, 0);
    dd(4, NV_DX12, NV_DX22, 2);
    dd(5, NV_DX21, NV_DX22, 2);
    const char* dn[] = {"dX11", "dX12", "dX21", "dX22"};
    for (int d = 0; d < 4; ++d)
        rels.push_back({std::string("nilpotency[") + dn[d] + "]",
                        word({NV_DX11 + d, NV_DX11 + d}), Element::zero()});
    return rels;
}

// coordinates with derivatives D11(4) D12(5) D21(6) D22(7)
enum { CD_D11 = 4, CD_D12 = 5, CD_D21 = 6, CD_D22 = 7 };

// derivative push-through weights:  D_r * X_c -> q^w X_c * D_r  (+ 1 on
// the diagonal); the corrected table is minus the differential one
constexpr int kDerivWeight[4][4] = {
    {0, -2, -2, -4},
    {2, 0, 0, -2},
    {2, 0, 0, -2},
    {4, 2, 2, 0},
};

Element deriv_rule_rhs(int d, int c) {
    Element rhs = el(qp(kDerivWeight[d][c]), {c, CD_D11 + d});
    if (d == c) rhs += Element::unit();
    return rhs;
}

void deriv_deriv_rules(Presentation& p, int base) {
    swap_rule(p, base + 1, base + 0, qp(-2), RuleKind::DerivativeDerivative);
    swap_rule(p, base + 2, base + 0, qp(-2), RuleKind::DerivativeDerivative);
    swap_rule(p, base + 3, base + 0, qp(-4), RuleKind::DerivativeDerivative);
    swap_rule(p, base + 2, base + 1, qp(0), RuleKind::DerivativeDerivative);
    swap_rule(p, base + 3, base + 1, qp(-2), RuleKind::DerivativeDerivative);
    swap_rule(p, base + 3, base + 2, qp(-2), RuleKind::DerivativeDerivative);
}

std::vector<Relation> deriv_deriv_relations(int base) {
    std::vector<Relation> rels;
    auto add = [&](int j, int a, int b, int w) {
        rels.push_back({"derivative-derivative[" + std::to_string(j) + "]",
                        word({base + a, base + b}),
                        el(qp(w), {base + b, base + a})});
    };
    add(0, 0, 1, 2);
    add(1, 0, 2, 2);
    add(2, 0, 3, 4);
    add(3, 1, 2, 0);
    add(4, 1, 3, 2);
    add(5, 2, 3, 2);
    return rels;
}

Presentation build_coord_deriv(DerivTableVariant v) {
    Presentation p;
    p.name = "coord-deriv";
    p.alphabet = {
        gen(0, "X11", Parity::Even, GenFamily::Coordinate),
        gen(1, "X12", Parity::Even, GenFamily::Coordinate),
        gen(2, "X21", Parity::Even, GenFamily::Coordinate),
        gen(3, "X22", Parity::Even, GenFamily::Coordinate),
        gen(4, "D11", Parity::Even, GenFamily::Derivative),
        gen(5, "D12", Parity::Even, GenFamily::Derivative),
        gen(6, "D21", Parity::Even, GenFamily::Derivative),
        gen(7, "D22", Parity::Even, GenFamily::Derivative),
    };
    for (int d = 0; d < 4; ++d)
        for (int c = 0; c < 4; ++c) {
            if (v == DerivTableVariant::Printed && d == 1 && c == 3)
                continue; // published block never lists D12 against X22
            add_rule(p, CD_D11 + d, c, deriv_rule_rhs(d, c),
                     RuleKind::CoordDerivative);
        }
    return p;
}

std::vector<Relation> coord_deriv_relations(DerivTableVariant v) {
    std::vector<Relation> rels;
    int i = 0;
    auto line = [&](int d, int c, Element rhs) {
        rels.push_back({"coord-derivative[" + std::to_string(i++) + "]",
                        word({CD_D11 + d, c}), std::move(rhs)});
    };
    for (int d = 0; d < 4; ++d)
        for (int c = 0; c < 4; ++c) {
            if (d == 1 && c == 3) {
                if (v == DerivTableVariant::Printed) {
                    // the published line repeats X21 with weight q^-2
                    // instead of giving the X22 relation
                    line(1, 2, el(qp(-2), {NV_X21, CD_D12}));
                    continue;
                }
            }
            line(d, c, deriv_rule_rhs(d, c));
        }
    return rels;
}

Presentation build_quadratic_family(const char* name, const char* prefix,
                                    GenFamily fam) {
    Presentation p;
    p.name = name;
    const char* idx[] = {"11", "12", "21", "22"};
    for (int k = 0; k < 4; ++k)
        p.alphabet.push_back(gen(k, std::string(prefix) + idx[k], Parity::Even, fam));
    deriv_deriv_rules(p, 0);
    return p;
}

Presentation build_two_sided(DerivTableVariant v) {
    Presentation p = build_coord_deriv(v);
    p.name = "coord-deriv-two-sided";
    nullvector_coordinate_rules(p);
    deriv_deriv_rules(p, CD_D11);
    return p;
}

std::mutex cache_mutex;

} // namespace

const std::vector<PresetName>& all_presets() {
    static const std::vector<PresetName> names = {
        PresetName::QPlaneA,    PresetName::QPlaneB,    PresetName::QPlaneShort,
        PresetName::Twistor,    PresetName::NullVector, PresetName::NullVectorDiff,
        PresetName::CoordDeriv, PresetName::DerivOnly,  PresetName::Momentum,
    };
    return names;
}

std::string to_string(PresetName n) {
    switch (n) {
    case PresetName::QPlaneA: return "qplane-a";
    case PresetName::QPlaneB: return "qplane-b";
    case PresetName::QPlaneShort: return "qplane-short";
    case PresetName::Twistor: return "twistor";
    case PresetName::NullVector: return "nullvector";
    case PresetName::NullVectorDiff: return "nullvector-diff";
    case PresetName::CoordDeriv: return "coord-deriv";
    case PresetName::DerivOnly: return "deriv-only";
    case PresetName::Momentum: return "momentum";
    }
    throw std::logic_error("unknown preset");
}

PresetName preset_from_string(const std::string& s) {
    for (PresetName n : all_presets())
        if (to_string(n) == s) return n;
    throw std::invalid_argument("unknown preset '" + s + "'");
}

const Presentation& preset(PresetName n, DerivTableVariant v) {
    static std::map<std::pair<PresetName, DerivTableVariant>, Presentation> cache;
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto key = std::make_pair(n, v);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    Presentation p;
    switch (n) {
    case PresetName::QPlaneA:
    case PresetName::QPlaneB:
    case PresetName::QPlaneShort: p = build_qplane(n); break;
    case PresetName::Twistor: p = build_twistor(); break;
    case PresetName::NullVector: p = build_nullvector(); break;
    case PresetName::NullVectorDiff: p = build_nullvector_diff(); break;
    case PresetName::CoordDeriv: p = build_coord_deriv(v); break;
    case PresetName::DerivOnly:
        p = build_quadratic_family("deriv-only", "D", GenFamily::Derivative);
        break;
    case PresetName::Momentum:
        p = build_quadratic_family("momentum", "P", GenFamily::Momentum);
        break;
    }
    return cache.emplace(key, std::move(p)).first->second;
}

std::vector<Relation> relation_list(PresetName n, DerivTableVariant v) {
    switch (n) {
    case PresetName::QPlaneA:
    case PresetName::QPlaneB:
    case PresetName::QPlaneShort: return qplane_relations(n);
    case PresetName::Twistor: return twistor_relations();
    case PresetName::NullVector: return nullvector_coordinate_relations();
    case PresetName::NullVectorDiff: return nullvector_diff_relations();
    case PresetName::CoordDeriv: return coord_deriv_relations(v);
    case PresetName::DerivOnly:
    case PresetName::Momentum: return deriv_deriv_relations(0);
    }
    throw std::logic_error("unknown preset");
}

Element named_element(const std::string& name) {
    if (name == "qdet")
        return word({NV_X11, NV_X22}) - qp(2) * word({NV_X12, NV_X21});
    if (name == "qdalembertian")
        return word({0, 3}) - qp(2) * word({1, 2});
    if (name == "qdet-twistor")
        return word({TW_X, TW_XB, TW_Y, TW_YB}) -
               qp(2) * word({TW_X, TW_YB, TW_Y, TW_XB});
    throw std::invalid_argument("unknown named element '" + name + "'");
}

DerivationTable derivation_table(PresetName n) {
    DerivationTable t;
    switch (n) {
    case PresetName::QPlaneA:
    case PresetName::QPlaneB:
    case PresetName::QPlaneShort:
        t.images[QP_X] = word({QP_DX});
        t.images[QP_Y] = word({QP_DY});
        t.images[QP_DX] = Element::zero();
        t.images[QP_DY] = Element::zero();
        return t;
    case PresetName::Twistor:
        for (int c = 0; c < 4; ++c) {
            t.images[c] = word({c + 4});
            t.images[c + 4] = Element::zero();
        }
        return t;
    case PresetName::NullVectorDiff:
        for (int c = 0; c < 4; ++c) {
            t.images[c] = word({c + 4});
            t.images[c + 4] = Element::zero();
        }
        return t;
    default:
        throw std::invalid_argument("preset '" + to_string(n) +
                                    "' carries no exterior differential");
    }
}

Morphism qplane_automorphism() {
    Morphism m;
    m.coeff_action = CoeffAction::InvertQ;
    m.images[QP_X] = word({QP_Y});
    m.images[QP_Y] = word({QP_X});
    m.images[QP_DX] = word({QP_DY});
    m.images[QP_DY] = word({QP_DX});
    return m;
}

Morphism realization_map() {
    const Presentation& tw = preset(PresetName::Twistor);
    DerivationTable delta = derivation_table(PresetName::Twistor);
    Morphism rho;
    rho.images[NV_X11] = word({TW_X, TW_XB});
    rho.images[NV_X12] = word({TW_X, TW_YB});
    rho.images[NV_X21] = word({TW_Y, TW_XB});
    rho.images[NV_X22] = word({TW_Y, TW_YB});
    for (int c = 0; c < 4; ++c)
        rho.images[NV_DX11 + c] = apply_derivation(rho.images[c], delta, tw);
    return rho;
}

Morphism momentum_realization() {
    Morphism m;
    for (int k = 0; k < 4; ++k)
        m.images[k] = Element::from_word({k}, -QLaurent::unit_i());
    return m;
}

EpsilonTensor EpsilonTensor::standard() {
    EpsilonTensor t;
    t.upper[0][1] = QLaurent::q_pow(1);
    t.upper[1][0] = -QLaurent::q_pow(-1);
    t.lower[0][1] = -QLaurent::q_pow(-1);
    t.lower[1][0] = QLaurent::q_pow(1);
    return t;
}

QLaurent eps_contract(const EpsilonTensor& t) {
    QLaurent s;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) s += t.upper[a][b] * t.lower[b][a];
    return s;
}

Element eps_null(const EpsilonTensor& t) {
    const Presentation& tw = preset(PresetName::Twistor);
    const int phi[2] = {TW_X, TW_Y};
    Element s;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            s += t.lower[a][b] * word({phi[a], phi[b]});
    return normalize(s, tw);
}

const Presentation& two_sided_coord_deriv(DerivTableVariant v) {
    static std::map<DerivTableVariant, Presentation> cache;
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache.find(v);
    if (it != cache.end()) return it->second;
    return cache.emplace(v, build_two_sided(v)).first->second;
}

} // namespace qcone::presets
