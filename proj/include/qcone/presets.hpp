#pragma once

#include <string>
#include <vector>

#include "qcone/ncalg.hpp"

namespace qcone::presets {

enum class PresetName {
    QPlaneA,
    QPlaneB,
    QPlaneShort,
    Twistor,
    NullVector,
    NullVectorDiff,
    CoordDeriv,
    DerivOnly,
    Momentum,
};

/// The derivative table against the null-vector coordinates is published
/// with one internally contradictory block (the mixed-index derivative is
/// given two different weights against the same coordinate while one
/// coordinate is missing). Corrected replaces the stray duplicate line by
/// the symmetry-completing one; Printed keeps the table as published.
enum class DerivTableVariant { Corrected, Printed };

const std::vector<PresetName>& all_presets();
std::string to_string(PresetName n);
PresetName preset_from_string(const std::string& s);

/// Validated presentation for the named algebra. Presentations are built
/// once and cached; callers share them read-only.
const Presentation& preset(PresetName n,
                           DerivTableVariant v = DerivTableVariant::Corrected);

/// One source relation, kept in its published orientation for the
/// relation checker (lhs = rhs, both unnormalized).
struct Relation {
    std::string label;
    Element lhs;
    Element rhs;
};

std::vector<Relation> relation_list(PresetName n,
                                    DerivTableVariant v = DerivTableVariant::Corrected);

/// qdet            light-cone element X11*X22 - q^2 X12*X21 (null-vector letters)
/// qdalembertian   D11*D22 - q^2 D12*D21 (derivative letters)
/// qdet-twistor    the light-cone element written in twistor bilinears
Element named_element(const std::string& name);

/// Realization of the null-vector calculus inside the twistor calculus:
/// coordinates map to twistor bilinears, differentials to their Leibniz
/// images.
Morphism realization_map();

/// Exterior differential on the preset's coordinate generators.
DerivationTable derivation_table(PresetName n);

/// Quantum-plane automorphism x <-> y, dx <-> dy, q -> q^{-1}; valid
/// between any two of the qplane presets.
Morphism qplane_automorphism();

/// Momentum components as -i times the corresponding derivative
/// (momentum preset -> deriv-only preset).
Morphism momentum_realization();

/// q-deformed antisymmetric 2x2 tensor. The upper-index entries are
/// fixed; the lower-index ones are the unique choice (up to checked sign)
/// making both contraction identities below exact.
struct EpsilonTensor {
    QLaurent upper[2][2];
    QLaurent lower[2][2];
    static EpsilonTensor standard();
};

/// sum_{A,B} eps^{AB} eps_{BA}; equals q + q^{-1} for the standard tensor.
QLaurent eps_contract(const EpsilonTensor& t);

/// normalize(sum_{A,B} phi^A phi^B eps_{AB}) in the twistor preset, with
/// phi = (x, y); zero for the standard tensor.
Element eps_null(const EpsilonTensor& t);

/// Coordinates and derivatives merged into a single two-sided rewrite
/// system. Not part of the CLI preset vocabulary: the verification suite
/// uses it to exhibit the failure of local confluence.
const Presentation& two_sided_coord_deriv(DerivTableVariant v = DerivTableVariant::Corrected);

} // namespace qcone::presets
