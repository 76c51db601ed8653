#pragma once

#include <string>
#include <vector>

#include "qcone/presets.hpp"

namespace qcone::verify {

struct Witness {
    std::string input;      // what was checked (relation, overlap word, ...)
    std::string difference; // the offending normalized difference
};

/// Outcome of one check. pass is false exactly when witnesses is
/// nonempty. detail restates the inputs (preset, caps, table variant) so
/// a report can be reproduced on its own.
struct CheckReport {
    std::string check;
    bool pass = true;
    std::string detail;
    std::vector<Witness> witnesses;
};

/// normalize(lhs - rhs) == 0 for every listed relation.
CheckReport check_relations(const std::string& check_name, const Presentation& p,
                            const std::vector<presets::Relation>& rels);

/// Local confluence by exhaustive critical pairs: every word carrying two
/// overlapping redexes must reduce to the same normal form either way.
/// All overlaps of the quadratic rules live in degree 3; degrees above
/// that re-check joinability of disjoint and recreated redexes.
CheckReport check_confluence(const std::string& check_name, const Presentation& p,
                             int max_degree = 3);

/// star(lhs - rhs) normalizes to zero for every rule of the presentation.
CheckReport check_star_closure(const std::string& check_name, const Presentation& p);

/// Every relation of src, mapped through m, lands in the ideal of dst.
CheckReport check_morphism_maps_relations(const std::string& check_name,
                                          const Morphism& m,
                                          presets::PresetName src,
                                          presets::PresetName dst);

/// The x<->y, q<->q^-1 automorphism exchanges the two long calculi,
/// fixes the short one, and squares to the identity.
std::vector<CheckReport> check_automorphism();

/// The twistor realization: component relations, the light-cone element
/// and its differential all vanish in the twistor calculus.
CheckReport check_realization();

std::vector<CheckReport> check_epsilon();
std::vector<CheckReport> check_exponent_solver();
std::vector<CheckReport> check_classical_limit();
CheckReport check_momentum_realization();

struct SuiteOptions {
    int max_degree = 3;
    presets::DerivTableVariant variant = presets::DerivTableVariant::Corrected;
    std::string filter; // substring of the check name; empty selects all
};

struct SuiteItem {
    CheckReport report;
    bool expect_pass = true;
};

/// The full deterministic suite. The two-sided coordinate-derivative
/// system is registered expected-non-confluent; everything else is
/// expected to pass.
std::vector<SuiteItem> run_all(const SuiteOptions& options = {});

/// true when every item matches its expectation (an expected failure
/// must fail and must carry a witness).
bool aggregate_ok(const std::vector<SuiteItem>& items);

} // namespace qcone::verify
