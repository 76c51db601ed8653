#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qcone/expsolve.hpp"

using namespace qcone;
using namespace qcone::expsolve;

namespace {

ExponentForm v(const char* name) { return ExponentForm::var(name); }

ExponentSystem expected_independent() {
    ExponentSystem sys;
    sys.unknown_order = {"n", "m", "k", "l"};
    sys.equations = {
        {v("m") - v("n") - ExponentForm(1), "expected"},
        {v("n") - v("k") - ExponentForm(1), "expected"},
        {v("l") - v("k") - ExponentForm(1), "expected"},
    };
    return sys;
}

} // namespace

TEST_CASE("exponent forms are canonical") {
    ExponentForm f = v("n") - v("n");
    CHECK(f.is_zero());
    CHECK((v("m") + v("m")).coeff("m") == Rat(2));
    CHECK((v("m") - v("k")).str() == "-k + m");
    CHECK(ExponentForm(Rat(-2)).str() == "-2");
}

TEST_CASE("generated system row-reduces to the three independent equations") {
    ExponentSystem sys = generate_constraints(ExponentAnsatz::general());
    CHECK(sys.unknown_order == std::vector<std::string>{"n", "m", "k", "l"});
    CHECK(row_reduce(sys) == row_reduce(expected_independent()));
    // no unsatisfiable marker
    for (const auto& eq : sys.equations)
        CHECK_FALSE(eq.form.is_constant());
}

TEST_CASE("empty target list yields an empty system") {
    ExponentSystem sys = generate_constraints(ExponentAnsatz::general(), {});
    CHECK(sys.equations.empty());
}

TEST_CASE("partial target lists constrain only what they mention") {
    // the first two component relations give m-n=1 and n-k=1 alone
    ExponentSystem sys = generate_constraints(ExponentAnsatz::general(), {0, 1});
    ExponentSystem expected;
    expected.unknown_order = sys.unknown_order;
    expected.equations = {
        {v("m") - v("n") - ExponentForm(1), ""},
        {v("n") - v("k") - ExponentForm(1), ""},
    };
    CHECK(row_reduce(sys) == row_reduce(expected));
    SolutionFamily family = solve(sys);
    CHECK(family.free_unknowns.size() == 2);
    CHECK_THROWS_AS(generate_constraints(ExponentAnsatz::general(), {6}),
                    std::invalid_argument);
}

TEST_CASE("all-zero ansatz is unsatisfiable") {
    ExponentSystem sys = generate_constraints(ExponentAnsatz::constant_zero());
    bool has_marker = false;
    for (const auto& eq : sys.equations)
        if (eq.form.is_constant() && !eq.form.is_zero()) has_marker = true;
    CHECK(has_marker);
    CHECK_THROWS_AS(solve(sys), InconsistentSystem);
}

TEST_CASE("solution family has one free unknown and the published shape") {
    ExponentAnsatz ansatz = ExponentAnsatz::general();
    SolutionFamily family = solve(generate_constraints(ansatz));
    CHECK_FALSE(family.unique());
    CHECK(family.free_unknowns.size() == 1);
    CHECK(family.integral());
    // m = n+1, k = n-1, l = n as forms, independent of which unknown is free
    CHECK(family.value_of("m") - family.value_of("n") == ExponentForm(1));
    CHECK(family.value_of("n") - family.value_of("k") == ExponentForm(1));
    CHECK(family.value_of("l") - family.value_of("k") == ExponentForm(1));
    CHECK(closure_holds(substitute(ansatz, family)));
}

TEST_CASE("reality condition selects the published point") {
    ExponentAnsatz ansatz = ExponentAnsatz::general();
    ExponentSystem sys = generate_constraints(ansatz);
    SolutionFamily sol = solve(sys, {reality_constraint(ansatz)});
    REQUIRE(sol.unique());
    CHECK(sol.integral());
    auto p = sol.point();
    CHECK(p.at("n") == Rat(0));
    CHECK(p.at("m") == Rat(1));
    CHECK(p.at("k") == Rat(-1));
    CHECK(p.at("l") == Rat(0));
    CHECK(closure_holds(substitute(ansatz, sol)));
}

TEST_CASE("star closure alone forces 2n = 0 and m + k = 0") {
    ExponentAnsatz ansatz = ExponentAnsatz::general();
    auto star = star_closure_constraints(ansatz);
    ExponentSystem star_sys;
    star_sys.unknown_order = {"n", "m", "k", "l"};
    star_sys.equations = star;

    ExponentSystem expected;
    expected.unknown_order = star_sys.unknown_order;
    expected.equations = {{v("n") + v("n"), "2n"},
                          {v("m") + v("k"), "m+k"},
                          {v("l") + v("l"), "2l"}};
    CHECK(row_reduce(star_sys) == row_reduce(expected));
}

TEST_CASE("star closure and reality give the same solution set") {
    ExponentAnsatz ansatz = ExponentAnsatz::general();
    ExponentSystem sys = generate_constraints(ansatz);
    auto star = star_closure_constraints(ansatz);
    SolutionFamily with_star = solve(sys, star);
    SolutionFamily with_reality = solve(sys, {reality_constraint(ansatz)});
    REQUIRE(with_star.unique());
    REQUIRE(with_reality.unique());
    CHECK(with_star.point() == with_reality.point());
    // set equality at the system level as well
    CHECK(row_reduce(sys, star) == row_reduce(sys, {reality_constraint(ansatz)}));
}

TEST_CASE("directly inconsistent constraints throw") {
    ExponentSystem sys;
    sys.unknown_order = {"n"};
    sys.equations = {{v("n") - ExponentForm(1), "n=1"},
                     {v("n") - ExponentForm(2), "n=2"}};
    CHECK_THROWS_AS(solve(sys), InconsistentSystem);
}

TEST_CASE("closure fails for exponents outside the solution set") {
    ExponentAnsatz bad = ExponentAnsatz::constant_zero();
    CHECK_FALSE(closure_holds(bad));
    ExponentAnsatz off = ExponentAnsatz::general();
    off.n = ExponentForm(0);
    off.m = ExponentForm(2); // should be 1
    off.k = ExponentForm(-1);
    off.l = ExponentForm(0);
    CHECK_FALSE(closure_holds(off));
}

TEST_CASE("generation and reduction are deterministic") {
    ExponentSystem a = generate_constraints(ExponentAnsatz::general());
    ExponentSystem b = generate_constraints(ExponentAnsatz::general());
    REQUIRE(a.equations.size() == b.equations.size());
    for (size_t i = 0; i < a.equations.size(); ++i) {
        CHECK(a.equations[i].form == b.equations[i].form);
        CHECK(a.equations[i].provenance == b.equations[i].provenance);
    }
    CHECK(row_reduce(a) == row_reduce(b));
}

TEST_CASE("provenance names the producing relation") {
    ExponentSystem sys = generate_constraints(ExponentAnsatz::general());
    for (const auto& eq : sys.equations)
        CHECK(eq.provenance.find("component-relation[") == 0);
    // the two-term relation contributes through index 5
    bool from_two_term = false;
    for (const auto& eq : sys.equations)
        if (eq.provenance.find("[5]") != std::string::npos) from_two_term = true;
    CHECK(from_two_term);
}
