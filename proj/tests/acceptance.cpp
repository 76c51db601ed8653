// Acceptance suite: one line per criterion, every check exact.
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "qcone/cli.hpp"
#include "qcone/expsolve.hpp"
#include "qcone/opaction.hpp"
#include "qcone/parse.hpp"
#include "qcone/verify.hpp"

using namespace qcone;
using presets::PresetName;

namespace {

QLaurent qp(int k) { return QLaurent::q_pow(2 * k); }

struct Criterion {
    std::string name;
    std::vector<std::string> failures;
    void expect(bool ok, const std::string& what) {
        if (!ok) failures.push_back(what);
    }
};

std::vector<Word> words_up_to(const Presentation& p, int maxlen) {
    std::vector<Word> out{{}};
    const int n = (int)p.alphabet.size();
    for (int len = 1; len <= maxlen; ++len) {
        Word w(len, 0);
        for (;;) {
            out.push_back(w);
            int pos = len - 1;
            while (pos >= 0 && w[pos] == n - 1) w[pos--] = 0;
            if (pos < 0) break;
            ++w[pos];
        }
    }
    return out;
}

void criterion_relations(Criterion& c) {
    for (PresetName n : {PresetName::QPlaneShort, PresetName::Twistor,
                         PresetName::NullVector, PresetName::NullVectorDiff,
                         PresetName::DerivOnly}) {
        auto rep = verify::check_relations("relations", presets::preset(n),
                                           presets::relation_list(n));
        c.expect(rep.pass, "relation suite for " + presets::to_string(n));
    }
}

void criterion_confluence(Criterion& c) {
    for (PresetName n : {PresetName::QPlaneShort, PresetName::Twistor,
                         PresetName::NullVector, PresetName::NullVectorDiff,
                         PresetName::DerivOnly}) {
        auto rep = verify::check_confluence("confluence", presets::preset(n), 3);
        c.expect(rep.pass, "critical pairs for " + presets::to_string(n));
    }
}

// coefficient is a nonzero multiple of (1 - q^{+-4}): exactly two terms,
// opposite coefficients, exponent gap 4
bool is_one_minus_q4_multiple(const QLaurent& v) {
    if (v.term_count() != 2) return false;
    auto it = v.terms().begin();
    auto [e1, c1] = *it++;
    auto [e2, c2] = *it;
    return (c1 + c2).is_zero() && (e2 - e1 == 8 || e1 - e2 == 8);
}

void criterion_expected_fail(Criterion& c) {
    const Presentation& ts = presets::two_sided_coord_deriv();
    auto rep = verify::check_confluence("confluence", ts, 3);
    c.expect(!rep.pass, "two-sided system must be non-confluent");
    c.expect(!rep.witnesses.empty(), "witness must be preserved");

    bool structural = false;
    for (const Word& w : words_up_to(ts, 3)) {
        if (w.size() != 3 || !ts.redex_at(w, 0) || !ts.redex_at(w, 1)) continue;
        Element diff = normalize(apply_rule_at(w, 0, ts), ts) -
                       normalize(apply_rule_at(w, 1, ts), ts);
        if (diff.terms.size() != 1) continue;
        const auto& [dw, dc] = *diff.terms.begin();
        if (dw.size() == 1 && dw[0] < 4 && is_one_minus_q4_multiple(dc))
            structural = true;
    }
    c.expect(structural,
             "a witness differing by a (1 - q^±4) multiple of a coordinate letter");

    // the suite registers it as the one expected failure
    auto items = verify::run_all({});
    c.expect(verify::aggregate_ok(items), "run_all aggregate");
    int expected_fails = 0;
    for (const auto& item : items)
        if (!item.expect_pass) ++expected_fails;
    c.expect(expected_fails == 1, "exactly one expected-fail check");

    // operator action: composition and linearity on all monomials <= 3
    using namespace opaction;
    auto monos = words_up_to(presets::preset(PresetName::NullVector), 3);
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
            OperatorExpr da = Element::from_word({a}), db = Element::from_word({b});
            OperatorExpr ab = compose(da, db);
            for (const Word& w : monos) {
                Element f = Element::from_word(w);
                if (!(act(ab, f) == act(da, act(db, f)))) {
                    c.expect(false, "act/compose compatibility");
                    return;
                }
            }
        }
    QLaurent s = qp(2) - qp(-2);
    for (size_t i = 0; i + 1 < monos.size(); i += 7) {
        Element f1 = Element::from_word(monos[i]);
        Element f2 = Element::from_word(monos[i + 1]);
        c.expect(opaction::act(opaction::box_q(), s * f1 + f2) ==
                     s * opaction::act(opaction::box_q(), f1) +
                         opaction::act(opaction::box_q(), f2),
                 "act linearity");
    }
}

void criterion_realization(Criterion& c) {
    const Presentation& nv = presets::preset(PresetName::NullVectorDiff);
    const Presentation& tw = presets::preset(PresetName::Twistor);
    Morphism rho = presets::realization_map();

    for (const auto& rel : presets::relation_list(PresetName::NullVector))
        c.expect(apply_morphism(rel.lhs - rel.rhs, rho, nv, tw).is_zero(),
                 "component relation " + rel.label + " under the realization");

    Element qdet = presets::named_element("qdet");
    c.expect(apply_morphism(qdet, rho, nv, tw).is_zero(), "rho(qdet) = 0");

    DerivationTable delta = presets::derivation_table(PresetName::NullVectorDiff);
    Element dqdet = apply_derivation(qdet, delta, nv);
    c.expect(apply_morphism(dqdet, rho, nv, tw).is_zero(), "d(qdet) = 0 under rho");
}

void criterion_automorphism(Criterion& c) {
    Morphism a = presets::qplane_automorphism();
    c.expect(verify::check_morphism_maps_relations("a", a, PresetName::QPlaneA,
                                                   PresetName::QPlaneB)
                 .pass,
             "A maps calculus (a) into the ideal of (b)");
    c.expect(verify::check_morphism_maps_relations("a", a, PresetName::QPlaneB,
                                                   PresetName::QPlaneA)
                 .pass,
             "A maps calculus (b) into the ideal of (a)");
    c.expect(verify::check_morphism_maps_relations("a", a, PresetName::QPlaneShort,
                                                   PresetName::QPlaneShort)
                 .pass,
             "A fixes the short calculus");

    const Presentation& pc = presets::preset(PresetName::QPlaneShort);
    for (const Word& w : words_up_to(pc, 3)) {
        Element e = Element::from_word(w);
        Element twice = apply_morphism(apply_morphism(e, a, pc, pc), a, pc, pc);
        if (!(twice == normalize(e, pc))) {
            c.expect(false, "A composed with A is the identity");
            return;
        }
    }
}

void criterion_solver(Criterion& c) {
    using namespace expsolve;
    ExponentAnsatz ansatz = ExponentAnsatz::general();
    ExponentSystem sys = generate_constraints(ansatz);

    ExponentSystem expected;
    expected.unknown_order = sys.unknown_order;
    expected.equations = {
        {ExponentForm::var("m") - ExponentForm::var("n") - ExponentForm(1), ""},
        {ExponentForm::var("n") - ExponentForm::var("k") - ExponentForm(1), ""},
        {ExponentForm::var("l") - ExponentForm::var("k") - ExponentForm(1), ""},
    };
    c.expect(row_reduce(sys) == row_reduce(expected),
             "system row-reduces to m-n=1, n-k=1, l-k=1");

    auto check_point = [&](const SolutionFamily& sol, const std::string& route) {
        if (!sol.unique() || !sol.integral()) {
            c.expect(false, route + " solution is a unique integral point");
            return;
        }
        auto p = sol.point();
        c.expect(p.at("n") == Rat(0) && p.at("m") == Rat(1) &&
                     p.at("k") == Rat(-1) && p.at("l") == Rat(0),
                 route + " gives n=0, m=1, k=-1, l=0");
    };
    try {
        check_point(solve(sys, {reality_constraint(ansatz)}), "reality");
        check_point(solve(sys, star_closure_constraints(ansatz)), "star-closure");
    } catch (const InconsistentSystem& e) {
        c.expect(false, std::string("solver: ") + e.what());
    }
}

void criterion_limit(Criterion& c) {
    using namespace opaction;
    auto parts = classical_limit(box_q(), 1);
    Element h0 = parts.count(0) ? parts[0] : Element::zero();
    Element h1 = parts.count(1) ? parts[1] : Element::zero();
    c.expect(h0 == Element::from_word({0, 3}) - Element::from_word({1, 2}),
             "h^0 part is the ordinary wave operator");
    c.expect(h1 == Element::from_word({1, 2}, QLaurent(GaussRat(Rat(0), Rat(-2)))),
             "h^1 part is -2i D12 D21");
    OperatorExpr d12 = Element::from_word({1}), d21 = Element::from_word({2});
    c.expect((compose(d12, d21) - compose(d21, d12)).is_zero(),
             "off-shell momenta commute");
}

void criterion_epsilon(Criterion& c) {
    auto t = presets::EpsilonTensor::standard();
    c.expect(presets::eps_contract(t) == qp(1) + qp(-1), "contraction is q + q^-1");
    c.expect(presets::eps_null(t).is_zero(), "null twistor contraction vanishes");
}

void criterion_properties(Criterion& c) {
    std::mt19937 rng(60221023);

    for (PresetName n : presets::all_presets()) {
        const Presentation& p = presets::preset(n);
        for (const Word& w : words_up_to(p, 4)) {
            Element nf = normalize(Element::from_word(w), p);
            if (!(normalize(nf, p) == nf)) {
                c.expect(false, "normalize idempotent on " + p.name);
                break;
            }
        }
        auto words = words_up_to(p, 3);
        std::uniform_int_distribution<size_t> pick(0, words.size() - 1);
        QLaurent s = qp(1) + qp(-3);
        for (int trial = 0; trial < 60; ++trial) {
            Element e1 = Element::from_word(words[pick(rng)]);
            Element e2 = Element::from_word(words[pick(rng)]);
            if (!(normalize(s * e1 + e2, p) ==
                  s * normalize(e1, p) + normalize(e2, p))) {
                c.expect(false, "normalize linear on " + p.name);
                break;
            }
        }
    }

    for (PresetName n :
         {PresetName::Twistor, PresetName::NullVector, PresetName::NullVectorDiff}) {
        const Presentation& p = presets::preset(n);
        bool ok = true;
        for (const auto& ga : p.alphabet)
            for (const auto& gb : p.alphabet) {
                Element ab = mul(Element::from_word({ga.id}),
                                 Element::from_word({gb.id}), p);
                ok = ok && star_element(star_element(ab, p), p) == ab;
                ok = ok && star_element(ab, p) ==
                               mul(star_element(Element::from_word({gb.id}), p),
                                   star_element(Element::from_word({ga.id}), p), p);
            }
        c.expect(ok, "star involutive and antimultiplicative on " + p.name);
    }

    for (PresetName n : {PresetName::QPlaneA, PresetName::QPlaneB,
                         PresetName::QPlaneShort, PresetName::Twistor,
                         PresetName::NullVectorDiff}) {
        const Presentation& p = presets::preset(n);
        DerivationTable d = presets::derivation_table(n);
        bool ok = true;
        for (const Word& w : words_up_to(p, 4))
            ok = ok && apply_derivation(apply_derivation(Element::from_word(w), d, p),
                                        d, p)
                           .is_zero();
        c.expect(ok, "d^2 = 0 up to degree 4 on " + p.name);
    }

    std::uniform_int_distribution<int> expo(-6, 6), coef(-3, 3), nterms(0, 3);
    for (int trial = 0; trial < 200; ++trial) {
        QLaurent a, b;
        for (int t = nterms(rng); t > 0; --t)
            a.add(expo(rng), GaussRat(Rat(coef(rng)), Rat(coef(rng))));
        for (int t = nterms(rng); t > 0; --t)
            b.add(expo(rng), GaussRat(Rat(coef(rng)), Rat(coef(rng))));
        for (int ord : {0, 2, 4})
            if (!(expand_h(a * b, ord) == expand_h(a, ord) * expand_h(b, ord))) {
                c.expect(false, "h-expansion multiplicative modulo truncation");
                trial = 200;
                break;
            }
    }
}

void criterion_cli(Criterion& c) {
    std::ostringstream out1, out2, err;
    int code1 = cli::run({"--format", "json", "verify", "--all"}, out1, err);
    int code2 = cli::run({"--format", "json", "verify", "--all"}, out2, err);
    c.expect(code1 == 0 && code2 == 0, "verify --all exits 0");
    c.expect(out1.str() == out2.str(), "JSON output is byte-deterministic");
    auto doc = nlohmann::json::parse(out1.str());
    c.expect(doc["ok"] == true, "JSON aggregate ok");

    // parse round trip over rendered normal forms from every preset
    std::mt19937 rng(17);
    for (PresetName n : presets::all_presets()) {
        const Presentation& p = presets::preset(n);
        std::vector<Element> corpus;
        for (const auto& [key, rule] : p.rules) corpus.push_back(rule.rhs);
        const int size = (int)p.alphabet.size();
        for (int trial = 0; trial < 40; ++trial) {
            Word w;
            for (int i = 0, len = 1 + (int)(rng() % 4); i < len; ++i)
                w.push_back((int)(rng() % size));
            corpus.push_back(normalize(Element::from_word(w, qp(1) - qp(-1)), p));
        }
        for (const Element& e : corpus) {
            std::string s = element_to_string(e, p);
            if (!(to_element(parse(s, p)) == e) ||
                element_to_string(to_element(parse(s, p)), p) != s) {
                c.expect(false, "round trip on " + p.name + ": " + s);
                return;
            }
        }
    }
}

} // namespace

int main() {
    std::vector<Criterion> criteria = {
        {"criterion 1: relation suites normalize to zero", {}},
        {"criterion 2: critical pairs confluent for the five calculi", {}},
        {"criterion 3: two-sided system refuted, operator action consistent", {}},
        {"criterion 4: twistor realization", {}},
        {"criterion 5: quantum-plane automorphism", {}},
        {"criterion 6: exponent solver", {}},
        {"criterion 7: classical limit and off-shell commutativity", {}},
        {"criterion 8: epsilon tensor identities", {}},
        {"criterion 9: algebraic property sweeps", {}},
        {"criterion 10: CLI determinism and parse round trip", {}},
    };
    std::vector<std::function<void(Criterion&)>> runners = {
        criterion_relations,  criterion_confluence, criterion_expected_fail,
        criterion_realization, criterion_automorphism, criterion_solver,
        criterion_limit,      criterion_epsilon,    criterion_properties,
        criterion_cli,
    };

    bool all_ok = true;
    for (size_t i = 0; i < criteria.size(); ++i) {
        runners[i](criteria[i]);
        bool ok = criteria[i].failures.empty();
        all_ok = all_ok && ok;
        std::cout << (ok ? "PASS  " : "FAIL  ") << criteria[i].name << "\n";
        for (const auto& f : criteria[i].failures) std::cout << "      - " << f << "\n";
    }
    std::cout << (all_ok ? "acceptance: all criteria passed"
                         : "acceptance: FAILURES above")
              << "\n";
    return all_ok ? 0 : 1;
}
