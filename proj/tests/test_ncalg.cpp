#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qcone/presets.hpp"

using namespace qcone;
using presets::PresetName;

namespace {

QLaurent qp(int k) { return QLaurent::q_pow(2 * k); }

// reference normalizer for swap-only rule sets: repeatedly exchanges the
// first out-of-order pair, accumulating the rule coefficient; valid only
// when every applicable rule has a single two-letter rhs
std::pair<QLaurent, Word> swap_oracle(Word w, const Presentation& p) {
    QLaurent c = QLaurent::one();
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i + 1 < w.size(); ++i) {
            const RewriteRule* r = p.find_rule(w[i], w[i + 1]);
            if (!r) continue;
            REQUIRE(r->rhs.terms.size() == 1);
            const auto& [rw, rc] = *r->rhs.terms.begin();
            REQUIRE(rw.size() == 2);
            c *= rc;
            w[i] = rw[0];
            w[i + 1] = rw[1];
            changed = true;
            break;
        }
    }
    return {c, w};
}

std::vector<Word> words_up_to(const Presentation& p, int maxlen, bool with_unit = true) {
    std::vector<Word> out;
    if (with_unit) out.push_back({});
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

} // namespace

TEST_CASE("validation accepts the quantum plane and the empty presentation") {
    CHECK(validate_presentation(presets::preset(PresetName::QPlaneShort)).valid());
    Presentation empty;
    empty.name = "empty";
    CHECK(validate_presentation(empty).valid());
}

TEST_CASE("validation rejects a rule whose rhs repeats its lhs word") {
    Presentation p;
    p.name = "loop";
    p.alphabet = {{0, "a", Parity::Even, std::nullopt, GenFamily::Coordinate},
                  {1, "b", Parity::Even, std::nullopt, GenFamily::Coordinate}};
    p.rules.emplace(std::make_pair(1, 0),
                    RewriteRule{{1, 0}, Element::from_word({1, 0}), RuleKind::Coordinate});
    auto report = validate_presentation(p);
    CHECK_FALSE(report.valid());
    CHECK(report.issues.size() == 1);
}

TEST_CASE("validation reports duplicate generator names") {
    Presentation p;
    p.alphabet = {{0, "a", Parity::Even, std::nullopt, GenFamily::Coordinate},
                  {1, "a", Parity::Even, std::nullopt, GenFamily::Coordinate}};
    CHECK_FALSE(validate_presentation(p).valid());
}

TEST_CASE("normalize: basic reductions") {
    const Presentation& qs = presets::preset(PresetName::QPlaneShort);
    const Presentation& nv = presets::preset(PresetName::NullVector);

    // y x -> q^-1 x y
    CHECK(normalize(Element::from_word({1, 0}), qs) ==
          Element::from_word({0, 1}, qp(-1)));

    // X22 X11 -> X11 X22 - (q^2 - q^-2) X12 X21
    Element expected = Element::from_word({0, 3}) -
                       (qp(2) - qp(-2)) * Element::from_word({1, 2});
    CHECK(normalize(Element::from_word({3, 0}), nv) == expected);

    // dx dx -> 0
    CHECK(normalize(Element::from_word({2, 2}), qs).is_zero());
}

TEST_CASE("normalize y x x against the pairwise-swap oracle") {
    const Presentation& qs = presets::preset(PresetName::QPlaneShort);
    auto [oc, ow] = swap_oracle({1, 0, 0}, qs);
    CHECK(oc == qp(-2));
    CHECK(ow == Word{0, 0, 1});
    CHECK(normalize(Element::from_word({1, 0, 0}), qs) == Element::from_word(ow, oc));
}

TEST_CASE("mul: bilinear product with normalization") {
    const Presentation& qs = presets::preset(PresetName::QPlaneShort);
    Element x = Element::from_word({0}), y = Element::from_word({1});
    CHECK(mul(x, y, qs) == Element::from_word({0, 1}));
    CHECK(mul(y, x, qs) == Element::from_word({0, 1}, qp(-1)));

    // (x+y)^2 via expand-then-normalize: x^2 + xy + yx + y^2
    Element sum = x + y;
    Element by_hand = normalize(Element::from_word({0, 0}) + Element::from_word({0, 1}) +
                                    Element::from_word({1, 0}) + Element::from_word({1, 1}),
                                qs);
    Element expected = Element::from_word({0, 0}) +
                       (qp(-1) + qp(0)) * Element::from_word({0, 1}) +
                       Element::from_word({1, 1});
    CHECK(by_hand == expected);
    CHECK(mul(sum, sum, qs) == expected);
}

TEST_CASE("star: definition, involution, and relation closure") {
    const Presentation& tw = presets::preset(PresetName::Twistor);
    // star(x y) = normalize(yb xb) = q^-1 xb yb
    CHECK(star_element(Element::from_word({0, 2}), tw) ==
          Element::from_word({1, 3}, qp(-1)));
    // involution on x yb
    Element e = Element::from_word({0, 3});
    CHECK(star_element(star_element(e, tw), tw) == normalize(e, tw));
    // star(xy - q yx) normalizes to zero
    Element rel = Element::from_word({0, 2}) - qp(1) * Element::from_word({2, 0});
    CHECK(star_element(rel, tw).is_zero());
}

TEST_CASE("star is involutive and antimultiplicative on generator pairs") {
    for (PresetName n : {PresetName::Twistor, PresetName::NullVectorDiff}) {
        const Presentation& p = presets::preset(n);
        for (const auto& ga : p.alphabet)
            for (const auto& gb : p.alphabet) {
                Element a = Element::from_word({ga.id});
                Element b = Element::from_word({gb.id});
                Element ab = mul(a, b, p);
                CHECK(star_element(star_element(ab, p), p) == ab);
                CHECK(star_element(ab, p) ==
                      mul(star_element(b, p), star_element(a, p), p));
            }
    }
}

TEST_CASE("star errors without conjugates") {
    const Presentation& qs = presets::preset(PresetName::QPlaneShort);
    CHECK_THROWS_AS(star_element(Element::from_word({0}), qs), std::invalid_argument);
}

TEST_CASE("derivation: Leibniz values on the short calculus") {
    const Presentation& qs = presets::preset(PresetName::QPlaneShort);
    DerivationTable d = presets::derivation_table(PresetName::QPlaneShort);

    // d(x y) = dx y + x dy -> q y dx + x dy
    Element got = apply_derivation(Element::from_word({0, 1}), d, qs);
    CHECK(got == Element::from_word({1, 2}, qp(1)) + Element::from_word({0, 3}));

    // d(dx y) = -dx dy (graded sign, d(dx) = 0)
    CHECK(apply_derivation(Element::from_word({2, 1}), d, qs) ==
          Element::from_word({2, 3}, -qp(0)));
}

TEST_CASE("derivation squares to zero on monomials of degree <= 4") {
    for (PresetName n : {PresetName::QPlaneA, PresetName::QPlaneB,
                         PresetName::QPlaneShort, PresetName::Twistor,
                         PresetName::NullVectorDiff}) {
        const Presentation& p = presets::preset(n);
        DerivationTable d = presets::derivation_table(n);
        for (const Word& w : words_up_to(p, 4)) {
            Element once = apply_derivation(Element::from_word(w), d, p);
            CHECK(apply_derivation(once, d, p).is_zero());
        }
    }
}

TEST_CASE("derivation errors on a generator without an image") {
    const Presentation& qs = presets::preset(PresetName::QPlaneShort);
    DerivationTable partial;
    partial.images[0] = Element::from_word({2});
    CHECK_THROWS_AS(apply_derivation(Element::from_word({0, 1}), partial, qs),
                    std::invalid_argument);
}

TEST_CASE("morphism: automorphism and realization basics") {
    const Presentation& qs = presets::preset(PresetName::QPlaneShort);
    Morphism a = presets::qplane_automorphism();

    // A(xy - q yx) normalizes to zero
    Element rel = Element::from_word({0, 1}) - qp(1) * Element::from_word({1, 0});
    CHECK(apply_morphism(rel, a, qs, qs).is_zero());

    // identity morphism
    Morphism id;
    for (const auto& g : qs.alphabet) id.images[g.id] = Element::from_word({g.id});
    Element e = Element::from_word({1, 0}) + qp(3) * Element::from_word({2});
    CHECK(apply_morphism(e, id, qs, qs) == normalize(e, qs));

    // rho(X11) = x xb
    Morphism rho = presets::realization_map();
    const Presentation& nv = presets::preset(PresetName::NullVectorDiff);
    const Presentation& tw = presets::preset(PresetName::Twistor);
    CHECK(apply_morphism(Element::from_word({0}), rho, nv, tw) ==
          Element::from_word({0, 1}));
    CHECK(apply_morphism(Element::unit(), rho, nv, tw) == Element::unit());
}

TEST_CASE("morphism errors on a missing image") {
    const Presentation& qs = presets::preset(PresetName::QPlaneShort);
    Morphism partial;
    partial.images[0] = Element::from_word({1});
    CHECK_THROWS_AS(apply_morphism(Element::from_word({0, 1}), partial, qs, qs),
                    std::invalid_argument);
}

TEST_CASE("normalize is idempotent and redex-free on all words of degree <= 4") {
    for (PresetName n : presets::all_presets()) {
        const Presentation& p = presets::preset(n);
        for (const Word& w : words_up_to(p, 4)) {
            Element nf = normalize(Element::from_word(w), p);
            CHECK(normalize(nf, p) == nf);
            for (const auto& [nw, nc] : nf.terms)
                for (size_t i = 0; i + 1 < nw.size(); ++i)
                    CHECK_FALSE(p.redex_at(nw, i));
        }
    }
}

TEST_CASE("normalize is linear") {
    std::mt19937 rng(99);
    for (PresetName n : {PresetName::Twistor, PresetName::NullVector,
                         PresetName::QPlaneA, PresetName::CoordDeriv}) {
        const Presentation& p = presets::preset(n);
        auto words = words_up_to(p, 3);
        std::uniform_int_distribution<size_t> pick(0, words.size() - 1);
        for (int trial = 0; trial < 200; ++trial) {
            Element e1 = Element::from_word(words[pick(rng)]);
            Element e2 = Element::from_word(words[pick(rng)]);
            QLaurent c = qp(2) - qp(-1);
            CHECK(normalize(c * e1 + e2, p) ==
                  c * normalize(e1, p) + normalize(e2, p));
        }
    }
}

TEST_CASE("mul is associative on words of degree <= 2") {
    // exhaustive on the null-vector coordinates (the two-term rule is the
    // interesting case) and on the short calculus
    for (PresetName n : {PresetName::NullVector, PresetName::QPlaneShort}) {
        const Presentation& p = presets::preset(n);
        auto words = words_up_to(p, 2);
        for (const Word& wa : words)
            for (const Word& wb : words)
                for (const Word& wc : words) {
                    Element a = Element::from_word(wa), b = Element::from_word(wb),
                            c = Element::from_word(wc);
                    CHECK(mul(mul(a, b, p), c, p) == mul(a, mul(b, c, p), p));
                }
    }
    // sampled on the twistor calculus
    const Presentation& tw = presets::preset(PresetName::Twistor);
    auto words = words_up_to(tw, 2);
    std::mt19937 rng(4);
    std::uniform_int_distribution<size_t> pick(0, words.size() - 1);
    for (int trial = 0; trial < 3000; ++trial) {
        Element a = Element::from_word(words[pick(rng)]);
        Element b = Element::from_word(words[pick(rng)]);
        Element c = Element::from_word(words[pick(rng)]);
        CHECK(mul(mul(a, b, tw), c, tw) == mul(a, mul(b, c, tw), tw));
    }
}

TEST_CASE("every rule rhs word is smaller than its lhs in (length, inversions)") {
    for (PresetName n : presets::all_presets()) {
        const Presentation& p = presets::preset(n);
        for (const auto& [key, rule] : p.rules) {
            Word lhs{key.first, key.second};
            for (const auto& [w, c] : rule.rhs.terms) {
                bool smaller =
                    w.size() < lhs.size() ||
                    (w.size() == lhs.size() &&
                     inversion_count(w) < inversion_count(lhs));
                CHECK(smaller);
            }
        }
    }
}

TEST_CASE("swap-only presets: no rewrite step increases (length, inversions)") {
    // with single-swap rules the letter multiset is preserved and each
    // step removes exactly one inversion; the inhomogeneous two-term and
    // long-calculus rules do not obey a per-step bound in every context
    // (X22*X22*X11*X11 gains an inversion through the X12*X21 branch),
    // so those presets are covered by the termination test below instead
    std::mt19937 rng(2718);
    for (PresetName n : {PresetName::QPlaneShort, PresetName::Twistor,
                         PresetName::DerivOnly, PresetName::Momentum}) {
        const Presentation& p = presets::preset(n);
        auto words = words_up_to(p, 5, /*with_unit=*/false);
        std::uniform_int_distribution<size_t> pick(0, words.size() - 1);
        for (int trial = 0; trial < 400; ++trial) {
            Word w = words[pick(rng)];
            for (int step = 0; step < 64; ++step) {
                std::vector<size_t> redexes;
                for (size_t i = 0; i + 1 < w.size(); ++i)
                    if (p.redex_at(w, i)) redexes.push_back(i);
                if (redexes.empty()) break;
                size_t pos = redexes[rng() % redexes.size()];
                Element stepped = apply_rule_at(w, pos, p);
                auto measure = std::make_pair(w.size(), inversion_count(w));
                if (stepped.is_zero()) break;
                for (const auto& [nw, nc] : stepped.terms) {
                    auto next = std::make_pair(nw.size(), inversion_count(nw));
                    CHECK(next < measure);
                }
                w = stepped.terms.begin()->first;
            }
        }
    }
}

TEST_CASE("random-strategy rewriting terminates on every preset") {
    std::mt19937 rng(31415);
    for (PresetName n : presets::all_presets()) {
        const Presentation& p = presets::preset(n);
        auto words = words_up_to(p, 5, /*with_unit=*/false);
        std::uniform_int_distribution<size_t> pick(0, words.size() - 1);
        for (int trial = 0; trial < 200; ++trial) {
            Word w = words[pick(rng)];
            int steps = 0;
            for (;; ++steps) {
                REQUIRE(steps < 10000);
                std::vector<size_t> redexes;
                for (size_t i = 0; i + 1 < w.size(); ++i)
                    if (p.redex_at(w, i)) redexes.push_back(i);
                if (redexes.empty()) break;
                Element stepped = apply_rule_at(w, redexes[rng() % redexes.size()], p);
                if (stepped.is_zero()) break;
                // follow a random branch
                auto it = stepped.terms.begin();
                std::advance(it, rng() % stepped.terms.size());
                w = it->first;
            }
        }
    }
}

TEST_CASE("element rendering") {
    const Presentation& nv = presets::preset(PresetName::NullVector);
    CHECK(element_to_string(Element::zero(), nv) == "0");
    CHECK(element_to_string(Element::unit(), nv) == "1");
    Element qdet = presets::named_element("qdet");
    CHECK(element_to_string(qdet, nv) == "X11*X22 - q^2*X12*X21");
}
