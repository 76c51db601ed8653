#include "qcone/ncalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace qcone {

void Element::add(const Word& w, const QLaurent& c) {
    if (c.is_zero()) return;
    auto it = terms.find(w);
    if (it == terms.end()) {
        terms.emplace(w, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
}

size_t Element::max_degree() const {
    size_t d = 0;
    for (const auto& [w, c] : terms) d = std::max(d, w.size());
    return d;
}

Element Element::operator-() const {
    Element r;
    for (const auto& [w, c] : terms) r.terms.emplace(w, -c);
    return r;
}

Element operator+(const Element& a, const Element& b) {
    Element r = a;
    for (const auto& [w, c] : b.terms) r.add(w, c);
    return r;
}

Element operator-(const Element& a, const Element& b) {
    Element r = a;
    for (const auto& [w, c] : b.terms) r.add(w, -c);
    return r;
}

Element operator*(const QLaurent& c, const Element& e) {
    Element r;
    for (const auto& [w, k] : e.terms) r.add(w, c * k);
    return r;
}

const Generator* Presentation::find_generator(std::string_view gname) const {
    for (const auto& g : alphabet)
        if (g.name == gname) return &g;
    return nullptr;
}

const RewriteRule* Presentation::find_rule(int a, int b) const {
    auto it = rules.find({a, b});
    return it == rules.end() ? nullptr : &it->second;
}

bool Presentation::redex_at(const Word& w, size_t pos) const {
    if (pos + 1 >= w.size()) return false;
    return is_nilpotent_square(w[pos], w[pos + 1]) ||
           find_rule(w[pos], w[pos + 1]) != nullptr;
}

int inversion_count(const Word& w) {
    int n = 0;
    for (size_t i = 0; i < w.size(); ++i)
        for (size_t j = i + 1; j < w.size(); ++j)
            if (w[i] > w[j]) ++n;
    return n;
}

ValidationReport validate_presentation(const Presentation& p) {
    ValidationReport rep;
    auto complain = [&](std::string msg) { rep.issues.push_back(std::move(msg)); };

    std::set<std::string> names;
    for (const auto& g : p.alphabet) {
        if ((size_t)g.id >= p.alphabet.size() || p.alphabet[g.id].id != g.id)
            complain("generator id/position mismatch for '" + g.name + "'");
        if (!names.insert(g.name).second)
            complain("duplicate generator name '" + g.name + "'");
        if (g.conjugate) {
            int c = *g.conjugate;
            if (c < 0 || (size_t)c >= p.alphabet.size()) {
                complain("conjugate of '" + g.name + "' out of range");
            } else {
                const Generator& gc = p.alphabet[c];
                if (!gc.conjugate || *gc.conjugate != g.id)
                    complain("conjugation is not an involution at '" + g.name + "'");
                if (gc.parity != g.parity)
                    complain("conjugate parity mismatch at '" + g.name + "'");
            }
        }
    }

    for (int g : p.nilpotents)
        if (g < 0 || (size_t)g >= p.alphabet.size())
            complain("nilpotent id out of range");

    for (const auto& [key, rule] : p.rules) {
        auto [a, b] = key;
        if (rule.lhs[0] != a || rule.lhs[1] != b) {
            complain("rule stored under wrong key");
            continue;
        }
        bool ok_shape = a > b || p.is_nilpotent_square(a, b);
        if (!ok_shape)
            complain("rule lhs (" + p.alphabet[a].name + "," + p.alphabet[b].name +
                     ") is neither an out-of-order pair nor a nilpotent square");
        int lhs_len = 2;
        int lhs_inv = a > b ? 1 : 0;
        for (const auto& [w, c] : rule.rhs.terms) {
            for (int g : w)
                if (g < 0 || (size_t)g >= p.alphabet.size())
                    complain("rule rhs uses a generator outside the alphabet");
            bool smaller = (int)w.size() < lhs_len ||
                           ((int)w.size() == lhs_len && inversion_count(w) < lhs_inv);
            if (!smaller)
                complain("rule for (" + p.alphabet[a].name + "," + p.alphabet[b].name +
                         ") has rhs word '" + word_to_string(w, p) +
                         "' not smaller under the (length, inversions) measure");
        }
    }
    return rep;
}

Element apply_rule_at(const Word& w, size_t pos, const Presentation& p) {
    if (pos + 1 >= w.size())
        throw std::invalid_argument("rewrite position out of range");
    int a = w[pos], b = w[pos + 1];
    if (p.is_nilpotent_square(a, b)) return Element::zero();
    const RewriteRule* rule = p.find_rule(a, b);
    if (!rule) throw std::invalid_argument("no redex at requested position");
    Element out;
    for (const auto& [rw, rc] : rule->rhs.terms) {
        Word nw;
        nw.reserve(w.size() - 2 + rw.size());
        nw.insert(nw.end(), w.begin(), w.begin() + pos);
        nw.insert(nw.end(), rw.begin(), rw.end());
        nw.insert(nw.end(), w.begin() + pos + 2, w.end());
        out.add(nw, rc);
    }
    return out;
}

Element normalize(const Element& e, const Presentation& p) {
    Element result;
    std::vector<std::pair<Word, QLaurent>> stack(e.terms.begin(), e.terms.end());
    while (!stack.empty()) {
        auto [w, c] = std::move(stack.back());
        stack.pop_back();
        if (c.is_zero()) continue;
        bool reduced = false;
        for (size_t i = 0; i + 1 < w.size(); ++i) {
            if (p.is_nilpotent_square(w[i], w[i + 1])) {
                reduced = true; // term vanishes
                break;
            }
            const RewriteRule* rule = p.find_rule(w[i], w[i + 1]);
            if (!rule) continue;
            for (const auto& [rw, rc] : rule->rhs.terms) {
                Word nw;
                nw.reserve(w.size() - 2 + rw.size());
                nw.insert(nw.end(), w.begin(), w.begin() + i);
                nw.insert(nw.end(), rw.begin(), rw.end());
                nw.insert(nw.end(), w.begin() + i + 2, w.end());
                stack.emplace_back(std::move(nw), c * rc);
            }
            reduced = true;
            break;
        }
        if (!reduced) result.add(w, c);
    }
    return result;
}

Element mul(const Element& a, const Element& b, const Presentation& p) {
    Element prod;
    for (const auto& [wa, ca] : a.terms)
        for (const auto& [wb, cb] : b.terms) {
            Word w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            prod.add(w, ca * cb);
        }
    return normalize(prod, p);
}

Element star_element(const Element& e, const Presentation& p) {
    Element out;
    for (const auto& [w, c] : e.terms) {
        Word sw;
        sw.reserve(w.size());
        for (auto it = w.rbegin(); it != w.rend(); ++it) {
            const Generator& g = p.alphabet[*it];
            if (!g.conjugate)
                throw std::invalid_argument("generator '" + g.name +
                                            "' has no conjugate partner");
            sw.push_back(*g.conjugate);
        }
        out.add(sw, c.star());
    }
    return normalize(out, p);
}

Element apply_derivation(const Element& e, const DerivationTable& d,
                         const Presentation& p) {
    // the differential is an operation on the normal-form basis: through
    // an inhomogeneous rule (the two-term component relation) the raw
    // Leibniz expansion of a non-normal representative can differ from
    // that of its normal form
    Element nf = normalize(e, p);
    Element out;
    for (const auto& [w, c] : nf.terms) {
        int sign = 1;
        for (size_t i = 0; i < w.size(); ++i) {
            auto img = d.images.find(w[i]);
            if (img == d.images.end())
                throw std::invalid_argument("generator '" + p.alphabet[w[i]].name +
                                            "' has no derivation image");
            if (!img->second.is_zero()) {
                for (const auto& [iw, ic] : img->second.terms) {
                    Word nw(w.begin(), w.begin() + i);
                    nw.insert(nw.end(), iw.begin(), iw.end());
                    nw.insert(nw.end(), w.begin() + i + 1, w.end());
                    QLaurent k = c * ic;
                    out.add(nw, sign > 0 ? k : -k);
                }
            }
            if (p.alphabet[w[i]].parity == Parity::Odd) sign = -sign;
        }
    }
    return normalize(out, p);
}

Element apply_morphism(const Element& e, const Morphism& m,
                       const Presentation& src, const Presentation& dst) {
    Element out;
    for (const auto& [w, c] : e.terms) {
        Element acc = Element::unit();
        for (int g : w) {
            auto img = m.images.find(g);
            if (img == m.images.end())
                throw std::invalid_argument("generator '" + src.alphabet[g].name +
                                            "' has no image under the morphism");
            acc = mul(acc, img->second, dst);
        }
        QLaurent k = m.coeff_action == CoeffAction::InvertQ ? c.invert_q() : c;
        out += k * acc;
    }
    return normalize(out, dst);
}

std::string word_to_string(const Word& w, const Presentation& p) {
    if (w.empty()) return "1";
    std::string s;
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) s += "*";
        s += p.alphabet[w[i]].name;
    }
    return s;
}

namespace {

// one rendered piece per (q-exponent, re/im part) so every scalar factor
// is a plain rational, i, or a q-power; keeps output reparseable
struct Piece {
    Rat magnitude;
    bool negative = false;
    bool imaginary = false;
    int q_exp = 0; // doubled
};

std::string exp_str(int doubled) {
    if (doubled % 2 == 0) return std::to_string(doubled / 2);
    return "(" + std::to_string(doubled) + "/2)";
}

std::string piece_str(const Piece& pc, const Word& w, const Presentation& p) {
    std::vector<std::string> factors;
    if (!(pc.magnitude == Rat(1)) || (!pc.imaginary && pc.q_exp == 0 && w.empty()))
        factors.push_back(pc.magnitude.str());
    if (pc.imaginary) factors.push_back("i");
    if (pc.q_exp != 0) factors.push_back("q^" + exp_str(pc.q_exp));
    for (int g : w) factors.push_back(p.alphabet[g].name);
    std::string s;
    for (size_t i = 0; i < factors.size(); ++i) {
        if (i) s += "*";
        s += factors[i];
    }
    return s;
}

} // namespace

std::string element_to_string(const Element& e, const Presentation& p) {
    if (e.is_zero()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [w, c] : e.terms) {
        for (const auto& [qe, g] : c.terms()) {
            for (int part = 0; part < 2; ++part) {
                Rat v = part == 0 ? g.re : g.im;
                if (v.is_zero()) continue;
                Piece pc{v.abs(), v.is_negative(), part == 1, qe};
                if (first) {
                    s += (pc.negative ? "-" : "") + piece_str(pc, w, p);
                    first = false;
                } else {
                    s += (pc.negative ? " - " : " + ") + piece_str(pc, w, p);
                }
            }
        }
    }
    return s;
}

} // namespace qcone
