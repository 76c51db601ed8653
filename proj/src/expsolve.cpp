#include "qcone/expsolve.hpp"

#include <algorithm>

namespace qcone::expsolve {

ExponentForm ExponentForm::var(const std::string& name, Rat scale) {
    ExponentForm f;
    if (!scale.is_zero()) f.coeffs[name] = scale;
    return f;
}

Rat ExponentForm::coeff(const std::string& v) const {
    auto it = coeffs.find(v);
    return it == coeffs.end() ? Rat(0) : it->second;
}

ExponentForm ExponentForm::operator-() const { return scaled(Rat(-1)); }

ExponentForm operator+(const ExponentForm& a, const ExponentForm& b) {
    ExponentForm r = a;
    r.constant += b.constant;
    for (const auto& [v, c] : b.coeffs) {
        Rat s = r.coeff(v) + c;
        if (s.is_zero())
            r.coeffs.erase(v);
        else
            r.coeffs[v] = s;
    }
    return r;
}

ExponentForm operator-(const ExponentForm& a, const ExponentForm& b) {
    return a + (-b);
}

ExponentForm ExponentForm::scaled(Rat s) const {
    ExponentForm r;
    if (s.is_zero()) return r;
    r.constant = constant * s;
    for (const auto& [v, c] : coeffs) r.coeffs[v] = c * s;
    return r;
}

bool operator<(const ExponentForm& a, const ExponentForm& b) {
    if (a.constant != b.constant) return a.constant < b.constant;
    return std::lexicographical_compare(
        a.coeffs.begin(), a.coeffs.end(), b.coeffs.begin(), b.coeffs.end(),
        [](const auto& x, const auto& y) {
            if (x.first != y.first) return x.first < y.first;
            return x.second < y.second;
        });
}

std::string ExponentForm::str() const {
    std::string s;
    for (const auto& [v, c] : coeffs) {
        if (s.empty()) {
            if (c == Rat(-1))
                s += "-";
            else if (!(c == Rat(1)))
                s += c.str() + "*";
            s += v;
        } else {
            s += c.is_negative() ? " - " : " + ";
            Rat mag = c.abs();
            if (!(mag == Rat(1))) s += mag.str() + "*";
            s += v;
        }
    }
    if (!constant.is_zero() || s.empty()) {
        if (s.empty())
            s = constant.str();
        else
            s += (constant.is_negative() ? " - " : " + ") + constant.abs().str();
    }
    return s;
}

ExponentAnsatz ExponentAnsatz::general() {
    ExponentAnsatz a;
    a.n = ExponentForm::var("n");
    a.m = ExponentForm::var("m");
    a.k = ExponentForm::var("k");
    a.l = ExponentForm::var("l");
    return a;
}

ExponentAnsatz ExponentAnsatz::constant_zero() { return ExponentAnsatz{}; }

std::vector<std::string> ExponentAnsatz::unknowns() const {
    // fixed unknown order n, m, k, l restricted to those actually present
    std::vector<std::string> order;
    for (const char* v : {"n", "m", "k", "l"})
        for (const ExponentForm* f : {&n, &m, &k, &l})
            if (f->coeffs.count(v) && std::find(order.begin(), order.end(), v) == order.end())
                order.push_back(v);
    return order;
}

// ---- symbolic rewriting over the twistor letters --------------------
// letters: 0 = x, 1 = xb, 2 = y, 3 = yb; every rule is a swap with a
// single q^form coefficient, so a word normalizes to one term

namespace {

struct SymTerm {
    GaussRat c;
    ExponentForm expo;
    std::vector<int> w;
};

struct SymRules {
    // exponent picked up when letters (a,b) with a>b swap to (b,a)
    std::map<std::pair<int, int>, ExponentForm> swap_exp;
};

SymRules ansatz_rules(const ExponentAnsatz& a) {
    SymRules r;
    r.swap_exp[{2, 0}] = ExponentForm(-1);  // y x   -> q^-1 x y
    r.swap_exp[{3, 1}] = ExponentForm(-1);  // yb xb -> q^-1 xb yb
    r.swap_exp[{1, 0}] = -a.n;              // xb x  -> q^-n x xb
    r.swap_exp[{3, 0}] = -a.m;              // yb x  -> q^-m x yb
    r.swap_exp[{2, 1}] = a.k;               // y xb  -> q^k  xb y
    r.swap_exp[{3, 2}] = -a.l;              // yb y  -> q^-l y yb
    return r;
}

SymTerm normalize_sym(SymTerm t, const SymRules& rules) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i + 1 < t.w.size(); ++i) {
            if (t.w[i] <= t.w[i + 1]) continue;
            auto it = rules.swap_exp.find({t.w[i], t.w[i + 1]});
            if (it == rules.swap_exp.end())
                throw std::logic_error("missing symbolic swap rule");
            t.expo += it->second;
            std::swap(t.w[i], t.w[i + 1]);
            changed = true;
            break;
        }
    }
    return t;
}

// the six component relations of the q-null-vector, written directly in
// twistor bilinears (X11 = x xb, X12 = x yb, X21 = y xb, X22 = y yb);
// each is a term list that must normalize to zero
std::vector<std::vector<SymTerm>> component_relations() {
    const std::vector<int> B[4] = {{0, 1}, {0, 3}, {2, 1}, {2, 3}};
    auto cat = [&](int a, int b) {
        std::vector<int> w = B[a];
        w.insert(w.end(), B[b].begin(), B[b].end());
        return w;
    };
    auto term = [](GaussRat c, int e, std::vector<int> w) {
        return SymTerm{c, ExponentForm(e), std::move(w)};
    };
    std::vector<std::vector<SymTerm>> rels;
    // X11 X12 = q^2 X12 X11 and the three analogous q^2 rows
    rels.push_back({term(1, 0, cat(0, 1)), term(-1, 2, cat(1, 0))});
    rels.push_back({term(1, 0, cat(0, 2)), term(-1, 2, cat(2, 0))});
    rels.push_back({term(1, 0, cat(1, 2)), term(-1, 0, cat(2, 1))});
    rels.push_back({term(1, 0, cat(1, 3)), term(-1, 2, cat(3, 1))});
    rels.push_back({term(1, 0, cat(2, 3)), term(-1, 2, cat(3, 2))});
    // X11 X22 - X22 X11 = (q^2 - q^-2) X12 X21
    rels.push_back({term(1, 0, cat(0, 3)), term(-1, 0, cat(3, 0)),
                    term(-1, 2, cat(1, 2)), term(1, -2, cat(1, 2))});
    return rels;
}

// groups normalized terms by word and merges identical exponent forms
std::map<std::vector<int>, std::vector<SymTerm>>
group_terms(const std::vector<SymTerm>& terms, const SymRules& rules) {
    std::map<std::vector<int>, std::vector<SymTerm>> grouped;
    for (const SymTerm& t : terms) {
        SymTerm n = normalize_sym(t, rules);
        auto& bucket = grouped[n.w];
        bool merged = false;
        for (SymTerm& b : bucket)
            if (b.expo == n.expo) {
                b.c += n.c;
                merged = true;
                break;
            }
        if (!merged) bucket.push_back(n);
    }
    for (auto& [w, bucket] : grouped)
        bucket.erase(std::remove_if(bucket.begin(), bucket.end(),
                                    [](const SymTerm& t) { return t.c.is_zero(); }),
                     bucket.end());
    return grouped;
}

// RREF over a raw rational matrix; used both by the public row_reduce
// and by the matching-consistency test
struct Matrix {
    std::vector<std::string> vars;
    std::vector<std::vector<Rat>> rows; // each row: coeffs..., constant

    void add_form(const ExponentForm& f) {
        std::vector<Rat> row(vars.size() + 1);
        for (size_t j = 0; j < vars.size(); ++j) row[j] = f.coeff(vars[j]);
        row[vars.size()] = f.constant;
        rows.push_back(std::move(row));
    }

    void rref() {
        size_t pivot_row = 0;
        for (size_t col = 0; col <= vars.size() && pivot_row < rows.size(); ++col) {
            size_t r = pivot_row;
            while (r < rows.size() && rows[r][col].is_zero()) ++r;
            if (r == rows.size()) continue;
            std::swap(rows[pivot_row], rows[r]);
            Rat p = rows[pivot_row][col];
            for (auto& v : rows[pivot_row]) v /= p;
            for (size_t i = 0; i < rows.size(); ++i) {
                if (i == pivot_row || rows[i][col].is_zero()) continue;
                Rat f = rows[i][col];
                for (size_t j = 0; j <= vars.size(); ++j)
                    rows[i][j] -= f * rows[pivot_row][j];
            }
            ++pivot_row;
        }
        rows.erase(std::remove_if(rows.begin(), rows.end(),
                                  [](const std::vector<Rat>& row) {
                                      return std::all_of(row.begin(), row.end(),
                                                         [](const Rat& v) {
                                                             return v.is_zero();
                                                         });
                                  }),
                   rows.end());
    }

    bool inconsistent() const {
        for (const auto& row : rows) {
            bool allzero = true;
            for (size_t j = 0; j + 1 < row.size(); ++j)
                if (!row[j].is_zero()) allzero = false;
            if (allzero && !row.back().is_zero()) return true;
        }
        return false;
    }

    ExponentForm form_of_row(const std::vector<Rat>& row) const {
        ExponentForm f(row.back());
        for (size_t j = 0; j < vars.size(); ++j)
            if (!row[j].is_zero()) f.coeffs[vars[j]] = row[j];
        return f;
    }
};

bool equations_consistent(const std::vector<ExponentForm>& eqs,
                          const std::vector<std::string>& vars) {
    Matrix m;
    m.vars = vars;
    for (const auto& f : eqs) m.add_form(f);
    m.rref();
    return !m.inconsistent();
}

// perfect matchings of the bucket into cancelling pairs
void matchings(const std::vector<SymTerm>& bucket, std::vector<bool>& used,
               std::vector<ExponentForm>& current,
               std::vector<std::vector<ExponentForm>>& out) {
    size_t first = 0;
    while (first < bucket.size() && used[first]) ++first;
    if (first == bucket.size()) {
        out.push_back(current);
        return;
    }
    used[first] = true;
    for (size_t j = first + 1; j < bucket.size(); ++j) {
        if (used[j]) continue;
        if (!(bucket[first].c + bucket[j].c).is_zero()) continue;
        used[j] = true;
        current.push_back(bucket[first].expo - bucket[j].expo);
        matchings(bucket, used, current, out);
        current.pop_back();
        used[j] = false;
    }
    used[first] = false;
}

} // namespace

ExponentSystem generate_constraints(const ExponentAnsatz& ansatz,
                                    const std::vector<int>& relation_indices) {
    SymRules rules = ansatz_rules(ansatz);
    auto rels = component_relations();
    ExponentSystem sys;
    sys.unknown_order = ansatz.unknowns();

    for (int idx : relation_indices) {
        if (idx < 0 || (size_t)idx >= rels.size())
            throw std::invalid_argument("relation index out of range");
        std::string label = "component-relation[" + std::to_string(idx) + "]";
        auto grouped = group_terms(rels[idx], rules);
        for (const auto& [w, bucket] : grouped) {
            if (bucket.empty()) continue;
            std::vector<std::vector<ExponentForm>> all;
            std::vector<bool> used(bucket.size(), false);
            std::vector<ExponentForm> current;
            if (bucket.size() % 2 == 0) matchings(bucket, used, current, all);

            // keep the matchings whose equations admit a solution; a
            // well-posed relation leaves exactly one
            std::vector<std::vector<ExponentForm>> consistent;
            for (auto& eqs : all)
                if (equations_consistent(eqs, sys.unknown_order))
                    consistent.push_back(eqs);
            std::sort(consistent.begin(), consistent.end());
            consistent.erase(std::unique(consistent.begin(), consistent.end()),
                             consistent.end());

            if (consistent.size() == 1) {
                for (const auto& f : consistent.front())
                    sys.equations.push_back({f, label});
            } else {
                // no cancelling pairing exists (or it is ambiguous):
                // record an unsatisfiable marker
                sys.equations.push_back({ExponentForm(1), label + " (no consistent matching)"});
            }
        }
    }
    return sys;
}

std::vector<LinearConstraint> star_closure_constraints(const ExponentAnsatz& ansatz) {
    SymRules rules = ansatz_rules(ansatz);
    auto conj = [](int g) { return g ^ 1; }; // x <-> xb, y <-> yb
    // ansatz relations as (lhs word, exponent, rhs word): lhs = q^F rhs
    struct Rel {
        std::vector<int> lhs;
        ExponentForm expo;
        std::vector<int> rhs;
    };
    std::vector<Rel> base = {
        {{1, 0}, -ansatz.n, {0, 1}},
        {{3, 0}, -ansatz.m, {0, 3}},
        {{2, 1}, ansatz.k, {1, 2}},
        {{3, 2}, -ansatz.l, {2, 3}},
    };
    std::vector<LinearConstraint> out;
    int i = 0;
    for (const Rel& r : base) {
        auto starred = [&](const std::vector<int>& w) {
            std::vector<int> s;
            for (auto it = w.rbegin(); it != w.rend(); ++it) s.push_back(conj(*it));
            return s;
        };
        // star of (lhs - q^F rhs) = star(lhs) - q^-F star(rhs)
        std::vector<SymTerm> terms = {
            {GaussRat(1), ExponentForm(0), starred(r.lhs)},
            {GaussRat(-1), -r.expo, starred(r.rhs)},
        };
        auto grouped = group_terms(terms, rules);
        std::string label = "star-closure[" + std::to_string(i++) + "]";
        for (const auto& [w, bucket] : grouped) {
            if (bucket.size() == 2 && (bucket[0].c + bucket[1].c).is_zero())
                out.push_back({bucket[0].expo - bucket[1].expo, label});
            else if (!bucket.empty())
                out.push_back({ExponentForm(1), label + " (no consistent matching)"});
        }
    }
    return out;
}

LinearConstraint reality_constraint(const ExponentAnsatz& ansatz) {
    return {ansatz.n, "reality"};
}

std::vector<ExponentForm> row_reduce(const ExponentSystem& system,
                                     const std::vector<LinearConstraint>& extras) {
    Matrix m;
    m.vars = system.unknown_order;
    for (const auto& eq : system.equations) m.add_form(eq.form);
    for (const auto& eq : extras) m.add_form(eq.form);
    m.rref();
    std::vector<ExponentForm> out;
    for (const auto& row : m.rows) out.push_back(m.form_of_row(row));
    return out;
}

SolutionFamily solve(const ExponentSystem& system,
                     const std::vector<LinearConstraint>& extras) {
    Matrix m;
    m.vars = system.unknown_order;
    for (const auto& eq : system.equations) m.add_form(eq.form);
    for (const auto& eq : extras) m.add_form(eq.form);
    m.rref();
    if (m.inconsistent())
        throw InconsistentSystem("exponent system has no solution");

    SolutionFamily sol;
    sol.unknown_order = m.vars;
    std::vector<bool> is_pivot(m.vars.size(), false);
    for (const auto& row : m.rows) {
        size_t col = 0;
        while (col < m.vars.size() && row[col].is_zero()) ++col;
        if (col == m.vars.size()) continue;
        is_pivot[col] = true;
        // row reads x_col + sum c_j x_j + constant = 0
        ExponentForm val(-row.back());
        for (size_t j = col + 1; j < m.vars.size(); ++j)
            if (!row[j].is_zero()) val.coeffs[m.vars[j]] = -row[j];
        sol.pivot_values[m.vars[col]] = val;
    }
    for (size_t j = 0; j < m.vars.size(); ++j)
        if (!is_pivot[j]) sol.free_unknowns.push_back(m.vars[j]);
    return sol;
}

std::map<std::string, Rat> SolutionFamily::point() const {
    if (!unique()) throw std::logic_error("solution family is not a point");
    std::map<std::string, Rat> p;
    for (const auto& [v, f] : pivot_values) p[v] = f.constant;
    return p;
}

bool SolutionFamily::integral() const {
    for (const auto& [v, f] : pivot_values) {
        if (!f.constant.is_integer()) return false;
        for (const auto& [u, c] : f.coeffs)
            if (!c.is_integer()) return false;
    }
    return true;
}

ExponentForm SolutionFamily::value_of(const std::string& v) const {
    auto it = pivot_values.find(v);
    return it == pivot_values.end() ? ExponentForm::var(v) : it->second;
}

namespace {

ExponentForm substitute_form(const ExponentForm& f, const SolutionFamily& sol) {
    ExponentForm out(f.constant);
    for (const auto& [v, c] : f.coeffs) out += sol.value_of(v).scaled(c);
    return out;
}

} // namespace

ExponentAnsatz substitute(const ExponentAnsatz& ansatz, const SolutionFamily& sol) {
    ExponentAnsatz a;
    a.n = substitute_form(ansatz.n, sol);
    a.m = substitute_form(ansatz.m, sol);
    a.k = substitute_form(ansatz.k, sol);
    a.l = substitute_form(ansatz.l, sol);
    return a;
}

bool closure_holds(const ExponentAnsatz& ansatz) {
    SymRules rules = ansatz_rules(ansatz);
    for (const auto& rel : component_relations()) {
        auto grouped = group_terms(rel, rules);
        for (const auto& [w, bucket] : grouped)
            if (!bucket.empty()) return false;
    }
    return true;
}

} // namespace qcone::expsolve
