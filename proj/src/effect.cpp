#include "ql/effect.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace ql {

namespace {

std::vector<std::string> split_words(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> out;
    std::string w;
    while (in >> w) out.push_back(w);
    return out;
}

struct Lines {
    std::vector<std::pair<std::string, std::vector<std::string>>> entries;
};

Lines parse_lines(const std::string& text) {
    Lines out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto words = split_words(line);
        if (words.empty()) continue;
        if (words[0].back() != ':')
            throw Error("expected a 'key:' prefix in line: " + line);
        std::string key = words[0].substr(0, words[0].size() - 1);
        out.entries.emplace_back(
            key, std::vector<std::string>(words.begin() + 1, words.end()));
    }
    return out;
}

}  // namespace

int PartialTable::index(const std::string& id) const {
    for (int i = 0; i < size(); ++i)
        if (elements[i] == id) return i;
    throw Error("unknown element: " + id);
}

bool PartialTable::defined(int a, int b) const {
    return psum.count({a, b}) != 0;
}

int PartialTable::sum(int a, int b) const {
    auto it = psum.find({a, b});
    if (it == psum.end())
        throw Error("undefined sum: " + name(a) + " + " + name(b));
    return it->second;
}

int PartialTable::comp(int a) const {
    for (int x = 0; x < size(); ++x) {
        auto it = psum.find({a, x});
        if (it != psum.end() && it->second == one) return x;
    }
    throw Error("no complement for " + name(a));
}

bool PartialTable::leq(int a, int b) const {
    for (int c = 0; c < size(); ++c) {
        auto it = psum.find({a, c});
        if (it != psum.end() && it->second == b) return true;
    }
    return false;
}

PartialTable PartialTable::load(const std::string& text) {
    PartialTable t;
    auto lines = parse_lines(text);
    for (const auto& [key, words] : lines.entries)
        if (key == "elements")
            t.elements.insert(t.elements.end(), words.begin(), words.end());
    if (t.elements.empty()) throw Error("missing elements: line");
    for (const auto& [key, words] : lines.entries) {
        if (key == "elements") continue;
        if (key == "zero" && words.size() == 1)
            t.zero = t.index(words[0]);
        else if (key == "one" && words.size() == 1)
            t.one = t.index(words[0]);
        else if (key == "psum" && words.size() == 3)
            t.psum[{t.index(words[0]), t.index(words[1])}] = t.index(words[2]);
        else
            throw Error("bad table line: " + key);
    }
    if (t.zero < 0 || t.one < 0) throw Error("missing zero: or one: line");
    return t;
}

std::string PartialTable::save() const {
    std::ostringstream out;
    out << "elements:";
    for (const auto& e : elements) out << " " << e;
    out << "\nzero: " << name(zero) << "\none: " << name(one) << "\n";
    for (const auto& [ab, c] : psum)
        out << "psum: " << name(ab.first) << " " << name(ab.second) << " "
            << name(c) << "\n";
    return out.str();
}

EaReport validate_partial(const PartialTable& t) {
    EaReport r;
    int n = t.size();
    auto wit2 = [&](const std::string& ax, int a, int b) {
        r.failures.push_back(ax + " (" + t.name(a) + "," + t.name(b) + ")");
    };
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            bool d1 = t.defined(a, b), d2 = t.defined(b, a);
            if (d1 != d2 || (d1 && t.sum(a, b) != t.sum(b, a)))
                wit2("weak-commutativity", a, b);
        }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                if (!t.defined(b, c) || !t.defined(a, t.sum(b, c))) continue;
                if (!t.defined(a, b) || !t.defined(t.sum(a, b), c) ||
                    t.sum(t.sum(a, b), c) != t.sum(a, t.sum(b, c)))
                    r.failures.push_back("weak-associativity (" + t.name(a) +
                                         "," + t.name(b) + "," + t.name(c) +
                                         ")");
            }
    for (int a = 0; a < n; ++a) {
        int count = 0;
        for (int x = 0; x < n; ++x)
            if (t.defined(a, x) && t.sum(a, x) == t.one) ++count;
        if (count != 1)
            r.failures.push_back("strong-excluded-middle (" + t.name(a) + ")");
    }
    for (int a = 0; a < n; ++a)
        if (t.defined(a, t.one) && a != t.zero)
            r.failures.push_back("weak-consistency (" + t.name(a) + ")");
    r.effect_algebra = r.failures.empty();

    bool strong = true;
    for (int a = 0; a < n; ++a)
        if (t.defined(a, a) && a != t.zero) {
            strong = false;
            r.failures.push_back("strong-consistency (" + t.name(a) + ")");
        }
    r.orthoalgebra = r.effect_algebra && strong;

    bool sups = true;
    if (r.orthoalgebra)
        for (const auto& [ab, s] : t.psum)
            for (int c = 0; c < n; ++c)
                if (t.leq(ab.first, c) && t.leq(ab.second, c) &&
                    !t.leq(s, c)) {
                    sups = false;
                    wit2("orthogonal-sup", ab.first, ab.second);
                }
    r.orthomodular_poset = r.orthoalgebra && sups;
    return r;
}

int QmvTable::index(const std::string& id) const {
    for (int i = 0; i < size(); ++i)
        if (elements[i] == id) return i;
    throw Error("unknown element: " + id);
}

QmvTable QmvTable::load(const std::string& text) {
    QmvTable m;
    auto lines = parse_lines(text);
    for (const auto& [key, words] : lines.entries)
        if (key == "elements")
            m.elements.insert(m.elements.end(), words.begin(), words.end());
    if (m.elements.empty()) throw Error("missing elements: line");
    int n = m.size();
    m.op.assign(n * n, -1);
    m.star_.assign(n, -1);
    for (const auto& [key, words] : lines.entries) {
        if (key == "elements") continue;
        if (key == "zero" && words.size() == 1)
            m.zero = m.index(words[0]);
        else if (key == "one" && words.size() == 1)
            m.one = m.index(words[0]);
        else if (key == "oplus" && words.size() == 3)
            m.op[m.index(words[0]) * n + m.index(words[1])] =
                m.index(words[2]);
        else if (key == "star" && words.size() == 2)
            m.star_[m.index(words[0])] = m.index(words[1]);
        else
            throw Error("bad table line: " + key);
    }
    if (m.zero < 0 || m.one < 0) throw Error("missing zero: or one: line");
    for (int v : m.op)
        if (v < 0) throw Error("oplus table is not total");
    for (int v : m.star_)
        if (v < 0) throw Error("star table is not total");
    return m;
}

std::string QmvTable::save() const {
    std::ostringstream out;
    out << "elements:";
    for (const auto& e : elements) out << " " << e;
    out << "\nzero: " << name(zero) << "\none: " << name(one) << "\n";
    for (int a = 0; a < size(); ++a)
        for (int b = 0; b < size(); ++b)
            out << "oplus: " << name(a) << " " << name(b) << " "
                << name(oplus(a, b)) << "\n";
    for (int a = 0; a < size(); ++a)
        out << "star: " << name(a) << " " << name(star(a)) << "\n";
    return out.str();
}

QmvReport validate_qmv(const QmvTable& m) {
    QmvReport r;
    int n = m.size();
    auto fail = [&](const std::string& ax, std::vector<int> xs) {
        std::string w = ax + " (";
        for (size_t i = 0; i < xs.size(); ++i)
            w += (i ? "," : "") + m.name(xs[i]);
        r.failures.push_back(w + ")");
    };
    for (int a = 0; a < n; ++a) {
        if (m.oplus(a, m.zero) != a) fail("QMV3", {a});
        if (m.oplus(a, m.one) != m.one) fail("QMV4", {a});
        if (m.star(m.star(a)) != a) fail("QMV5", {a});
        if (m.oplus(a, m.star(a)) != m.one) fail("QMV2", {a});
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                if (m.oplus(a, m.oplus(b, c)) != m.oplus(m.oplus(b, a), c))
                    fail("QMV1", {a, b, c});
                int lhs = m.oplus(
                    a, m.et(m.et(m.star(a), b), m.et(c, m.star(a))));
                int rhs = m.et(m.oplus(a, b), m.oplus(a, c));
                if (lhs != rhs) fail("QMV7", {a, b, c});
            }
    }
    if (m.star(m.zero) != m.one) fail("QMV6", {});
    r.qmv = r.failures.empty();

    bool mv8 = true;
    for (int a = 0; a < n && mv8; ++a)
        for (int b = 0; b < n && mv8; ++b) {
            int l = m.oplus(m.star(m.oplus(m.star(a), b)), b);
            int rr = m.oplus(m.star(m.oplus(a, m.star(b))), a);
            if (l != rr) {
                mv8 = false;
                fail("MV8", {a, b});
            }
        }
    r.mv = r.qmv && mv8;
    return r;
}

bool weakly_linear(const QmvTable& m) {
    for (int a = 0; a < m.size(); ++a)
        for (int b = 0; b < m.size(); ++b)
            if (m.et(a, b) != b && m.et(b, a) != a) return false;
    return true;
}

bool quasi_linear(const QmvTable& m) {
    for (int a = 0; a < m.size(); ++a)
        for (int b = 0; b < m.size(); ++b) {
            int e = m.et(a, b);
            if (e != a && e != b) return false;
        }
    return true;
}

bool table_equal(const QmvTable& a, const QmvTable& b) {
    return a.elements == b.elements && a.op == b.op && a.star_ == b.star_ &&
           a.zero == b.zero && a.one == b.one;
}

bool table_equal(const PartialTable& a, const PartialTable& b) {
    return a.elements == b.elements && a.psum == b.psum && a.zero == b.zero &&
           a.one == b.one;
}

namespace {

QmvTable raw_to_qmv(const PartialTable& b) {
    QmvTable m;
    m.elements = b.elements;
    m.zero = b.zero;
    m.one = b.one;
    int n = b.size();
    m.op.assign(n * n, -1);
    m.star_.assign(n, -1);
    for (int x = 0; x < n; ++x) {
        m.star_[x] = b.comp(x);
        for (int y = 0; y < n; ++y)
            m.op[x * n + y] = b.defined(x, y) ? b.sum(x, y) : b.one;
    }
    return m;
}

PartialTable raw_to_ea(const QmvTable& m) {
    PartialTable t;
    t.elements = m.elements;
    t.zero = m.zero;
    t.one = m.one;
    for (int a = 0; a < m.size(); ++a)
        for (int b = 0; b < m.size(); ++b)
            if (m.pre(a, m.star(b))) t.psum[{a, b}] = m.oplus(a, b);
    return t;
}

}  // namespace

QmvTable to_qmv(const PartialTable& b) {
    QmvTable m = raw_to_qmv(b);
    if (!validate_qmv(m).qmv)
        throw Error("totalization is not a qmv table");
    if (!quasi_linear(m))
        throw Error("totalization is not quasi-linear");
    if (!table_equal(raw_to_ea(m), b))
        throw Error("totalization does not restrict back to its source");
    for (int x = 0; x < m.size(); ++x)
        for (int y = 0; y < m.size(); ++y)
            if (m.pre(x, y) && !b.leq(x, y))
                throw Error("totalized order escapes the partial order");
    return m;
}

PartialTable to_ea(const QmvTable& m) {
    PartialTable t = raw_to_ea(m);
    if (!validate_partial(t).effect_algebra)
        throw Error("restriction is not an effect algebra");
    if (quasi_linear(m) && !table_equal(raw_to_qmv(t), m))
        throw Error("quasi-linear table does not round-trip");
    return t;
}

bool validate_hom(const Homomorphism& h) {
    int n = h.source.size();
    if (static_cast<int>(h.map.size()) != n) return false;
    for (int v : h.map)
        if (v < 0 || v >= h.target.size()) return false;
    if (h.map[h.source.zero] != h.target.zero) return false;
    if (h.map[h.source.one] != h.target.one) return false;
    for (int x = 0; x < n; ++x) {
        if (h.map[h.source.star(x)] != h.target.star(h.map[x])) return false;
        for (int y = 0; y < n; ++y)
            if (h.map[h.source.oplus(x, y)] !=
                h.target.oplus(h.map[x], h.map[y]))
                return false;
    }
    return true;
}

namespace {

void closure_of(const FormulaPtr& f, std::vector<FormulaPtr>& order,
                std::set<std::string>& seen) {
    if (f->left) closure_of(f->left, order, seen);
    if (f->right) closure_of(f->right, order, seen);
    if (seen.insert(print_formula(f)).second) order.push_back(f);
}

// Enumerates per-formula valuations; visit returns true to stop.
bool enum_formula_vals(
    const PartialTable& t, const std::vector<FormulaPtr>& order, size_t i,
    std::map<std::string, int>& val, std::set<std::string>& free_keys,
    const std::function<bool(const std::map<std::string, int>&,
                             const std::set<std::string>&)>& visit) {
    if (i == order.size()) return visit(val, free_keys);
    const FormulaPtr& f = order[i];
    std::string key = print_formula(f);
    auto loop_all = [&]() {
        free_keys.insert(key);
        for (int e = 0; e < t.size(); ++e) {
            val[key] = e;
            if (enum_formula_vals(t, order, i + 1, val, free_keys, visit))
                return true;
        }
        free_keys.erase(key);
        val.erase(key);
        return false;
    };
    switch (f->kind) {
        case NodeKind::Literal:
            return loop_all();
        case NodeKind::Not:
            val[key] = t.comp(val.at(print_formula(f->left)));
            break;
        case NodeKind::Aut: {
            int a = val.at(print_formula(f->left));
            int b = val.at(print_formula(f->right));
            if (!t.defined(a, b)) return loop_all();
            val[key] = t.sum(a, b);
            break;
        }
        default:
            throw Error("connective outside the partial fragment: " + key);
    }
    bool stop = enum_formula_vals(t, order, i + 1, val, free_keys, visit);
    if (!stop) val.erase(key);
    return stop;
}

// Per-occurrence variant: undefined disjunction occurrences vary
// independently; literals still share one value per name.
bool enum_occurrence_vals(
    const PartialTable& t, const std::vector<const Formula*>& order, size_t i,
    std::map<const Formula*, int>& val, std::map<std::string, int>& lits,
    std::set<std::string>& free_keys,
    const std::function<bool(const std::map<const Formula*, int>&,
                             const std::set<std::string>&)>& visit) {
    if (i == order.size()) return visit(val, free_keys);
    const Formula* f = order[i];
    auto loop_all = [&](const std::string& key, bool share) {
        free_keys.insert(key);
        for (int e = 0; e < t.size(); ++e) {
            val[f] = e;
            if (share) lits[key] = e;
            if (enum_occurrence_vals(t, order, i + 1, val, lits, free_keys,
                                     visit))
                return true;
        }
        free_keys.erase(key);
        if (share) lits.erase(key);
        val.erase(f);
        return false;
    };
    switch (f->kind) {
        case NodeKind::Literal: {
            auto it = lits.find(f->literal);
            if (it != lits.end()) {
                val[f] = it->second;
                break;
            }
            return loop_all(f->literal, true);
        }
        case NodeKind::Not:
            val[f] = t.comp(val.at(f->left.get()));
            break;
        case NodeKind::Aut: {
            int a = val.at(f->left.get());
            int b = val.at(f->right.get());
            if (!t.defined(a, b))
                return loop_all(print_formula(
                                    FormulaPtr(f, [](const Formula*) {})),
                                false);
            val[f] = t.sum(a, b);
            break;
        }
        default:
            throw Error("connective outside the partial fragment");
    }
    bool stop =
        enum_occurrence_vals(t, order, i + 1, val, lits, free_keys, visit);
    if (!stop) val.erase(f);
    return stop;
}

void occurrences_of(const Formula* f, std::vector<const Formula*>& order) {
    if (f->left) occurrences_of(f->left.get(), order);
    if (f->right) occurrences_of(f->right.get(), order);
    order.push_back(f);
}

void require_class(const PartialTable& t, Dialect d) {
    EaReport r = validate_partial(t);
    bool ok = (d == Dialect::UPaQL && r.effect_algebra) ||
              (d == Dialect::WPaQL && r.orthoalgebra) ||
              (d == Dialect::SPaQL && r.orthomodular_poset);
    if (!ok)
        throw Error("table is outside the class of " + to_string(d));
}

PaqlCountermodel make_countermodel(const PartialTable& t,
                                   const std::map<std::string, int>& val,
                                   const std::set<std::string>& free_keys,
                                   int bound) {
    PaqlCountermodel cm;
    for (const auto& key : free_keys) cm.valuation[key] = t.name(val.at(key));
    cm.bound = t.name(bound);
    return cm;
}

// Common lower bound test: every x below all left values is below the right.
std::optional<int> lower_bound_gap(const PartialTable& t,
                                   const std::vector<int>& lefts, int right) {
    for (int x = 0; x < t.size(); ++x) {
        bool below = true;
        for (int l : lefts)
            if (!t.leq(x, l)) {
                below = false;
                break;
            }
        if (below && !t.leq(x, right)) return x;
    }
    return std::nullopt;
}

}  // namespace

PaqlVerdict paql_consequence(const std::vector<PartialTable>& tables,
                             Dialect d,
                             const std::vector<FormulaPtr>& premises,
                             const FormulaPtr& conclusion,
                             bool per_occurrence) {
    std::vector<FormulaPtr> exp;
    for (const auto& p : premises) exp.push_back(expand(p));
    FormulaPtr goal = expand(conclusion);
    PaqlVerdict out;
    for (size_t ti = 0; ti < tables.size(); ++ti) {
        const PartialTable& t = tables[ti];
        require_class(t, d);
        auto decide = [&](const std::vector<int>& prem_vals, int goal_val,
                          PaqlCountermodel cm) {
            auto gap = lower_bound_gap(t, prem_vals, goal_val);
            if (!gap) return false;
            cm.bound = t.name(*gap);
            cm.table = ti;
            out = cm;
            return true;
        };
        bool stopped;
        if (!per_occurrence) {
            std::vector<FormulaPtr> order;
            std::set<std::string> seen;
            for (const auto& p : exp) closure_of(p, order, seen);
            closure_of(goal, order, seen);
            std::map<std::string, int> val;
            std::set<std::string> free_keys;
            stopped = enum_formula_vals(
                t, order, 0, val, free_keys,
                [&](const std::map<std::string, int>& v,
                    const std::set<std::string>& fk) {
                    std::vector<int> pv;
                    for (const auto& p : exp)
                        pv.push_back(v.at(print_formula(p)));
                    return decide(pv, v.at(print_formula(goal)),
                                  make_countermodel(t, v, fk, 0));
                });
        } else {
            std::vector<const Formula*> order;
            for (const auto& p : exp) occurrences_of(p.get(), order);
            occurrences_of(goal.get(), order);
            std::map<const Formula*, int> val;
            std::map<std::string, int> lits;
            std::set<std::string> free_keys;
            stopped = enum_occurrence_vals(
                t, order, 0, val, lits, free_keys,
                [&](const std::map<const Formula*, int>& v,
                    const std::set<std::string>& fk) {
                    std::vector<int> pv;
                    for (const auto& p : exp) pv.push_back(v.at(p.get()));
                    PaqlCountermodel cm;
                    for (const auto& key : fk)
                        if (lits.count(key))
                            cm.valuation[key] = t.name(lits.at(key));
                        else
                            cm.valuation[key] = "(occurrence)";
                    return decide(pv, v.at(goal.get()), cm);
                });
        }
        if (stopped) return out;
    }
    return std::nullopt;
}

PaqlVerdict paql_rule_sound(const PartialTable& table, Dialect d,
                            const std::vector<Sequent>& premises,
                            const Sequent& conclusion, bool per_occurrence) {
    require_class(table, d);
    std::vector<Sequent> exp;
    for (const auto& [l, r] : premises)
        exp.emplace_back(expand(l), expand(r));
    Sequent goal{expand(conclusion.first), expand(conclusion.second)};
    std::vector<FormulaPtr> order;
    std::set<std::string> seen;
    for (const auto& [l, r] : exp) {
        closure_of(l, order, seen);
        closure_of(r, order, seen);
    }
    closure_of(goal.first, order, seen);
    closure_of(goal.second, order, seen);
    if (per_occurrence)
        throw Error("per-occurrence mode applies to consequence only");
    PaqlVerdict out;
    std::map<std::string, int> val;
    std::set<std::string> free_keys;
    enum_formula_vals(
        table, order, 0, val, free_keys,
        [&](const std::map<std::string, int>& v,
            const std::set<std::string>& fk) {
            for (const auto& [l, r] : exp)
                if (!table.leq(v.at(print_formula(l)),
                               v.at(print_formula(r))))
                    return false;
            int gl = v.at(print_formula(goal.first));
            int gr = v.at(print_formula(goal.second));
            if (table.leq(gl, gr)) return false;
            out = make_countermodel(table, v, fk, gl);
            return true;
        });
    return out;
}

int lql_evaluate(const QmvTable& m, const std::map<std::string, int>& v,
                 const FormulaPtr& f) {
    FormulaPtr e = expand(f);
    std::function<int(const FormulaPtr&)> go =
        [&](const FormulaPtr& g) -> int {
        switch (g->kind) {
            case NodeKind::Literal: {
                auto it = v.find(g->literal);
                if (it == v.end())
                    throw Error("no value for literal " + g->literal);
                return it->second;
            }
            case NodeKind::Not:
                return m.star(go(g->left));
            case NodeKind::Aut:
                return m.oplus(go(g->left), go(g->right));
            default:
                throw Error("connective outside the total fragment: " +
                            print_formula(g));
        }
    };
    return go(e);
}

PaqlVerdict lql_consequence(const QmvTable& m,
                            const std::vector<FormulaPtr>& premises,
                            const FormulaPtr& conclusion) {
    std::set<std::string> lits;
    for (const auto& p : premises)
        for (const auto& l : literals_of(p)) lits.insert(l);
    for (const auto& l : literals_of(conclusion)) lits.insert(l);
    std::vector<std::string> names(lits.begin(), lits.end());
    std::map<std::string, int> v;
    std::function<PaqlVerdict(size_t)> go =
        [&](size_t i) -> PaqlVerdict {
        if (i == names.size()) {
            std::vector<int> pv;
            for (const auto& p : premises)
                pv.push_back(lql_evaluate(m, v, p));
            int goal = lql_evaluate(m, v, conclusion);
            for (int x = 0; x < m.size(); ++x) {
                bool below = true;
                for (int l : pv)
                    if (!m.pre(x, l)) {
                        below = false;
                        break;
                    }
                if (below && !m.pre(x, goal)) {
                    PaqlCountermodel cm;
                    for (const auto& [k, e] : v) cm.valuation[k] = m.name(e);
                    cm.bound = m.name(x);
                    return cm;
                }
            }
            return std::nullopt;
        }
        for (int e = 0; e < m.size(); ++e) {
            v[names[i]] = e;
            if (auto cm = go(i + 1)) return cm;
        }
        return std::nullopt;
    };
    return go(0);
}

namespace {

struct TermEntry {
    std::vector<int> tab;
    std::string term;
};

std::vector<TermEntry> term_tables(const QmvTable& m, int max_depth) {
    int n = m.size();
    std::vector<TermEntry> seen;
    std::set<std::vector<int>> known;
    auto add = [&](std::vector<TermEntry>& dst, std::set<std::vector<int>>& ks,
                   std::vector<int> tab, std::string term) {
        if (known.count(tab) || ks.count(tab)) return;
        ks.insert(tab);
        dst.push_back({std::move(tab), std::move(term)});
    };
    std::vector<int> ta, tb, t0, t1;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            ta.push_back(a);
            tb.push_back(b);
            t0.push_back(m.zero);
            t1.push_back(m.one);
        }
    std::set<std::vector<int>> base_known;
    add(seen, base_known, ta, "a");
    add(seen, base_known, tb, "b");
    add(seen, base_known, t0, "0");
    add(seen, base_known, t1, "1");
    for (const auto& e : seen) known.insert(e.tab);
    for (int d = 0; d < max_depth; ++d) {
        std::vector<TermEntry> newly;
        std::set<std::vector<int>> newly_known;
        size_t sz = seen.size();
        for (size_t i = 0; i < sz; ++i) {
            std::vector<int> s(seen[i].tab.size());
            for (size_t k = 0; k < s.size(); ++k) s[k] = m.star(seen[i].tab[k]);
            add(newly, newly_known, std::move(s), seen[i].term + "*");
        }
        for (size_t i = 0; i < sz; ++i)
            for (size_t j = 0; j < sz; ++j) {
                std::vector<int> s(seen[i].tab.size());
                for (size_t k = 0; k < s.size(); ++k)
                    s[k] = m.oplus(seen[i].tab[k], seen[j].tab[k]);
                add(newly, newly_known, std::move(s),
                    "(" + seen[i].term + "+" + seen[j].term + ")");
            }
        for (auto& e : newly) {
            known.insert(e.tab);
            seen.push_back(std::move(e));
        }
    }
    return seen;
}

}  // namespace

std::vector<std::string> enumerate_terms(const QmvTable& m, int max_depth) {
    std::vector<std::string> out;
    for (const auto& e : term_tables(m, max_depth)) out.push_back(e.term);
    return out;
}

std::optional<std::string> conditional_search(const QmvTable& m,
                                              int max_depth) {
    int n = m.size();
    for (const auto& e : term_tables(m, max_depth)) {
        bool ok = true;
        size_t k = 0;
        for (int a = 0; a < n && ok; ++a)
            for (int b = 0; b < n; ++b, ++k)
                if ((e.tab[k] == m.one) != m.pre(a, b)) {
                    ok = false;
                    k += n - 1 - b;
                    break;
                }
        if (ok) return e.term;
    }
    return std::nullopt;
}

namespace {

struct Term {
    char kind;  // 'a' 'b' '0' '1' '*' '+'
    std::shared_ptr<Term> l, r;
};
using TermPtr = std::shared_ptr<Term>;

TermPtr parse_term_at(const std::string& s, size_t& i) {
    if (i >= s.size()) throw Error("truncated term");
    TermPtr t;
    char c = s[i];
    if (c == 'a' || c == 'b' || c == '0' || c == '1') {
        t = std::make_shared<Term>(Term{c, nullptr, nullptr});
        ++i;
    } else if (c == '(') {
        ++i;
        TermPtr l = parse_term_at(s, i);
        if (i >= s.size() || s[i] != '+') throw Error("expected + in term");
        ++i;
        TermPtr r = parse_term_at(s, i);
        if (i >= s.size() || s[i] != ')') throw Error("expected ) in term");
        ++i;
        t = std::make_shared<Term>(Term{'+', l, r});
    } else {
        throw Error("bad term syntax: " + s);
    }
    while (i < s.size() && s[i] == '*') {
        t = std::make_shared<Term>(Term{'*', t, nullptr});
        ++i;
    }
    return t;
}

TermPtr parse_term(const std::string& s) {
    size_t i = 0;
    TermPtr t = parse_term_at(s, i);
    if (i != s.size()) throw Error("trailing characters in term: " + s);
    return t;
}

int eval_term(const QmvTable& m, const TermPtr& t, int a, int b) {
    switch (t->kind) {
        case 'a': return a;
        case 'b': return b;
        case '0': return m.zero;
        case '1': return m.one;
        case '*': return m.star(eval_term(m, t->l, a, b));
        default:
            return m.oplus(eval_term(m, t->l, a, b), eval_term(m, t->r, a, b));
    }
}

}  // namespace

bool hom_transport_check(const Homomorphism& h, const std::string& term) {
    TermPtr t = parse_term(term);
    for (int x = 0; x < h.source.size(); ++x)
        for (int y = 0; y < h.source.size(); ++y)
            if (h.map[eval_term(h.source, t, x, y)] !=
                eval_term(h.target, t, h.map[x], h.map[y]))
                return false;
    return true;
}

namespace {

QmvTable make_m4() {
    QmvTable m;
    m.elements = {"0", "a", "b", "1"};
    m.zero = 0;
    m.one = 3;
    m.star_ = {3, 1, 2, 0};
    m.op.assign(16, -1);
    for (int x = 0; x < 4; ++x) {
        m.op[x * 4 + 0] = x;
        m.op[0 * 4 + x] = x;
        m.op[x * 4 + 3] = 3;
        m.op[3 * 4 + x] = 3;
    }
    for (int x : {1, 2})
        for (int y : {1, 2}) m.op[x * 4 + y] = 3;
    return m;
}

QmvTable make_m3() {
    QmvTable m;
    m.elements = {"0", "1/2", "1"};
    m.zero = 0;
    m.one = 2;
    m.star_ = {2, 1, 0};
    m.op.assign(9, -1);
    for (int x = 0; x < 3; ++x)
        for (int y = 0; y < 3; ++y) m.op[x * 3 + y] = std::min(x + y, 2);
    return m;
}

PartialTable make_k5ea() {
    PartialTable t;
    t.elements = {"0", "1/4", "1/2", "3/4", "1"};
    t.zero = 0;
    t.one = 4;
    for (int a = 0; a <= 4; ++a)
        for (int b = 0; b <= 4; ++b)
            if (a + b <= 4) t.psum[{a, b}] = a + b;
    return t;
}

PartialTable make_bool2ea() {
    PartialTable t;
    t.elements = {"0", "p1", "p2", "1"};
    t.zero = 0;
    t.one = 3;
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            if ((a & b) == 0) t.psum[{a, b}] = a | b;
    return t;
}

}  // namespace

QmvTable catalog_qmv(const std::string& name) {
    if (name == "M4") return make_m4();
    if (name == "M3") return make_m3();
    throw Error("unknown catalog table: " + name);
}

PartialTable catalog_partial(const std::string& name) {
    if (name == "K5EA") return make_k5ea();
    if (name == "BOOL2EA") return make_bool2ea();
    throw Error("unknown catalog table: " + name);
}

Homomorphism hom_m4_m3() {
    Homomorphism h;
    h.source = make_m4();
    h.target = make_m3();
    h.map = {0, 1, 1, 2};
    return h;
}

}  // namespace ql
