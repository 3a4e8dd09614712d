#include "ql/semantics.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

namespace ql {

namespace {

int eval_rec(const Structure& st, const Assignment& v, const FormulaPtr& f) {
    using K = NodeKind;
    switch (f->kind) {
        case K::Literal: {
            auto it = v.find(f->literal);
            if (it == v.end()) throw Error("unassigned literal " + f->literal);
            return it->second;
        }
        case K::Not:
            return st.inv(eval_rec(st, v, f->left));
        case K::INot: {
            if (!st.has_bz())
                throw Error("no second complement available for " +
                            print_formula(f));
            return st.bz_inv(eval_rec(st, v, f->left));
        }
        case K::And: {
            int m = st.meet(eval_rec(st, v, f->left),
                            eval_rec(st, v, f->right));
            if (m == Structure::kUndefined)
                throw Error("meet undefined while evaluating " +
                            print_formula(f));
            return m;
        }
        default:
            throw Error("connective has no algebraic value: " +
                        print_formula(f));
    }
}

struct Search {
    std::vector<const NamedStructure*> order;
    std::vector<std::string> lits;

    Search(const std::vector<NamedStructure>& structs,
           const std::vector<FormulaPtr>& formulas) {
        for (const auto& s : structs) order.push_back(&s);
        std::stable_sort(order.begin(), order.end(),
                         [](const NamedStructure* a, const NamedStructure* b) {
                             return a->st.size() < b->st.size();
                         });
        std::set<std::string> seen;
        for (const auto& f : formulas)
            for (const auto& l : literals_of(f)) seen.insert(l);
        lits.assign(seen.begin(), seen.end());
    }

    // Calls pred for every (structure, assignment) in canonical order; the
    // first assignment where pred returns true becomes the result.
    std::optional<Countermodel> first(
        const std::function<bool(const Structure&, const Assignment&)>& pred)
        const {
        for (const NamedStructure* ns : order) {
            const Structure& st = ns->st;
            int n = st.size();
            size_t k = lits.size();
            std::vector<int> idx(k, 0);
            for (;;) {
                Assignment v;
                for (size_t i = 0; i < k; ++i) v[lits[i]] = idx[i];
                if (pred(st, v)) {
                    Countermodel cm;
                    cm.structure = ns->name;
                    for (const auto& [lit, e] : v)
                        cm.assignment[lit] = st.name(e);
                    return cm;
                }
                size_t i = k;
                while (i > 0 && ++idx[i - 1] == n) idx[--i] = 0;
                if (i == 0) break;
            }
        }
        return std::nullopt;
    }
};

std::vector<FormulaPtr> expanded(const std::vector<FormulaPtr>& fs) {
    std::vector<FormulaPtr> out;
    for (const auto& f : fs) out.push_back(expand(f));
    return out;
}

std::vector<FormulaPtr> with(const std::vector<FormulaPtr>& fs,
                             const FormulaPtr& g) {
    std::vector<FormulaPtr> out = fs;
    out.push_back(g);
    return out;
}

}  // namespace

int evaluate(const Structure& st, const Assignment& v, const FormulaPtr& f) {
    return eval_rec(st, v, expand(f));
}

Verdict logical_truth(const std::vector<NamedStructure>& structs,
                      const FormulaPtr& formula) {
    FormulaPtr f = expand(formula);
    Search s(structs, {f});
    return s.first([&](const Structure& st, const Assignment& v) {
        return eval_rec(st, v, f) != st.one();
    });
}

Verdict consequence(const std::vector<NamedStructure>& structs,
                    const std::vector<FormulaPtr>& premises,
                    const FormulaPtr& conclusion) {
    auto prems = expanded(premises);
    FormulaPtr concl = expand(conclusion);
    Search s(structs, with(prems, concl));
    return s.first([&](const Structure& st, const Assignment& v) {
        int m = st.one();
        for (const auto& p : prems) {
            m = st.meet(m, eval_rec(st, v, p));
            if (m == Structure::kUndefined)
                throw Error("meet of premise values undefined");
        }
        return !st.leq(m, eval_rec(st, v, concl));
    });
}

Verdict weak_consequence(const std::vector<NamedStructure>& structs,
                         const std::vector<FormulaPtr>& premises,
                         const FormulaPtr& conclusion) {
    auto prems = expanded(premises);
    FormulaPtr concl = expand(conclusion);
    Search s(structs, with(prems, concl));
    return s.first([&](const Structure& st, const Assignment& v) {
        for (const auto& p : prems)
            if (eval_rec(st, v, p) != st.one()) return false;
        return eval_rec(st, v, concl) != st.one();
    });
}

bool quasi_model(const Structure& st, const Assignment& v,
                 const std::vector<FormulaPtr>& T) {
    uint64_t below = ~uint64_t{0};
    for (const auto& f : T) below &= st.down_mask(eval_rec(st, v, expand(f)));
    below &= ~(uint64_t{1} << st.zero());
    return below != 0;
}

std::optional<Countermodel> find_quasi_model(
    const std::vector<NamedStructure>& structs,
    const std::vector<FormulaPtr>& T) {
    auto ts = expanded(T);
    Search s(structs, ts);
    return s.first([&](const Structure& st, const Assignment& v) {
        return quasi_model(st, v, ts);
    });
}

std::optional<Countermodel> find_model(
    const std::vector<NamedStructure>& structs,
    const std::vector<FormulaPtr>& T) {
    auto ts = expanded(T);
    Search s(structs, ts);
    return s.first([&](const Structure& st, const Assignment& v) {
        for (const auto& f : ts)
            if (eval_rec(st, v, f) != st.one()) return false;
        return true;
    });
}

bool realizable(const std::vector<NamedStructure>& structs,
                const std::vector<FormulaPtr>& T) {
    return find_quasi_model(structs, T).has_value();
}

bool verifiable(const std::vector<NamedStructure>& structs,
                const std::vector<FormulaPtr>& T) {
    return find_model(structs, T).has_value();
}

Verdict quasi_consequence(const std::vector<NamedStructure>& structs,
                          const std::vector<FormulaPtr>& T,
                          const FormulaPtr& alpha) {
    auto ts = expanded(T);
    std::vector<FormulaPtr> goal = {expand(alpha)};
    Search s(structs, with(ts, goal[0]));
    return s.first([&](const Structure& st, const Assignment& v) {
        return quasi_model(st, v, ts) && !quasi_model(st, v, goal);
    });
}

FoPtr FoFormula::pred(std::string name, std::vector<FoTerm> args) {
    auto f = std::make_shared<FoFormula>();
    f->kind = Pred;
    f->head = std::move(name);
    f->args = std::move(args);
    return f;
}

FoPtr FoFormula::mk(Kind k, std::string var, FoPtr a, FoPtr b) {
    auto f = std::make_shared<FoFormula>();
    f->kind = k;
    f->head = std::move(var);
    f->left = std::move(a);
    f->right = std::move(b);
    return f;
}

namespace {

struct FoParser {
    std::string s;
    size_t pos = 0;

    void skip() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
            ++pos;
    }
    char peek() {
        skip();
        return pos < s.size() ? s[pos] : '\0';
    }
    std::string ident() {
        skip();
        size_t start = pos;
        while (pos < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[pos])) ||
                s[pos] == '_'))
            ++pos;
        if (pos == start)
            throw Error("expected an identifier at position " +
                        std::to_string(pos));
        return s.substr(start, pos - start);
    }
    void expect(char c) {
        if (peek() != c)
            throw Error(std::string("expected '") + c + "' at position " +
                        std::to_string(pos));
        ++pos;
    }

    FoPtr parse() {
        FoPtr f = disj();
        skip();
        if (pos != s.size()) throw Error("trailing first-order input");
        return f;
    }
    FoPtr disj() {
        FoPtr l = conj();
        while (peek() == '|') {
            ++pos;
            l = FoFormula::mk(FoFormula::Or, "", l, conj());
        }
        return l;
    }
    FoPtr conj() {
        FoPtr l = unary();
        while (peek() == '&') {
            ++pos;
            l = FoFormula::mk(FoFormula::And, "", l, unary());
        }
        return l;
    }
    FoPtr unary() {
        if (peek() == '-') {
            ++pos;
            return FoFormula::mk(FoFormula::Not, "", unary());
        }
        skip();
        if (s.compare(pos, 4, "all ") == 0) {
            pos += 4;
            std::string x = ident();
            return FoFormula::mk(FoFormula::Forall, x, unary());
        }
        if (s.compare(pos, 3, "ex ") == 0) {
            pos += 3;
            std::string x = ident();
            return FoFormula::mk(FoFormula::Exists, x, unary());
        }
        if (peek() == '(') {
            ++pos;
            FoPtr f = disj();
            expect(')');
            return f;
        }
        std::string p = ident();
        expect('(');
        std::vector<FoTerm> args;
        if (peek() != ')') {
            for (;;) {
                args.push_back({true, ident()});
                if (peek() != ',') break;
                ++pos;
            }
        }
        expect(')');
        return FoFormula::pred(p, std::move(args));
    }
};

}  // namespace

FoPtr parse_fo(const std::string& text) {
    FoParser p{text};
    return p.parse();
}

std::string print_fo(const FoPtr& f) {
    switch (f->kind) {
        case FoFormula::Pred: {
            std::string out = f->head + "(";
            for (size_t i = 0; i < f->args.size(); ++i) {
                if (i) out += ", ";
                out += f->args[i].name;
            }
            return out + ")";
        }
        case FoFormula::Not: return "-" + print_fo(f->left);
        case FoFormula::And:
            return "(" + print_fo(f->left) + " & " + print_fo(f->right) + ")";
        case FoFormula::Or:
            return "(" + print_fo(f->left) + " | " + print_fo(f->right) + ")";
        case FoFormula::Forall: return "all " + f->head + " " + print_fo(f->left);
        case FoFormula::Exists: return "ex " + f->head + " " + print_fo(f->left);
    }
    return "?";
}

int fo_evaluate(const FirstOrderModel& m, const std::map<std::string, int>& sigma,
                const FoPtr& f) {
    const Structure& st = m.st;
    switch (f->kind) {
        case FoFormula::Pred: {
            auto pit = m.predicates.find(f->head);
            if (pit == m.predicates.end())
                throw Error("unknown predicate " + f->head);
            std::vector<int> tuple;
            for (const auto& t : f->args) {
                auto sit = sigma.find(t.name);
                if (sit != sigma.end()) {
                    tuple.push_back(sit->second);
                } else {
                    auto cit = m.constants.find(t.name);
                    if (cit == m.constants.end())
                        throw Error("unbound term " + t.name);
                    tuple.push_back(cit->second);
                }
            }
            auto vit = pit->second.find(tuple);
            if (vit == pit->second.end())
                throw Error("predicate " + f->head +
                            " has no value on the given tuple");
            return vit->second;
        }
        case FoFormula::Not:
            return st.inv(fo_evaluate(m, sigma, f->left));
        case FoFormula::And: {
            int v = st.meet(fo_evaluate(m, sigma, f->left),
                            fo_evaluate(m, sigma, f->right));
            if (v == Structure::kUndefined) throw Error("meet undefined");
            return v;
        }
        case FoFormula::Or: {
            int v = st.join(fo_evaluate(m, sigma, f->left),
                            fo_evaluate(m, sigma, f->right));
            if (v == Structure::kUndefined) throw Error("join undefined");
            return v;
        }
        case FoFormula::Forall: {
            uint64_t vals = 0;
            std::map<std::string, int> s2 = sigma;
            for (int d = 0; d < static_cast<int>(m.domain.size()); ++d) {
                s2[f->head] = d;
                vals |= uint64_t{1} << fo_evaluate(m, s2, f->left);
            }
            int v = st.meet_mask(vals);
            if (v == Structure::kUndefined) throw Error("infimum undefined");
            return v;
        }
        case FoFormula::Exists: {
            auto dual = FoFormula::mk(
                FoFormula::Forall, f->head,
                FoFormula::mk(FoFormula::Not, "", f->left));
            return st.inv(fo_evaluate(m, sigma, dual));
        }
    }
    throw Error("bad first-order node");
}

}  // namespace ql
