#include "ql/proof.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace ql {

namespace {

using F = FormulaPtr;
using K = NodeKind;

F mkNot(F a) { return Formula::mk(K::Not, std::move(a)); }
F mkAnd(F a, F b) { return Formula::mk(K::And, std::move(a), std::move(b)); }
F mkAut(F a, F b) { return Formula::mk(K::Aut, std::move(a), std::move(b)); }
F mkL(F a) { return Formula::mk(K::INot, mkNot(std::move(a))); }
F mkM(F a) { return mkNot(mkL(mkNot(std::move(a)))); }
F mkOr(F a, F b) { return mkNot(mkAnd(mkNot(std::move(a)), mkNot(std::move(b)))); }

std::string key(const F& f) { return print_formula(f); }
bool eq(const F& a, const F& b) { return equal(a, b); }

// Shape accessors; null when the node does not fit.
F not_arg(const F& f) { return f->kind == K::Not ? f->left : nullptr; }
F l_arg(const F& f) {
    if (f->kind == K::INot && f->left->kind == K::Not) return f->left->left;
    return nullptr;
}
F m_arg(const F& f) {
    if (f->kind != K::Not) return nullptr;
    F inner = l_arg(f->left);
    if (f->left->kind != K::INot || !inner) return nullptr;
    return not_arg(inner);
}
std::pair<F, F> or_args(const F& f) {
    if (f->kind == K::Not && f->left->kind == K::And) {
        F a = not_arg(f->left->left), b = not_arg(f->left->right);
        if (a && b) return {a, b};
    }
    return {nullptr, nullptr};
}

std::vector<F> canon(std::vector<F> v) {
    std::sort(v.begin(), v.end(),
              [](const F& a, const F& b) { return key(a) < key(b); });
    v.erase(std::unique(v.begin(), v.end(),
                        [](const F& a, const F& b) { return eq(a, b); }),
            v.end());
    return v;
}

bool contains(const std::vector<F>& v, const F& f) {
    return std::any_of(v.begin(), v.end(),
                       [&](const F& g) { return eq(f, g); });
}

bool set_eq(const std::vector<F>& a, const std::vector<F>& b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
        if (!eq(a[i], b[i])) return false;
    return true;
}

std::vector<F> minus(const std::vector<F>& v, const F& f) {
    std::vector<F> out;
    for (const auto& g : v)
        if (!eq(f, g)) out.push_back(g);
    return out;
}

std::vector<F> plus(std::vector<F> v, const F& f) {
    v.push_back(f);
    return canon(std::move(v));
}

std::vector<F> unite(std::vector<F> a, const std::vector<F>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return canon(std::move(a));
}

}  // namespace

Calculus calculus_from(const std::string& name) {
    static const std::map<std::string, Calculus> m = {
        {"OL", Calculus::OL},       {"OQL", Calculus::OQL},
        {"PQL", Calculus::PQL},     {"RPQL", Calculus::RPQL},
        {"BZL", Calculus::BZL},     {"BZL3", Calculus::BZL3},
        {"UPaQL", Calculus::UPaQL}, {"WPaQL", Calculus::WPaQL},
        {"SPaQL", Calculus::SPaQL}};
    auto it = m.find(name);
    if (it == m.end()) throw Error("unknown calculus: " + name);
    return it->second;
}

std::string to_string(Calculus c) {
    switch (c) {
        case Calculus::OL: return "OL";
        case Calculus::OQL: return "OQL";
        case Calculus::PQL: return "PQL";
        case Calculus::RPQL: return "RPQL";
        case Calculus::BZL: return "BZL";
        case Calculus::BZL3: return "BZL3";
        case Calculus::UPaQL: return "UPaQL";
        case Calculus::WPaQL: return "WPaQL";
        case Calculus::SPaQL: return "SPaQL";
    }
    throw Error("bad calculus");
}

Dialect dialect_of(Calculus c) {
    switch (c) {
        case Calculus::OL: return Dialect::OL;
        case Calculus::OQL: return Dialect::OQL;
        case Calculus::PQL: return Dialect::PQL;
        case Calculus::RPQL: return Dialect::RPQL;
        case Calculus::BZL: return Dialect::BZL;
        case Calculus::BZL3: return Dialect::BZL3;
        case Calculus::UPaQL: return Dialect::UPaQL;
        case Calculus::WPaQL: return Dialect::WPaQL;
        case Calculus::SPaQL: return Dialect::SPaQL;
    }
    throw Error("bad calculus");
}

FormulaPtr proof_normal(const FormulaPtr& f) {
    std::function<F(const F&)> fix = [&](const F& g) -> F {
        if (!g) return g;
        F l = fix(g->left), r = fix(g->right);
        if (g->kind == K::INot && l->kind != K::Not)
            return Formula::mk(K::INot, mkNot(mkNot(l)));
        if (!l && !r) return g;
        F out = Formula::mk(g->kind, l, r);
        const_cast<Formula*>(out.get())->literal = g->literal;
        const_cast<Formula*>(out.get())->arrow_index = g->arrow_index;
        return out;
    };
    return fix(expand(f));
}

Config make_config(Calculus c, const std::vector<std::string>& premises,
                   const std::string& conclusion) {
    Config cfg;
    for (const auto& p : premises)
        cfg.premises.push_back(proof_normal(parse_formula(dialect_of(c), p)));
    cfg.premises = canon(std::move(cfg.premises));
    cfg.conclusion = proof_normal(parse_formula(dialect_of(c), conclusion));
    return cfg;
}

std::string print_config(const Config& cfg) {
    std::string out = "[";
    for (size_t i = 0; i < cfg.premises.size(); ++i) {
        if (i) out += "; ";
        out += print_formula(cfg.premises[i]);
    }
    out += "] |- " + print_formula(cfg.conclusion);
    return out;
}

namespace {

struct RuleDef {
    size_t arity;
    // Returns an empty string on success, otherwise the mismatch reason.
    std::function<std::string(const std::vector<Step>&, const Step&)> match;
};

const Config& ref(const std::vector<Step>& steps, const Step& s, size_t i) {
    return steps[s.refs[i]].config;
}

std::string need(bool ok, const char* what) {
    return ok ? "" : std::string("shape mismatch: ") + what;
}

const std::map<std::string, RuleDef>& rule_table() {
    static const std::map<std::string, RuleDef> table = [] {
        std::map<std::string, RuleDef> t;
        t["OL1"] = {0, [](const std::vector<Step>&, const Step& s) {
            return need(contains(s.config.premises, s.config.conclusion),
                        "conclusion must be a premise");
        }};
        t["OL2"] = {2, [](const std::vector<Step>& st, const Step& s) {
            const Config& p = ref(st, s, 0);
            const Config& q = ref(st, s, 1);
            if (!contains(q.premises, p.conclusion))
                return need(false, "cut formula missing from second premises");
            if (!eq(s.config.conclusion, q.conclusion))
                return need(false, "conclusion must come from the second step");
            auto u1 = unite(p.premises, minus(q.premises, p.conclusion));
            auto u2 = unite(p.premises, q.premises);
            return need(set_eq(s.config.premises, u1) ||
                            set_eq(s.config.premises, u2),
                        "premise union");
        }};
        t["OL3"] = {0, [](const std::vector<Step>&, const Step& s) {
            for (const auto& f : s.config.premises)
                if (f->kind == K::And && eq(s.config.conclusion, f->left))
                    return std::string();
            return need(false, "no conjunction with the conclusion on the left");
        }};
        t["OL4"] = {0, [](const std::vector<Step>&, const Step& s) {
            for (const auto& f : s.config.premises)
                if (f->kind == K::And && eq(s.config.conclusion, f->right))
                    return std::string();
            return need(false, "no conjunction with the conclusion on the right");
        }};
        t["OL5"] = {2, [](const std::vector<Step>& st, const Step& s) {
            const Config& p = ref(st, s, 0);
            const Config& q = ref(st, s, 1);
            if (s.config.conclusion->kind != K::And)
                return need(false, "conclusion must be a conjunction");
            return need(set_eq(p.premises, s.config.premises) &&
                            set_eq(q.premises, s.config.premises) &&
                            eq(s.config.conclusion->left, p.conclusion) &&
                            eq(s.config.conclusion->right, q.conclusion),
                        "conjunction introduction");
        }};
        t["OL6"] = {1, [](const std::vector<Step>& st, const Step& s) {
            const Config& p = ref(st, s, 0);
            if (!eq(p.conclusion, s.config.conclusion))
                return need(false, "conclusion must be kept");
            for (const auto& f : s.config.premises) {
                if (f->kind != K::And) continue;
                auto t0 = plus(plus(minus(s.config.premises, f), f->left),
                               f->right);
                if (set_eq(p.premises, t0) || set_eq(p.premises, plus(t0, f)))
                    return std::string();
            }
            return need(false, "no conjunction packaging the premise step");
        }};
        t["OL7"] = {2, [](const std::vector<Step>& st, const Step& s) {
            const Config& p = ref(st, s, 0);
            const Config& q = ref(st, s, 1);
            if (!s.config.premises.empty())
                return need(false, "conclusion configuration must have no premises");
            if (p.premises.size() != 1 || !set_eq(p.premises, q.premises))
                return need(false, "both steps need the same single premise");
            F neg = not_arg(q.conclusion);
            if (!neg || !eq(neg, p.conclusion))
                return need(false, "steps must conclude a formula and its negation");
            F c = not_arg(s.config.conclusion);
            return need(c && eq(c, p.premises[0]),
                        "conclusion must negate the shared premise");
        }};
        t["OL8"] = {0, [](const std::vector<Step>&, const Step& s) {
            F a = not_arg(s.config.conclusion);
            F b = a ? not_arg(a) : nullptr;
            return need(b && contains(s.config.premises, b),
                        "conclusion must doubly negate a premise");
        }};
        t["OL9"] = {0, [](const std::vector<Step>&, const Step& s) {
            F dn = mkNot(mkNot(s.config.conclusion));
            return need(contains(s.config.premises, dn),
                        "double negation of the conclusion must be a premise");
        }};
        t["OL10"] = {0, [](const std::vector<Step>&, const Step& s) {
            for (const auto& f : s.config.premises) {
                if (f->kind != K::And) continue;
                F n = not_arg(f->right);
                if (n && eq(n, f->left)) return std::string();
            }
            return need(false, "no contradictory conjunction among the premises");
        }};
        t["OL11"] = {1, [](const std::vector<Step>& st, const Step& s) {
            const Config& p = ref(st, s, 0);
            if (p.premises.size() != 1 || s.config.premises.size() != 1)
                return need(false, "contraposition is single-premise");
            return need(eq(s.config.premises[0], mkNot(p.conclusion)) &&
                            eq(s.config.conclusion, mkNot(p.premises[0])),
                        "contraposition");
        }};
        t["OQL"] = {0, [](const std::vector<Step>&, const Step& s) {
            if (s.config.premises.size() != 1)
                return need(false, "one premise expected");
            const F& f = s.config.premises[0];
            // a & -(a & -(a & b))
            if (f->kind != K::And) return need(false, "orthomodularity shape");
            F a = f->left;
            F n1 = not_arg(f->right);
            if (!n1 || n1->kind != K::And || !eq(n1->left, a))
                return need(false, "orthomodularity shape");
            F n2 = not_arg(n1->right);
            if (!n2 || n2->kind != K::And || !eq(n2->left, a))
                return need(false, "orthomodularity shape");
            return need(eq(n2->right, s.config.conclusion),
                        "orthomodularity conclusion");
        }};
        t["Kleene"] = {0, [](const std::vector<Step>&, const Step& s) {
            if (s.config.premises.size() != 1)
                return need(false, "one premise expected");
            const F& f = s.config.premises[0];
            F n = f->kind == K::And ? not_arg(f->right) : nullptr;
            if (!n || !eq(n, f->left))
                return need(false, "premise must be a contradiction");
            auto [x, y] = or_args(s.config.conclusion);
            F ny = x ? not_arg(y) : nullptr;
            return need(x && ny && eq(ny, x),
                        "conclusion must be an excluded middle");
        }};
        t["BZ1"] = {0, [](const std::vector<Step>&, const Step& s) {
            if (s.config.premises.size() != 1)
                return need(false, "one premise expected");
            F a = l_arg(s.config.premises[0]);
            return need(a && eq(a, s.config.conclusion), "necessity elimination");
        }};
        t["BZ2"] = {0, [](const std::vector<Step>&, const Step& s) {
            if (s.config.premises.size() != 1)
                return need(false, "one premise expected");
            F a = l_arg(s.config.premises[0]);
            return need(a && eq(s.config.conclusion, mkL(mkL(a))),
                        "necessity iteration");
        }};
        t["BZ3"] = {0, [](const std::vector<Step>&, const Step& s) {
            if (s.config.premises.size() != 1)
                return need(false, "one premise expected");
            F ml = m_arg(s.config.premises[0]);
            F a = ml ? l_arg(ml) : nullptr;
            return need(a && eq(s.config.conclusion, mkL(a)),
                        "possibility of necessity");
        }};
        t["BZ4"] = {1, [](const std::vector<Step>& st, const Step& s) {
            const Config& p = ref(st, s, 0);
            if (p.premises.size() != 1 || s.config.premises.size() != 1)
                return need(false, "monotonicity is single-premise");
            return need(eq(s.config.premises[0], mkL(p.premises[0])) &&
                            eq(s.config.conclusion, mkL(p.conclusion)),
                        "necessity monotonicity");
        }};
        t["BZ5"] = {0, [](const std::vector<Step>&, const Step& s) {
            if (s.config.premises.size() != 1)
                return need(false, "one premise expected");
            const F& f = s.config.premises[0];
            F a = f->kind == K::And ? l_arg(f->left) : nullptr;
            F b = f->kind == K::And ? l_arg(f->right) : nullptr;
            return need(a && b && eq(s.config.conclusion, mkL(mkAnd(a, b))),
                        "necessity meets");
        }};
        t["BZ6"] = {0, [](const std::vector<Step>&, const Step& s) {
            if (!s.config.premises.empty())
                return need(false, "no premises expected");
            const F& c = s.config.conclusion;
            if (c->kind != K::Not || c->left->kind != K::And)
                return need(false, "negated contradiction shape");
            F u = c->left->left;
            F v = not_arg(c->left->right);
            return need(v && eq(u, v) && l_arg(u),
                        "negated necessity contradiction");
        }};
        t["BZ3.1"] = {0, [](const std::vector<Step>&, const Step& s) {
            if (s.config.premises.size() != 1)
                return need(false, "one premise expected");
            F inner = l_arg(s.config.premises[0]);
            auto [a, b] = inner ? or_args(inner) : std::pair<F, F>{nullptr, nullptr};
            if (!a) return need(false, "necessity of a disjunction expected");
            auto [u, v] = or_args(s.config.conclusion);
            return need(u && eq(u, mkL(a)) && eq(v, mkL(b)),
                        "distributed necessity");
        }};
        t["BZ3.2"] = {2, [](const std::vector<Step>& st, const Step& s) {
            const Config& p = ref(st, s, 0);
            const Config& q = ref(st, s, 1);
            if (s.config.premises.size() != 1)
                return need(false, "one premise expected");
            F a = s.config.premises[0];
            F b = s.config.conclusion;
            return need(p.premises.size() == 1 &&
                            eq(p.premises[0], mkL(a)) && eq(p.conclusion, b) &&
                            q.premises.size() == 1 && eq(q.premises[0], a) &&
                            eq(q.conclusion, mkM(b)),
                        "strong transfer");
        }};

        auto seq = [](const Config& c) -> std::pair<F, F> {
            return {c.premises[0], c.conclusion};
        };
        t["UPa1"] = {0, [seq](const std::vector<Step>&, const Step& s) {
            auto [a, b] = seq(s.config);
            return need(eq(a, b), "identity");
        }};
        t["UPa2"] = {2, [seq](const std::vector<Step>& st, const Step& s) {
            auto [a, b] = seq(s.config);
            auto [pa, pb] = seq(ref(st, s, 0));
            auto [qa, qb] = seq(ref(st, s, 1));
            return need(eq(a, pa) && eq(pb, qa) && eq(qb, b), "transitivity");
        }};
        t["UPa3"] = {0, [seq](const std::vector<Step>&, const Step& s) {
            auto [a, b] = seq(s.config);
            return need(eq(b, mkNot(mkNot(a))), "double negation introduction");
        }};
        t["UPa4"] = {0, [seq](const std::vector<Step>&, const Step& s) {
            auto [a, b] = seq(s.config);
            return need(eq(a, mkNot(mkNot(b))), "double negation elimination");
        }};
        t["UPa5"] = {1, [seq](const std::vector<Step>& st, const Step& s) {
            auto [a, b] = seq(s.config);
            auto [pa, pb] = seq(ref(st, s, 0));
            return need(eq(a, mkNot(pb)) && eq(b, mkNot(pa)), "contraposition");
        }};
        t["UPa6"] = {0, [seq](const std::vector<Step>&, const Step& s) {
            auto [a, b] = seq(s.config);
            (void)a;
            F n = b->kind == K::Aut ? not_arg(b->right) : nullptr;
            return need(n && eq(n, b->left), "excluded middle");
        }};
        t["UPa7"] = {2, [seq](const std::vector<Step>& st, const Step& s) {
            auto [na, b] = seq(s.config);
            F a = not_arg(na);
            if (!a) return need(false, "negated left side expected");
            auto [pa, pb] = seq(ref(st, s, 0));
            auto [qa, qb] = seq(ref(st, s, 1));
            return need(eq(pa, a) && eq(pb, mkNot(b)) &&
                            eq(qa, mkAut(a, mkNot(a))) && eq(qb, mkAut(a, b)),
                        "unicity of negation");
        }};
        t["UPa8"] = {5, [seq](const std::vector<Step>& st, const Step& s) {
            auto [l, r] = seq(s.config);
            if (l->kind != K::Aut || r->kind != K::Aut)
                return need(false, "disjunctions expected on both sides");
            F a = l->left, b = l->right, a1 = r->left, b1 = r->right;
            auto [p1a, p1b] = seq(ref(st, s, 0));
            auto [p2a, p2b] = seq(ref(st, s, 1));
            auto [p3a, p3b] = seq(ref(st, s, 2));
            auto [p4a, p4b] = seq(ref(st, s, 3));
            auto [p5a, p5b] = seq(ref(st, s, 4));
            return need(eq(p1a, a) && eq(p1b, mkNot(b)) && eq(p2a, a) &&
                            eq(p2b, a1) && eq(p3a, a1) && eq(p3b, a) &&
                            eq(p4a, b) && eq(p4b, b1) && eq(p5a, b1) &&
                            eq(p5b, b),
                        "substitutivity");
        }};
        t["UPa9"] = {1, [seq](const std::vector<Step>& st, const Step& s) {
            auto [l, r] = seq(s.config);
            if (l->kind != K::Aut || r->kind != K::Aut)
                return need(false, "disjunctions expected on both sides");
            F a = l->left, b = l->right;
            auto [pa, pb] = seq(ref(st, s, 0));
            return need(eq(r->left, b) && eq(r->right, a) && eq(pa, a) &&
                            eq(pb, mkNot(b)),
                        "commutativity");
        }};
        auto assoc_prems = [seq](const std::vector<Step>& st, const Step& s,
                                 F a, F b, F c) {
            auto [pa, pb] = seq(ref(st, s, 0));
            auto [qa, qb] = seq(ref(st, s, 1));
            return eq(pa, b) && eq(pb, mkNot(c)) && eq(qa, a) &&
                   eq(qb, mkNot(mkAut(b, c)));
        };
        t["UPa10"] = {2, [seq, assoc_prems](const std::vector<Step>& st,
                                            const Step& s) {
            auto [a, r] = seq(s.config);
            F b = not_arg(r);
            if (!b) return need(false, "negated conclusion expected");
            auto [pa, pb] = seq(ref(st, s, 0));
            F c = not_arg(pb);
            if (!c || !eq(pa, b)) return need(false, "orthogonality premise");
            return need(assoc_prems(st, s, a, b, c), "associativity premises");
        }};
        t["UPa11"] = {2, [seq, assoc_prems](const std::vector<Step>& st,
                                            const Step& s) {
            auto [l, r] = seq(s.config);
            F c = not_arg(r);
            if (l->kind != K::Aut || !c)
                return need(false, "disjunction against a negation expected");
            F a = l->left, b = l->right;
            return need(assoc_prems(st, s, a, b, c), "associativity premises");
        }};
        t["UPa12"] = {2, [seq, assoc_prems](const std::vector<Step>& st,
                                            const Step& s) {
            auto [l, r] = seq(s.config);
            if (l->kind != K::Aut || l->right->kind != K::Aut)
                return need(false, "right-nested disjunction expected");
            F a = l->left, b = l->right->left, c = l->right->right;
            return need(eq(r, mkAut(mkAut(a, b), c)) &&
                            assoc_prems(st, s, a, b, c),
                        "associativity");
        }};
        t["UPa13"] = {2, [seq, assoc_prems](const std::vector<Step>& st,
                                            const Step& s) {
            auto [l, r] = seq(s.config);
            if (l->kind != K::Aut || l->left->kind != K::Aut)
                return need(false, "left-nested disjunction expected");
            F a = l->left->left, b = l->left->right, c = l->right;
            return need(eq(r, mkAut(a, mkAut(b, c))) &&
                            assoc_prems(st, s, a, b, c),
                        "associativity");
        }};
        t["WPaQL"] = {1, [seq](const std::vector<Step>& st, const Step& s) {
            auto [a, b] = seq(s.config);
            (void)b;
            auto [pa, pb] = seq(ref(st, s, 0));
            return need(eq(pa, a) && eq(pb, mkNot(a)), "self-refuting premise");
        }};
        t["SPaQL"] = {3, [seq](const std::vector<Step>& st, const Step& s) {
            auto [l, g] = seq(s.config);
            if (l->kind != K::Aut) return need(false, "disjunction expected");
            F a = l->left, b = l->right;
            auto [p1a, p1b] = seq(ref(st, s, 0));
            auto [p2a, p2b] = seq(ref(st, s, 1));
            auto [p3a, p3b] = seq(ref(st, s, 2));
            return need(eq(p1a, a) && eq(p1b, mkNot(b)) && eq(p2a, a) &&
                            eq(p2b, g) && eq(p3a, b) && eq(p3b, g),
                        "supremum rule");
        }};
        return t;
    }();
    return table;
}

const std::vector<std::string>& rules_of(Calculus c) {
    static const std::map<Calculus, std::vector<std::string>> m = [] {
        std::map<Calculus, std::vector<std::string>> r;
        std::vector<std::string> ol = {"OL1", "OL2", "OL3", "OL4", "OL5", "OL6",
                                       "OL7", "OL8", "OL9", "OL10", "OL11"};
        std::vector<std::string> pql = {"OL1", "OL2", "OL3", "OL4", "OL5",
                                        "OL6", "OL8", "OL9", "OL11"};
        r[Calculus::OL] = ol;
        r[Calculus::OQL] = ol;
        r[Calculus::OQL].push_back("OQL");
        r[Calculus::PQL] = pql;
        r[Calculus::RPQL] = pql;
        r[Calculus::RPQL].push_back("Kleene");
        r[Calculus::BZL] = r[Calculus::RPQL];
        for (const char* b : {"BZ1", "BZ2", "BZ3", "BZ4", "BZ5", "BZ6"})
            r[Calculus::BZL].push_back(b);
        r[Calculus::BZL3] = r[Calculus::BZL];
        r[Calculus::BZL3].push_back("BZ3.1");
        r[Calculus::BZL3].push_back("BZ3.2");
        std::vector<std::string> upa;
        for (int i = 1; i <= 13; ++i) upa.push_back("UPa" + std::to_string(i));
        r[Calculus::UPaQL] = upa;
        r[Calculus::WPaQL] = upa;
        r[Calculus::WPaQL].push_back("WPaQL");
        r[Calculus::SPaQL] = r[Calculus::WPaQL];
        r[Calculus::SPaQL].push_back("SPaQL");
        return r;
    }();
    return m.at(c);
}

bool single_premise_calculus(Calculus c) {
    return c == Calculus::UPaQL || c == Calculus::WPaQL ||
           c == Calculus::SPaQL;
}

}  // namespace

std::vector<std::string> rule_names(Calculus c) { return rules_of(c); }

CheckResult check(const Derivation& d) {
    const auto& allowed = rules_of(d.calculus);
    const auto& table = rule_table();
    for (size_t i = 0; i < d.steps.size(); ++i) {
        const Step& s = d.steps[i];
        if (single_premise_calculus(d.calculus) &&
            s.config.premises.size() != 1)
            return {false, i,
                    "single-formula calculus: exactly one premise required"};
        if (std::find(allowed.begin(), allowed.end(), s.rule) == allowed.end())
            return {false, i, "rule " + s.rule + " is not available in " +
                                  to_string(d.calculus)};
        const RuleDef& def = table.at(s.rule);
        if (s.refs.size() != def.arity)
            return {false, i,
                    "rule " + s.rule + " expects " +
                        std::to_string(def.arity) + " cited steps"};
        for (size_t r : s.refs)
            if (r >= i) return {false, i, "cited step out of range"};
        std::string why = def.match(d.steps, s);
        if (!why.empty()) return {false, i, s.rule + ": " + why};
    }
    return {true, 0, ""};
}

Derivation parse_derivation(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    Derivation d;
    bool have_calc = false;
    auto trim = [](std::string s) {
        size_t a = s.find_first_not_of(" \t\r");
        size_t b = s.find_last_not_of(" \t\r");
        return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    while (std::getline(in, line)) {
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        if (!have_calc) {
            if (t.rfind("calculus:", 0) != 0)
                throw Error("derivation must start with a calculus header");
            d.calculus = calculus_from(trim(t.substr(9)));
            have_calc = true;
            continue;
        }
        size_t colon = t.find(':');
        if (colon == std::string::npos) throw Error("missing step number: " + t);
        size_t n = std::stoul(t.substr(0, colon));
        if (n != d.steps.size() + 1)
            throw Error("steps must be numbered consecutively");
        std::string rest = trim(t.substr(colon + 1));
        if (rest.empty() || rest[0] != '[')
            throw Error("missing premise list: " + t);
        size_t close = rest.find(']');
        if (close == std::string::npos) throw Error("unclosed premise list");
        std::string prem = rest.substr(1, close - 1);
        rest = trim(rest.substr(close + 1));
        if (rest.rfind("|-", 0) != 0) throw Error("missing turnstile: " + t);
        rest = trim(rest.substr(2));
        size_t by = rest.rfind(" BY ");
        if (by == std::string::npos) throw Error("missing BY clause: " + t);
        std::string concl = trim(rest.substr(0, by));
        std::string rulepart = trim(rest.substr(by + 4));

        Step s;
        std::vector<std::string> prems;
        std::stringstream ps(prem);
        std::string piece;
        while (std::getline(ps, piece, ';')) {
            piece = trim(piece);
            if (!piece.empty()) prems.push_back(piece);
        }
        s.config = make_config(d.calculus, prems, concl);
        size_t paren = rulepart.find('(');
        if (paren == std::string::npos) {
            s.rule = trim(rulepart);
        } else {
            s.rule = trim(rulepart.substr(0, paren));
            size_t endp = rulepart.find(')', paren);
            if (endp == std::string::npos) throw Error("unclosed citation list");
            std::string args = rulepart.substr(paren + 1, endp - paren - 1);
            if (args.rfind("prem=", 0) != 0)
                throw Error("citations must be written prem=i,j");
            std::stringstream as(args.substr(5));
            std::string num;
            while (std::getline(as, num, ',')) {
                size_t v = std::stoul(trim(num));
                if (v == 0) throw Error("citations are one-based");
                s.refs.push_back(v - 1);
            }
        }
        d.steps.push_back(std::move(s));
    }
    if (!have_calc) throw Error("empty derivation file");
    return d;
}

std::string print_derivation(const Derivation& d) {
    std::string out = "calculus: " + to_string(d.calculus) + "\n";
    for (size_t i = 0; i < d.steps.size(); ++i) {
        const Step& s = d.steps[i];
        out += std::to_string(i + 1) + ": " + print_config(s.config) + " BY " +
               s.rule;
        if (!s.refs.empty()) {
            out += "(prem=";
            for (size_t j = 0; j < s.refs.size(); ++j) {
                if (j) out += ",";
                out += std::to_string(s.refs[j] + 1);
            }
            out += ")";
        }
        out += "\n";
    }
    return out;
}

namespace {

struct Expander {
    std::vector<Step>& out;
    // Re-emitting a step that already exists with the same rule reuses the
    // earlier copy, so expansions never hold two interchangeable steps.
    size_t emit(Config cfg, std::string rule, std::vector<size_t> refs) {
        cfg.premises = canon(std::move(cfg.premises));
        for (size_t i = 0; i < out.size(); ++i)
            if (out[i].rule == rule &&
                eq(out[i].config.conclusion, cfg.conclusion) &&
                set_eq(out[i].config.premises, cfg.premises))
                return i;
        out.push_back({std::move(cfg), std::move(rule), std::move(refs)});
        return out.size() - 1;
    }
    size_t seq(F a, F b, std::string rule, std::vector<size_t> refs = {}) {
        return emit({{std::move(a)}, std::move(b)}, std::move(rule),
                    std::move(refs));
    }
};

void require_shape(bool ok, const std::string& macro) {
    if (!ok) throw Error("step does not fit the " + macro + " macro");
}

// Shared prefix: derives {-(a & b)} |- -(--a & --b).
size_t contraposed_meet(Expander& ex, const F& a, const F& b) {
    F dna = mkNot(mkNot(a)), dnb = mkNot(mkNot(b));
    F both = mkAnd(dna, dnb);
    size_t e1 = ex.emit({{both}, dna}, "OL3", {});
    size_t e2 = ex.emit({{dna}, a}, "OL9", {});
    size_t e3 = ex.emit({{both}, a}, "OL2", {e1, e2});
    size_t e4 = ex.emit({{both}, dnb}, "OL4", {});
    size_t e5 = ex.emit({{dnb}, b}, "OL9", {});
    size_t e6 = ex.emit({{both}, b}, "OL2", {e4, e5});
    size_t e7 = ex.emit({{both}, mkAnd(a, b)}, "OL5", {e3, e6});
    return ex.emit({{mkNot(mkAnd(a, b))}, mkNot(both)}, "OL11", {e7});
}

size_t expand_macro(const std::string& name, const Step& s,
                    const std::vector<size_t>& refs,
                    const std::vector<Step>& done, Expander& ex) {
    auto cited = [&](size_t i) -> const Config& {
        return done[refs.at(i)].config;
    };
    if (name == "D1b") {
        const F& c = s.config.conclusion;
        F n = c->kind == K::Aut ? not_arg(c->right) : nullptr;
        require_shape(n && eq(n, c->left), name);
        return ex.emit(s.config, "UPa6", {});
    }
    if (name == "D1a") {
        require_shape(s.config.premises.size() == 1, name);
        F t = not_arg(s.config.premises[0]);
        F n = t && t->kind == K::Aut ? not_arg(t->right) : nullptr;
        require_shape(n && eq(n, t->left), name);
        F beta = s.config.conclusion, nb = mkNot(beta);
        size_t e1 = ex.seq(nb, t, "UPa6");
        size_t e2 = ex.seq(mkNot(t), mkNot(nb), "UPa5", {e1});
        size_t e3 = ex.seq(mkNot(nb), beta, "UPa4");
        return ex.seq(mkNot(t), beta, "UPa2", {e2, e3});
    }
    if (name == "D2") {
        require_shape(s.config.premises.size() == 1 && refs.size() == 1, name);
        F a = s.config.premises[0];
        const F& ab = s.config.conclusion;
        require_shape(ab->kind == K::Aut && eq(ab->left, a), name);
        F b = ab->right;
        const Config& r = cited(0);
        require_shape(r.premises.size() == 1 && eq(r.premises[0], a) &&
                          eq(r.conclusion, mkNot(b)),
                      name);
        F nab = mkNot(ab);
        size_t e1 = ex.seq(nab, nab, "UPa1");
        size_t e2 = ex.seq(nab, mkNot(a), "UPa10", {refs[0], e1});
        size_t e3 = ex.seq(mkNot(mkNot(a)), mkNot(nab), "UPa5", {e2});
        size_t e4 = ex.seq(a, mkNot(mkNot(a)), "UPa3");
        size_t e5 = ex.seq(a, mkNot(nab), "UPa2", {e4, e3});
        size_t e6 = ex.seq(mkNot(nab), ab, "UPa4");
        return ex.seq(a, ab, "UPa2", {e5, e6});
    }
    if (name == "D5") {
        require_shape(refs.size() == 4 && s.config.premises.size() == 1, name);
        const F& l = s.config.premises[0];
        require_shape(l->kind == K::Aut, name);
        F a = l->left, b = l->right, g = s.config.conclusion;
        const Config& r1 = cited(0);
        const Config& r2 = cited(1);
        const Config& r3 = cited(2);
        const Config& r4 = cited(3);
        require_shape(eq(r1.premises[0], a) && eq(r1.conclusion, mkNot(b)) &&
                          eq(r2.premises[0], a) && eq(r2.conclusion, g) &&
                          eq(r3.premises[0], b) && eq(r3.conclusion, g) &&
                          eq(r4.premises[0], g) && eq(r4.conclusion, l),
                      name);
        return ex.emit(s.config, "SPaQL", {refs[0], refs[1], refs[2]});
    }
    if (name == "DR1") {
        require_shape(refs.size() == 2 && s.config.premises.size() == 1, name);
        F a = s.config.premises[0], b = s.config.conclusion;
        const Config& r1 = cited(0);
        const Config& r2 = cited(1);
        require_shape(r1.premises.size() == 1 &&
                          eq(r1.premises[0], mkL(a)) && eq(r1.conclusion, b) &&
                          r2.premises.size() == 1 &&
                          eq(r2.premises[0], mkM(a)) &&
                          eq(r2.conclusion, mkM(b)),
                      name);
        F lna = mkL(mkNot(a));
        size_t e1 = ex.emit({{lna}, mkNot(a)}, "BZ1", {});
        size_t e2 = ex.emit({{mkNot(mkNot(a))}, mkNot(lna)}, "OL11", {e1});
        size_t e3 = ex.emit({{a}, mkNot(mkNot(a))}, "OL8", {});
        size_t e4 = ex.emit({{a}, mkM(a)}, "OL2", {e3, e2});
        size_t e5 = ex.emit({{a}, mkM(b)}, "OL2", {e4, refs[1]});
        return ex.emit({{a}, b}, "BZ3.2", {refs[0], e5});
    }
    if (name == "DR2") {
        require_shape(s.config.premises.size() == 1, name);
        const F& l = s.config.premises[0];
        F a = l->kind == K::And ? m_arg(l->left) : nullptr;
        F b = l->kind == K::And ? m_arg(l->right) : nullptr;
        require_shape(a && b && eq(s.config.conclusion, mkM(mkAnd(a, b))),
                      name);
        F lna = mkL(mkNot(a)), lnb = mkL(mkNot(b));
        F or_nanb = mkOr(mkNot(a), mkNot(b));
        F or_l = mkOr(lna, lnb);
        F lmeet = mkL(mkNot(mkAnd(a, b)));
        size_t e8 = contraposed_meet(ex, a, b);
        size_t e9 = ex.emit({{lmeet}, mkL(or_nanb)}, "BZ4", {e8});
        size_t e10 = ex.emit({{mkL(or_nanb)}, or_l}, "BZ3.1", {});
        size_t e11 = ex.emit({{mkNot(or_l)}, mkNot(mkL(or_nanb))},
                             "OL11", {e10});
        size_t e12 = ex.emit({{mkNot(mkL(or_nanb))}, mkNot(lmeet)},
                             "OL11", {e9});
        size_t e13 = ex.emit({{mkNot(or_l)}, mkNot(lmeet)}, "OL2", {e11, e12});
        size_t e14 = ex.emit({{l}, mkNot(mkNot(l))}, "OL8", {});
        return ex.emit({{l}, mkNot(lmeet)}, "OL2", {e14, e13});
    }
    if (name == "DR3") {
        require_shape(s.config.premises.size() == 1, name);
        F inner = l_arg(s.config.premises[0]);
        F meet = inner ? not_arg(inner) : nullptr;
        require_shape(meet && meet->kind == K::And, name);
        F a = meet->left, b = meet->right;
        auto [u, v] = or_args(s.config.conclusion);
        require_shape(u && eq(u, mkL(mkNot(a))) && eq(v, mkL(mkNot(b))), name);
        size_t e8 = contraposed_meet(ex, a, b);
        F or_nanb = mkOr(mkNot(a), mkNot(b));
        F lm = mkL(mkNot(mkAnd(a, b)));
        size_t e9 = ex.emit({{lm}, mkL(or_nanb)}, "BZ4", {e8});
        size_t e10 = ex.emit({{mkL(or_nanb)},
                              mkOr(mkL(mkNot(a)), mkL(mkNot(b)))},
                             "BZ3.1", {});
        return ex.emit({{lm}, mkOr(mkL(mkNot(a)), mkL(mkNot(b)))}, "OL2",
                       {e9, e10});
    }
    throw Error("internal: unknown macro " + name);
}

const std::map<std::string, std::set<Calculus>>& macro_library() {
    static const std::map<std::string, std::set<Calculus>> lib = {
        {"D1a", {Calculus::UPaQL, Calculus::WPaQL, Calculus::SPaQL}},
        {"D1b", {Calculus::UPaQL, Calculus::WPaQL, Calculus::SPaQL}},
        {"D2", {Calculus::UPaQL, Calculus::WPaQL, Calculus::SPaQL}},
        {"D5", {Calculus::SPaQL}},
        {"DR1", {Calculus::BZL3}},
        {"DR2", {Calculus::BZL3}},
        {"DR3", {Calculus::BZL3}},
    };
    return lib;
}

}  // namespace

Derivation macro_expand(const Derivation& d) {
    const auto& lib = macro_library();
    Derivation out;
    out.calculus = d.calculus;
    std::vector<size_t> remap(d.steps.size());
    Expander ex{out.steps};
    for (size_t i = 0; i < d.steps.size(); ++i) {
        const Step& s = d.steps[i];
        std::vector<size_t> refs;
        for (size_t r : s.refs) {
            if (r >= i) throw Error("cited step out of range");
            refs.push_back(remap[r]);
        }
        auto it = lib.find(s.rule);
        if (it == lib.end()) {
            out.steps.push_back({s.config, s.rule, refs});
        } else {
            if (!it->second.count(d.calculus))
                throw Error("macro " + s.rule + " is unavailable for " +
                            to_string(d.calculus));
            size_t last = expand_macro(s.rule, s, refs, out.steps, ex);
            if (!set_eq(out.steps[last].config.premises, s.config.premises) ||
                !eq(out.steps[last].config.conclusion, s.config.conclusion))
                throw Error("macro " + s.rule +
                            " expansion does not reproduce the step");
            remap[i] = last;
            continue;
        }
        remap[i] = out.steps.size() - 1;
    }
    CheckResult r = check(out);
    if (!r.accepted)
        throw Error("macro expansion failed to check at step " +
                    std::to_string(r.step + 1) + ": " + r.reason);
    return out;
}

namespace {

void collect_subformulas(const F& f, std::map<std::string, F>& acc) {
    if (!f) return;
    acc.emplace(key(f), f);
    collect_subformulas(f->left, acc);
    collect_subformulas(f->right, acc);
}

struct Searcher {
    Calculus calc;
    std::vector<F> cuts;
    size_t base_prem = 0;
    std::map<std::string, std::vector<Step>> proven;
    std::map<std::string, int> failed;

    bool has(const std::string& rule) const {
        const auto& rs = rules_of(calc);
        return std::find(rs.begin(), rs.end(), rule) != rs.end();
    }

    bool direct(const Config& goal, const std::string& rule) const {
        Step s{goal, rule, {}};
        std::vector<Step> tmp{s};
        return rule_table().at(rule).match(tmp, s).empty();
    }

    static std::vector<Step> glue(const std::vector<std::vector<Step>>& parts,
                                  const Config& goal, const std::string& rule) {
        std::vector<Step> steps;
        std::vector<size_t> ends;
        for (const auto& part : parts) {
            size_t off = steps.size();
            for (const Step& st : part) {
                Step copy = st;
                for (size_t& r : copy.refs) r += off;
                steps.push_back(std::move(copy));
            }
            ends.push_back(steps.size() - 1);
        }
        steps.push_back({goal, rule, ends});
        return steps;
    }

    std::optional<std::vector<Step>> prove(const Config& goal, int depth) {
        std::string k = print_config(goal);
        auto hit = proven.find(k);
        if (hit != proven.end()) return hit->second;
        if (depth <= 0) return std::nullopt;
        auto miss = failed.find(k);
        if (miss != failed.end() && miss->second >= depth) return std::nullopt;
        if (goal.premises.size() > base_prem + 2) return std::nullopt;
        // Guard against cycles through identical subgoals.
        failed[k] = std::max(miss == failed.end() ? 0 : miss->second, depth);

        auto done = [&](std::vector<Step> steps)
            -> std::optional<std::vector<Step>> {
            failed.erase(k);
            proven[k] = steps;
            return steps;
        };

        if (single_premise_calculus(calc)) {
            if (goal.premises.size() != 1) return std::nullopt;
            for (const char* r : {"UPa1", "UPa3", "UPa4", "UPa6"})
                if (direct(goal, r)) return done({{goal, r, {}}});
            const F& a = goal.premises[0];
            const F& b = goal.conclusion;
            if (a->kind == K::Not && b->kind == K::Not) {
                if (auto p = prove({{b->left}, a->left}, depth - 1))
                    return done(glue({*p}, goal, "UPa5"));
            }
            if (a->kind == K::Aut && b->kind == K::Aut &&
                eq(a->left, b->right) && eq(a->right, b->left)) {
                if (auto p = prove({{a->left}, mkNot(a->right)}, depth - 1))
                    return done(glue({*p}, goal, "UPa9"));
            }
            if (calc != Calculus::UPaQL) {
                if (auto p = prove({{a}, mkNot(a)}, depth - 1))
                    return done(glue({*p}, goal, "WPaQL"));
            }
            for (const F& g : cuts) {
                if (eq(g, a) || eq(g, b)) continue;
                auto p = prove({{a}, g}, depth - 1);
                if (!p) continue;
                auto q = prove({{g}, b}, depth - 1);
                if (q) return done(glue({*p, *q}, goal, "UPa2"));
            }
            return std::nullopt;
        }

        for (const char* r : {"OL1", "OL3", "OL4", "OL8", "OL9", "OL10", "OQL",
                              "Kleene", "BZ1", "BZ2", "BZ3", "BZ5", "BZ6",
                              "BZ3.1"})
            if (has(r) && direct(goal, r)) return done({{goal, r, {}}});

        if (goal.conclusion->kind == K::And) {
            Config g1{goal.premises, goal.conclusion->left};
            Config g2{goal.premises, goal.conclusion->right};
            auto p = prove(g1, depth - 1);
            if (p) {
                auto q = prove(g2, depth - 1);
                if (q) return done(glue({*p, *q}, goal, "OL5"));
            }
        }
        if (goal.premises.size() == 1 && goal.conclusion->kind == K::Not &&
            goal.premises[0]->kind == K::Not) {
            Config g{{goal.conclusion->left}, goal.premises[0]->left};
            if (auto p = prove(g, depth - 1))
                return done(glue({*p}, goal, "OL11"));
        }
        if (has("BZ4") && goal.premises.size() == 1) {
            F x = l_arg(goal.premises[0]);
            F y = l_arg(goal.conclusion);
            if (x && y) {
                if (auto p = prove({{x}, y}, depth - 1))
                    return done(glue({*p}, goal, "BZ4"));
            }
        }
        for (const F& f : goal.premises) {
            if (f->kind != K::And) continue;
            Config g{plus(plus(minus(goal.premises, f), f->left), f->right),
                     goal.conclusion};
            if (auto p = prove(g, depth - 1))
                return done(glue({*p}, goal, "OL6"));
        }
        if (has("OL7") && goal.premises.empty() &&
            goal.conclusion->kind == K::Not) {
            F x = goal.conclusion->left;
            for (const F& g : cuts) {
                auto p = prove({{x}, g}, depth - 1);
                if (!p) continue;
                auto q = prove({{x}, mkNot(g)}, depth - 1);
                if (q) return done(glue({*p, *q}, goal, "OL7"));
            }
        }
        for (const F& g : cuts) {
            if (eq(g, goal.conclusion)) continue;
            auto p = prove({goal.premises, g}, depth - 1);
            if (!p) continue;
            auto q = prove({plus(goal.premises, g), goal.conclusion},
                           depth - 1);
            if (q) return done(glue({*p, *q}, goal, "OL2"));
        }
        return std::nullopt;
    }
};

}  // namespace

std::optional<Derivation> search(Calculus c, const Config& goal, int depth) {
    if (depth < 1) throw Error("depth bound must be at least 1");
    Config g;
    for (const auto& p : goal.premises)
        g.premises.push_back(proof_normal(p));
    g.premises = canon(std::move(g.premises));
    g.conclusion = proof_normal(goal.conclusion);

    Searcher se;
    se.calc = c;
    se.base_prem = g.premises.size();
    std::map<std::string, F> subs;
    for (const auto& p : g.premises) collect_subformulas(p, subs);
    collect_subformulas(g.conclusion, subs);
    for (const auto& [_, f] : subs) {
        se.cuts.push_back(f);
        se.cuts.push_back(mkNot(f));
    }
    se.cuts = canon(std::move(se.cuts));

    auto steps = se.prove(g, depth);
    if (!steps) return std::nullopt;
    Derivation d{c, *steps};
    CheckResult r = check(d);
    if (!r.accepted)
        throw Error("search produced an invalid derivation: " + r.reason);
    return d;
}

namespace {

bool uses_inot(const F& f) {
    if (!f) return false;
    return f->kind == K::INot || uses_inot(f->left) || uses_inot(f->right);
}

bool lattice_class_ok(Calculus c, const Structure& st, bool restrict_class) {
    ValidationReport r = st.validate();
    if (!r.lattice || r.kind == StructureClass::Invalid) return false;
    if (!restrict_class) return true;
    using SC = StructureClass;
    auto involutive = [&] {
        return r.kind == SC::InvolutiveLattice ||
               r.kind == SC::RegularInvolutiveLattice ||
               r.kind == SC::Ortholattice ||
               r.kind == SC::OrthomodularLattice || r.kind == SC::BzLattice ||
               r.kind == SC::Bz3Lattice;
    };
    switch (c) {
        case Calculus::OL:
            return r.kind == SC::Ortholattice ||
                   r.kind == SC::OrthomodularLattice;
        case Calculus::OQL:
            return r.kind == SC::OrthomodularLattice;
        case Calculus::PQL:
            return involutive();
        case Calculus::RPQL:
            return involutive() && !st.regularity_failure().has_value();
        case Calculus::BZL:
            return r.kind == SC::BzLattice || r.kind == SC::Bz3Lattice;
        case Calculus::BZL3:
            return r.kind == SC::Bz3Lattice;
        default:
            return false;
    }
}

std::string describe(const std::map<std::string, std::string>& m) {
    std::string out;
    for (const auto& [k, v] : m) {
        if (!out.empty()) out += " ";
        out += k + "=" + v;
    }
    return out;
}

}  // namespace

HarnessResult soundness_harness(const Derivation& d,
                                const std::vector<NamedStructure>& structures,
                                const std::vector<PartialTable>& tables,
                                bool restrict_class) {
    CheckResult cr = check(d);
    if (!cr.accepted)
        throw Error("harness requires an accepted derivation (step " +
                    std::to_string(cr.step + 1) + ": " + cr.reason + ")");

    if (single_premise_calculus(d.calculus)) {
        Dialect dia = restrict_class ? dialect_of(d.calculus) : Dialect::UPaQL;
        for (size_t ti = 0; ti < tables.size(); ++ti) {
            EaReport rep = validate_partial(tables[ti]);
            bool ok = rep.effect_algebra;
            if (restrict_class) {
                if (d.calculus == Calculus::WPaQL) ok = rep.orthoalgebra;
                if (d.calculus == Calculus::SPaQL) ok = rep.orthomodular_poset;
            }
            if (!ok) continue;
            for (size_t i = 0; i < d.steps.size(); ++i) {
                const Config& c = d.steps[i].config;
                PaqlVerdict v = paql_consequence({tables[ti]}, dia,
                                                 c.premises, c.conclusion);
                if (v)
                    return {false, i, "table " + std::to_string(ti),
                            describe(v->valuation) + " bound=" + v->bound};
            }
        }
        return {};
    }

    bool needs_bz = false;
    for (const Step& s : d.steps) {
        for (const auto& p : s.config.premises)
            needs_bz = needs_bz || uses_inot(p);
        needs_bz = needs_bz || uses_inot(s.config.conclusion);
    }
    std::vector<NamedStructure> usable;
    for (const auto& ns : structures) {
        if (needs_bz && !ns.st.has_bz()) continue;
        if (lattice_class_ok(d.calculus, ns.st, restrict_class))
            usable.push_back(ns);
    }
    for (size_t i = 0; i < d.steps.size(); ++i) {
        const Config& c = d.steps[i].config;
        Verdict v = consequence(usable, c.premises, c.conclusion);
        if (v) return {false, i, v->structure, describe(v->assignment)};
    }
    return {};
}

}  // namespace ql
