#include "ql/formula.hpp"

#include <cctype>
#include <map>

namespace ql {

Dialect dialect_from(const std::string& name) {
    static const std::map<std::string, Dialect> m = {
        {"OL", Dialect::OL},       {"OQL", Dialect::OQL},
        {"PQL", Dialect::PQL},     {"RPQL", Dialect::RPQL},
        {"BZL", Dialect::BZL},     {"BZL3", Dialect::BZL3},
        {"UPaQL", Dialect::UPaQL}, {"WPaQL", Dialect::WPaQL},
        {"SPaQL", Dialect::SPaQL}, {"LQL", Dialect::LQL},
        {"modal-B", Dialect::ModalB}};
    auto it = m.find(name);
    if (it == m.end()) throw Error("unknown dialect: " + name);
    return it->second;
}

std::string to_string(Dialect d) {
    switch (d) {
        case Dialect::OL: return "OL";
        case Dialect::OQL: return "OQL";
        case Dialect::PQL: return "PQL";
        case Dialect::RPQL: return "RPQL";
        case Dialect::BZL: return "BZL";
        case Dialect::BZL3: return "BZL3";
        case Dialect::UPaQL: return "UPaQL";
        case Dialect::WPaQL: return "WPaQL";
        case Dialect::SPaQL: return "SPaQL";
        case Dialect::LQL: return "LQL";
        case Dialect::ModalB: return "modal-B";
    }
    return "?";
}

FormulaPtr Formula::lit(const std::string& name) {
    auto f = std::make_shared<Formula>();
    f->kind = NodeKind::Literal;
    f->literal = name;
    return f;
}

FormulaPtr Formula::mk(NodeKind k, FormulaPtr a, FormulaPtr b) {
    auto f = std::make_shared<Formula>();
    f->kind = k;
    f->left = std::move(a);
    f->right = std::move(b);
    return f;
}

FormulaPtr Formula::arrow(int i, FormulaPtr a, FormulaPtr b) {
    auto f = mk(NodeKind::Arrow, std::move(a), std::move(b));
    const_cast<Formula*>(f.get())->arrow_index = i;
    return f;
}

bool equal(const FormulaPtr& a, const FormulaPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    if (a->kind != b->kind || a->literal != b->literal ||
        a->arrow_index != b->arrow_index)
        return false;
    return equal(a->left, b->left) && equal(a->right, b->right);
}

namespace {

bool node_allowed(Dialect d, NodeKind k) {
    using K = NodeKind;
    if (k == K::Literal) return true;
    switch (d) {
        case Dialect::OL:
        case Dialect::OQL:
            return k == K::Not || k == K::And || k == K::Or ||
                   k == K::Arrow || k == K::Strict || k == K::Entail;
        case Dialect::PQL:
        case Dialect::RPQL:
            return k == K::Not || k == K::And || k == K::Or;
        case Dialect::BZL:
        case Dialect::BZL3:
            return k == K::Not || k == K::INot || k == K::And || k == K::Or ||
                   k == K::LOp || k == K::MOp;
        case Dialect::UPaQL:
        case Dialect::WPaQL:
        case Dialect::SPaQL:
            return k == K::Not || k == K::Aut || k == K::DefAnd;
        case Dialect::LQL:
            return k == K::Not || k == K::Aut || k == K::DefAnd ||
                   k == K::EtDot || k == K::VelDot;
        case Dialect::ModalB:
            return k == K::CNot || k == K::CAnd || k == K::Box ||
                   k == K::Diamond;
    }
    return false;
}

void check_dialect(Dialect d, const FormulaPtr& f) {
    if (!f) return;
    if (!node_allowed(d, f->kind))
        throw Error("connective not admissible in dialect " + to_string(d));
    check_dialect(d, f->left);
    check_dialect(d, f->right);
}

struct Parser {
    std::string s;
    size_t pos = 0;

    void skip() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
            ++pos;
    }
    bool eat(const std::string& tok) {
        skip();
        if (s.compare(pos, tok.size(), tok) == 0) {
            pos += tok.size();
            return true;
        }
        return false;
    }
    char peek() {
        skip();
        return pos < s.size() ? s[pos] : '\0';
    }
    [[noreturn]] void fail(const std::string& why) {
        throw Error("syntax error at position " + std::to_string(pos) + ": " +
                    why);
    }

    FormulaPtr parse() {
        FormulaPtr f = arrow_level();
        skip();
        if (pos != s.size()) fail("trailing input");
        return f;
    }

    FormulaPtr arrow_level() {
        FormulaPtr l = disj();
        skip();
        if (s.compare(pos, 2, "->") == 0 && pos + 2 < s.size() &&
            s[pos + 2] >= '1' && s[pos + 2] <= '5') {
            int i = s[pos + 2] - '0';
            pos += 3;
            return Formula::arrow(i, l, disj());
        }
        if (s.compare(pos, 3, "=>>") == 0) {
            pos += 3;
            return Formula::mk(NodeKind::Entail, l, disj());
        }
        // "-o" only in infix position; prefix "-" stays a negation
        if (s.compare(pos, 2, "-o") == 0 &&
            (pos + 2 >= s.size() ||
             !std::isalnum(static_cast<unsigned char>(s[pos + 2])))) {
            pos += 2;
            return Formula::mk(NodeKind::Strict, l, disj());
        }
        return l;
    }

    FormulaPtr disj() {
        FormulaPtr l = conj();
        for (;;) {
            if (eat(".|.")) {
                l = Formula::mk(NodeKind::VelDot, l, conj());
            } else if (peek() == '|') {
                ++pos;
                l = Formula::mk(NodeKind::Or, l, conj());
            } else if (peek() == '+') {
                ++pos;
                l = Formula::mk(NodeKind::Aut, l, conj());
            } else {
                return l;
            }
        }
    }

    FormulaPtr conj() {
        FormulaPtr l = unary();
        for (;;) {
            if (eat(".&.")) {
                l = Formula::mk(NodeKind::EtDot, l, unary());
            } else if (eat(".^.")) {
                l = Formula::mk(NodeKind::DefAnd, l, unary());
            } else if (peek() == '&') {
                ++pos;
                l = Formula::mk(NodeKind::And, l, unary());
            } else if (peek() == '^') {
                ++pos;
                l = Formula::mk(NodeKind::CAnd, l, unary());
            } else {
                return l;
            }
        }
    }

    FormulaPtr unary() {
        skip();
        if (eat("[]")) return Formula::mk(NodeKind::Box, unary());
        if (eat("<>")) return Formula::mk(NodeKind::Diamond, unary());
        if (peek() == '-' &&
            !(s.compare(pos, 2, "-o") == 0)) {  // infix-only token
            ++pos;
            return Formula::mk(NodeKind::Not, unary());
        }
        if (peek() == '-') {  // "-o..." in prefix position: negation
            ++pos;
            return Formula::mk(NodeKind::Not, unary());
        }
        if (peek() == '~') {
            ++pos;
            return Formula::mk(NodeKind::INot, unary());
        }
        if (peek() == '!') {
            ++pos;
            return Formula::mk(NodeKind::CNot, unary());
        }
        if (peek() == 'L' &&
            !(pos + 1 < s.size() &&
              std::isalnum(static_cast<unsigned char>(s[pos + 1])))) {
            ++pos;
            return Formula::mk(NodeKind::LOp, unary());
        }
        if (peek() == 'M' &&
            !(pos + 1 < s.size() &&
              std::isalnum(static_cast<unsigned char>(s[pos + 1])))) {
            ++pos;
            return Formula::mk(NodeKind::MOp, unary());
        }
        return atom();
    }

    FormulaPtr atom() {
        skip();
        if (peek() == '(') {
            ++pos;
            FormulaPtr f = arrow_level();
            if (!eat(")")) fail("expected ')'");
            return f;
        }
        size_t start = pos;
        while (pos < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[pos])) ||
                s[pos] == '_'))
            ++pos;
        if (pos == start) fail("expected a literal or '('");
        return Formula::lit(s.substr(start, pos - start));
    }
};

}  // namespace

FormulaPtr parse_formula(Dialect d, const std::string& text) {
    Parser p{text};
    FormulaPtr f = p.parse();
    check_dialect(d, f);
    return f;
}

std::string print_formula(const FormulaPtr& f) {
    if (!f) return "?";
    using K = NodeKind;
    switch (f->kind) {
        case K::Literal: return f->literal;
        case K::Not: return "-" + print_formula(f->left);
        case K::INot: return "~" + print_formula(f->left);
        case K::CNot: return "!" + print_formula(f->left);
        case K::Box: return "[]" + print_formula(f->left);
        case K::Diamond: return "<>" + print_formula(f->left);
        case K::LOp: return "L " + print_formula(f->left);
        case K::MOp: return "M " + print_formula(f->left);
        case K::And:
            return "(" + print_formula(f->left) + " & " +
                   print_formula(f->right) + ")";
        case K::Or:
            return "(" + print_formula(f->left) + " | " +
                   print_formula(f->right) + ")";
        case K::Aut:
            return "(" + print_formula(f->left) + " + " +
                   print_formula(f->right) + ")";
        case K::DefAnd:
            return "(" + print_formula(f->left) + " .^. " +
                   print_formula(f->right) + ")";
        case K::EtDot:
            return "(" + print_formula(f->left) + " .&. " +
                   print_formula(f->right) + ")";
        case K::VelDot:
            return "(" + print_formula(f->left) + " .|. " +
                   print_formula(f->right) + ")";
        case K::CAnd:
            return "(" + print_formula(f->left) + " ^ " +
                   print_formula(f->right) + ")";
        case K::Arrow:
            return "(" + print_formula(f->left) + " ->" +
                   std::to_string(f->arrow_index) + " " +
                   print_formula(f->right) + ")";
        case K::Strict:
            return "(" + print_formula(f->left) + " -o " +
                   print_formula(f->right) + ")";
        case K::Entail:
            return "(" + print_formula(f->left) + " =>> " +
                   print_formula(f->right) + ")";
    }
    return "?";
}

FormulaPtr expand(const FormulaPtr& f) {
    if (!f) return f;
    using K = NodeKind;
    auto Not = [](FormulaPtr a) { return Formula::mk(K::Not, std::move(a)); };
    auto And = [](FormulaPtr a, FormulaPtr b) {
        return Formula::mk(K::And, std::move(a), std::move(b));
    };
    auto Or = [&](FormulaPtr a, FormulaPtr b) {
        return Not(And(Not(std::move(a)), Not(std::move(b))));
    };
    FormulaPtr l = expand(f->left), r = expand(f->right);
    switch (f->kind) {
        case K::Or:
            return Or(l, r);
        case K::DefAnd:
            return Not(Formula::mk(K::Aut, Not(l), Not(r)));
        case K::EtDot:
            return expand(Formula::mk(
                K::DefAnd, Formula::mk(K::Aut, l, Not(r)), r));
        case K::VelDot:
            return Not(expand(Formula::mk(K::EtDot, Not(l), Not(r))));
        case K::LOp:
            return Formula::mk(K::INot, Not(l));
        case K::MOp:
            return Not(Formula::mk(K::INot, Not(Not(l))));
        case K::Arrow: {
            FormulaPtr a = l, b = r;
            FormulaPtr na = Not(a), nb = Not(b);
            switch (f->arrow_index) {
                case 1: return Or(na, And(a, b));
                case 2: return Or(b, And(na, nb));
                case 3: return Or(Or(And(na, b), And(a, b)), And(na, nb));
                case 4:
                    return Or(Or(And(na, b), And(a, b)), And(Or(na, b), nb));
                case 5:
                    return Or(Or(And(na, b), And(na, nb)), And(a, Or(na, b)));
                default: throw Error("bad arrow index");
            }
        }
        default:
            if (!l && !r) return f;
            auto g = Formula::mk(f->kind, l, r);
            const_cast<Formula*>(g.get())->literal = f->literal;
            const_cast<Formula*>(g.get())->arrow_index = f->arrow_index;
            return g;
    }
}

static void collect(const FormulaPtr& f, std::set<std::string>& out) {
    if (!f) return;
    if (f->kind == NodeKind::Literal) out.insert(f->literal);
    collect(f->left, out);
    collect(f->right, out);
}

std::vector<std::string> literals_of(const FormulaPtr& f) {
    std::set<std::string> s;
    collect(f, s);
    return {s.begin(), s.end()};
}

}  // namespace ql
