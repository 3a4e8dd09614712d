#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ql/catalog.hpp"
#include "ql/semantics.hpp"

using namespace ql;

static NamedStructure ns(const std::string& name) {
    return {name, catalog_structure(name)};
}

static std::vector<NamedStructure> omls() {
    std::vector<NamedStructure> out;
    for (const char* n : {"BOOL(2)", "MO2", "MO(3)", "G12", "B30"})
        out.push_back(ns(n));
    return out;
}

static FormulaPtr ol(const std::string& t) {
    return parse_formula(Dialect::OL, t);
}

TEST_CASE("evaluation") {
    Structure mo2 = catalog_structure("MO2");
    Assignment v{{"p", mo2.index("a")}};
    CHECK(evaluate(mo2, v, ol("-(p & -p)")) == mo2.one());

    Assignment vab{{"p", mo2.index("a")}, {"q", mo2.index("b")}};
    auto gamma = ol("-(p ->1 (q ->1 p))");
    CHECK(evaluate(mo2, vab, gamma) == mo2.index("a"));

    Structure k5 = catalog_structure("K5");
    Assignment vk{{"p", k5.index("1/4")}};
    CHECK(k5.name(evaluate(k5, vk, parse_formula(Dialect::BZL, "p | ~p"))) ==
          "1/4");
    CHECK(k5.name(evaluate(k5, vk, parse_formula(Dialect::BZL, "p | -p"))) ==
          "3/4");

    Structure p9 = catalog_structure("P9");
    Assignment vp{{"p", p9.index("E")}, {"q", p9.index("F")}};
    CHECK_THROWS_AS(evaluate(p9, vp, ol("p & q")), Error);
}

TEST_CASE("logical truth") {
    auto ls = omls();
    CHECK_FALSE(logical_truth(ls, ol("p ->1 p")).has_value());

    auto cm = logical_truth(ls, ol("(p ->1 q) ->1 (-q ->1 -p)"));
    REQUIRE(cm.has_value());
    CHECK(cm->structure == "MO2");
    CHECK(cm->assignment.at("p") == "a");
    CHECK(cm->assignment.at("q") == "b");
}

TEST_CASE("consequence and the orthomodularity configuration") {
    auto ls = omls();
    CHECK_FALSE(consequence(ls, {ol("p")}, ol("p")).has_value());

    auto dist = consequence(ls, {ol("a & (b | c)")}, ol("(a & b) | (a & c)"));
    REQUIRE(dist.has_value());
    CHECK(dist->structure == "MO2");
    CHECK(dist->assignment.at("a") == "a");
    CHECK(dist->assignment.at("b") == "b");
    CHECK(dist->assignment.at("c") == "a'");
    CHECK_FALSE(weak_consequence(ls, {ol("a & (b | c)")},
                                 ol("(a & b) | (a & c)"))
                    .has_value());

    auto mono = consequence(ls, {ol("a ->1 c")}, ol("(a & b) ->1 c"));
    REQUIRE(mono.has_value());
    CHECK(mono->structure == "MO2");
    CHECK(mono->assignment.at("a") == "1");
    CHECK(mono->assignment.at("b") == "a");
    CHECK(mono->assignment.at("c") == "b");

    auto omc = ol("p & -(p & -(p & q))");
    CHECK_FALSE(consequence(ls, {omc}, ol("q")).has_value());
    auto o6cm = consequence({ns("O6")}, {omc}, ol("q"));
    REQUIRE(o6cm.has_value());
    CHECK(o6cm->assignment.at("p") == "b");
    CHECK(o6cm->assignment.at("q") == "a");
}

TEST_CASE("quasi-models and realizability") {
    auto ls = omls();
    auto gamma = ol("-(p ->1 (q ->1 p))");

    auto qm = find_quasi_model(ls, {gamma});
    REQUIRE(qm.has_value());
    CHECK(qm->structure == "MO2");
    CHECK_FALSE(verifiable(ls, {gamma}));
    CHECK(realizable(ls, {gamma}));

    CHECK_FALSE(realizable(ls, {ol("p & -p")}));
    CHECK_FALSE(realizable(ls, {ol("q"), ol("p & -p")}));

    Structure mo2 = catalog_structure("MO2");
    Assignment vab{{"p", mo2.index("a")}, {"q", mo2.index("b")}};
    CHECK(quasi_model(mo2, vab, {expand(gamma)}));
    CHECK_FALSE(quasi_consequence(ls, {ol("p")}, ol("p")).has_value());
}

TEST_CASE("residuation and weak import-export") {
    auto ls = omls();
    Structure o6 = catalog_structure("O6");

    for (int i = 1; i <= 5; ++i) {
        auto p = Formula::lit("p"), q = Formula::lit("q");
        auto arr = expand(Formula::arrow(i, p, q));
        bool resid_ok = true;
        for (const auto& s : ls) {
            const Structure& st = s.st;
            for (int a = 0; a < st.size(); ++a)
                for (int b = 0; b < st.size(); ++b) {
                    Assignment v{{"p", a}, {"q", b}};
                    bool one = evaluate(st, v, arr) == st.one();
                    if (one != st.leq(a, b)) resid_ok = false;
                }
        }
        CHECK(resid_ok);

        bool o6_viol = false;
        std::string wa, wb;
        for (int a = 0; a < o6.size() && !o6_viol; ++a)
            for (int b = 0; b < o6.size() && !o6_viol; ++b) {
                Assignment v{{"p", a}, {"q", b}};
                if ((evaluate(o6, v, arr) == o6.one()) != o6.leq(a, b)) {
                    o6_viol = true;
                    wa = o6.name(a);
                    wb = o6.name(b);
                }
            }
        CHECK(o6_viol);
        CHECK(wa == "b");
        CHECK(wb == "a");
    }

    // a ⊓ b ⊑ c iff a ⊑ b→c, with the compatibility side condition on (a, b).
    auto wie_counter = [&](int i) -> std::optional<std::vector<std::string>> {
        for (const auto& s : ls) {
            const Structure& st = s.st;
            for (int a = 0; a < st.size(); ++a)
                for (int b = 0; b < st.size(); ++b)
                    for (int c = 0; c < st.size(); ++c) {
                        if (!st.compatible(a, b) || !st.compatible(b, a))
                            continue;
                        Assignment v{{"p", b}, {"q", c}};
                        int arr = evaluate(
                            st, v, Formula::arrow(i, Formula::lit("p"),
                                                  Formula::lit("q")));
                        bool lhs = st.leq(st.meet(a, b), c);
                        bool rhs = st.leq(a, arr);
                        if (lhs != rhs)
                            return std::vector<std::string>{
                                s.name, st.name(a), st.name(b), st.name(c)};
                    }
        }
        return std::nullopt;
    };
    CHECK_FALSE(wie_counter(1).has_value());
    for (int i : {2, 3, 4}) {
        auto w = wie_counter(i);
        REQUIRE(w.has_value());
        CHECK(*w == std::vector<std::string>{"MO2", "a", "a'", "b"});
    }
    auto w5 = wie_counter(5);
    REQUIRE(w5.has_value());
    CHECK(*w5 == std::vector<std::string>{"MO2", "a", "a", "b"});
}

TEST_CASE("first-order evaluation") {
    FirstOrderModel m;
    m.st = catalog_structure("MO2");
    m.domain = {"d1", "d2"};
    int a = m.st.index("a"), ap = m.st.index("a'");
    m.predicates["P"][{0}] = a;
    m.predicates["P"][{1}] = ap;
    m.constants["c"] = 0;

    auto all1 = parse_fo("all x P(x)");
    CHECK(fo_evaluate(m, {}, all1) == m.st.zero());
    CHECK(fo_evaluate(m, {}, parse_fo("ex x P(x)")) == m.st.one());
    CHECK(fo_evaluate(m, {}, parse_fo("P(c)")) == a);
    CHECK(fo_evaluate(m, {{"x", 1}}, parse_fo("P(x)")) == ap);

    // The description premise holds while no individual satisfies P exactly.
    auto desc = parse_fo("ex x (P(x) | -P(x))");
    CHECK(fo_evaluate(m, {}, desc) == m.st.one());
    CHECK(fo_evaluate(m, {{"x", 0}}, parse_fo("P(x)")) != m.st.one());
    CHECK(fo_evaluate(m, {{"x", 1}}, parse_fo("P(x)")) != m.st.one());

    FirstOrderModel s;
    s.st = catalog_structure("BOOL(2)");
    s.domain = {"d"};
    s.predicates["P"][{0}] = s.st.one();
    CHECK(fo_evaluate(s, {}, parse_fo("all x P(x)")) == s.st.one());

    FirstOrderModel c;
    c.st = catalog_structure("MO2");
    c.domain = {"d1", "d2", "d3"};
    for (int d = 0; d < 3; ++d) c.predicates["Q"][{d}] = a;
    CHECK(fo_evaluate(c, {}, parse_fo("all x Q(x)")) == a);
}
