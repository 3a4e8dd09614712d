#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "ql/effect.hpp"

using namespace ql;

static FormulaPtr pa(const std::string& t) {
    return parse_formula(Dialect::UPaQL, t);
}

static bool has_failure(const std::vector<std::string>& fs,
                        const std::string& needle) {
    return std::any_of(fs.begin(), fs.end(), [&](const std::string& f) {
        return f.find(needle) != std::string::npos;
    });
}

TEST_CASE("four-element table is qmv but not mv") {
    QmvTable m4 = catalog_qmv("M4");
    auto r = validate_qmv(m4);
    CHECK(r.qmv);
    CHECK_FALSE(r.mv);
    CHECK(has_failure(r.failures, "MV8 (a,b)"));
    CHECK(quasi_linear(m4));
    CHECK(weakly_linear(m4));
}

TEST_CASE("three-valued table is mv and totally ordered") {
    QmvTable m3 = catalog_qmv("M3");
    auto r = validate_qmv(m3);
    CHECK(r.qmv);
    CHECK(r.mv);
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) CHECK((m3.pre(a, b) || m3.pre(b, a)));
    CHECK(m3.oplus(m3.index("1/2"), m3.index("1/2")) == m3.index("1"));
}

TEST_CASE("et is commutative exactly on mv tables") {
    for (const char* name : {"M3", "M4"}) {
        QmvTable m = catalog_qmv(name);
        bool comm = true;
        for (int a = 0; a < m.size(); ++a)
            for (int b = 0; b < m.size(); ++b)
                if (m.et(a, b) != m.et(b, a)) comm = false;
        CHECK(comm == validate_qmv(m).mv);
    }
}

TEST_CASE("weak-linearity equation holds on the four-element table") {
    QmvTable m = catalog_qmv("M4");
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            for (int c = 0; c < 4; ++c)
                CHECK(m.et(m.oplus(a, m.odot(c, m.star(b))),
                           m.oplus(a, m.odot(m.star(c), b))) == a);
}

TEST_CASE("partial table classification") {
    PartialTable k5 = catalog_partial("K5EA");
    auto rk = validate_partial(k5);
    CHECK(rk.effect_algebra);
    CHECK_FALSE(rk.orthoalgebra);
    CHECK(has_failure(rk.failures, "strong-consistency (1/4)"));
    CHECK(k5.defined(k5.index("1/4"), k5.index("1/4")));

    PartialTable b2 = catalog_partial("BOOL2EA");
    auto rb = validate_partial(b2);
    CHECK(rb.effect_algebra);
    CHECK(rb.orthoalgebra);
    CHECK(rb.orthomodular_poset);
}

TEST_CASE("orthogonality matches the induced order") {
    for (const char* name : {"K5EA", "BOOL2EA"}) {
        PartialTable t = catalog_partial(name);
        for (int a = 0; a < t.size(); ++a)
            for (int b = 0; b < t.size(); ++b)
                CHECK(t.defined(a, b) == t.leq(a, t.comp(b)));
    }
}

TEST_CASE("totalization and restriction round trips") {
    PartialTable k5 = catalog_partial("K5EA");
    QmvTable q5 = to_qmv(k5);
    CHECK(validate_qmv(q5).qmv);
    CHECK(quasi_linear(q5));
    CHECK(table_equal(to_ea(q5), k5));

    QmvTable m4 = catalog_qmv("M4");
    PartialTable m4ea = to_ea(m4);
    CHECK(validate_partial(m4ea).effect_algebra);
    CHECK(table_equal(to_qmv(m4ea), m4));

    PartialTable b2 = catalog_partial("BOOL2EA");
    QmvTable qb2 = to_qmv(b2);
    auto r = validate_qmv(qb2);
    CHECK(r.qmv);
    CHECK_FALSE(r.mv);
    CHECK(has_failure(r.failures, "MV8 (p1,p2)"));
    for (int x = 0; x < 4; ++x)
        for (int y = 0; y < 4; ++y) CHECK(qb2.pre(x, y) == ((x & y) == x));
}

TEST_CASE("pre order agrees with the induced partial order") {
    for (const char* name : {"K5EA", "BOOL2EA"}) {
        QmvTable m = to_qmv(catalog_partial(name));
        PartialTable ea = to_ea(m);
        for (int a = 0; a < m.size(); ++a)
            for (int b = 0; b < m.size(); ++b)
                CHECK(ea.leq(a, b) == m.pre(a, b));
    }
}

TEST_CASE("conditional search") {
    QmvTable m3 = catalog_qmv("M3");
    auto t3 = conditional_search(m3, 3);
    REQUIRE(t3.has_value());
    CHECK(*t3 == "(b+a*)");

    QmvTable m4 = catalog_qmv("M4");
    CHECK_FALSE(conditional_search(m4, 4).has_value());
}

TEST_CASE("homomorphism and transport") {
    Homomorphism h = hom_m4_m3();
    CHECK(validate_hom(h));
    for (const auto& term : enumerate_terms(h.source, 3))
        CHECK(hom_transport_check(h, term));
}

TEST_CASE("partial consequence") {
    std::vector<PartialTable> k5 = {catalog_partial("K5EA")};
    std::vector<PartialTable> b2 = {catalog_partial("BOOL2EA")};

    CHECK_FALSE(
        paql_consequence(k5, Dialect::UPaQL, {pa("p")}, pa("--p")));
    CHECK_FALSE(
        paql_consequence(b2, Dialect::WPaQL,
                         {parse_formula(Dialect::WPaQL, "p .^. -p")},
                         parse_formula(Dialect::WPaQL, "q")));
    CHECK_FALSE(
        paql_consequence(k5, Dialect::UPaQL, {pa("p .^. -p")}, pa("q")));
}

TEST_CASE("rule soundness and the Duns Scotus separation") {
    PartialTable k5 = catalog_partial("K5EA");
    PartialTable b2 = catalog_partial("BOOL2EA");
    Sequent ds_prem{pa("p"), pa("-p")};
    Sequent ds_conc{pa("p"), pa("q")};

    CHECK_FALSE(paql_rule_sound(b2, Dialect::WPaQL, {ds_prem}, ds_conc));
    auto cm = paql_rule_sound(k5, Dialect::UPaQL, {ds_prem}, ds_conc);
    REQUIRE(cm.has_value());
    CHECK(cm->valuation.at("p") == "1/4");
    CHECK(cm->valuation.at("q") == "0");

    CHECK_FALSE(paql_rule_sound(k5, Dialect::UPaQL, {}, {pa("p"), pa("--p")}));
    CHECK_FALSE(paql_rule_sound(k5, Dialect::UPaQL, {}, {pa("--p"), pa("p")}));
    CHECK_FALSE(
        paql_rule_sound(k5, Dialect::UPaQL, {}, {pa("q"), pa("p + -p")}));

    Sequent sup_conc{parse_formula(Dialect::SPaQL, "p + q"),
                     parse_formula(Dialect::SPaQL, "r")};
    std::vector<Sequent> sup_prem = {
        {pa("p"), pa("-q")}, {pa("p"), pa("r")}, {pa("q"), pa("r")}};
    CHECK_FALSE(paql_rule_sound(b2, Dialect::SPaQL, sup_prem, sup_conc));

    CHECK_THROWS_AS(
        paql_rule_sound(k5, Dialect::WPaQL, {ds_prem}, ds_conc), Error);
}

TEST_CASE("per-occurrence diagnostic mode") {
    std::vector<PartialTable> k5 = {catalog_partial("K5EA")};
    auto same = pa("p + p");
    CHECK_FALSE(paql_consequence(k5, Dialect::UPaQL, {same}, pa("p + p")));
    CHECK(paql_consequence(k5, Dialect::UPaQL, {same}, pa("p + p"), true)
              .has_value());
}

TEST_CASE("total evaluation") {
    QmvTable m3 = catalog_qmv("M3");
    std::map<std::string, int> v{{"p", m3.index("1/2")}};
    CHECK(lql_evaluate(m3, v, pa("p + p")) == m3.index("1"));

    QmvTable m4 = catalog_qmv("M4");
    for (int q = 0; q < m4.size(); ++q) {
        std::map<std::string, int> w{{"p", m4.zero}, {"q", q}};
        CHECK(lql_evaluate(m4, w, pa("p + q")) == q);
    }
    auto lp = parse_formula(Dialect::LQL, "p .&. q");
    std::map<std::string, int> u{{"p", m3.index("1/2")},
                                 {"q", m3.index("1/2")}};
    CHECK(lql_evaluate(m3, u, lp) == m3.et(1, 1));

    CHECK_FALSE(lql_consequence(m3, {pa("p")}, pa("--p")).has_value());
    CHECK(lql_consequence(m4, {pa("p")}, pa("q")).has_value());
}

TEST_CASE("table files round trip") {
    PartialTable k5 = catalog_partial("K5EA");
    CHECK(table_equal(PartialTable::load(k5.save()), k5));
    QmvTable m4 = catalog_qmv("M4");
    CHECK(table_equal(QmvTable::load(m4.save()), m4));

    CHECK_THROWS_AS(PartialTable::load("zero: 0\n"), Error);
    CHECK_THROWS_AS(
        QmvTable::load("elements: 0 1\nzero: 0\none: 1\nstar: 0 1\nstar: 1 0\n"),
        Error);
}
