#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ql/catalog.hpp"
#include "ql/kripke.hpp"

using namespace ql;

static FormulaPtr ol(const std::string& t) {
    return parse_formula(Dialect::OL, t);
}

static std::vector<FormulaPtr> depth3_formulas() {
    std::vector<FormulaPtr> out;
    for (const char* t :
         {"p", "q", "-p", "p & q", "p | q", "-(p & q)", "p & -q",
          "-p | (p & q)", "p & (q | -p)", "-(p & -(p & q))", "p & -p",
          "(p & q) | (p & -q)"})
        out.push_back(ol(t));
    return out;
}

TEST_CASE("canonical frames from catalog algebras") {
    struct Row {
        const char* name;
        int worlds;
        int props;
        bool oml;
    };
    for (Row row : {Row{"MO2", 5, 6, true}, Row{"O6", 5, 6, false},
                    Row{"G12", 11, 12, true}}) {
        Structure st = catalog_structure(row.name);
        auto k = from_algebra(st, {});
        CHECK(k.frame.size() == row.worlds);
        CHECK(static_cast<int>(k.pi.size()) == row.props);
        CHECK_FALSE(k.validate().has_value());
        CHECK(k.pi == k.frame.all_propositions());
        CHECK(is_orthomodular_realization(k) == row.oml);
        CHECK(is_algebraically_adequate(k));

        auto alg = to_algebra(k);
        auto report = alg.st.validate();
        CHECK(to_string(report.kind) ==
              (row.oml ? "orthomodular-lattice" : "ortholattice"));
        CHECK(isomorphic(alg.st, st));
    }
}

TEST_CASE("world satisfaction matches algebraic evaluation") {
    for (const char* name : {"MO2", "O6", "G12"}) {
        Structure st = catalog_structure(name);
        auto fs = depth3_formulas();
        for (int a = 0; a < st.size(); ++a)
            for (int b = 0; b < st.size(); ++b) {
                Assignment v{{"p", a}, {"q", b}};
                auto k = from_algebra(st, v);
                for (const auto& f : fs) {
                    int val = evaluate(st, v, f);
                    uint64_t ext = extension(k, f);
                    bool alg_true = val == st.one();
                    bool krip_true = ext == k.frame.all();
                    CHECK(alg_true == krip_true);
                    for (int w = 0; w < k.frame.size(); ++w) {
                        bool direct = (ext >> w) & 1u;
                        CHECK(direct ==
                              st.leq(st.index(k.frame.worlds[w]), val));
                        CHECK(direct == holds_reformulated(k, w, f));
                    }
                }
            }
    }
}

TEST_CASE("paraconsistent world verifies a contradiction") {
    auto k = load_frame("worlds: i\nprop: X = i\nrho: p = X\n");
    CHECK(k.frame.flavor == FrameFlavor::PQL);
    CHECK(holds(k, 0, parse_formula(Dialect::PQL, "p & -p")));
}

TEST_CASE("frame regularity tracks algebra regularity") {
    Structure nreg = catalog_structure("NREG6");
    auto kn = from_algebra(nreg, {});
    CHECK(kn.frame.flavor == FrameFlavor::PQL);
    CHECK_FALSE(frame_regular(kn.frame));
    CHECK(to_algebra(kn).st.regularity_failure().has_value());

    Structure g14 = catalog_structure("G14");
    auto kg = from_algebra(g14, {});
    CHECK(kg.frame.flavor == FrameFlavor::PQL);
    CHECK(frame_regular(kg.frame));
    CHECK_FALSE(to_algebra(kg).st.regularity_failure().has_value());
}

TEST_CASE("strict implication and entailment") {
    Structure st = catalog_structure("MO2");
    Assignment v{{"p", st.index("a")}, {"q", st.index("b")}};
    auto k = from_algebra(st, v);

    auto strict = parse_formula(Dialect::OL, "p -o q");
    uint64_t ext = extension(k, strict);
    for (int w = 0; w < k.frame.size(); ++w) {
        bool direct = true;
        uint64_t ep = extension(k, ol("p")), eq = extension(k, ol("q"));
        for (int j = 0; j < k.frame.size(); ++j)
            if (((k.frame.acc[w] >> j) & 1u) && ((ep >> j) & 1u) &&
                !((eq >> j) & 1u))
                direct = false;
        CHECK(((ext >> w) & 1u) == direct);
    }
    CHECK(extension(k, ol("p =>> q")) == 0);
    CHECK(extension(k, ol("p =>> p")) == k.frame.all());
}

TEST_CASE("stalnaker function") {
    Structure mo2 = catalog_structure("MO2");
    for (int a = 0; a < mo2.size(); ++a) {
        Assignment v{{"p", a}};
        CHECK(stalnaker_check(mo2, v, ol("p"), ol("p")));
    }
    Structure g12 = catalog_structure("G12");
    std::vector<FormulaPtr> fs = {ol("p"), ol("q"), ol("-p"), ol("p & q")};
    for (int a = 0; a < g12.size(); ++a)
        for (int b = 0; b < g12.size(); ++b) {
            Assignment v{{"p", a}, {"q", b}};
            for (const auto& x : fs)
                for (const auto& y : fs) CHECK(stalnaker_check(g12, v, x, y));
        }
}

TEST_CASE("double complement fixpoints and closure") {
    Structure st = catalog_structure("O6");
    auto k = from_algebra(st, {});
    for (uint64_t X : k.pi) {
        CHECK(k.frame.is_proposition(X));
        for (uint64_t Y : k.pi) CHECK(k.pi_has(X & Y));
        CHECK(k.pi_has(k.frame.ortho(X)));
    }
    CHECK(k.frame.ortho(k.frame.all()) == 0);
    CHECK(k.frame.ortho(0) == k.frame.all());
}

TEST_CASE("theorem on rho in the double transform") {
    Structure st = catalog_structure("MO2");
    Assignment v{{"p", st.index("a")}, {"q", st.index("b")}};
    auto k = from_algebra(st, v);
    auto alg = to_algebra(k);
    auto k2 = from_algebra(alg.st, alg.v);
    for (const auto& f : depth3_formulas()) {
        uint64_t rho1 = extension(k, f);
        uint64_t rho2 = extension(k2, f);
        // Worlds of k2 are the nonzero propositions of k; membership in
        // rho2 must coincide with inclusion in rho1.
        for (int w = 0; w < k2.frame.size(); ++w) {
            int el = alg.st.index(k2.frame.worlds[w]);
            uint64_t X = alg.element_sets[el];
            CHECK((bool)((rho2 >> w) & 1u) == !(X & ~rho1));
        }
    }
}

TEST_CASE("bz canonical frame for K5") {
    Structure k5 = catalog_structure("K5");
    Assignment v{{"p", k5.index("1/4")}};
    auto k = from_algebra(k5, v);
    CHECK(k.frame.flavor == FrameFlavor::BZ);
    CHECK_FALSE(k.frame.validate().has_value());
    CHECK_FALSE(k.validate().has_value());

    auto por = parse_formula(Dialect::BZL, "p | ~p");
    auto pon = parse_formula(Dialect::BZL, "p | -p");
    uint64_t down14 = 0, down34 = 0;
    for (int w = 0; w < k.frame.size(); ++w) {
        int el = k5.index(k.frame.worlds[w]);
        if (k5.leq(el, k5.index("1/4"))) down14 |= uint64_t{1} << w;
        if (k5.leq(el, k5.index("3/4"))) down34 |= uint64_t{1} << w;
    }
    CHECK(extension(k, por) == down14);
    CHECK(extension(k, pon) == down34);

    auto alg = to_algebra(k);
    CHECK(alg.st.has_bz());
    CHECK(isomorphic(alg.st, k5));
}

TEST_CASE("frame file round trip") {
    std::string text =
        "worlds: i j k\nacc: i i\nacc: j j\nacc: k k\nacc: i j\n"
        "prop: E =\nprop: A = i j k\nprop: X = k\nprop: Y = i j\n"
        "rho: p = X\n";
    auto k = load_frame(text);
    CHECK(k.frame.flavor == FrameFlavor::OL);
    CHECK_FALSE(k.validate().has_value());
    std::string saved = save_frame(k);
    auto k2 = load_frame(saved);
    CHECK(k2.frame.acc == k.frame.acc);
    CHECK(k2.pi == k.pi);
    CHECK(k2.rho == k.rho);
    CHECK(save_frame(k2) == saved);
    CHECK_THROWS_AS(load_frame("worlds: i\nrho: p = Z\n"), Error);
}

TEST_CASE("single reflexive world") {
    auto k = load_frame("worlds: w\nacc: w w\nprop: E =\nprop: A = w\n");
    CHECK(k.frame.flavor == FrameFlavor::OL);
    CHECK_FALSE(k.validate().has_value());
    CHECK(is_orthomodular_realization(k));
    CHECK(is_algebraically_adequate(k));
}
