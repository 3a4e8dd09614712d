#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ql/catalog.hpp"
#include "ql/modal.hpp"

using namespace ql;

static FormulaPtr ol(const std::string& t) {
    return parse_formula(Dialect::OL, t);
}

static std::vector<FormulaPtr> depth3_formulas() {
    std::vector<FormulaPtr> out;
    for (const char* t :
         {"p", "q", "-p", "p & q", "p | q", "-(p & q)", "p & -q",
          "-p | (p & q)", "p & (q | -p)", "-(p & -(p & q))", "p & -p"})
        out.push_back(ol(t));
    return out;
}

TEST_CASE("translation shape") {
    CHECK(print_formula(tau(ol("p"))) == "[]<>p");
    CHECK(print_formula(tau(ol("-p"))) == "[]![]<>p");
    CHECK(print_formula(tau(ol("p & q"))) == "([]<>p ^ []<>q)");
    CHECK(print_formula(tau(ol("p | q"))) ==
          "[]!([]![]<>p ^ []![]<>q)");
}

TEST_CASE("world-by-world agreement through tau") {
    for (const char* name : {"MO2", "O6", "G12"}) {
        Structure st = catalog_structure(name);
        auto fs = depth3_formulas();
        for (int a = 0; a < st.size(); ++a)
            for (int b = 0; b < st.size(); ++b) {
                Assignment v{{"p", a}, {"q", b}};
                auto k = from_algebra(st, v);
                auto m = ol_to_b(k);
                REQUIRE_FALSE(m.validate().has_value());
                for (const auto& f : fs)
                    CHECK(extension(k, f) == b_extension(m, tau(f)));
            }
    }
}

TEST_CASE("necessity of possibility is idempotent") {
    for (const char* name : {"MO2", "O6", "G12", "G14", "NREG6"}) {
        Structure st = catalog_structure(name);
        Assignment v{{"p", st.index(st.name(1))}};
        auto k = from_algebra(st, v);
        auto m = ol_to_b(k);
        auto once = parse_formula(Dialect::ModalB, "[]<>p");
        auto twice = parse_formula(Dialect::ModalB, "[]<>[]<>p");
        CHECK(b_extension(m, once) == b_extension(m, twice));
    }
}

TEST_CASE("round trip keeps satisfaction") {
    Structure st = catalog_structure("MO2");
    for (int a = 0; a < st.size(); ++a)
        for (int b = 0; b < st.size(); ++b) {
            Assignment v{{"p", a}, {"q", b}};
            auto k = from_algebra(st, v);
            auto k2 = b_to_ol(ol_to_b(k));
            REQUIRE_FALSE(k2.validate().has_value());
            for (const auto& f : depth3_formulas())
                CHECK(extension(k, f) == extension(k2, f));
        }
}

TEST_CASE("quantum propositions") {
    Structure st = catalog_structure("MO2");
    Assignment v{{"p", st.index("a")}, {"q", st.index("b")}};
    auto k = from_algebra(st, v);
    auto m = ol_to_b(k);

    auto q = quantum_propositions(m);
    for (uint64_t X : q) CHECK(m.pi_has(X));
    CHECK(q == b_to_ol(m).pi);
}

TEST_CASE("orthomodularity transport to the modal side") {
    for (const char* name : {"MO2", "G12", "BOOL(2)"}) {
        Structure st = catalog_structure(name);
        Assignment v{{"p", st.index(st.name(1))},
                     {"q", st.index(st.name(st.size() - 1))}};
        auto m = ol_to_b(from_algebra(st, v));
        CHECK(is_b_zero(m));
        for (const auto& x : {ol("p"), ol("q"), ol("-p"), ol("p & q")})
            for (const auto& y : {ol("p"), ol("q"), ol("-p"), ol("p & q")})
                CHECK(b_zero_schema_holds(m, tau(x), tau(y)));
    }

    Structure o6 = catalog_structure("O6");
    Assignment v{{"p", o6.index("a")}, {"q", o6.index("b")}};
    auto m = ol_to_b(from_algebra(o6, v));
    CHECK_FALSE(is_b_zero(m));
}

TEST_CASE("singleton frame collapses the modalities") {
    auto k = load_frame("worlds: w\nacc: w w\nprop: E =\nprop: A = w\n"
                        "rho: p = A\n");
    auto m = ol_to_b(k);
    auto box_p = parse_formula(Dialect::ModalB, "[]p");
    auto p = parse_formula(Dialect::ModalB, "p");
    CHECK(b_extension(m, box_p) == b_extension(m, p));
}
