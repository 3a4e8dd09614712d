#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "qlw.h"

namespace {

std::string take(char* s) {
    REQUIRE(s != nullptr);
    std::string out(s);
    qlw_string_free(s);
    return out;
}

std::string capture(std::initializer_list<const char*> argv, int expect) {
    std::vector<const char*> args(argv);
    char* out = nullptr;
    int code = qlw_run_capture(static_cast<int>(args.size()), args.data(),
                               &out);
    CHECK(code == expect);
    return take(out);
}

}  // namespace

TEST_CASE("version and catalog") {
    CHECK(std::string(qlw_version()) == "1.0.0");
    std::string names = take(qlw_structure_catalog());
    CHECK(names.find("G12\n") != std::string::npos);
    CHECK(names.find("B30\n") != std::string::npos);
}

TEST_CASE("structure handles") {
    qlw_structure* st = qlw_structure_load("catalog:G12");
    REQUIRE(st != nullptr);
    CHECK(qlw_structure_size(st) == 12);
    CHECK(take(qlw_structure_class(st)) == "orthomodular-lattice");
    int zero = qlw_structure_index(st, "0");
    CHECK(zero >= 0);
    CHECK(take(qlw_structure_element(st, zero)) == "0");
    CHECK(qlw_structure_element(st, 99) == nullptr);
    CHECK(qlw_structure_index(st, "no-such-element") == -1);
    CHECK(std::string(qlw_last_error()).empty() == false);

    std::string text = take(qlw_structure_save(st));
    qlw_structure* copy = qlw_structure_load(text.c_str());
    REQUIRE(copy != nullptr);
    CHECK(qlw_structure_size(copy) == 12);
    CHECK(take(qlw_structure_class(copy)) == "orthomodular-lattice");
    qlw_structure_free(copy);
    qlw_structure_free(st);

    CHECK(qlw_structure_load("catalog:NOPE") == nullptr);
    CHECK(std::string(qlw_last_error()).empty() == false);
    CHECK(qlw_structure_load("garbage input") == nullptr);
}

TEST_CASE("formulas and evaluation") {
    qlw_formula* f = qlw_formula_parse("OL", "p & -p");
    REQUIRE(f != nullptr);
    CHECK(take(qlw_formula_print(f)) == "(p & -p)");

    qlw_structure* mo2 = qlw_structure_load("catalog:MO2");
    REQUIRE(mo2 != nullptr);
    const char* lits[] = {"p"};
    const char* vals[] = {"a"};
    int r = qlw_evaluate(mo2, f, lits, vals, 1);
    CHECK(r == qlw_structure_index(mo2, "0"));
    CHECK(qlw_evaluate(mo2, f, nullptr, nullptr, 0) == -1);
    qlw_formula_free(f);
    qlw_structure_free(mo2);

    CHECK(qlw_formula_parse("OL", "p &") == nullptr);
    CHECK(qlw_formula_parse("NOPE", "p") == nullptr);
    CHECK(std::string(qlw_last_error()).empty() == false);
}

TEST_CASE("consequence over catalog structures") {
    qlw_formula* excl = qlw_formula_parse("OL", "p | -p");
    qlw_formula* lit = qlw_formula_parse("OL", "p");
    REQUIRE(excl != nullptr);
    REQUIRE(lit != nullptr);
    const char* structs[] = {"MO2", "G12"};

    CHECK(qlw_consequence(structs, 2, nullptr, 0, excl, nullptr) == QLW_OK);

    char* witness = nullptr;
    CHECK(qlw_consequence(structs, 2, nullptr, 0, lit, &witness) ==
          QLW_COUNTERMODEL);
    CHECK(take(witness).find("MO2") != std::string::npos);

    qlw_formula* prem[] = {excl};
    CHECK(qlw_consequence(structs, 2, prem, 1, excl, nullptr) == QLW_OK);

    const char* bad[] = {"NOPE"};
    CHECK(qlw_consequence(bad, 1, nullptr, 0, lit, nullptr) == QLW_ERROR);
    qlw_formula_free(excl);
    qlw_formula_free(lit);
}

TEST_CASE("derivation handles") {
    const char* good =
        "calculus: OL\n"
        "1: [p & q] |- q BY OL4\n"
        "2: [p & q] |- p BY OL3\n"
        "3: [p & q] |- q & p BY OL5(prem=1,2)\n";
    qlw_derivation* d = qlw_derivation_parse(good);
    REQUIRE(d != nullptr);
    CHECK(qlw_derivation_check(d, nullptr) == QLW_OK);
    qlw_derivation_free(d);

    const char* bad =
        "calculus: OL\n"
        "1: [p & q] |- q BY OL3\n";
    qlw_derivation* b = qlw_derivation_parse(bad);
    REQUIRE(b != nullptr);
    char* reason = nullptr;
    CHECK(qlw_derivation_check(b, &reason) == QLW_COUNTERMODEL);
    CHECK(take(reason).find("step 1") != std::string::npos);
    qlw_derivation_free(b);

    CHECK(qlw_derivation_parse("not a derivation") == nullptr);
    CHECK(std::string(qlw_last_error()).empty() == false);
}

TEST_CASE("run exit codes") {
    const char* ok[] = {"validate", "catalog:G12"};
    CHECK(qlw_run(2, ok) == 0);
    const char* missing[] = {"proof", "check", "missing.drv"};
    CHECK(qlw_run(3, missing) == 2);
    const char* unknown[] = {"frobnicate"};
    CHECK(qlw_run(1, unknown) == 2);
}

TEST_CASE("captured reports") {
    CHECK(capture({"validate", "catalog:G12"}, 0) ==
          "orthomodular-lattice\n");
    CHECK(capture({"--format", "machine", "validate", "catalog:O6"}, 0) ==
          "class\tortholattice\n");
    CHECK(capture({"valid", "p", "--structs", "MO2"}, 1)
              .find("countermodel") != std::string::npos);
    CHECK(capture({"translate", "p & q"}, 0).empty() == false);
    CHECK(capture({"kripke", "catalog:MO2"}, 0).find("valid: yes") !=
          std::string::npos);
    CHECK(capture({"fo-eval", QL_FIXTURES "/fo/mo2_model.txt",
                   "all x P(x)"},
                  0) == "0\n");
    CHECK(capture({"fo-eval", QL_FIXTURES "/fo/mo2_model.txt", "P(x)",
                   "--sigma", "x=u"},
                  0) == "a\n");
    std::string rep =
        capture({"reproduce", "B30-OAL", "--fixtures", QL_FIXTURES}, 0);
    CHECK(rep.find("PASS B30-OAL") != std::string::npos);
    CHECK(rep.find("with chain e, i, l', 0, b") != std::string::npos);
}

TEST_CASE("reports are deterministic") {
    std::string a = capture({"props", "catalog:G12"}, 0);
    std::string b = capture({"props", "catalog:G12"}, 0);
    CHECK(a == b);
    CHECK(a.find("class: orthomodular-lattice") != std::string::npos);
}
