#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "ql/catalog.hpp"
#include "ql/proof.hpp"

using namespace ql;

static std::string slurp(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

static std::string fixture(const std::string& name) {
    return slurp(std::string(QL_FIXTURES) + "/derivations/" + name);
}

static std::vector<NamedStructure> full_catalog() {
    std::vector<NamedStructure> out;
    for (const auto& name : catalog_structure_names())
        out.push_back({name, catalog_structure(name)});
    return out;
}

static std::vector<PartialTable> all_tables() {
    return {catalog_partial("K5EA"), catalog_partial("BOOL2EA")};
}

TEST_CASE("commutation derivation is accepted") {
    Derivation d = parse_derivation(fixture("ol_comm.drv"));
    CHECK(check(d).accepted);
    CHECK(d.steps.size() == 3);
}

TEST_CASE("one swapped rule token gets rejected") {
    std::string text = fixture("ol_comm.drv");
    std::string bad = text;
    bad.replace(bad.find("OL4"), 3, "OL3");
    CheckResult r = check(parse_derivation(bad));
    CHECK_FALSE(r.accepted);
    CHECK(r.step == 0);

    std::string bad2 = text;
    bad2.replace(bad2.find("prem=1,2"), 8, "prem=2,2");
    CHECK_FALSE(check(parse_derivation(bad2)).accepted);
}

TEST_CASE("orthomodularity rule belongs to OQL only") {
    Derivation d = parse_derivation(fixture("oql_orthomodular.drv"));
    CHECK(check(d).accepted);
    d.calculus = Calculus::OL;
    CheckResult r = check(d);
    CHECK_FALSE(r.accepted);
    CHECK(r.reason.find("OQL") != std::string::npos);
}

TEST_CASE("necessity iteration is accepted") {
    Derivation d = parse_derivation(fixture("bzl_modal.drv"));
    CHECK(check(d).accepted);
}

TEST_CASE("structural rejections") {
    Derivation d;
    d.calculus = Calculus::OL;
    d.steps.push_back(
        {make_config(Calculus::OL, {"a"}, "a"), "NOSUCH", {}});
    CHECK_FALSE(check(d).accepted);

    d.steps[0].rule = "OL11";
    d.steps[0].refs = {0};
    CheckResult r = check(d);
    CHECK_FALSE(r.accepted);
    CHECK(r.reason.find("out of range") != std::string::npos);

    Derivation u;
    u.calculus = Calculus::UPaQL;
    u.steps.push_back(
        {make_config(Calculus::UPaQL, {"p", "q"}, "p"), "UPa1", {}});
    r = check(u);
    CHECK_FALSE(r.accepted);
    CHECK(r.reason.find("single-formula") != std::string::npos);

    CHECK_THROWS_AS(parse_derivation("1: [a] |- a BY OL1\n"), Error);
    CHECK_THROWS_AS(parse_derivation("calculus: OL\n2: [a] |- a BY OL1\n"),
                    Error);
    CHECK_THROWS_AS(
        parse_derivation("calculus: OL\n1: [a] |- a BY OL11(prem=0)\n"),
        Error);
    CHECK_THROWS_AS(parse_derivation("calculus: XQL\n"), Error);
}

TEST_CASE("every shipped derivation expands and checks") {
    namespace fs = std::filesystem;
    size_t count = 0;
    for (const auto& entry :
         fs::directory_iterator(std::string(QL_FIXTURES) + "/derivations")) {
        if (entry.path().extension() != ".drv") continue;
        INFO(entry.path().filename().string());
        Derivation d = macro_expand(parse_derivation(slurp(entry.path())));
        CHECK(check(d).accepted);
        ++count;
    }
    CHECK(count >= 20);
}

TEST_CASE("round trip through the file format") {
    Derivation d = parse_derivation(fixture("bzl3_rules.drv"));
    Derivation d2 = parse_derivation(print_derivation(d));
    CHECK(check(d2).accepted);
    CHECK(d2.steps.size() == d.steps.size());
    for (size_t i = 0; i < d.steps.size(); ++i) {
        CHECK(print_config(d2.steps[i].config) ==
              print_config(d.steps[i].config));
        CHECK(d2.steps[i].rule == d.steps[i].rule);
    }
}

TEST_CASE("macro expansion commits primitive sub-derivations") {
    Derivation d = parse_derivation(fixture("upaql_truth_bounds.drv"));
    Derivation e = macro_expand(d);
    CHECK(check(e).accepted);
    CHECK(e.steps.size() > d.steps.size());
    for (const Step& s : e.steps) {
        CHECK(s.rule.find("D") != 0);
        CHECK(print_config(e.steps.back().config) ==
              print_config(d.steps.back().config));
    }

    Derivation dm = parse_derivation(fixture("bzl3_strong_demorgan.drv"));
    Derivation em = macro_expand(dm);
    CHECK(check(em).accepted);
    CHECK(print_config(em.steps.back().config) ==
          print_config(dm.steps.back().config));

    Derivation empty;
    empty.calculus = Calculus::OL;
    CHECK(macro_expand(empty).steps.empty());

    Derivation wrong;
    wrong.calculus = Calculus::BZL;
    wrong.steps.push_back(
        {make_config(Calculus::BZL, {"~(p & q)"}, "~p | ~q"), "DR3", {}});
    CHECK_THROWS_AS(macro_expand(wrong), Error);

    Derivation wrong2;
    wrong2.calculus = Calculus::UPaQL;
    wrong2.steps.push_back(
        {make_config(Calculus::UPaQL, {"p + -p"}, "p + -p"), "D5",
         {}});
    CHECK_THROWS_AS(macro_expand(wrong2), Error);
}

TEST_CASE("bounded search replays small proofs") {
    auto found = search(Calculus::OL,
                        make_config(Calculus::OL, {"a & b"}, "b & a"), 4);
    REQUIRE(found.has_value());
    CHECK(check(*found).accepted);
    CHECK(print_config(found->steps.back().config) ==
          print_config(make_config(Calculus::OL, {"a & b"}, "b & a")));

    auto refl = search(Calculus::OQL, make_config(Calculus::OQL, {}, "p ->1 p"),
                       6);
    CHECK(refl.has_value());

    auto bz = search(Calculus::BZL, make_config(Calculus::BZL, {"L p"}, "L L p"),
                     3);
    CHECK(bz.has_value());

    CHECK_THROWS_AS(
        search(Calculus::OL, make_config(Calculus::OL, {"a"}, "a"), 0), Error);
}

TEST_CASE("search cannot reach orthomodularity without its rule") {
    Config om = make_config(Calculus::OL, {"p & -(p & -(p & q))"}, "q");
    CHECK_FALSE(search(Calculus::OL, om, 8).has_value());
    auto with_rule = search(Calculus::OQL, om, 8);
    REQUIRE(with_rule.has_value());
    CHECK(with_rule->steps.size() == 1);
}

TEST_CASE("deduction theorem instances") {
    std::vector<std::pair<std::string, std::string>> pairs = {
        {"a", "--a"}, {"a & b", "b & a"}};
    for (const auto& [alpha, beta] : pairs) {
        std::string arrow = "(" + alpha + ") ->1 (" + beta + ")";
        CHECK(search(Calculus::OQL, make_config(Calculus::OQL, {}, arrow), 10)
                  .has_value());
        CHECK(search(Calculus::OQL,
                     make_config(Calculus::OQL, {alpha}, beta), 10)
                  .has_value());
    }
}

TEST_CASE("unrefuted formulas stay jointly realizable") {
    std::vector<NamedStructure> cat;
    for (auto& ns : full_catalog()) {
        auto kind = ns.st.validate().kind;
        if (kind == StructureClass::Ortholattice ||
            kind == StructureClass::OrthomodularLattice)
            cat.push_back(ns);
    }
    REQUIRE_FALSE(cat.empty());
    CHECK_FALSE(
        search(Calculus::OL, make_config(Calculus::OL, {"a"}, "-b"), 5)
            .has_value());
    FormulaPtr a = parse_formula(Dialect::OL, "a");
    FormulaPtr b = parse_formula(Dialect::OL, "b");
    CHECK(realizable(cat, {a, b}));

    CHECK(search(Calculus::OL, make_config(Calculus::OL, {"a"}, "--a"), 5)
              .has_value());
    FormulaPtr na = parse_formula(Dialect::OL, "-a");
    CHECK_FALSE(realizable(cat, {a, na}));
}

TEST_CASE("soundness harness over the whole catalog") {
    namespace fs = std::filesystem;
    auto cat = full_catalog();
    auto tabs = all_tables();
    for (const auto& entry :
         fs::directory_iterator(std::string(QL_FIXTURES) + "/derivations")) {
        if (entry.path().extension() != ".drv") continue;
        INFO(entry.path().filename().string());
        Derivation d = macro_expand(parse_derivation(slurp(entry.path())));
        HarnessResult h = soundness_harness(d, cat, tabs);
        CHECK(h.ok);
    }
}

TEST_CASE("the Kleene rule needs the regularity restriction") {
    Derivation d = parse_derivation(fixture("rpql_kleene.drv"));
    std::vector<NamedStructure> nreg = {{"NREG6", catalog_structure("NREG6")}};

    HarnessResult restricted = soundness_harness(d, nreg, {}, true);
    CHECK(restricted.ok);

    HarnessResult open = soundness_harness(d, nreg, {}, false);
    CHECK_FALSE(open.ok);
    CHECK(open.step == 0);
    CHECK(open.model == "NREG6");
    CHECK_FALSE(open.detail.empty());
}

TEST_CASE("harness refuses rejected derivations") {
    std::string bad = fixture("ol_comm.drv");
    bad.replace(bad.find("OL4"), 3, "OL3");
    Derivation d = parse_derivation(bad);
    CHECK_FALSE(check(d).accepted);
    CHECK_THROWS_AS(soundness_harness(d, full_catalog()), Error);
}
