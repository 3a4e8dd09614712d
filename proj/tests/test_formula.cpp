#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ql/formula.hpp"

using namespace ql;

static std::string roundtrip(Dialect d, const std::string& text) {
    return print_formula(parse_formula(d, text));
}

TEST_CASE("parse and print") {
    CHECK(roundtrip(Dialect::OL, "p & q | -r") == "((p & q) | -r)");
    CHECK(roundtrip(Dialect::OL, "p ->1 q & r") == "(p ->1 (q & r))");
    CHECK(roundtrip(Dialect::OL, "-(p | q)") == "-(p | q)");
    CHECK(roundtrip(Dialect::BZL, "~p & L q") == "(~p & L q)");
    CHECK(roundtrip(Dialect::BZL, "M -p") == "M -p");
    CHECK(roundtrip(Dialect::UPaQL, "p + -q") == "(p + -q)");
    CHECK(roundtrip(Dialect::LQL, "p .&. q .|. r") == "((p .&. q) .|. r)");
    CHECK(roundtrip(Dialect::OL, "p -o q") == "(p -o q)");
    CHECK(roundtrip(Dialect::OL, "p =>> q") == "(p =>> q)");
    CHECK(roundtrip(Dialect::ModalB, "[]<>p ^ !q") == "([]<>p ^ !q)");

    SUBCASE("prefix minus before a literal named o") {
        CHECK(roundtrip(Dialect::OL, "p & - o") == "(p & -o)");
    }
    SUBCASE("print parse identity") {
        for (const char* t : {"((p & q) | -r)", "(p ->3 (q | r))",
                              "M (p & ~q)", "((p + q) .^. r)"}) {
            Dialect d = std::string(t).find('+') != std::string::npos
                            ? Dialect::UPaQL
                            : (std::string(t).find('~') != std::string::npos ||
                               std::string(t).find('M') != std::string::npos
                                   ? Dialect::BZL
                                   : Dialect::OL);
            CHECK(roundtrip(d, t) == t);
        }
    }
}

TEST_CASE("dialect admissibility") {
    CHECK_THROWS_AS(parse_formula(Dialect::PQL, "p ->1 q"), Error);
    CHECK_THROWS_AS(parse_formula(Dialect::OL, "~p"), Error);
    CHECK_THROWS_AS(parse_formula(Dialect::UPaQL, "p & q"), Error);
    CHECK_THROWS_AS(parse_formula(Dialect::ModalB, "p & q"), Error);
    CHECK_NOTHROW(parse_formula(Dialect::SPaQL, "p + -q"));
}

TEST_CASE("syntax errors") {
    CHECK_THROWS_AS(parse_formula(Dialect::OL, "p &"), Error);
    CHECK_THROWS_AS(parse_formula(Dialect::OL, "(p & q"), Error);
    CHECK_THROWS_AS(parse_formula(Dialect::OL, "p q"), Error);
    CHECK_THROWS_AS(parse_formula(Dialect::OL, "p ->1 q ->2 r"), Error);
}

TEST_CASE("expansion") {
    auto e = [](Dialect d, const std::string& t) {
        return print_formula(expand(parse_formula(d, t)));
    };
    CHECK(e(Dialect::OL, "p | q") == "-(-p & -q)");
    CHECK(e(Dialect::BZL, "L p") == "~-p");
    CHECK(e(Dialect::BZL, "M p") == "-~--p");
    CHECK(e(Dialect::UPaQL, "p .^. q") == "-(-p + -q)");
    CHECK(e(Dialect::OL, "p ->1 q") == "-(--p & -(p & q))");
    CHECK(e(Dialect::OL, "p & q") == "(p & q)");
}

TEST_CASE("literals") {
    auto f = parse_formula(Dialect::OL, "(p & q) | (-p & r1)");
    CHECK(literals_of(f) == std::vector<std::string>{"p", "q", "r1"});
    CHECK(equal(f, parse_formula(Dialect::OL, "p & q | -p & r1")));
    CHECK_FALSE(equal(f, parse_formula(Dialect::OL, "p & q")));
}
