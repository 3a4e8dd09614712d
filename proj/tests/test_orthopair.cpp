#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include "ql/catalog.hpp"
#include "ql/orthopair.hpp"
#include "ql/proof.hpp"

using namespace ql;

static FormulaPtr bz3(const std::string& t) {
    return parse_formula(Dialect::BZL3, t);
}

static OrthoFrame discrete_frame(int n) {
    OrthoFrame fr;
    for (int w = 0; w < n; ++w) {
        fr.worlds.push_back("s" + std::to_string(w + 1));
        fr.acc.push_back(uint64_t{1} << w);
    }
    return fr;
}

static OrthoFrame mo2_frame() {
    return from_algebra(catalog_structure("MO2"), {}).frame;
}

// Every reflexive symmetric frame on at most four worlds.
static std::vector<OrthoFrame> small_frames() {
    std::vector<OrthoFrame> out;
    for (int n = 1; n <= 4; ++n) {
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
        for (uint64_t bits = 0; bits < (uint64_t{1} << edges.size()); ++bits) {
            OrthoFrame fr = discrete_frame(n);
            for (size_t k = 0; k < edges.size(); ++k)
                if ((bits >> k) & 1) {
                    fr.acc[edges[k].first] |= uint64_t{1} << edges[k].second;
                    fr.acc[edges[k].second] |= uint64_t{1} << edges[k].first;
                }
            out.push_back(fr);
        }
    }
    return out;
}

TEST_CASE("two-world discrete frame pair lattice") {
    PairAlgebra pa(discrete_frame(2));
    CHECK(pa.props().size() == 4);
    CHECK(pa.pairs().size() == 9);

    Structure st = all_orthopairs(discrete_frame(2));
    CHECK(st.size() == 9);
    CHECK(st.validate().kind == StructureClass::Bz3Lattice);
    CHECK(st.name(st.zero()) == "[-|s1.s2]");
    CHECK(st.name(st.one()) == "[s1.s2|-]");

    Structure stm = all_orthopairs(mo2_frame());
    CHECK(stm.size() == 15);
    CHECK(stm.validate().kind == StructureClass::Bz3Lattice);
    PairAlgebra pam(mo2_frame());
    CHECK(pam.props().size() == 6);
}

TEST_CASE("pair operations follow the definitions") {
    PairAlgebra pa(discrete_frame(2));
    OrthoPair f = pa.make_pair(0b01, 0b10);
    CHECK(pa.exact(f));
    CHECK(pa.box(f) == f);
    CHECK(pa.fcomp(f) == pa.make_pair(0b10, 0b01));
    CHECK(pa.fcomp(pa.fcomp(f)) == f);

    OrthoPair half = pa.make_pair(0, 0);
    CHECK_FALSE(pa.exact(half));
    CHECK(pa.box(half) == pa.zero());
    CHECK(pa.icomp(pa.icomp(half)) == pa.one());
    CHECK(pa.diamond(half) == pa.one());
    CHECK(pa.leq(pa.zero(), half));
    CHECK(pa.leq(half, pa.one()));
    CHECK_FALSE(pa.leq(half, f));

    CHECK(pa.pinf(f, pa.fcomp(f)) == pa.make_pair(0, 0b11));
    CHECK(pa.psup(f, pa.fcomp(f)) == pa.one());

    CHECK_THROWS_AS(pa.make_pair(0b11, 0b11), Error);
    CHECK_THROWS_AS(pa.make_pair(0b01, 0b01), Error);
    CHECK_THROWS_AS(all_orthopairs(discrete_frame(4)), Error);

    OrthoFrame seven = discrete_frame(7);
    CHECK_THROWS_AS(all_orthopairs(seven), Error);

    OrthoFrame bad = discrete_frame(2);
    bad.acc[0] |= 0b10;
    CHECK_THROWS_AS((void)PairAlgebra(bad), Error);
}

TEST_CASE("pair laws hold exhaustively on small frames") {
    size_t count = 0;
    for (const auto& fr : small_frames()) {
        PairAlgebra pa(fr);
        CHECK_FALSE(pair_law_failure(pa).has_value());
        ++count;
    }
    CHECK(count == 75);
    CHECK_FALSE(pair_law_failure(PairAlgebra(mo2_frame())).has_value());
}

TEST_CASE("excluded middle forms coincide in pair semantics") {
    FormulaPtr fuzzy_em = bz3("p | -p");
    FormulaPtr int_em = bz3("p | ~p");
    std::vector<PairRealization> rs;
    for (const auto& fr : small_frames()) {
        PairAlgebra pa(fr);
        for (const auto& x : pa.pairs()) {
            PairAssignment rho{{"p", x}};
            CHECK(bzl3_evaluate(pa, rho, fuzzy_em) ==
                  bzl3_evaluate(pa, rho, int_em));
        }
        rs.push_back({"frame" + std::to_string(rs.size()), std::move(pa)});
    }
    rs.push_back({"mo2", PairAlgebra(mo2_frame())});
    CHECK_FALSE(bzl3_consequence(rs, {fuzzy_em}, int_em).has_value());
    CHECK_FALSE(bzl3_consequence(rs, {int_em}, fuzzy_em).has_value());
}

TEST_CASE("the K5 algebraic realization separates the two forms") {
    std::vector<NamedStructure> k5 = {{"K5", catalog_structure("K5")}};
    FormulaPtr fuzzy_em = bz3("p | -p");
    FormulaPtr int_em = bz3("p | ~p");

    auto cm = consequence(k5, {fuzzy_em}, int_em);
    REQUIRE(cm.has_value());
    CHECK(cm->structure == "K5");
    CHECK(cm->assignment.at("p") == "1/4");
    CHECK_FALSE(consequence(k5, {int_em}, fuzzy_em).has_value());

    const Structure& st = k5[0].st;
    Assignment v{{"p", st.index("1/4")}};
    CHECK(st.name(evaluate(st, v, fuzzy_em)) == "3/4");
    CHECK(st.name(evaluate(st, v, int_em)) == "1/4");

    CHECK_FALSE(st.bz3_axiom_i_failure().has_value());
    auto w = st.bz3_axiom_ii_failure();
    REQUIRE(w.has_value());
    CHECK(st.name((*w)[0]) == "1/2");
    CHECK(st.name((*w)[1]) == "1/4");
}

TEST_CASE("exact pairs reduce evaluation to the ortho fragment") {
    std::vector<FormulaPtr> fs = {bz3("p"),       bz3("-p"),
                                  bz3("p & q"),   bz3("-(p & -q)"),
                                  bz3("p | q"),   bz3("-(-p & q) & p")};
    for (OrthoFrame fr : {discrete_frame(2), mo2_frame()}) {
        PairAlgebra pa(fr);
        KripkeRealization k;
        k.frame = fr;
        k.pi = fr.all_propositions();
        std::vector<OrthoPair> exact;
        for (const auto& x : pa.pairs())
            if (pa.exact(x)) exact.push_back(x);
        CHECK(exact.size() == pa.props().size());
        for (const auto& xp : exact)
            for (const auto& xq : exact) {
                PairAssignment rho{{"p", xp}, {"q", xq}};
                k.rho = {{"p", pa.pos_set(xp)}, {"q", pa.pos_set(xq)}};
                REQUIRE_FALSE(k.validate().has_value());
                for (const auto& f : fs) {
                    OrthoPair val = bzl3_evaluate(pa, rho, f);
                    CHECK(pa.exact(val));
                    CHECK(pa.pos_set(val) == extension(k, f));
                }
            }
    }
}

TEST_CASE("the nine-element effect fixture maps into pairs") {
    PairAlgebra pa(discrete_frame(2));
    Structure p9 = catalog_structure("P9");

    std::ifstream in(std::string(QL_FIXTURES) + "/p9_pairs.txt");
    REQUIRE(in.good());
    std::map<std::string, OrthoPair> f;
    std::map<std::string, std::string> tilde;
    auto set_of = [&](const std::string& tok) {
        uint64_t out = 0;
        if (tok == "-") return out;
        std::stringstream ss(tok);
        std::string w;
        while (std::getline(ss, w, '.'))
            out |= uint64_t{1} << pa.frame().world(w);
        return out;
    };
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::stringstream ss(line);
        std::string name, pos, bar, neg, tld, target;
        ss >> name >> pos >> bar >> neg >> tld >> target;
        name.pop_back();
        f[name] = pa.make_pair(set_of(pos), set_of(neg));
        tilde[name] = target;
    }
    REQUIRE(f.size() == 9);

    CHECK(f.at("0") == pa.zero());
    CHECK(f.at("1") == pa.one());
    CHECK(f.at("G") == f.at("M"));
    for (int a = 0; a < p9.size(); ++a) {
        const std::string& na = p9.name(a);
        CHECK(f.at(p9.name(p9.inv(a))) == pa.fcomp(f.at(na)));
        CHECK(f.at(tilde.at(na)) == pa.icomp(f.at(na)));
        for (int b = 0; b < p9.size(); ++b)
            if (p9.leq(a, b)) CHECK(pa.leq(f.at(na), f.at(p9.name(b))));
    }
}

TEST_CASE("the pair lattice feeds the proof harness") {
    std::vector<NamedStructure> pairs = {
        {"PAIRS2", all_orthopairs(discrete_frame(2))},
        {"PAIRSMO2", all_orthopairs(mo2_frame())}};
    for (const char* name :
         {"bzl3_rules.drv", "bzl3_distribution.drv", "bzl3_derived.drv",
          "bzl3_strong_demorgan.drv"}) {
        std::ifstream in(std::string(QL_FIXTURES) + "/derivations/" + name);
        REQUIRE(in.good());
        std::ostringstream text;
        text << in.rdbuf();
        Derivation d = macro_expand(parse_derivation(text.str()));
        HarnessResult h = soundness_harness(d, pairs);
        INFO(name << " " << h.model << " " << h.detail);
        CHECK(h.ok);
    }
}

TEST_CASE("pair evaluation rejects foreign input") {
    PairAlgebra pa(discrete_frame(2));
    CHECK_THROWS_AS(bzl3_evaluate(pa, {}, bz3("p")), Error);
    PairAssignment rho{{"p", pa.zero()}};
    CHECK(bzl3_evaluate(pa, rho, bz3("L p")) == pa.zero());
    CHECK(bzl3_evaluate(pa, rho, bz3("M p")) == pa.zero());
    CHECK_THROWS_AS(
        bzl3_evaluate(pa, rho, parse_formula(Dialect::ModalB, "[] p")), Error);
}
