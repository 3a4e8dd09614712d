#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ql/catalog.hpp"
#include "ql/completion.hpp"

using namespace ql;

static uint64_t mask_of(const Structure& st,
                        const std::vector<std::string>& names) {
    uint64_t m = 0;
    for (const auto& nm : names) m |= uint64_t{1} << st.index(nm);
    return m;
}

static void check_embedding(const Structure& st, const Completion& c) {
    for (int a = 0; a < st.size(); ++a)
        for (int b = 0; b < st.size(); ++b) {
            if (a != b) CHECK(c.h[a] != c.h[b]);
            CHECK(st.leq(a, b) == c.lattice.leq(c.h[a], c.h[b]));
            int m = st.meet(a, b);
            if (m != Structure::kUndefined)
                CHECK(c.lattice.meet(c.h[a], c.h[b]) == c.h[m]);
            int j = st.join(a, b);
            if (j != Structure::kUndefined)
                CHECK(c.lattice.join(c.h[a], c.h[b]) == c.h[j]);
        }
    for (int a = 0; a < st.size(); ++a) {
        CHECK(c.lattice.inv(c.h[a]) == c.h[st.inv(a)]);
        if (st.has_bz() && c.lattice.has_bz())
            CHECK(c.lattice.bz_inv(c.h[a]) == c.h[st.bz_inv(a)]);
    }
}

TEST_CASE("bound sets in the nine-element poset") {
    Structure p9 = catalog_structure("P9");
    uint64_t ef = mask_of(p9, {"E", "F"});
    CHECK(u_set(p9, ef) == mask_of(p9, {"1"}));
    CHECK(p9.meet(p9.index("E"), p9.index("F")) == Structure::kUndefined);
    CHECK(l_set(p9, u_set(p9, mask_of(p9, {"G"}))) == p9.down_mask(p9.index("G")));
}

TEST_CASE("completing the nine-element poset") {
    Structure p9 = catalog_structure("P9");
    Completion c = macneille(p9);
    CHECK(c.cuts.size() == 11);
    CHECK(c.lattice.validate().kind ==
          StructureClass::RegularInvolutiveLattice);
    check_embedding(p9, c);

    int m = c.lattice.meet(c.h[p9.index("E")], c.h[p9.index("F")]);
    CHECK(c.cuts[m] == mask_of(p9, {"0", "G", "M"}));
}

TEST_CASE("already complete lattices stay put") {
    for (const char* name : {"MO2", "G12", "O6"}) {
        Structure st = catalog_structure(name);
        Completion c = macneille(st);
        CHECK(c.cuts.size() == static_cast<size_t>(st.size()));
        CHECK(isomorphic(c.lattice, st));
        check_embedding(st, c);
    }
    Structure k5 = catalog_structure("K5");
    CHECK(macneille(k5).cuts.size() == 5);
    Completion cb = macneille_bz(k5);
    CHECK(isomorphic(cb.lattice, k5));
    check_embedding(k5, cb);
    auto rep = cb.lattice.validate();
    CHECK(rep.kind == StructureClass::BzLattice);
    CHECK_FALSE(cb.lattice.bz3_axiom_i_failure().has_value());
    CHECK(cb.lattice.bz3_axiom_ii_failure().has_value());
}

TEST_CASE("completing the meet-free poset with a second complement") {
    Structure st = catalog_structure("NPOS6");
    Completion c = macneille_bz(st);
    std::vector<uint64_t> expected = {
        mask_of(st, {"0"}),
        mask_of(st, {"0", "p"}),
        mask_of(st, {"0", "q"}),
        mask_of(st, {"0", "p", "q"}),
        mask_of(st, {"0", "p", "q", "p'"}),
        mask_of(st, {"0", "p", "q", "q'"}),
        mask_of(st, {"0", "p", "q", "p'", "q'", "1"})};
    std::sort(expected.begin(), expected.end());
    CHECK(c.cuts == expected);

    auto rep = c.lattice.validate();
    CHECK(rep.kind == StructureClass::BzLattice);
    CHECK(c.lattice.bz3_axiom_i_failure().has_value());
    CHECK_FALSE(c.lattice.regularity_failure().has_value());
    check_embedding(st, c);

    int m = c.lattice.meet(c.h[st.index("p'")], c.h[st.index("q'")]);
    CHECK(c.cuts[m] == mask_of(st, {"0", "p", "q"}));
    CHECK(st.meet(st.index("p'"), st.index("q'")) == Structure::kUndefined);
}

TEST_CASE("frames carved out of complete ortholattices") {
    for (const char* name : {"MO2", "BOOL(2)", "G12"}) {
        Structure st = catalog_structure(name);
        OrthoFrame fr = frame_of(st);
        CHECK(fr.size() == st.size() - 1);
        CHECK_FALSE(fr.validate().has_value());
        CHECK(isomorphic(frame_proposition_lattice(fr), st));
    }
    CHECK_THROWS_AS(frame_of(catalog_structure("K5")), Error);
}
