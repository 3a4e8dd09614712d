#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ql/catalog.hpp"
#include "ql/structure.hpp"

using namespace ql;

TEST_CASE("G12 pastes and classifies as orthomodular") {
    Structure g = catalog_structure("G12");
    CHECK(g.size() == 12);
    CHECK(g.validate().kind == StructureClass::OrthomodularLattice);
}

TEST_CASE("O6 is an ortholattice with omI witness (a,b)") {
    Structure o = catalog_structure("O6");
    auto rep = o.validate();
    CHECK(rep.kind == StructureClass::Ortholattice);
    auto om = o.orthomodular_forms();
    REQUIRE(om.omI.status == OmForm::Fails);
    CHECK(om.omI.witness == std::vector<std::string>{"a", "b"});
}

TEST_CASE("K5 is a bz-lattice") {
    Structure k = catalog_structure("K5");
    CHECK(k.validate().kind == StructureClass::BzLattice);
}
