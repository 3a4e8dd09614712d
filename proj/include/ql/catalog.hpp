#pragma once

#include <string>
#include <vector>

#include "ql/structure.hpp"

namespace ql {

struct GreechieDiagram {
    std::vector<std::string> atoms;              // in first-seen order
    std::vector<std::vector<std::string>> blocks;
};

GreechieDiagram parse_greechie(const std::string& text);

// Pastes the blocks into an orthomodular lattice: elements are 0, 1, the
// atoms, and one coatom per atom (a 2-atom block identifies each atom's
// coatom with the other atom of the block). The result must validate as an
// orthomodular lattice, otherwise an Error carrying the validation report is
// thrown.
Structure paste(const GreechieDiagram& d);

// Same, but returns the structure without insisting on orthomodularity.
Structure paste_unchecked(const GreechieDiagram& d);

// Named structure fixtures: G12, B30, G14, O6, MO2, MO(n), BOOL(n), K5, P9,
// SHARP+SCALAR(n), NREG6, NPOS6. Throws on unknown names (M3/M4/K5EA/BOOL2EA
// live in the table catalog, see effect.hpp).
Structure catalog_structure(const std::string& name);

// Greechie diagrams committed for pasted catalog entries (G12, B30).
std::string catalog_diagram(const std::string& name);

std::vector<std::string> catalog_structure_names();

}  // namespace ql
