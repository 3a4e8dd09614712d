#pragma once

#include "ql/kripke.hpp"
#include "ql/structure.hpp"

namespace ql {

// Upper and lower bound sets of a subset of elements, as bitmasks.
uint64_t u_set(const Structure& st, uint64_t X);
uint64_t l_set(const Structure& st, uint64_t X);

struct Completion {
    Structure lattice;
    std::vector<uint64_t> cuts;  // original-element mask per new element
    std::vector<int> h;          // original element -> completion element
};

// Completion by double-complement stable sets, with the bound-pair
// presentation cross-checked on every cut. The input must validate at least
// as an involutive poset.
Completion macneille(const Structure& st);

// Same construction, also carrying the second complement; the input must be
// a BZ-poset and the result is revalidated with both complements.
Completion macneille_bz(const Structure& st);

// The frame on the nonzero elements with accessibility a,b whenever a is not
// below the complement of b; asserts that its proposition lattice matches
// the completion (propositions are cuts with the zero element dropped).
OrthoFrame frame_of(const Structure& ortholattice);

// Proposition lattice of a frame, ordered by inclusion.
Structure frame_proposition_lattice(const OrthoFrame& fr);

}  // namespace ql
