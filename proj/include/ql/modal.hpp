#pragma once

#include "ql/kripke.hpp"

namespace ql {

// Classical modal realization over an orthoframe: pi contains the empty and
// full sets and is closed under relative complement, intersection and the
// necessity operation.
struct BRealization {
    OrthoFrame frame;
    std::vector<uint64_t> pi;             // sorted, deduplicated
    std::map<std::string, uint64_t> rho;  // literal -> member of pi

    std::optional<std::string> validate() const;
    bool pi_has(uint64_t X) const;
};

// Translation into the modal language: literals become necessity of
// possibility, the ortho negation becomes necessity of classical negation,
// conjunction stays conjunction.
FormulaPtr tau(const FormulaPtr& f);

uint64_t b_extension(const BRealization& m, const FormulaPtr& modal_formula);
bool b_holds(const BRealization& m, int world, const FormulaPtr& modal_formula);

// Smallest-closure transformations between ortho realizations and modal ones;
// both keep the frame and the literal assignments pointwise.
BRealization ol_to_b(const KripkeRealization& k);
KripkeRealization b_to_ol(const BRealization& m);

// Smallest family containing the translated literal extensions, closed under
// orthocomplement and intersection.
std::vector<uint64_t> quantum_propositions(const BRealization& m);

// The orthomodular property over the quantum propositions.
bool is_b_zero(const BRealization& m);

// Checks that alpha and not-beta jointly force the possibility of
// alpha-and-necessarily-not-(alpha-and-beta), at every world; alpha and beta
// are modal formulas (normally tau images).
bool b_zero_schema_holds(const BRealization& m, const FormulaPtr& alpha,
                         const FormulaPtr& beta);

}  // namespace ql
