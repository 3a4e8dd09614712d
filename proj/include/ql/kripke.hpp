#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ql/formula.hpp"
#include "ql/semantics.hpp"
#include "ql/structure.hpp"

namespace ql {

enum class FrameFlavor { OL, PQL, BZ };

std::string to_string(FrameFlavor f);

struct OrthoFrame {
    FrameFlavor flavor = FrameFlavor::OL;
    std::vector<std::string> worlds;
    std::vector<uint64_t> acc;     // accessibility masks, one per world
    std::vector<uint64_t> bzacc;   // second relation (BZ flavor only)

    int size() const { return static_cast<int>(worlds.size()); }
    uint64_t all() const { return (size() == 64) ? ~uint64_t{0}
                                                 : (uint64_t{1} << size()) - 1; }
    int world(const std::string& name) const;

    // Symmetry always; reflexivity for OL; the BZ frame conditions, twin
    // worlds included, for BZ. Returns a description of the first failure.
    std::optional<std::string> validate() const;

    uint64_t ortho(uint64_t X) const;     // X' over acc
    uint64_t bz_ortho(uint64_t X) const;  // X~ over bzacc
    bool is_proposition(uint64_t X) const;
    // All double-orthocomplement fixed points, generated by closing {I}
    // under intersection with the singleton orthocomplements; sorted.
    std::vector<uint64_t> all_propositions() const;

    uint64_t strict_op(uint64_t X, uint64_t Y) const;
    uint64_t box(uint64_t X) const;  // worlds whose accessible worlds lie in X
};

struct KripkeRealization {
    OrthoFrame frame;
    std::vector<uint64_t> pi;                // sorted, deduplicated
    std::map<std::string, uint64_t> rho;     // literal -> member of pi

    // Frame validity plus closure of pi under ', intersection (and ~ in the
    // BZ flavor), with 0 and I present, and rho landing in pi.
    std::optional<std::string> validate() const;
    bool pi_has(uint64_t X) const;
};

// Extension of a formula as a world set; throws when the frame flavor lacks
// a needed relation or pi is not closed under the strict operation.
uint64_t extension(const KripkeRealization& k, const FormulaPtr& f);
bool holds(const KripkeRealization& k, int world, const FormulaPtr& f);
// The accessible-witness reformulation of world truth, for cross-checks.
bool holds_reformulated(const KripkeRealization& k, int world,
                        const FormulaPtr& f);

// Canonical transformations. from_algebra takes the nonzero elements as
// worlds and principal quasi-ideals as propositions; the valuation may be
// empty when only the frame matters.
KripkeRealization from_algebra(const Structure& st, const Assignment& v);
// Proposition lattice ordered by inclusion, with the valuation rho.
struct AlgebraicRealization {
    Structure st;
    Assignment v;
    std::vector<uint64_t> element_sets;  // pi member per element index
};
AlgebraicRealization to_algebra(const KripkeRealization& k);

bool is_orthomodular_realization(const KripkeRealization& k);
bool is_algebraically_adequate(const KripkeRealization& k);

// Self-orthogonal worlds are pairwise orthogonal.
bool frame_regular(const OrthoFrame& fr);

// Checks the counterfactual reading of the first polynomial conditional on
// K^st: truth of alpha ->1 beta at a world agrees with the Stalnaker-function
// clause everywhere.
bool stalnaker_check(const Structure& st, const Assignment& v,
                     const FormulaPtr& alpha, const FormulaPtr& beta);

KripkeRealization load_frame(const std::string& text);
std::string save_frame(const KripkeRealization& k);

}  // namespace ql
