#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ql/formula.hpp"
#include "ql/kripke.hpp"
#include "ql/semantics.hpp"
#include "ql/structure.hpp"

namespace ql {

// A pair of certainty domains over one orthoframe, stored as indices into
// the frame's proposition list: pos is the positive domain A1, neg the
// negative domain A0, with A1 inside the orthocomplement of A0.
struct OrthoPair {
    int pos = 0;
    int neg = 0;

    friend bool operator==(const OrthoPair& a, const OrthoPair& b) {
        return a.pos == b.pos && a.neg == b.neg;
    }
    friend bool operator<(const OrthoPair& a, const OrthoPair& b) {
        return a.pos != b.pos ? a.pos < b.pos : a.neg < b.neg;
    }
};

// Pair machinery of one orthoframe. The frame must validate and carry the
// plain reflexive flavor; propositions and pairs are enumerated once.
class PairAlgebra {
  public:
    explicit PairAlgebra(const OrthoFrame& frame);

    const OrthoFrame& frame() const { return frame_; }
    const std::vector<uint64_t>& props() const { return props_; }
    const std::vector<OrthoPair>& pairs() const { return pairs_; }

    uint64_t pos_set(const OrthoPair& x) const;
    uint64_t neg_set(const OrthoPair& x) const;
    int prop_index(uint64_t set) const;  // throws on a non-proposition

    // Builds a pair from world sets; throws when a component is not a
    // proposition or the positive domain leaks out of the negative
    // domain's orthocomplement.
    OrthoPair make_pair(uint64_t pos, uint64_t neg) const;
    bool exact(const OrthoPair& x) const;
    std::string pair_name(const OrthoPair& x) const;

    OrthoPair zero() const { return zero_; }
    OrthoPair one() const { return one_; }

    OrthoPair fcomp(const OrthoPair& x) const;
    OrthoPair icomp(const OrthoPair& x) const;
    OrthoPair pinf(const OrthoPair& x, const OrthoPair& y) const;
    OrthoPair psup(const OrthoPair& x, const OrthoPair& y) const;
    OrthoPair box(const OrthoPair& x) const;
    OrthoPair diamond(const OrthoPair& x) const;
    bool leq(const OrthoPair& x, const OrthoPair& y) const;

  private:
    void check(const OrthoPair& x) const;
    uint64_t prop_join(uint64_t a, uint64_t b) const;

    OrthoFrame frame_;
    std::vector<uint64_t> props_;
    std::map<uint64_t, int> index_;
    std::vector<OrthoPair> pairs_;
    OrthoPair zero_, one_;
};

// The full pair lattice with both complements, validated as a BZ3-lattice.
// Throws when the frame has more than six worlds, the pair count exceeds
// the structure element bound, or validation does not land in the BZ3
// class (the last would be a toolkit bug).
Structure all_orthopairs(const OrthoFrame& frame);

// First failing instance of the five pair laws (necessity as the composite
// of the two complements, the exchange law for possibility's dual, the
// possibility composite, strong De Morgan, the interconnection inequality),
// checked over every pair; nullopt when all hold.
std::optional<std::string> pair_law_failure(const PairAlgebra& pa);

using PairAssignment = std::map<std::string, OrthoPair>;

// Recursive evaluation over the expanded fragment (literals, the two
// complements, conjunction, with disjunction and the modal abbreviations
// rewritten first). Throws on unassigned literals and foreign connectives.
OrthoPair bzl3_evaluate(const PairAlgebra& pa, const PairAssignment& rho,
                        const FormulaPtr& f);

struct PairRealization {
    std::string name;
    PairAlgebra alg;
};

// Pair-order consequence: over every listed realization and every
// assignment of the occurring literals to pairs, the meet of the premise
// values lies below the conclusion value. First countermodel in the
// canonical order (realizations as listed, assignments lexicographic over
// the sorted literal list) or nullopt.
Verdict bzl3_consequence(const std::vector<PairRealization>& realizations,
                         const std::vector<FormulaPtr>& premises,
                         const FormulaPtr& conclusion);

}  // namespace ql
