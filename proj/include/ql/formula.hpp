#pragma once

#include <memory>
#include <set>
#include <string>
#include <vector>

#include "ql/structure.hpp"

namespace ql {

enum class Dialect { OL, OQL, PQL, RPQL, BZL, BZL3, UPaQL, WPaQL, SPaQL, LQL,
                     ModalB };

Dialect dialect_from(const std::string& name);
std::string to_string(Dialect d);

enum class NodeKind {
    Literal,
    Not,      // ortho/fuzzy negation
    INot,     // intuitionistic negation
    And,
    Or,       // defined: -(-a & -b)
    Aut,      // partial exclusive disjunction
    DefAnd,   // defined over Aut: -(-a + -b)
    EtDot,    // defined: (a + -b) .defand. b
    VelDot,   // defined: -(-a .&. -b)
    Arrow,    // polynomial conditionals, index 1..5
    Strict,
    Entail,
    Box,      // modal necessity; with INot present, L = ~-
    Diamond,
    LOp,      // defined: ~-a
    MOp,      // defined: -L-a
    CNot,     // classical negation (modal target language)
    CAnd,     // classical conjunction (modal target language)
};

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

struct Formula {
    NodeKind kind;
    std::string literal;  // Literal only
    int arrow_index = 0;  // Arrow only
    FormulaPtr left, right;

    static FormulaPtr lit(const std::string& name);
    static FormulaPtr mk(NodeKind k, FormulaPtr a, FormulaPtr b = nullptr);
    static FormulaPtr arrow(int i, FormulaPtr a, FormulaPtr b);
};

bool equal(const FormulaPtr& a, const FormulaPtr& b);

// Parses the concrete syntax: `-` not, `~` inot, `&` and, `|` or, `+` aut,
// `.&.`/`.|.` et/vel, `->1`..`->5`, `-o` strict, `=>>` entail, `[]`/`<>`
// box/diamond, `L`/`M` prefixes, `!`/`^` classical not/and. The dialect
// restricts which nodes are admissible.
FormulaPtr parse_formula(Dialect d, const std::string& text);

std::string print_formula(const FormulaPtr& f);

// Rewrites every defined connective to the primitive fragment: Or, DefAnd,
// EtDot, VelDot, L, M and Arrow are expanded; Strict/Entail/Box/Diamond and
// the classical nodes stay (they are Kripkean/modal-only primitives).
FormulaPtr expand(const FormulaPtr& f);

std::vector<std::string> literals_of(const FormulaPtr& f);

}  // namespace ql
