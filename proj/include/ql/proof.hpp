#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ql/effect.hpp"
#include "ql/formula.hpp"
#include "ql/semantics.hpp"

namespace ql {

enum class Calculus { OL, OQL, PQL, RPQL, BZL, BZL3, UPaQL, WPaQL, SPaQL };

Calculus calculus_from(const std::string& name);
std::string to_string(Calculus c);
Dialect dialect_of(Calculus c);

// Expansion to the primitive fragment plus one extra normal form: every
// second-complement node gets a doubly negated argument, so the defined
// necessity operator and the bare second complement meet in one shape.
FormulaPtr proof_normal(const FormulaPtr& f);

// Premises are kept sorted by printed form and deduplicated.
struct Config {
    std::vector<FormulaPtr> premises;
    FormulaPtr conclusion;
};

Config make_config(Calculus c, const std::vector<std::string>& premises,
                   const std::string& conclusion);
std::string print_config(const Config& cfg);

struct Step {
    Config config;
    std::string rule;
    std::vector<size_t> refs;  // zero-based indices of earlier steps
};

struct Derivation {
    Calculus calculus = Calculus::OL;
    std::vector<Step> steps;
};

// One step per line: `n: [f1; f2] |- g BY RULE(prem=i,j)`, refs one-based,
// preceded by a `calculus: NAME` header.
Derivation parse_derivation(const std::string& text);
std::string print_derivation(const Derivation& d);

struct CheckResult {
    bool accepted = false;
    size_t step = 0;        // first offending step when rejected
    std::string reason;
};

CheckResult check(const Derivation& d);

// Schema names available in a calculus, in canonical order.
std::vector<std::string> rule_names(Calculus c);

// Replaces every derived-rule step by its committed primitive sub-derivation
// and re-checks the result; throws when a macro is not available for the
// calculus or the step does not fit the macro's shape.
Derivation macro_expand(const Derivation& d);

// Bounded backward search; sound and deliberately incomplete. A returned
// derivation always passes check.
std::optional<Derivation> search(Calculus c, const Config& goal, int depth);

struct HarnessResult {
    bool ok = true;
    size_t step = 0;
    std::string model;   // structure name or table index
    std::string detail;  // witnessing assignment
};

// Re-runs every step as a semantic consequence claim over the structures of
// the calculus's class (or over every usable structure when the restriction
// is lifted). The derivation must already pass check. Single-formula calculi
// run over the partial tables instead.
HarnessResult soundness_harness(const Derivation& d,
                                const std::vector<NamedStructure>& structures,
                                const std::vector<PartialTable>& tables = {},
                                bool restrict_class = true);

}  // namespace ql
