#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ql/formula.hpp"
#include "ql/structure.hpp"

namespace ql {

struct NamedStructure {
    std::string name;
    Structure st;
};

using Assignment = std::map<std::string, int>;

// Evaluates an expanded formula under an assignment of literals to elements.
// Throws when a literal is unassigned, a node needs a table the structure
// lacks (bz_inv), or a meet is undefined (bare poset input); the error names
// the offending subformula.
int evaluate(const Structure& st, const Assignment& v, const FormulaPtr& f);

struct Countermodel {
    std::string structure;
    std::map<std::string, std::string> assignment;
};

// nullopt means the property holds over every listed structure; otherwise
// the first witness in the canonical order (structures ascending by size,
// assignments lexicographic over the sorted literal list).
using Verdict = std::optional<Countermodel>;

Verdict logical_truth(const std::vector<NamedStructure>& structs,
                      const FormulaPtr& formula);

// Finite-premise reduction: v(a1) meet ... meet v(an) below v(conclusion).
Verdict consequence(const std::vector<NamedStructure>& structs,
                    const std::vector<FormulaPtr>& premises,
                    const FormulaPtr& conclusion);

// Every model of the premises (all values 1) gives the conclusion value 1.
Verdict weak_consequence(const std::vector<NamedStructure>& structs,
                         const std::vector<FormulaPtr>& premises,
                         const FormulaPtr& conclusion);

// Some nonzero element lies below every v(beta) for beta in T.
bool quasi_model(const Structure& st, const Assignment& v,
                 const std::vector<FormulaPtr>& T);

// Witness realizations; presence of a value means T is realizable or
// verifiable respectively.
std::optional<Countermodel> find_quasi_model(
    const std::vector<NamedStructure>& structs,
    const std::vector<FormulaPtr>& T);
std::optional<Countermodel> find_model(
    const std::vector<NamedStructure>& structs,
    const std::vector<FormulaPtr>& T);

bool realizable(const std::vector<NamedStructure>& structs,
                const std::vector<FormulaPtr>& T);
bool verifiable(const std::vector<NamedStructure>& structs,
                const std::vector<FormulaPtr>& T);

// Every realization that quasi-models T also quasi-models {alpha}.
Verdict quasi_consequence(const std::vector<NamedStructure>& structs,
                          const std::vector<FormulaPtr>& T,
                          const FormulaPtr& alpha);

// First-order fragment over a complete finite lattice: predicates, constants,
// -, &, | and the two quantifiers (exists is the De Morgan dual).
struct FoTerm {
    bool is_var = true;
    std::string name;
};

struct FoFormula;
using FoPtr = std::shared_ptr<const FoFormula>;

struct FoFormula {
    enum Kind { Pred, Not, And, Or, Forall, Exists } kind;
    std::string head;          // predicate name or bound variable
    std::vector<FoTerm> args;  // Pred only
    FoPtr left, right;

    static FoPtr pred(std::string name, std::vector<FoTerm> args);
    static FoPtr mk(Kind k, std::string var, FoPtr a, FoPtr b = nullptr);
};

// Syntax: `P(x, c)`, `-f`, `f & g`, `f | g`, `all x f`, `ex x f`.
FoPtr parse_fo(const std::string& text);
std::string print_fo(const FoPtr& f);

struct FirstOrderModel {
    Structure st;  // must be a lattice (finite, hence complete)
    std::vector<std::string> domain;
    // predicate name -> (individual index tuple -> element index)
    std::map<std::string, std::map<std::vector<int>, int>> predicates;
    std::map<std::string, int> constants;  // name -> individual index
};

// sigma maps free variables to individual indices.
int fo_evaluate(const FirstOrderModel& m, const std::map<std::string, int>& sigma,
                const FoPtr& f);

}  // namespace ql
