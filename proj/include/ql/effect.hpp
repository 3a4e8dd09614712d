#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ql/formula.hpp"

namespace ql {

// Partial-sum algebra; definedness is presence in the table.
struct PartialTable {
    std::vector<std::string> elements;
    std::map<std::pair<int, int>, int> psum;
    int zero = -1, one = -1;

    int size() const { return static_cast<int>(elements.size()); }
    const std::string& name(int a) const { return elements.at(a); }
    int index(const std::string& id) const;
    bool defined(int a, int b) const;
    int sum(int a, int b) const;  // throws when undefined
    int comp(int a) const;        // the unique x with a+x=1
    bool leq(int a, int b) const; // some c with a+c=b

    static PartialTable load(const std::string& text);
    std::string save() const;
};

struct EaReport {
    bool effect_algebra = false;
    bool orthoalgebra = false;
    bool orthomodular_poset = false;
    std::vector<std::string> failures;
};

EaReport validate_partial(const PartialTable& t);

// Total-sum algebra with a star involution.
struct QmvTable {
    std::vector<std::string> elements;
    std::vector<int> op;    // row-major total table
    std::vector<int> star_; // unary table
    int zero = -1, one = -1;

    int size() const { return static_cast<int>(elements.size()); }
    const std::string& name(int a) const { return elements.at(a); }
    int index(const std::string& id) const;
    int oplus(int a, int b) const { return op.at(a * size() + b); }
    int star(int a) const { return star_.at(a); }
    int odot(int a, int b) const { return star(oplus(star(a), star(b))); }
    int et(int a, int b) const { return odot(oplus(a, star(b)), b); }
    int vel(int a, int b) const { return oplus(odot(a, star(b)), b); }
    bool pre(int a, int b) const { return et(a, b) == a; }

    static QmvTable load(const std::string& text);
    std::string save() const;
};

struct QmvReport {
    bool qmv = false;
    bool mv = false;
    std::vector<std::string> failures;
};

QmvReport validate_qmv(const QmvTable& m);
bool weakly_linear(const QmvTable& m);
bool quasi_linear(const QmvTable& m);

bool table_equal(const QmvTable& a, const QmvTable& b);
bool table_equal(const PartialTable& a, const PartialTable& b);

// Totalization (undefined sums become 1) and its inverse restriction to
// pairs with a below the star of b; both directions carry their round-trip
// and order-compatibility assertions and throw on violation.
QmvTable to_qmv(const PartialTable& b);
PartialTable to_ea(const QmvTable& m);

struct Homomorphism {
    QmvTable source, target;
    std::vector<int> map;  // source element -> target element
};

bool validate_hom(const Homomorphism& h);

struct PaqlCountermodel {
    std::map<std::string, std::string> valuation;  // free slot -> element
    std::string bound;   // common lower bound separating the sequent
    size_t table = 0;    // index into the table list
};
using PaqlVerdict = std::optional<PaqlCountermodel>;

// Consequence over every admissible valuation of every listed table; the
// dialect fixes the required table class. A valuation maps each formula to
// an element: negations are forced, partial disjunctions are forced when the
// sum is defined and range over everything otherwise. The default treats
// syntactically equal formulas alike; the per-occurrence mode frees every
// undefined disjunction occurrence independently, as a diagnostic.
PaqlVerdict paql_consequence(const std::vector<PartialTable>& tables,
                             Dialect d,
                             const std::vector<FormulaPtr>& premises,
                             const FormulaPtr& conclusion,
                             bool per_occurrence = false);

using Sequent = std::pair<FormulaPtr, FormulaPtr>;

// Rule-level soundness: in every valuation where each premise sequent holds
// (left value below right value), the conclusion sequent must hold too.
PaqlVerdict paql_rule_sound(const PartialTable& table, Dialect d,
                            const std::vector<Sequent>& premises,
                            const Sequent& conclusion,
                            bool per_occurrence = false);

int lql_evaluate(const QmvTable& m, const std::map<std::string, int>& v,
                 const FormulaPtr& f);
PaqlVerdict lql_consequence(const QmvTable& m,
                            const std::vector<FormulaPtr>& premises,
                            const FormulaPtr& conclusion);

// Terms in variables a,b with constants 0,1 and operations +,* ; enumerated
// breadth-first to the depth bound, deduplicated by value table, rendered as
// strings like "(b+a*)".
std::vector<std::string> enumerate_terms(const QmvTable& m, int max_depth);

// First enumerated term t with t(a,b)=1 exactly when a is below b.
std::optional<std::string> conditional_search(const QmvTable& m,
                                              int max_depth);

// h(t(x,y)) = t(h(x),h(y)) for all x,y.
bool hom_transport_check(const Homomorphism& h, const std::string& term);

QmvTable catalog_qmv(const std::string& name);          // M3, M4
PartialTable catalog_partial(const std::string& name);  // K5EA, BOOL2EA
Homomorphism hom_m4_m3();

}  // namespace ql
