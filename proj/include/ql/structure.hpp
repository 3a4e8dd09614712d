#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ql {

// Thrown for malformed input (bad files, unknown ids, size violations),
// as opposed to axiom failures, which are reported in validation results.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

enum class StructureClass {
    Invalid,
    InvolutivePoset,
    InvolutiveLattice,
    RegularInvolutiveLattice,
    Ortholattice,
    OrthomodularLattice,
    BzPoset,
    BzLattice,
    Bz3Lattice,
};

std::string to_string(StructureClass k);

struct AxiomFailure {
    std::string axiom;                  // e.g. "orthomodular", "regular"
    std::vector<std::string> witness;   // element names
};

struct ValidationReport {
    StructureClass kind = StructureClass::Invalid;
    std::vector<AxiomFailure> failures; // every failed axiom, with witness
    bool lattice = false;
    std::string structural_error;       // nonempty means malformed, not axioms
};

// One of the four orthomodularity formulations; status distinguishes holds,
// fails (with witness) and inapplicable (a required meet/join is undefined).
struct OmForm {
    enum Status { Holds, Fails, Inapplicable } status = Holds;
    std::vector<std::string> witness;
};

struct OmForms {
    OmForm omI, omII, omIII, omIV;
};

// A finite bounded poset with an order-reversing involution and an optional
// second (intuitionistic) complement. At most 64 elements; the order is kept
// as bitmasks per element.
class Structure {
  public:
    static constexpr int kMaxElements = 64;
    static constexpr int kUndefined = -1;

    Structure() = default;
    Structure(std::vector<std::string> names,
              const std::vector<std::pair<int, int>>& le_pairs,
              std::vector<int> inv, std::vector<int> bz_inv,
              int zero, int one);

    static Structure load(const std::string& text);
    std::string save() const;

    int size() const { return n_; }
    const std::string& name(int a) const { return names_.at(a); }
    int index(const std::string& name) const;  // throws on unknown id
    int find(const std::string& name) const;   // -1 on unknown id
    int zero() const { return zero_; }
    int one() const { return one_; }
    bool has_bz() const { return !bz_.empty(); }

    bool leq(int a, int b) const { return (up_[a] >> b) & 1u; }
    int inv(int a) const { return inv_[a]; }
    int bz_inv(int a) const { return bz_[a]; }
    uint64_t down_mask(int a) const { return dn_[a]; }
    uint64_t up_mask(int a) const { return up_[a]; }

    int meet(int a, int b) const { return meet_[a * n_ + b]; }
    int join(int a, int b) const { return join_[a * n_ + b]; }
    // Meet/join of an element subset given as a bitmask (one() / zero() for
    // the empty mask respectively).
    int meet_mask(uint64_t xs) const;
    int join_mask(uint64_t xs) const;

    bool is_lattice() const;
    ValidationReport validate() const;
    OmForms orthomodular_forms() const;

    bool compatible(int a, int b) const;
    uint64_t generated_subalgebra(uint64_t gens) const;  // requires lattice
    bool subset_is_boolean(uint64_t sub) const;
    int sasaki(int a, int b) const;  // (a ⊔ b') ⊓ b

    // Orthoarguesian law; returns a failing (a,b,c) or nullopt.
    std::optional<std::array<int, 3>> check_oal() const;
    int oal_rhs(int a, int b, int c) const;

    std::vector<int> atoms() const;
    bool is_atomic() const;
    bool covers(int a, int b) const;  // b covers a
    std::optional<std::array<int, 2>> covering_failure() const;
    bool is_irreducible() const;

    // First (a,b) with a⊓a' ⋢ b⊔b', or nullopt when regular.
    std::optional<std::array<int, 2>> regularity_failure() const;

    // Strong De Morgan for ~ and the interconnection inequality; each result
    // is a failing witness or nullopt.
    std::optional<std::array<int, 2>> bz3_axiom_i_failure() const;
    std::optional<std::array<int, 2>> bz3_axiom_ii_failure() const;

    bool same_as(const Structure& other) const;  // equal up to element order

  private:
    friend bool isomorphic(const Structure& a, const Structure& b);

    void close_and_index();
    void check_tables() const;

    int n_ = 0;
    std::vector<std::string> names_;
    std::vector<uint64_t> up_, dn_;
    std::vector<int> inv_, bz_;
    std::vector<int> meet_, join_;
    int zero_ = -1, one_ = -1;
};

// Order, involution and (when both carry one) second-complement preserving
// bijection search; names are ignored.
bool isomorphic(const Structure& a, const Structure& b);

}  // namespace ql
