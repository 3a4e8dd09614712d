#include "ql/structure.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace ql {

std::string to_string(StructureClass k) {
    switch (k) {
        case StructureClass::Invalid: return "invalid";
        case StructureClass::InvolutivePoset: return "involutive-poset";
        case StructureClass::InvolutiveLattice: return "involutive-lattice";
        case StructureClass::RegularInvolutiveLattice:
            return "regular-involutive-lattice";
        case StructureClass::Ortholattice: return "ortholattice";
        case StructureClass::OrthomodularLattice: return "orthomodular-lattice";
        case StructureClass::BzPoset: return "bz-poset";
        case StructureClass::BzLattice: return "bz-lattice";
        case StructureClass::Bz3Lattice: return "bz3-lattice";
    }
    return "invalid";
}

Structure::Structure(std::vector<std::string> names,
                     const std::vector<std::pair<int, int>>& le_pairs,
                     std::vector<int> inv, std::vector<int> bz_inv,
                     int zero, int one)
    : n_(static_cast<int>(names.size())),
      names_(std::move(names)),
      inv_(std::move(inv)),
      bz_(std::move(bz_inv)),
      zero_(zero),
      one_(one) {
    if (n_ == 0) throw Error("structure has no elements");
    if (n_ > kMaxElements) throw Error("structure exceeds 64 elements");
    up_.assign(n_, 0);
    dn_.assign(n_, 0);
    for (int i = 0; i < n_; ++i) up_[i] |= 1ull << i;
    for (auto [x, y] : le_pairs) {
        if (x < 0 || x >= n_ || y < 0 || y >= n_)
            throw Error("le pair references unknown element");
        up_[x] |= 1ull << y;
    }
    close_and_index();
}

void Structure::close_and_index() {
    check_tables();
    bool changed = true;
    while (changed) {
        changed = false;
        for (int i = 0; i < n_; ++i) {
            uint64_t cur = up_[i];
            uint64_t next = cur;
            for (int j = 0; j < n_; ++j)
                if ((cur >> j) & 1u) next |= up_[j];
            if (next != cur) {
                up_[i] = next;
                changed = true;
            }
        }
    }
    for (int i = 0; i < n_; ++i) {
        dn_[i] = 0;
        for (int j = 0; j < n_; ++j)
            if (leq(j, i)) dn_[i] |= 1ull << j;
    }
    meet_.assign(static_cast<size_t>(n_) * n_, kUndefined);
    join_.assign(static_cast<size_t>(n_) * n_, kUndefined);
    for (int a = 0; a < n_; ++a) {
        for (int b = 0; b < n_; ++b) {
            uint64_t lb = dn_[a] & dn_[b];
            for (int g = 0; g < n_; ++g) {
                if (((lb >> g) & 1u) && (lb & ~dn_[g]) == 0) {
                    meet_[a * n_ + b] = g;
                    break;
                }
            }
            uint64_t ub = up_[a] & up_[b];
            for (int g = 0; g < n_; ++g) {
                if (((ub >> g) & 1u) && (ub & ~up_[g]) == 0) {
                    join_[a * n_ + b] = g;
                    break;
                }
            }
        }
    }
}

void Structure::check_tables() const {
    std::map<std::string, int> seen;
    for (int i = 0; i < n_; ++i) {
        if (names_[i].empty()) throw Error("empty element id");
        if (!seen.emplace(names_[i], i).second)
            throw Error("duplicate element id: " + names_[i]);
    }
    if (zero_ < 0 || zero_ >= n_ || one_ < 0 || one_ >= n_)
        throw Error("zero/one not among elements");
    if (static_cast<int>(inv_.size()) != n_)
        throw Error("inv table is not total");
    for (int v : inv_)
        if (v < 0 || v >= n_) throw Error("inv table references unknown element");
    if (!bz_.empty()) {
        if (static_cast<int>(bz_.size()) != n_)
            throw Error("bzinv table is not total");
        for (int v : bz_)
            if (v < 0 || v >= n_)
                throw Error("bzinv table references unknown element");
    }
}

int Structure::index(const std::string& name) const {
    int i = find(name);
    if (i < 0) throw Error("unknown element id: " + name);
    return i;
}

int Structure::find(const std::string& name) const {
    for (int i = 0; i < n_; ++i)
        if (names_[i] == name) return i;
    return -1;
}

int Structure::meet_mask(uint64_t xs) const {
    int acc = one_;
    for (int i = 0; i < n_ && acc != kUndefined; ++i)
        if ((xs >> i) & 1u) acc = meet(acc, i);
    return acc;
}

int Structure::join_mask(uint64_t xs) const {
    int acc = zero_;
    for (int i = 0; i < n_ && acc != kUndefined; ++i)
        if ((xs >> i) & 1u) acc = join(acc, i);
    return acc;
}

bool Structure::is_lattice() const {
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b)
            if (meet(a, b) == kUndefined || join(a, b) == kUndefined)
                return false;
    return true;
}

namespace {
std::vector<std::string> wit(const Structure& s, std::initializer_list<int> xs) {
    std::vector<std::string> out;
    for (int x : xs) out.push_back(s.name(x));
    return out;
}
}  // namespace

ValidationReport Structure::validate() const {
    ValidationReport rep;
    // Poset sanity: reflexivity is built in; antisymmetry and bounds are not.
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b)
            if (a != b && leq(a, b) && leq(b, a)) {
                rep.structural_error = "order is not antisymmetric at " +
                                       names_[a] + "," + names_[b];
                return rep;
            }
    for (int a = 0; a < n_; ++a)
        if (!leq(zero_, a) || !leq(a, one_)) {
            rep.structural_error = "bounds 0/1 do not bound element " + names_[a];
            return rep;
        }

    bool involutive = true;
    for (int a = 0; a < n_ && involutive; ++a) {
        if (inv_[inv_[a]] != a) {
            rep.failures.push_back({"inv-involution", wit(*this, {a})});
            involutive = false;
        }
    }
    for (int a = 0; a < n_ && involutive; ++a)
        for (int b = 0; b < n_; ++b)
            if (leq(a, b) && !leq(inv_[b], inv_[a])) {
                rep.failures.push_back({"inv-order-reversing", wit(*this, {a, b})});
                involutive = false;
                break;
            }
    if (!involutive) {
        rep.kind = StructureClass::Invalid;
        return rep;
    }

    rep.lattice = is_lattice();
    rep.kind = StructureClass::InvolutivePoset;

    auto regw = regularity_failure();
    bool regular = !regw.has_value();
    if (!regular)
        rep.failures.push_back({"regular", wit(*this, {(*regw)[0], (*regw)[1]})});

    bool ortho = true;
    for (int a = 0; a < n_; ++a)
        if (meet(a, inv_[a]) != zero_) {
            rep.failures.push_back({"non-contradiction", wit(*this, {a})});
            ortho = false;
            break;
        }

    bool bz_ok = has_bz();
    if (has_bz()) {
        for (int a = 0; a < n_ && bz_ok; ++a) {
            if (meet(a, bz_[a]) != zero_) {
                rep.failures.push_back({"bz-non-contradiction", wit(*this, {a})});
                bz_ok = false;
            } else if (!leq(a, bz_[bz_[a]])) {
                rep.failures.push_back({"bz-weak-double-negation", wit(*this, {a})});
                bz_ok = false;
            } else if (inv_[bz_[a]] != bz_[bz_[a]]) {
                rep.failures.push_back({"bz-interconnection", wit(*this, {a})});
                bz_ok = false;
            }
        }
        for (int a = 0; a < n_ && bz_ok; ++a)
            for (int b = 0; b < n_; ++b)
                if (leq(a, b) && !leq(bz_[b], bz_[a])) {
                    rep.failures.push_back(
                        {"bz-order-reversing", wit(*this, {a, b})});
                    bz_ok = false;
                    break;
                }
    }

    if (has_bz() && regular && bz_ok) {
        rep.kind = StructureClass::BzPoset;
        if (rep.lattice) {
            rep.kind = StructureClass::BzLattice;
            auto w1 = bz3_axiom_i_failure();
            auto w2 = bz3_axiom_ii_failure();
            if (w1)
                rep.failures.push_back(
                    {"bz3-strong-de-morgan", wit(*this, {(*w1)[0], (*w1)[1]})});
            if (w2)
                rep.failures.push_back({"bz3-interconnection-ineq",
                                        wit(*this, {(*w2)[0], (*w2)[1]})});
            if (!w1 && !w2) rep.kind = StructureClass::Bz3Lattice;
        }
        return rep;
    }

    if (!rep.lattice) return rep;
    rep.kind = StructureClass::InvolutiveLattice;
    if (!regular) return rep;
    rep.kind = StructureClass::RegularInvolutiveLattice;
    if (!ortho) return rep;
    rep.kind = StructureClass::Ortholattice;

    OmForms om = orthomodular_forms();
    auto note = [&](const char* nm, const OmForm& f) {
        if (f.status == OmForm::Fails)
            rep.failures.push_back({nm, f.witness});
    };
    note("orthomodular-I", om.omI);
    note("orthomodular-II", om.omII);
    note("orthomodular-III", om.omIII);
    note("orthomodular-IV", om.omIV);
    if (om.omI.status == OmForm::Holds && om.omII.status == OmForm::Holds &&
        om.omIII.status == OmForm::Holds && om.omIV.status == OmForm::Holds)
        rep.kind = StructureClass::OrthomodularLattice;
    return rep;
}

OmForms Structure::orthomodular_forms() const {
    OmForms r;
    // omI: a ⊑ b implies b = a ⊔ (a' ⊓ b)
    for (int a = 0; a < n_ && r.omI.status == OmForm::Holds; ++a)
        for (int b = 0; b < n_; ++b) {
            if (!leq(a, b)) continue;
            int m = meet(inv_[a], b);
            if (m == kUndefined) {
                r.omI = {OmForm::Inapplicable, wit(*this, {a, b})};
                break;
            }
            int j = join(a, m);
            if (j == kUndefined) {
                r.omI = {OmForm::Inapplicable, wit(*this, {a, b})};
                break;
            }
            if (j != b) {
                r.omI = {OmForm::Fails, wit(*this, {a, b})};
                break;
            }
        }
    // omII: a ⊑ b iff a ⊓ (a ⊓ b)' = 0
    for (int a = 0; a < n_ && r.omII.status == OmForm::Holds; ++a)
        for (int b = 0; b < n_; ++b) {
            int m = meet(a, b);
            if (m == kUndefined) {
                r.omII = {OmForm::Inapplicable, wit(*this, {a, b})};
                break;
            }
            int m2 = meet(a, inv_[m]);
            if (m2 == kUndefined) {
                r.omII = {OmForm::Inapplicable, wit(*this, {a, b})};
                break;
            }
            if (leq(a, b) != (m2 == zero_)) {
                r.omII = {OmForm::Fails, wit(*this, {a, b})};
                break;
            }
        }
    // omIII: a ⊑ b and a' ⊓ b = 0 imply a = b
    for (int a = 0; a < n_ && r.omIII.status == OmForm::Holds; ++a)
        for (int b = 0; b < n_; ++b) {
            if (!leq(a, b) || a == b) continue;
            int m = meet(inv_[a], b);
            if (m == kUndefined) {
                r.omIII = {OmForm::Inapplicable, wit(*this, {a, b})};
                break;
            }
            if (m == zero_) {
                r.omIII = {OmForm::Fails, wit(*this, {a, b})};
                break;
            }
        }
    // omIV: a ⊓ (a' ⊔ (a ⊓ b)) ⊑ b
    for (int a = 0; a < n_ && r.omIV.status == OmForm::Holds; ++a)
        for (int b = 0; b < n_; ++b) {
            int m = meet(a, b);
            int j = m == kUndefined ? kUndefined : join(inv_[a], m);
            int m2 = j == kUndefined ? kUndefined : meet(a, j);
            if (m2 == kUndefined) {
                r.omIV = {OmForm::Inapplicable, wit(*this, {a, b})};
                break;
            }
            if (!leq(m2, b)) {
                r.omIV = {OmForm::Fails, wit(*this, {a, b})};
                break;
            }
        }
    return r;
}

bool Structure::compatible(int a, int b) const {
    int m1 = meet(a, inv_[b]);
    int m2 = meet(a, b);
    if (m1 == kUndefined || m2 == kUndefined) return false;
    return join(m1, m2) == a;
}

uint64_t Structure::generated_subalgebra(uint64_t gens) const {
    uint64_t cur = gens | (1ull << zero_) | (1ull << one_);
    for (;;) {
        uint64_t next = cur;
        for (int a = 0; a < n_; ++a) {
            if (!((cur >> a) & 1u)) continue;
            next |= 1ull << inv_[a];
            for (int b = 0; b < n_; ++b) {
                if (!((cur >> b) & 1u)) continue;
                int m = meet(a, b), j = join(a, b);
                if (m == kUndefined || j == kUndefined)
                    throw Error("generated subalgebra needs a lattice");
                next |= 1ull << m;
                next |= 1ull << j;
            }
        }
        if (next == cur) return cur;
        cur = next;
    }
}

bool Structure::subset_is_boolean(uint64_t sub) const {
    for (int a = 0; a < n_; ++a) {
        if (!((sub >> a) & 1u)) continue;
        for (int b = 0; b < n_; ++b) {
            if (!((sub >> b) & 1u)) continue;
            for (int c = 0; c < n_; ++c) {
                if (!((sub >> c) & 1u)) continue;
                if (meet(a, join(b, c)) != join(meet(a, b), meet(a, c)))
                    return false;
            }
        }
    }
    return true;
}

int Structure::sasaki(int a, int b) const {
    int j = join(a, inv_[b]);
    return j == kUndefined ? kUndefined : meet(j, b);
}

int Structure::oal_rhs(int a, int b, int c) const {
    int e = sasaki(a, inv_[b]);
    int i = sasaki(a, inv_[c]);
    int t = meet(join(b, c), join(e, i));
    return join(b, meet(e, join(i, t)));
}

std::optional<std::array<int, 3>> Structure::check_oal() const {
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b)
            for (int c = 0; c < n_; ++c)
                if (!leq(a, oal_rhs(a, b, c)))
                    return std::array<int, 3>{a, b, c};
    return std::nullopt;
}

std::vector<int> Structure::atoms() const {
    std::vector<int> out;
    for (int a = 0; a < n_; ++a) {
        if (a == zero_) continue;
        uint64_t strictly_below = dn_[a] & ~(1ull << a);
        if (strictly_below == (1ull << zero_)) out.push_back(a);
    }
    return out;
}

bool Structure::is_atomic() const {
    uint64_t at = 0;
    for (int a : atoms()) at |= 1ull << a;
    for (int b = 0; b < n_; ++b) {
        if (b == zero_) continue;
        if ((dn_[b] & at) == 0) return false;
    }
    return true;
}

bool Structure::covers(int a, int b) const {
    if (a == b || !leq(a, b)) return false;
    uint64_t strictly_between = dn_[b] & up_[a] & ~(1ull << a) & ~(1ull << b);
    return strictly_between == 0;
}

std::optional<std::array<int, 2>> Structure::covering_failure() const {
    for (int a : atoms())
        for (int b = 0; b < n_; ++b) {
            if (meet(a, b) != zero_) continue;
            int j = join(a, b);
            if (j == kUndefined || !covers(b, j))
                return std::array<int, 2>{a, b};
        }
    return std::nullopt;
}

bool Structure::is_irreducible() const {
    for (int a = 0; a < n_; ++a) {
        if (a == zero_ || a == one_) continue;
        bool central = true;
        for (int b = 0; b < n_ && central; ++b)
            if (!compatible(a, b) || !compatible(b, a)) central = false;
        if (central) return false;
    }
    return true;
}

std::optional<std::array<int, 2>> Structure::regularity_failure() const {
    for (int a = 0; a < n_; ++a) {
        int m = meet(a, inv_[a]);
        if (m == kUndefined) continue;
        for (int b = 0; b < n_; ++b) {
            int j = join(b, inv_[b]);
            if (j == kUndefined) continue;
            if (!leq(m, j)) return std::array<int, 2>{a, b};
        }
    }
    return std::nullopt;
}

std::optional<std::array<int, 2>> Structure::bz3_axiom_i_failure() const {
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b) {
            int m = meet(a, b);
            if (m == kUndefined) continue;
            int rhs = join(bz_[a], bz_[b]);
            if (rhs == kUndefined || bz_[m] != rhs)
                return std::array<int, 2>{a, b};
        }
    return std::nullopt;
}

std::optional<std::array<int, 2>> Structure::bz3_axiom_ii_failure() const {
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b) {
            int lhs = meet(a, bz_[bz_[b]]);
            int rhs = join(bz_[inv_[a]], b);
            if (lhs == kUndefined || rhs == kUndefined || !leq(lhs, rhs))
                return std::array<int, 2>{a, b};
        }
    return std::nullopt;
}

bool Structure::same_as(const Structure& other) const {
    if (n_ != other.n_) return false;
    std::vector<int> map(n_, -1);
    for (int i = 0; i < n_; ++i) {
        int j = other.find(names_[i]);
        if (j < 0) return false;
        map[i] = j;
    }
    if (map[zero_] != other.zero_ || map[one_] != other.one_) return false;
    if (has_bz() != other.has_bz()) return false;
    for (int a = 0; a < n_; ++a) {
        if (map[inv_[a]] != other.inv_[map[a]]) return false;
        if (has_bz() && map[bz_[a]] != other.bz_[map[a]]) return false;
        for (int b = 0; b < n_; ++b)
            if (leq(a, b) != other.leq(map[a], map[b])) return false;
    }
    return true;
}

Structure Structure::load(const std::string& text) {
    std::vector<std::string> names;
    std::vector<std::pair<std::string, std::string>> le, inv, bz;
    std::string zero, one;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string key;
        if (!(ls >> key)) continue;
        auto two = [&](std::vector<std::pair<std::string, std::string>>& dst) {
            std::string x, y;
            if (!(ls >> x >> y))
                throw Error("line " + std::to_string(lineno) +
                            ": expected two element ids");
            dst.emplace_back(x, y);
        };
        if (key == "elements:") {
            std::string w;
            while (ls >> w) names.push_back(w);
        } else if (key == "le:") {
            two(le);
        } else if (key == "inv:") {
            two(inv);
        } else if (key == "bzinv:") {
            two(bz);
        } else if (key == "zero:") {
            ls >> zero;
        } else if (key == "one:") {
            ls >> one;
        } else {
            throw Error("line " + std::to_string(lineno) +
                        ": unknown key '" + key + "'");
        }
    }
    if (names.empty()) throw Error("structure file has no elements: line");
    auto at = [&](const std::string& id) {
        for (size_t i = 0; i < names.size(); ++i)
            if (names[i] == id) return static_cast<int>(i);
        throw Error("unknown element id: " + id);
    };
    std::vector<std::pair<int, int>> lep;
    for (auto& [x, y] : le) lep.emplace_back(at(x), at(y));
    std::vector<int> invt(names.size(), -1);
    for (auto& [x, y] : inv) invt[at(x)] = at(y);
    for (size_t i = 0; i < invt.size(); ++i)
        if (invt[i] < 0) throw Error("inv table missing element " + names[i]);
    std::vector<int> bzt;
    if (!bz.empty()) {
        bzt.assign(names.size(), -1);
        for (auto& [x, y] : bz) bzt[at(x)] = at(y);
        for (size_t i = 0; i < bzt.size(); ++i)
            if (bzt[i] < 0)
                throw Error("bzinv table missing element " + names[i]);
    }
    if (zero.empty() || one.empty()) throw Error("missing zero:/one: lines");
    return Structure(names, lep, invt, bzt, at(zero), at(one));
}

std::string Structure::save() const {
    std::ostringstream out;
    out << "elements:";
    for (auto& nm : names_) out << ' ' << nm;
    out << '\n';
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b)
            if (a != b && leq(a, b)) out << "le: " << names_[a] << ' '
                                         << names_[b] << '\n';
    for (int a = 0; a < n_; ++a)
        out << "inv: " << names_[a] << ' ' << names_[inv_[a]] << '\n';
    if (has_bz())
        for (int a = 0; a < n_; ++a)
            out << "bzinv: " << names_[a] << ' ' << names_[bz_[a]] << '\n';
    out << "zero: " << names_[zero_] << '\n';
    out << "one: " << names_[one_] << '\n';
    return out.str();
}

namespace {

// (down-set size, up-set size, whether self-inverse) per element, used to
// prune the bijection search.
uint64_t iso_rank(const Structure& s, int a) {
    uint64_t dn = 0, up = 0;
    for (int b = 0; b < s.size(); ++b) {
        if (s.leq(b, a)) ++dn;
        if (s.leq(a, b)) ++up;
    }
    return (dn << 20) | (up << 4) | (s.inv(a) == a ? 1 : 0) |
           (s.has_bz() && s.bz_inv(a) == a ? 2 : 0);
}

bool iso_extend(const Structure& A, const Structure& B, std::vector<int>& map,
                int next) {
    int n = A.size();
    if (next == n) return true;
    for (int cand = 0; cand < n; ++cand) {
        if (std::find(map.begin(), map.end(), cand) != map.end()) continue;
        if (iso_rank(A, next) != iso_rank(B, cand)) continue;
        bool ok = true;
        for (int prev = 0; prev < next && ok; ++prev) {
            if (A.leq(prev, next) != B.leq(map[prev], cand)) ok = false;
            if (A.leq(next, prev) != B.leq(cand, map[prev])) ok = false;
            if (A.inv(prev) == next && B.inv(map[prev]) != cand) ok = false;
            if (A.inv(next) == prev && B.inv(cand) != map[prev]) ok = false;
            if (A.has_bz()) {
                if (A.bz_inv(prev) == next && B.bz_inv(map[prev]) != cand)
                    ok = false;
                if (A.bz_inv(next) == prev && B.bz_inv(cand) != map[prev])
                    ok = false;
            }
        }
        if (A.inv(next) == next && B.inv(cand) != cand) ok = false;
        if (A.has_bz() && A.bz_inv(next) == next && B.bz_inv(cand) != cand)
            ok = false;
        if (!ok) continue;
        map.push_back(cand);
        if (iso_extend(A, B, map, next + 1)) return true;
        map.pop_back();
    }
    return false;
}

}  // namespace

bool isomorphic(const Structure& a, const Structure& b) {
    if (a.size() != b.size() || a.has_bz() != b.has_bz()) return false;
    std::vector<int> map;
    map.reserve(a.size());
    return iso_extend(a, b, map, 0);
}

}  // namespace ql
