#include "ql/kripke.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace ql {

std::string to_string(FrameFlavor f) {
    switch (f) {
        case FrameFlavor::OL: return "ol";
        case FrameFlavor::PQL: return "pql";
        case FrameFlavor::BZ: return "bz";
    }
    return "?";
}

int OrthoFrame::world(const std::string& name) const {
    for (int i = 0; i < size(); ++i)
        if (worlds[i] == name) return i;
    throw Error("unknown world " + name);
}

std::optional<std::string> OrthoFrame::validate() const {
    int n = size();
    if (n == 0) return "frame has no worlds";
    if (n > 64) return "frame exceeds 64 worlds";
    auto symmetric = [&](const std::vector<uint64_t>& r) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (((r[i] >> j) & 1u) != ((r[j] >> i) & 1u)) return false;
        return true;
    };
    auto reflexive = [&](const std::vector<uint64_t>& r) {
        for (int i = 0; i < n; ++i)
            if (!((r[i] >> i) & 1u)) return false;
        return true;
    };
    if (!symmetric(acc)) return "accessibility is not symmetric";
    switch (flavor) {
        case FrameFlavor::OL:
            if (!reflexive(acc)) return "accessibility is not reflexive";
            break;
        case FrameFlavor::PQL:
            break;
        case FrameFlavor::BZ: {
            if (bzacc.size() != acc.size())
                return "bz flavor needs the second relation";
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    if (!((acc[i] >> i) & 1u) && !((acc[j] >> j) & 1u) &&
                        ((acc[i] >> j) & 1u))
                        return "fuzzy relation is not regular at " + worlds[i] +
                               "," + worlds[j];
            for (int i = 0; i < n; ++i)
                if (acc[i] == 0)
                    return "world " + worlds[i] + " is fuzzy-isolated";
            if (!symmetric(bzacc) || !reflexive(bzacc))
                return "intuitionistic relation is not an orthoframe";
            for (int i = 0; i < n; ++i)
                if (acc[i] & ~bzacc[i])
                    return "fuzzy accessibility exceeds intuitionistic at " +
                           worlds[i];
            for (int i = 0; i < n; ++i) {
                bool twin = false;
                for (int j = 0; j < n && !twin; ++j)
                    if (bzacc[j] == bzacc[i] && !(bzacc[i] & ~acc[j]))
                        twin = true;
                if (!twin) return "world " + worlds[i] + " has no twin";
            }
            break;
        }
    }
    return std::nullopt;
}

uint64_t OrthoFrame::ortho(uint64_t X) const {
    uint64_t out = 0;
    for (int i = 0; i < size(); ++i)
        if (!(acc[i] & X)) out |= uint64_t{1} << i;
    return out;
}

uint64_t OrthoFrame::bz_ortho(uint64_t X) const {
    if (bzacc.empty()) throw Error("frame has no intuitionistic relation");
    uint64_t out = 0;
    for (int i = 0; i < size(); ++i)
        if (!(bzacc[i] & X)) out |= uint64_t{1} << i;
    return out;
}

bool OrthoFrame::is_proposition(uint64_t X) const {
    return ortho(ortho(X)) == X;
}

std::vector<uint64_t> OrthoFrame::all_propositions() const {
    std::vector<uint64_t> singles;
    for (int i = 0; i < size(); ++i) singles.push_back(ortho(uint64_t{1} << i));
    std::set<uint64_t> props = {all()};
    std::vector<uint64_t> work = {all()};
    while (!work.empty()) {
        uint64_t p = work.back();
        work.pop_back();
        for (uint64_t s : singles) {
            uint64_t q = p & s;
            if (props.insert(q).second) work.push_back(q);
        }
    }
    return {props.begin(), props.end()};
}

uint64_t OrthoFrame::strict_op(uint64_t X, uint64_t Y) const {
    uint64_t out = 0;
    for (int i = 0; i < size(); ++i)
        if (!(acc[i] & X & ~Y)) out |= uint64_t{1} << i;
    return out;
}

uint64_t OrthoFrame::box(uint64_t X) const {
    uint64_t out = 0;
    for (int i = 0; i < size(); ++i)
        if (!(acc[i] & ~X)) out |= uint64_t{1} << i;
    return out;
}

bool KripkeRealization::pi_has(uint64_t X) const {
    return std::binary_search(pi.begin(), pi.end(), X);
}

std::optional<std::string> KripkeRealization::validate() const {
    if (auto err = frame.validate()) return err;
    if (pi.empty()) return "empty proposition family";
    if (!std::is_sorted(pi.begin(), pi.end()))
        return "proposition family is not in canonical order";
    for (uint64_t X : pi)
        if (!frame.is_proposition(X)) return "a listed set is not a proposition";
    if (!pi_has(frame.all())) return "proposition family misses the full set";
    for (uint64_t X : pi) {
        if (!pi_has(frame.ortho(X)))
            return "proposition family not closed under orthocomplement";
        if (frame.flavor == FrameFlavor::BZ && !pi_has(frame.bz_ortho(X)))
            return "proposition family not closed under the second complement";
        for (uint64_t Y : pi)
            if (!pi_has(X & Y))
                return "proposition family not closed under intersection";
    }
    for (const auto& [lit, X] : rho)
        if (!pi_has(X)) return "rho(" + lit + ") is not a listed proposition";
    return std::nullopt;
}

uint64_t extension(const KripkeRealization& k, const FormulaPtr& formula) {
    const OrthoFrame& fr = k.frame;
    std::function<uint64_t(const FormulaPtr&)> go =
        [&](const FormulaPtr& f) -> uint64_t {
        using K = NodeKind;
        switch (f->kind) {
            case K::Literal: {
                auto it = k.rho.find(f->literal);
                if (it == k.rho.end())
                    throw Error("no proposition assigned to " + f->literal);
                return it->second;
            }
            case K::Not: return fr.ortho(go(f->left));
            case K::INot: {
                if (fr.flavor != FrameFlavor::BZ)
                    throw Error("second negation needs a bz frame");
                return fr.bz_ortho(go(f->left));
            }
            case K::And: return go(f->left) & go(f->right);
            case K::Strict: {
                for (uint64_t X : k.pi)
                    for (uint64_t Y : k.pi)
                        if (!k.pi_has(fr.strict_op(X, Y)))
                            throw Error(
                                "propositions not closed under strict "
                                "implication");
                return fr.strict_op(go(f->left), go(f->right));
            }
            case K::Entail: {
                uint64_t X = go(f->left), Y = go(f->right);
                return (X & ~Y) ? 0 : fr.all();
            }
            default:
                throw Error("connective has no Kripkean clause: " +
                            print_formula(f));
        }
    };
    return go(expand(formula));
}

bool holds(const KripkeRealization& k, int world, const FormulaPtr& f) {
    return (extension(k, f) >> world) & 1u;
}

bool holds_reformulated(const KripkeRealization& k, int world,
                        const FormulaPtr& f) {
    uint64_t ext = extension(k, f);
    const OrthoFrame& fr = k.frame;
    uint64_t ji = fr.acc[world];
    for (int j = 0; j < fr.size(); ++j) {
        if (!((ji >> j) & 1u)) continue;
        if (!(fr.acc[j] & ext)) return false;
    }
    return true;
}

KripkeRealization from_algebra(const Structure& st, const Assignment& v) {
    if (!st.is_lattice()) throw Error("canonical frame needs a lattice");
    KripkeRealization k;
    std::vector<int> worlds;
    for (int a = 0; a < st.size(); ++a)
        if (a != st.zero()) {
            worlds.push_back(a);
            k.frame.worlds.push_back(st.name(a));
        }
    int n = static_cast<int>(worlds.size());
    auto world_mask = [&](uint64_t element_mask) {
        uint64_t out = 0;
        for (int i = 0; i < n; ++i)
            if ((element_mask >> worlds[i]) & 1u) out |= uint64_t{1} << i;
        return out;
    };
    k.frame.acc.assign(n, 0);
    bool reflexive = true;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (!st.leq(worlds[i], st.inv(worlds[j])))
                k.frame.acc[i] |= uint64_t{1} << j;
            else if (i == j)
                reflexive = false;
        }
    if (st.has_bz()) {
        k.frame.flavor = FrameFlavor::BZ;
        k.frame.bzacc.assign(n, 0);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (!st.leq(worlds[i], st.bz_inv(worlds[j])))
                    k.frame.bzacc[i] |= uint64_t{1} << j;
    } else {
        k.frame.flavor = reflexive ? FrameFlavor::OL : FrameFlavor::PQL;
    }
    std::set<uint64_t> props;
    for (int a = 0; a < st.size(); ++a) props.insert(world_mask(st.down_mask(a)));
    k.pi.assign(props.begin(), props.end());
    for (const auto& [lit, a] : v) k.rho[lit] = world_mask(st.down_mask(a));
    return k;
}

AlgebraicRealization to_algebra(const KripkeRealization& k) {
    AlgebraicRealization out;
    out.element_sets = k.pi;
    int n = static_cast<int>(k.pi.size());
    std::vector<std::string> names(n);
    uint64_t bottom = k.frame.all();
    for (uint64_t X : k.pi) bottom &= X;
    int zero = -1, one = -1;
    for (int i = 0; i < n; ++i) {
        uint64_t X = k.pi[i];
        if (X == bottom) zero = i;
        if (X == k.frame.all()) one = i;
        std::string nm = "{";
        bool first = true;
        for (int w = 0; w < k.frame.size(); ++w)
            if ((X >> w) & 1u) {
                if (!first) nm += ",";
                nm += k.frame.worlds[w];
                first = false;
            }
        names[i] = nm + "}";
    }
    std::vector<std::pair<int, int>> le;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && !(k.pi[i] & ~k.pi[j])) le.emplace_back(i, j);
    auto index_of = [&](uint64_t X) {
        auto it = std::lower_bound(k.pi.begin(), k.pi.end(), X);
        if (it == k.pi.end() || *it != X)
            throw Error("propositions not closed under a complement");
        return static_cast<int>(it - k.pi.begin());
    };
    std::vector<int> inv(n), bz;
    for (int i = 0; i < n; ++i) inv[i] = index_of(k.frame.ortho(k.pi[i]));
    if (k.frame.flavor == FrameFlavor::BZ) {
        bz.resize(n);
        for (int i = 0; i < n; ++i)
            bz[i] = index_of(k.frame.bz_ortho(k.pi[i]));
    }
    out.st = Structure(names, le, inv, bz, zero, one);
    for (const auto& [lit, X] : k.rho) out.v[lit] = index_of(X);
    return out;
}

bool frame_regular(const OrthoFrame& fr) {
    int n = fr.size();
    for (int i = 0; i < n; ++i) {
        if ((fr.acc[i] >> i) & 1u) continue;
        for (int j = 0; j < n; ++j) {
            if ((fr.acc[j] >> j) & 1u) continue;
            if ((fr.acc[i] >> j) & 1u) return false;
        }
    }
    return true;
}

bool is_orthomodular_realization(const KripkeRealization& k) {
    for (uint64_t X : k.pi)
        for (uint64_t Y : k.pi)
            if ((X & ~Y) && !(X & k.frame.ortho(X & Y))) return false;
    return true;
}

bool is_algebraically_adequate(const KripkeRealization& k) {
    // Condition (iii) of the adequacy theorem forces phi(i) to be the least
    // proposition containing i, so the bijection is checked directly.
    int n = k.frame.size();
    std::vector<uint64_t> phi(n);
    std::set<uint64_t> image;
    for (int i = 0; i < n; ++i) {
        uint64_t m = k.frame.all();
        for (uint64_t X : k.pi)
            if ((X >> i) & 1u) m &= X;
        if (!k.pi_has(m) || !((m >> i) & 1u)) return false;
        phi[i] = m;
        if (!image.insert(m).second) return false;
        for (uint64_t X : k.pi) {
            bool member = (X >> i) & 1u;
            bool below = !(m & ~X);
            if (member != below) return false;
        }
    }
    std::set<uint64_t> target(k.pi.begin(), k.pi.end());
    target.erase(uint64_t{0});
    if (image != target) return false;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            bool rij = (k.frame.acc[i] >> j) & 1u;
            bool cross = phi[i] & ~k.frame.ortho(phi[j]);
            if (rij != cross) return false;
        }
    return true;
}

bool stalnaker_check(const Structure& st, const Assignment& v,
                     const FormulaPtr& alpha, const FormulaPtr& beta) {
    int va = evaluate(st, v, alpha);
    int vb = evaluate(st, v, beta);
    int varr = evaluate(st, v, Formula::arrow(1, alpha, beta));
    for (int i = 0; i < st.size(); ++i) {
        if (i == st.zero()) continue;
        bool lhs = st.leq(i, varr);
        bool impossible = st.leq(i, st.inv(va));
        bool rhs;
        if (impossible) {
            rhs = true;
        } else {
            int f = st.sasaki(i, va);
            rhs = f != st.zero() && st.leq(f, vb);
        }
        if (lhs != rhs) return false;
    }
    return true;
}

KripkeRealization load_frame(const std::string& text) {
    KripkeRealization k;
    std::vector<std::pair<std::string, std::string>> acc_pairs, bz_pairs;
    std::map<std::string, std::vector<std::string>> props;
    std::vector<std::string> prop_order;
    std::vector<std::pair<std::string, std::string>> rho_lines;
    std::optional<std::string> flavor_line;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        std::string key;
        if (!(ls >> key)) continue;
        if (key == "worlds:") {
            std::string w;
            while (ls >> w) k.frame.worlds.push_back(w);
        } else if (key == "flavor:") {
            std::string f;
            ls >> f;
            flavor_line = f;
        } else if (key == "acc:" || key == "bzacc:") {
            std::string a, b;
            if (!(ls >> a >> b)) throw Error("malformed " + key + " line");
            (key == "acc:" ? acc_pairs : bz_pairs).emplace_back(a, b);
        } else if (key == "prop:") {
            std::string name, eq, w;
            if (!(ls >> name >> eq) || eq != "=")
                throw Error("malformed prop: line");
            prop_order.push_back(name);
            auto& ws = props[name];
            while (ls >> w) ws.push_back(w);
        } else if (key == "rho:") {
            std::string lit, eq, name;
            if (!(ls >> lit >> eq >> name) || eq != "=")
                throw Error("malformed rho: line");
            rho_lines.emplace_back(lit, name);
        } else {
            throw Error("unknown frame line " + key);
        }
    }
    int n = k.frame.size();
    if (n == 0) throw Error("frame file has no worlds: line");
    if (n > 64) throw Error("frame exceeds 64 worlds");
    std::set<std::string> seen(k.frame.worlds.begin(), k.frame.worlds.end());
    if (static_cast<int>(seen.size()) != n)
        throw Error("duplicate world names");
    k.frame.acc.assign(n, 0);
    for (auto& [a, b] : acc_pairs) {
        int i = k.frame.world(a), j = k.frame.world(b);
        k.frame.acc[i] |= uint64_t{1} << j;
        k.frame.acc[j] |= uint64_t{1} << i;
    }
    bool has_bz = !bz_pairs.empty();
    if (has_bz) {
        k.frame.bzacc.assign(n, 0);
        for (auto& [a, b] : bz_pairs) {
            int i = k.frame.world(a), j = k.frame.world(b);
            k.frame.bzacc[i] |= uint64_t{1} << j;
            k.frame.bzacc[j] |= uint64_t{1} << i;
        }
    }
    bool reflexive = true;
    for (int i = 0; i < n; ++i)
        if (!((k.frame.acc[i] >> i) & 1u)) reflexive = false;
    if (flavor_line) {
        if (*flavor_line == "ol") k.frame.flavor = FrameFlavor::OL;
        else if (*flavor_line == "pql") k.frame.flavor = FrameFlavor::PQL;
        else if (*flavor_line == "bz") k.frame.flavor = FrameFlavor::BZ;
        else throw Error("unknown flavor " + *flavor_line);
    } else {
        k.frame.flavor = has_bz ? FrameFlavor::BZ
                         : reflexive ? FrameFlavor::OL : FrameFlavor::PQL;
    }
    std::map<std::string, uint64_t> prop_masks;
    if (props.empty()) {
        k.pi = k.frame.all_propositions();
    } else {
        std::set<uint64_t> members;
        for (const auto& name : prop_order) {
            uint64_t X = 0;
            for (const auto& w : props[name])
                X |= uint64_t{1} << k.frame.world(w);
            prop_masks[name] = X;
            members.insert(X);
        }
        k.pi.assign(members.begin(), members.end());
    }
    for (auto& [lit, name] : rho_lines) {
        auto it = prop_masks.find(name);
        if (it == prop_masks.end())
            throw Error("rho refers to unknown proposition " + name);
        k.rho[lit] = it->second;
    }
    return k;
}

std::string save_frame(const KripkeRealization& k) {
    std::ostringstream out;
    out << "worlds:";
    for (const auto& w : k.frame.worlds) out << ' ' << w;
    out << "\nflavor: " << to_string(k.frame.flavor) << '\n';
    int n = k.frame.size();
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j)
            if ((k.frame.acc[i] >> j) & 1u)
                out << "acc: " << k.frame.worlds[i] << ' ' << k.frame.worlds[j]
                    << '\n';
    if (k.frame.flavor == FrameFlavor::BZ)
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j)
                if ((k.frame.bzacc[i] >> j) & 1u)
                    out << "bzacc: " << k.frame.worlds[i] << ' '
                        << k.frame.worlds[j] << '\n';
    std::map<uint64_t, std::string> names;
    for (size_t p = 0; p < k.pi.size(); ++p) {
        std::string nm = "P" + std::to_string(p);
        names[k.pi[p]] = nm;
        out << "prop: " << nm << " =";
        for (int w = 0; w < n; ++w)
            if ((k.pi[p] >> w) & 1u) out << ' ' << k.frame.worlds[w];
        out << '\n';
    }
    for (const auto& [lit, X] : k.rho)
        out << "rho: " << lit << " = " << names.at(X) << '\n';
    return out.str();
}

}  // namespace ql
