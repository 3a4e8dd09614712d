#include "ql/catalog.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace ql {

GreechieDiagram parse_greechie(const std::string& text) {
    GreechieDiagram d;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::vector<std::string> block;
        std::string w;
        while (ls >> w) block.push_back(w);
        if (block.empty()) continue;
        if (block.size() < 2)
            throw Error("line " + std::to_string(lineno) +
                        ": a block needs at least 2 atoms");
        std::set<std::string> uniq(block.begin(), block.end());
        if (uniq.size() != block.size())
            throw Error("line " + std::to_string(lineno) +
                        ": duplicate atom in one block");
        for (auto& prev : d.blocks) {
            int shared = 0;
            for (auto& a : block)
                if (std::find(prev.begin(), prev.end(), a) != prev.end())
                    ++shared;
            if (shared >= 2)
                throw Error("line " + std::to_string(lineno) +
                            ": two blocks share two or more atoms");
        }
        for (auto& a : block)
            if (std::find(d.atoms.begin(), d.atoms.end(), a) == d.atoms.end())
                d.atoms.push_back(a);
        d.blocks.push_back(block);
    }
    if (d.blocks.empty()) throw Error("diagram has no blocks");
    return d;
}

Structure paste_unchecked(const GreechieDiagram& d) {
    std::vector<std::string> names = {"0", "1"};
    for (auto& a : d.atoms) names.push_back(a);
    std::map<std::string, std::string> coatom;
    for (auto& a : d.atoms) {
        const std::vector<std::string>* two = nullptr;
        for (auto& blk : d.blocks)
            if (blk.size() == 2 &&
                std::find(blk.begin(), blk.end(), a) != blk.end())
                two = &blk;
        if (two) {
            coatom[a] = (*two)[0] == a ? (*two)[1] : (*two)[0];
        } else {
            coatom[a] = a + "'";
            names.push_back(coatom[a]);
        }
    }
    auto at = [&](const std::string& id) {
        for (size_t i = 0; i < names.size(); ++i)
            if (names[i] == id) return static_cast<int>(i);
        throw Error("pasting lost element " + id);
    };
    std::vector<std::pair<int, int>> le;
    for (auto& a : d.atoms) {
        le.emplace_back(0, at(a));
        le.emplace_back(at(coatom[a]), 1);
        for (auto& blk : d.blocks) {
            if (std::find(blk.begin(), blk.end(), a) == blk.end()) continue;
            for (auto& q : blk)
                if (q != a) le.emplace_back(at(q), at(coatom[a]));
        }
    }
    std::vector<int> inv(names.size(), -1);
    inv[0] = 1;
    inv[1] = 0;
    for (auto& a : d.atoms) {
        inv[at(a)] = at(coatom[a]);
        inv[at(coatom[a])] = at(a);
    }
    return Structure(names, le, inv, {}, 0, 1);
}

Structure paste(const GreechieDiagram& d) {
    Structure s = paste_unchecked(d);
    ValidationReport rep = s.validate();
    if (rep.kind != StructureClass::OrthomodularLattice) {
        std::string msg = "pasted diagram is not an orthomodular lattice (" +
                          to_string(rep.kind) + ")";
        for (auto& f : rep.failures) {
            msg += "; " + f.axiom + " at";
            for (auto& w : f.witness) msg += " " + w;
        }
        throw Error(msg);
    }
    return s;
}

namespace {

const char* kG12Diagram = "a b c\nc d e\n";
const char* kB30Diagram =
    "a o n\n"
    "n c i\n"
    "i h g\n"
    "g f e\n"
    "e b s\n"
    "b m l\n"
    "l k c\n"
    "s r a\n";

Structure make_g14() {
    Structure g12 = paste(parse_greechie(kG12Diagram));
    std::vector<std::string> names;
    for (int i = 0; i < g12.size(); ++i) names.push_back(g12.name(i));
    names.push_back("f");
    names.push_back("f'");
    int nf = g12.size(), nfp = g12.size() + 1;
    std::vector<std::pair<int, int>> le;
    for (int a = 0; a < g12.size(); ++a)
        for (int b = 0; b < g12.size(); ++b)
            if (a != b && g12.leq(a, b)) le.emplace_back(a, b);
    for (int a : g12.atoms()) {
        le.emplace_back(nf, a);
        le.emplace_back(g12.inv(a), nfp);
    }
    le.emplace_back(g12.zero(), nf);
    le.emplace_back(nfp, g12.one());
    le.emplace_back(nf, nfp);
    std::vector<int> inv;
    for (int a = 0; a < g12.size(); ++a) inv.push_back(g12.inv(a));
    inv.push_back(nfp);
    inv.push_back(nf);
    return Structure(names, le, inv, {}, g12.zero(), g12.one());
}

Structure make_o6() {
    std::vector<std::string> names = {"0", "a", "b", "b'", "a'", "1"};
    std::vector<std::pair<int, int>> le = {{1, 2}, {3, 4}};
    for (int i = 1; i < 5; ++i) {
        le.emplace_back(0, i);
        le.emplace_back(i, 5);
    }
    le.emplace_back(0, 5);
    std::vector<int> inv = {5, 4, 3, 2, 1, 0};
    return Structure(names, le, inv, {}, 0, 5);
}

Structure make_mo(int n) {
    if (n < 1 || n > 12) throw Error("MO(n) supports 1 <= n <= 12");
    const std::string letters = "abcdefghijkl";
    std::vector<std::string> names = {"0"};
    for (int i = 0; i < n; ++i) names.push_back(std::string(1, letters[i]));
    for (int i = 0; i < n; ++i)
        names.push_back(std::string(1, letters[i]) + "'");
    names.push_back("1");
    int top = 2 * n + 1;
    std::vector<std::pair<int, int>> le;
    for (int i = 1; i < top; ++i) {
        le.emplace_back(0, i);
        le.emplace_back(i, top);
    }
    le.emplace_back(0, top);
    std::vector<int> inv(names.size());
    inv[0] = top;
    inv[top] = 0;
    for (int i = 1; i <= n; ++i) {
        inv[i] = i + n;
        inv[i + n] = i;
    }
    return Structure(names, le, inv, {}, 0, top);
}

Structure make_bool(int n) {
    if (n < 0 || n > 6) throw Error("BOOL(n) supports 0 <= n <= 6");
    int total = 1 << n;
    auto nm = [&](int mask) -> std::string {
        if (mask == 0) return "0";
        if (mask == total - 1 && n > 0) return "1";
        std::string s;
        for (int i = 0; i < n; ++i)
            if ((mask >> i) & 1) s += "p" + std::to_string(i + 1);
        return s;
    };
    std::vector<std::string> names;
    for (int m = 0; m < total; ++m) names.push_back(nm(m));
    if (n == 0) names = {"0"};
    std::vector<std::pair<int, int>> le;
    for (int x = 0; x < total; ++x)
        for (int y = 0; y < total; ++y)
            if (x != y && (x & y) == x) le.emplace_back(x, y);
    std::vector<int> inv;
    for (int x = 0; x < total; ++x) inv.push_back((total - 1) & ~x);
    if (n == 0)
        return Structure({"0"}, {}, {0}, {}, 0, 0);
    return Structure(names, le, inv, {}, 0, total - 1);
}

Structure make_k5() {
    std::vector<std::string> names = {"0", "1/4", "1/2", "3/4", "1"};
    std::vector<std::pair<int, int>> le;
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j) le.emplace_back(i, j);
    std::vector<int> inv = {4, 3, 2, 1, 0};
    std::vector<int> bz = {4, 0, 0, 0, 0};
    return Structure(names, le, inv, bz, 0, 4);
}

Structure make_p9() {
    // Order frozen from positive-semidefiniteness of the effect-matrix
    // differences; cover pairs listed, transitive closure at load.
    std::vector<std::string> names = {"0", "E", "F", "F'", "G",
                                      "G'", "M", "M'", "1"};
    auto at = [&](const char* id) {
        for (size_t i = 0; i < names.size(); ++i)
            if (names[i] == id) return static_cast<int>(i);
        return -1;
    };
    const std::pair<const char*, const char*> covers[] = {
        {"0", "F'"}, {"0", "G"}, {"0", "M"},  {"E", "G'"}, {"E", "M'"},
        {"F", "1"},  {"F'", "G'"}, {"F'", "M'"}, {"G", "E"}, {"G", "F"},
        {"G'", "1"}, {"M", "E"}, {"M", "F"},  {"M'", "1"}};
    std::vector<std::pair<int, int>> le;
    for (auto& [x, y] : covers) le.emplace_back(at(x), at(y));
    std::vector<int> inv(names.size());
    inv[at("0")] = at("1");
    inv[at("1")] = at("0");
    inv[at("E")] = at("E");
    inv[at("F")] = at("F'");
    inv[at("F'")] = at("F");
    inv[at("G")] = at("G'");
    inv[at("G'")] = at("G");
    inv[at("M")] = at("M'");
    inv[at("M'")] = at("M");
    return Structure(names, le, inv, {}, at("0"), at("1"));
}

Structure make_sharp_scalar(int n) {
    Structure b = make_bool(n);
    std::vector<std::string> names;
    for (int i = 0; i < b.size(); ++i) names.push_back(b.name(i));
    int s1 = b.size(), s2 = b.size() + 1, s3 = b.size() + 2;
    names.push_back("s1");
    names.push_back("s2");
    names.push_back("s3");
    std::vector<std::pair<int, int>> le;
    for (int x = 0; x < b.size(); ++x)
        for (int y = 0; y < b.size(); ++y)
            if (x != y && b.leq(x, y)) le.emplace_back(x, y);
    for (int s : {s1, s2, s3}) {
        le.emplace_back(b.zero(), s);
        le.emplace_back(s, b.one());
    }
    le.emplace_back(s1, s2);
    le.emplace_back(s2, s3);
    std::vector<int> inv;
    for (int x = 0; x < b.size(); ++x) inv.push_back(b.inv(x));
    inv.push_back(s3);
    inv.push_back(s2);
    inv.push_back(s1);
    return Structure(names, le, inv, {}, b.zero(), b.one());
}

Structure make_nreg6() {
    std::vector<std::string> names = {"0", "a", "a'", "b'", "b", "1"};
    std::vector<std::pair<int, int>> le = {{1, 2}, {3, 4}};
    for (int i = 1; i < 5; ++i) {
        le.emplace_back(0, i);
        le.emplace_back(i, 5);
    }
    le.emplace_back(0, 5);
    std::vector<int> inv = {5, 2, 1, 4, 3, 0};
    return Structure(names, le, inv, {}, 0, 5);
}

Structure make_npos6() {
    std::vector<std::string> names = {"0", "p", "q", "p'", "q'", "1"};
    std::vector<std::pair<int, int>> le = {{1, 3}, {1, 4}, {2, 3}, {2, 4}};
    for (int i = 1; i < 5; ++i) {
        le.emplace_back(0, i);
        le.emplace_back(i, 5);
    }
    le.emplace_back(0, 5);
    std::vector<int> inv = {5, 3, 4, 1, 2, 0};
    std::vector<int> bz = {5, 0, 0, 0, 0, 0};
    return Structure(names, le, inv, bz, 0, 5);
}

int parse_param(const std::string& name, const std::string& prefix) {
    if (name.size() <= prefix.size() + 1 ||
        name.compare(0, prefix.size(), prefix) != 0 ||
        name[prefix.size()] != '(' || name.back() != ')')
        return -1;
    try {
        return std::stoi(
            name.substr(prefix.size() + 1, name.size() - prefix.size() - 2));
    } catch (...) {
        return -1;
    }
}

}  // namespace

std::string catalog_diagram(const std::string& name) {
    if (name == "G12") return kG12Diagram;
    if (name == "B30") return kB30Diagram;
    throw Error("no catalog diagram named " + name);
}

Structure catalog_structure(const std::string& name) {
    if (name == "G12") return paste(parse_greechie(kG12Diagram));
    if (name == "B30") return paste(parse_greechie(kB30Diagram));
    if (name == "G14") return make_g14();
    if (name == "O6") return make_o6();
    if (name == "MO2") return make_mo(2);
    if (name == "K5") return make_k5();
    if (name == "P9") return make_p9();
    if (name == "NREG6") return make_nreg6();
    if (name == "NPOS6") return make_npos6();
    int n;
    if ((n = parse_param(name, "MO")) > 0) return make_mo(n);
    if ((n = parse_param(name, "BOOL")) >= 0) return make_bool(n);
    if ((n = parse_param(name, "SHARP+SCALAR")) > 0)
        return make_sharp_scalar(n);
    throw Error("unknown catalog structure: " + name);
}

std::vector<std::string> catalog_structure_names() {
    return {"G12",     "B30",     "G14",     "O6",      "MO2",
            "MO(3)",   "BOOL(1)", "BOOL(2)", "BOOL(3)", "K5",
            "P9",      "SHARP+SCALAR(2)",    "NREG6",   "NPOS6"};
}

}  // namespace ql
