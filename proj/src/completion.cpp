#include "ql/completion.hpp"

#include <algorithm>
#include <set>

namespace ql {

uint64_t u_set(const Structure& st, uint64_t X) {
    uint64_t out = (st.size() == 64) ? ~uint64_t{0}
                                     : (uint64_t{1} << st.size()) - 1;
    for (int a = 0; a < st.size(); ++a)
        if ((X >> a) & 1u) out &= st.up_mask(a);
    return out;
}

uint64_t l_set(const Structure& st, uint64_t X) {
    uint64_t out = (st.size() == 64) ? ~uint64_t{0}
                                     : (uint64_t{1} << st.size()) - 1;
    for (int a = 0; a < st.size(); ++a)
        if ((X >> a) & 1u) out &= st.down_mask(a);
    return out;
}

namespace {

uint64_t full_mask(const Structure& st) {
    return (st.size() == 64) ? ~uint64_t{0}
                             : (uint64_t{1} << st.size()) - 1;
}

uint64_t prime(const Structure& st, uint64_t X) {
    uint64_t out = full_mask(st);
    for (int b = 0; b < st.size(); ++b)
        if ((X >> b) & 1u) out &= st.down_mask(st.inv(b));
    return out;
}

uint64_t bz_prime(const Structure& st, uint64_t X) {
    uint64_t out = full_mask(st);
    for (int b = 0; b < st.size(); ++b)
        if ((X >> b) & 1u) out &= st.down_mask(st.bz_inv(b));
    return out;
}

std::vector<uint64_t> close_cuts(const Structure& st,
                                 const std::vector<uint64_t>& generators) {
    std::set<uint64_t> cuts = {full_mask(st)};
    std::vector<uint64_t> work = {full_mask(st)};
    while (!work.empty()) {
        uint64_t X = work.back();
        work.pop_back();
        for (uint64_t g : generators) {
            uint64_t Y = X & g;
            if (cuts.insert(Y).second) work.push_back(Y);
        }
    }
    return {cuts.begin(), cuts.end()};
}

Completion build(const Structure& st, bool with_bz) {
    auto report = st.validate();
    if (!report.structural_error.empty())
        throw Error("completion input is malformed: " +
                    report.structural_error);
    if (report.kind == StructureClass::Invalid)
        throw Error("completion input is not an involutive poset");
    if (with_bz && !st.has_bz())
        throw Error("bz completion needs a second complement");

    std::vector<uint64_t> gens, bound_gens;
    for (int b = 0; b < st.size(); ++b) {
        gens.push_back(prime(st, uint64_t{1} << b));
        bound_gens.push_back(st.down_mask(b));
    }
    auto cuts = close_cuts(st, gens);
    auto bound_cuts = close_cuts(st, bound_gens);
    if (cuts != bound_cuts)
        throw Error("cut families disagree between the two presentations");
    for (uint64_t X : cuts) {
        if (prime(st, prime(st, X)) != X)
            throw Error("cut is not double-complement stable");
        if (l_set(st, u_set(st, X)) != X)
            throw Error("cut is not bound-pair stable");
        if (with_bz) {
            uint64_t T = bz_prime(st, X);
            if (!std::binary_search(cuts.begin(), cuts.end(), T))
                throw Error("second complement of a cut is not a cut");
        }
    }

    Completion out;
    out.cuts = cuts;
    int n = static_cast<int>(cuts.size());
    if (n > Structure::kMaxElements)
        throw Error("completion exceeds 64 elements");
    std::vector<std::string> names(n);
    int zero = -1, one = -1;
    uint64_t bottom = full_mask(st);
    for (uint64_t X : cuts) bottom &= X;
    for (int i = 0; i < n; ++i) {
        if (cuts[i] == bottom) zero = i;
        if (cuts[i] == full_mask(st)) one = i;
        std::string nm = "{";
        bool first = true;
        for (int a = 0; a < st.size(); ++a)
            if ((cuts[i] >> a) & 1u) {
                if (!first) nm += ",";
                nm += st.name(a);
                first = false;
            }
        names[i] = nm + "}";
    }
    auto index_of = [&](uint64_t X) {
        auto it = std::lower_bound(cuts.begin(), cuts.end(), X);
        if (it == cuts.end() || *it != X) throw Error("missing cut");
        return static_cast<int>(it - cuts.begin());
    };
    std::vector<std::pair<int, int>> le;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && !(cuts[i] & ~cuts[j])) le.emplace_back(i, j);
    std::vector<int> inv(n), bz;
    for (int i = 0; i < n; ++i) inv[i] = index_of(prime(st, cuts[i]));
    if (with_bz) {
        bz.resize(n);
        for (int i = 0; i < n; ++i) bz[i] = index_of(bz_prime(st, cuts[i]));
    }
    out.lattice = Structure(names, le, inv, bz, zero, one);
    out.h.resize(st.size());
    for (int a = 0; a < st.size(); ++a) out.h[a] = index_of(st.down_mask(a));

    auto rep2 = out.lattice.validate();
    if (!rep2.structural_error.empty() ||
        rep2.kind == StructureClass::Invalid || !rep2.lattice)
        throw Error("completion did not produce an involutive lattice");
    if (with_bz && rep2.kind != StructureClass::BzLattice &&
        rep2.kind != StructureClass::Bz3Lattice)
        throw Error("bz completion did not produce a bz-lattice");
    return out;
}

}  // namespace

Completion macneille(const Structure& st) { return build(st, false); }

Completion macneille_bz(const Structure& st) { return build(st, true); }

Structure frame_proposition_lattice(const OrthoFrame& fr) {
    KripkeRealization k;
    k.frame = fr;
    k.pi = fr.all_propositions();
    return to_algebra(k).st;
}

OrthoFrame frame_of(const Structure& st) {
    auto report = st.validate();
    if (report.kind != StructureClass::Ortholattice &&
        report.kind != StructureClass::OrthomodularLattice)
        throw Error("frame construction needs an ortholattice");
    OrthoFrame fr;
    fr.flavor = FrameFlavor::OL;
    std::vector<int> worlds;
    for (int a = 0; a < st.size(); ++a)
        if (a != st.zero()) {
            worlds.push_back(a);
            fr.worlds.push_back(st.name(a));
        }
    int n = static_cast<int>(worlds.size());
    fr.acc.assign(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (!st.leq(worlds[i], st.inv(worlds[j])))
                fr.acc[i] |= uint64_t{1} << j;
    Structure props = frame_proposition_lattice(fr);
    Structure completed = macneille(st).lattice;
    if (!isomorphic(props, completed))
        throw Error("frame propositions disagree with the completion");
    return fr;
}

}  // namespace ql
