#include "ql/orthopair.hpp"

#include <algorithm>
#include <set>

namespace ql {

PairAlgebra::PairAlgebra(const OrthoFrame& frame) : frame_(frame) {
    if (frame_.flavor != FrameFlavor::OL)
        throw Error("orthopairs need a plain orthoframe");
    if (auto bad = frame_.validate())
        throw Error("orthopairs need a valid frame: " + *bad);
    props_ = frame_.all_propositions();
    for (size_t i = 0; i < props_.size(); ++i)
        index_[props_[i]] = static_cast<int>(i);
    int np = static_cast<int>(props_.size());
    for (int p = 0; p < np; ++p)
        for (int n = 0; n < np; ++n)
            if ((props_[p] & ~frame_.ortho(props_[n])) == 0)
                pairs_.push_back({p, n});
    zero_ = {index_.at(0), index_.at(frame_.all())};
    one_ = {index_.at(frame_.all()), index_.at(0)};
}

uint64_t PairAlgebra::pos_set(const OrthoPair& x) const {
    check(x);
    return props_[x.pos];
}

uint64_t PairAlgebra::neg_set(const OrthoPair& x) const {
    check(x);
    return props_[x.neg];
}

int PairAlgebra::prop_index(uint64_t set) const {
    auto it = index_.find(set);
    if (it == index_.end()) throw Error("world set is not a proposition");
    return it->second;
}

OrthoPair PairAlgebra::make_pair(uint64_t pos, uint64_t neg) const {
    OrthoPair x{prop_index(pos), prop_index(neg)};
    if ((pos & ~frame_.ortho(neg)) != 0)
        throw Error("positive domain leaks out of the negative domain's "
                    "orthocomplement");
    return x;
}

bool PairAlgebra::exact(const OrthoPair& x) const {
    check(x);
    return props_[x.neg] == frame_.ortho(props_[x.pos]);
}

std::string PairAlgebra::pair_name(const OrthoPair& x) const {
    check(x);
    auto set_name = [&](uint64_t set) {
        std::string out;
        for (int w = 0; w < frame_.size(); ++w)
            if ((set >> w) & 1) {
                if (!out.empty()) out += ".";
                out += frame_.worlds[w];
            }
        return out.empty() ? std::string("-") : out;
    };
    return "[" + set_name(props_[x.pos]) + "|" + set_name(props_[x.neg]) + "]";
}

void PairAlgebra::check(const OrthoPair& x) const {
    int np = static_cast<int>(props_.size());
    if (x.pos < 0 || x.pos >= np || x.neg < 0 || x.neg >= np)
        throw Error("orthopair index out of range");
    if ((props_[x.pos] & ~frame_.ortho(props_[x.neg])) != 0)
        throw Error("invalid orthopair " + std::to_string(x.pos) + "," +
                    std::to_string(x.neg));
}

uint64_t PairAlgebra::prop_join(uint64_t a, uint64_t b) const {
    return frame_.ortho(frame_.ortho(a | b));
}

OrthoPair PairAlgebra::fcomp(const OrthoPair& x) const {
    check(x);
    return {x.neg, x.pos};
}

OrthoPair PairAlgebra::icomp(const OrthoPair& x) const {
    check(x);
    return {x.neg, prop_index(frame_.ortho(props_[x.neg]))};
}

OrthoPair PairAlgebra::pinf(const OrthoPair& x, const OrthoPair& y) const {
    check(x);
    check(y);
    return {prop_index(props_[x.pos] & props_[y.pos]),
            prop_index(prop_join(props_[x.neg], props_[y.neg]))};
}

OrthoPair PairAlgebra::psup(const OrthoPair& x, const OrthoPair& y) const {
    check(x);
    check(y);
    return {prop_index(prop_join(props_[x.pos], props_[y.pos])),
            prop_index(props_[x.neg] & props_[y.neg])};
}

OrthoPair PairAlgebra::box(const OrthoPair& x) const {
    check(x);
    return {x.pos, prop_index(frame_.ortho(props_[x.pos]))};
}

OrthoPair PairAlgebra::diamond(const OrthoPair& x) const {
    return fcomp(box(fcomp(x)));
}

bool PairAlgebra::leq(const OrthoPair& x, const OrthoPair& y) const {
    check(x);
    check(y);
    return (props_[x.pos] & ~props_[y.pos]) == 0 &&
           (props_[y.neg] & ~props_[x.neg]) == 0;
}

Structure all_orthopairs(const OrthoFrame& frame) {
    if (frame.size() > 6) throw Error("pair lattice bound: at most 6 worlds");
    PairAlgebra pa(frame);
    const auto& ps = pa.pairs();
    if (static_cast<int>(ps.size()) > Structure::kMaxElements)
        throw Error("pair lattice bound: too many orthopairs");
    int n = static_cast<int>(ps.size());
    auto at = [&](const OrthoPair& x) {
        auto it = std::lower_bound(ps.begin(), ps.end(), x);
        return static_cast<int>(it - ps.begin());
    };
    std::vector<std::string> names;
    for (const auto& x : ps) names.push_back(pa.pair_name(x));
    std::vector<std::pair<int, int>> le;
    std::vector<int> inv(n), bz(n);
    for (int i = 0; i < n; ++i) {
        inv[i] = at(pa.fcomp(ps[i]));
        bz[i] = at(pa.icomp(ps[i]));
        for (int j = 0; j < n; ++j)
            if (pa.leq(ps[i], ps[j])) le.emplace_back(i, j);
    }
    Structure st(names, le, inv, bz, at(pa.zero()), at(pa.one()));
    auto report = st.validate();
    if (report.kind != StructureClass::Bz3Lattice)
        throw Error("pair lattice failed validation: " +
                    to_string(report.kind));
    return st;
}

std::optional<std::string> pair_law_failure(const PairAlgebra& pa) {
    const auto& ps = pa.pairs();
    size_t n = ps.size();
    auto at = [&](const OrthoPair& x) {
        auto it = std::lower_bound(ps.begin(), ps.end(), x);
        return static_cast<size_t>(it - ps.begin());
    };
    std::vector<size_t> fc(n), ic(n);
    for (size_t i = 0; i < n; ++i) {
        fc[i] = at(pa.fcomp(ps[i]));
        ic[i] = at(pa.icomp(ps[i]));
    }
    for (size_t i = 0; i < n; ++i) {
        if (!(pa.box(ps[i]) == ps[ic[fc[i]]]))
            return "necessity composite fails at " + pa.pair_name(ps[i]);
        if (!(ps[ic[i]] == pa.box(ps[fc[i]])))
            return "complement exchange fails at " + pa.pair_name(ps[i]);
        if (!(pa.diamond(ps[i]) == ps[fc[ic[i]]]))
            return "possibility composite fails at " + pa.pair_name(ps[i]);
    }
    std::vector<size_t> inf(n * n), sup(n * n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j <= i; ++j) {
            inf[i * n + j] = inf[j * n + i] = at(pa.pinf(ps[i], ps[j]));
            sup[i * n + j] = sup[j * n + i] = at(pa.psup(ps[i], ps[j]));
        }
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            if (ic[inf[i * n + j]] != sup[ic[i] * n + ic[j]])
                return "strong De Morgan fails at " + pa.pair_name(ps[i]) +
                       " " + pa.pair_name(ps[j]);
            if (!pa.leq(ps[inf[i * n + ic[ic[j]]]],
                        ps[sup[ic[fc[i]] * n + j]]))
                return "interconnection fails at " + pa.pair_name(ps[i]) +
                       " " + pa.pair_name(ps[j]);
        }
    return std::nullopt;
}

namespace {

OrthoPair eval_rec(const PairAlgebra& pa, const PairAssignment& rho,
                   const FormulaPtr& f) {
    switch (f->kind) {
        case NodeKind::Literal: {
            auto it = rho.find(f->literal);
            if (it == rho.end())
                throw Error("unassigned literal " + f->literal);
            return it->second;
        }
        case NodeKind::Not:
            return pa.fcomp(eval_rec(pa, rho, f->left));
        case NodeKind::INot:
            return pa.icomp(eval_rec(pa, rho, f->left));
        case NodeKind::And:
            return pa.pinf(eval_rec(pa, rho, f->left),
                           eval_rec(pa, rho, f->right));
        default:
            throw Error("pair evaluation cannot handle " + print_formula(f));
    }
}

}  // namespace

OrthoPair bzl3_evaluate(const PairAlgebra& pa, const PairAssignment& rho,
                        const FormulaPtr& f) {
    return eval_rec(pa, rho, expand(f));
}

Verdict bzl3_consequence(const std::vector<PairRealization>& realizations,
                         const std::vector<FormulaPtr>& premises,
                         const FormulaPtr& conclusion) {
    std::set<std::string> lit_set;
    for (const auto& l : literals_of(conclusion)) lit_set.insert(l);
    for (const auto& p : premises)
        for (const auto& l : literals_of(p)) lit_set.insert(l);
    std::vector<std::string> lits(lit_set.begin(), lit_set.end());

    for (const auto& r : realizations) {
        const auto& ps = r.alg.pairs();
        size_t k = lits.size();
        std::vector<size_t> idx(k, 0);
        while (true) {
            PairAssignment rho;
            for (size_t i = 0; i < k; ++i) rho[lits[i]] = ps[idx[i]];
            OrthoPair bound = r.alg.one();
            for (const auto& p : premises)
                bound = r.alg.pinf(bound, bzl3_evaluate(r.alg, rho, p));
            if (!r.alg.leq(bound, bzl3_evaluate(r.alg, rho, conclusion))) {
                Countermodel cm;
                cm.structure = r.name;
                for (const auto& [l, x] : rho)
                    cm.assignment[l] = r.alg.pair_name(x);
                return cm;
            }
            size_t d = 0;
            while (d < k && ++idx[d] == ps.size()) idx[d++] = 0;
            if (d == k) break;
        }
    }
    return std::nullopt;
}

}  // namespace ql
