#include "ql/modal.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace ql {

bool BRealization::pi_has(uint64_t X) const {
    return std::binary_search(pi.begin(), pi.end(), X);
}

std::optional<std::string> BRealization::validate() const {
    if (auto err = frame.validate()) return err;
    if (!std::is_sorted(pi.begin(), pi.end()))
        return "proposition family is not in canonical order";
    if (!pi_has(0) || !pi_has(frame.all()))
        return "family misses the empty or the full set";
    for (uint64_t X : pi) {
        if (!pi_has(frame.all() & ~X))
            return "family not closed under complement";
        if (!pi_has(frame.box(X)))
            return "family not closed under necessity";
        for (uint64_t Y : pi)
            if (!pi_has(X & Y)) return "family not closed under intersection";
    }
    for (const auto& [lit, X] : rho)
        if (!pi_has(X)) return "rho(" + lit + ") is not listed";
    return std::nullopt;
}

FormulaPtr tau(const FormulaPtr& formula) {
    using K = NodeKind;
    std::function<FormulaPtr(const FormulaPtr&)> go =
        [&](const FormulaPtr& f) -> FormulaPtr {
        switch (f->kind) {
            case K::Literal:
                return Formula::mk(K::Box,
                                   Formula::mk(K::Diamond, f));
            case K::Not:
                return Formula::mk(
                    K::Box, Formula::mk(K::CNot, go(f->left)));
            case K::And:
                return Formula::mk(K::CAnd, go(f->left), go(f->right));
            default:
                throw Error("no modal translation for " + print_formula(f));
        }
    };
    return go(expand(formula));
}

uint64_t b_extension(const BRealization& m, const FormulaPtr& formula) {
    using K = NodeKind;
    const OrthoFrame& fr = m.frame;
    std::function<uint64_t(const FormulaPtr&)> go =
        [&](const FormulaPtr& f) -> uint64_t {
        switch (f->kind) {
            case K::Literal: {
                auto it = m.rho.find(f->literal);
                if (it == m.rho.end())
                    throw Error("no proposition assigned to " + f->literal);
                return it->second;
            }
            case K::CNot: return fr.all() & ~go(f->left);
            case K::CAnd: return go(f->left) & go(f->right);
            case K::Box: return fr.box(go(f->left));
            case K::Diamond:
                return fr.all() & ~fr.box(fr.all() & ~go(f->left));
            default:
                throw Error("connective has no modal clause: " +
                            print_formula(f));
        }
    };
    return go(formula);
}

bool b_holds(const BRealization& m, int world, const FormulaPtr& f) {
    return (b_extension(m, f) >> world) & 1u;
}

namespace {

std::vector<uint64_t> close_family(
    const OrthoFrame& fr, std::set<uint64_t> seeds,
    const std::vector<std::function<uint64_t(uint64_t)>>& unary,
    bool with_intersection) {
    std::vector<uint64_t> work(seeds.begin(), seeds.end());
    while (!work.empty()) {
        uint64_t X = work.back();
        work.pop_back();
        for (const auto& op : unary) {
            uint64_t Y = op(X);
            if (seeds.insert(Y).second) work.push_back(Y);
        }
        if (with_intersection)
            for (uint64_t Y : std::vector<uint64_t>(seeds.begin(), seeds.end())) {
                uint64_t Z = X & Y;
                if (seeds.insert(Z).second) work.push_back(Z);
            }
    }
    return {seeds.begin(), seeds.end()};
}

}  // namespace

BRealization ol_to_b(const KripkeRealization& k) {
    BRealization m;
    m.frame = k.frame;
    std::set<uint64_t> seeds = {0, m.frame.all()};
    for (const auto& [lit, X] : k.rho) seeds.insert(X);
    m.pi = close_family(
        m.frame, std::move(seeds),
        {[&](uint64_t X) { return m.frame.all() & ~X; },
         [&](uint64_t X) { return m.frame.box(X); }},
        true);
    m.rho = k.rho;
    return m;
}

KripkeRealization b_to_ol(const BRealization& m) {
    KripkeRealization k;
    k.frame = m.frame;
    auto bd = [&](uint64_t X) {
        return m.frame.box(m.frame.all() & ~m.frame.box(m.frame.all() & ~X));
    };
    std::set<uint64_t> seeds = {0, m.frame.all()};
    for (const auto& [lit, X] : m.rho) {
        uint64_t Y = bd(X);
        seeds.insert(Y);
        k.rho[lit] = Y;
    }
    k.pi = close_family(
        m.frame, std::move(seeds),
        {[&](uint64_t X) { return m.frame.ortho(X); }}, true);
    return k;
}

std::vector<uint64_t> quantum_propositions(const BRealization& m) {
    auto bd = [&](uint64_t X) {
        return m.frame.box(m.frame.all() & ~m.frame.box(m.frame.all() & ~X));
    };
    std::set<uint64_t> seeds;
    for (const auto& [lit, X] : m.rho) seeds.insert(bd(X));
    if (seeds.empty()) seeds = {0, m.frame.all()};
    return close_family(
        m.frame, std::move(seeds),
        {[&](uint64_t X) { return m.frame.ortho(X); }}, true);
}

bool is_b_zero(const BRealization& m) {
    auto q = quantum_propositions(m);
    for (uint64_t X : q)
        for (uint64_t Y : q)
            if ((X & ~Y) && !(X & m.frame.ortho(X & Y))) return false;
    return true;
}

bool b_zero_schema_holds(const BRealization& m, const FormulaPtr& alpha,
                         const FormulaPtr& beta) {
    uint64_t a = b_extension(m, alpha), b = b_extension(m, beta);
    uint64_t all = m.frame.all();
    uint64_t inner = a & m.frame.box(all & ~(a & b));
    uint64_t rhs = all & ~m.frame.box(all & ~inner);
    return (a & (all & ~b) & ~rhs) == 0;
}

}  // namespace ql
