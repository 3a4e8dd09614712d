#include "qlw.h"

#include <cstdlib>
#include <cstring>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "ql/catalog.hpp"
#include "ql/cli.hpp"
#include "ql/proof.hpp"
#include "ql/semantics.hpp"

struct qlw_structure {
    ql::Structure st;
};

struct qlw_formula {
    ql::FormulaPtr f;
};

struct qlw_derivation {
    ql::Derivation d;
};

namespace {

thread_local std::string last_error;

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <typename F>
auto guarded(F&& body, decltype(body()) on_error) -> decltype(body()) {
    try {
        auto r = body();
        last_error.clear();
        return r;
    } catch (const std::exception& e) {
        last_error = e.what();
        return on_error;
    }
}

}  // namespace

extern "C" {

const char* qlw_version(void) { return "1.0.0"; }

const char* qlw_last_error(void) { return last_error.c_str(); }

void qlw_string_free(char* s) { std::free(s); }

char* qlw_structure_catalog(void) {
    std::string out;
    for (const auto& n : ql::catalog_structure_names()) out += n + "\n";
    return dup_string(out);
}

qlw_structure* qlw_structure_load(const char* text) {
    if (!text) {
        last_error = "null text";
        return nullptr;
    }
    std::string ref(text);
    return guarded(
        [&]() -> qlw_structure* {
            if (ref.rfind("catalog:", 0) == 0)
                return new qlw_structure{ql::catalog_structure(ref.substr(8))};
            return new qlw_structure{ql::Structure::load(ref)};
        },
        nullptr);
}

void qlw_structure_free(qlw_structure* st) { delete st; }

char* qlw_structure_save(const qlw_structure* st) {
    if (!st) {
        last_error = "null structure";
        return nullptr;
    }
    return guarded([&] { return dup_string(st->st.save()); },
                   static_cast<char*>(nullptr));
}

int qlw_structure_size(const qlw_structure* st) {
    return st ? st->st.size() : -1;
}

char* qlw_structure_class(const qlw_structure* st) {
    if (!st) {
        last_error = "null structure";
        return nullptr;
    }
    return guarded(
        [&] { return dup_string(ql::class_label(st->st.validate().kind)); },
        static_cast<char*>(nullptr));
}

char* qlw_structure_element(const qlw_structure* st, int index) {
    if (!st || index < 0 || index >= st->st.size()) {
        last_error = "element index out of range";
        return nullptr;
    }
    return dup_string(st->st.name(index));
}

int qlw_structure_index(const qlw_structure* st, const char* name) {
    if (!st || !name) {
        last_error = "null argument";
        return -1;
    }
    return guarded([&] { return st->st.index(name); }, -1);
}

qlw_formula* qlw_formula_parse(const char* dialect, const char* text) {
    if (!dialect || !text) {
        last_error = "null argument";
        return nullptr;
    }
    return guarded(
        [&]() -> qlw_formula* {
            return new qlw_formula{
                ql::parse_formula(ql::dialect_from(dialect), text)};
        },
        nullptr);
}

void qlw_formula_free(qlw_formula* f) { delete f; }

char* qlw_formula_print(const qlw_formula* f) {
    if (!f) {
        last_error = "null formula";
        return nullptr;
    }
    return dup_string(ql::print_formula(f->f));
}

int qlw_evaluate(const qlw_structure* st, const qlw_formula* f,
                 const char* const* literals, const char* const* values,
                 size_t n) {
    if (!st || !f || (n > 0 && (!literals || !values))) {
        last_error = "null argument";
        return -1;
    }
    return guarded(
        [&] {
            ql::Assignment v;
            for (size_t i = 0; i < n; ++i)
                v[literals[i]] = st->st.index(values[i]);
            return ql::evaluate(st->st, v, f->f);
        },
        -1);
}

qlw_status qlw_consequence(const char* const* structs, size_t nstructs,
                           qlw_formula* const* premises, size_t npremises,
                           const qlw_formula* conclusion, char** witness) {
    if (!conclusion || (nstructs > 0 && !structs) ||
        (npremises > 0 && !premises)) {
        last_error = "null argument";
        return QLW_ERROR;
    }
    return guarded(
        [&] {
            std::vector<ql::NamedStructure> ns;
            for (size_t i = 0; i < nstructs; ++i)
                ns.push_back(
                    {structs[i], ql::catalog_structure(structs[i])});
            if (ns.empty()) throw ql::Error("empty structure list");
            std::vector<ql::FormulaPtr> prem;
            for (size_t i = 0; i < npremises; ++i)
                prem.push_back(premises[i]->f);
            ql::Verdict v =
                prem.empty() ? ql::logical_truth(ns, conclusion->f)
                             : ql::consequence(ns, prem, conclusion->f);
            if (!v.has_value()) return QLW_OK;
            if (witness) {
                std::string w = v->structure;
                for (const auto& [lit, el] : v->assignment)
                    w += " " + lit + "=" + el;
                *witness = dup_string(w);
            }
            return QLW_COUNTERMODEL;
        },
        QLW_ERROR);
}

qlw_derivation* qlw_derivation_parse(const char* text) {
    if (!text) {
        last_error = "null text";
        return nullptr;
    }
    return guarded(
        [&]() -> qlw_derivation* {
            return new qlw_derivation{ql::parse_derivation(text)};
        },
        nullptr);
}

void qlw_derivation_free(qlw_derivation* d) { delete d; }

qlw_status qlw_derivation_check(const qlw_derivation* d, char** reason) {
    if (!d) {
        last_error = "null derivation";
        return QLW_ERROR;
    }
    try {
        ql::CheckResult r = ql::check(ql::macro_expand(d->d));
        last_error.clear();
        if (r.accepted) return QLW_OK;
        if (reason)
            *reason = dup_string("step " + std::to_string(r.step + 1) + ": " +
                                 r.reason);
        return QLW_COUNTERMODEL;
    } catch (const std::exception& e) {
        last_error = e.what();
        if (reason) *reason = dup_string(e.what());
        return QLW_COUNTERMODEL;
    }
}

int qlw_run(int argc, const char* const* argv) {
    std::vector<std::string> args;
    for (int i = 0; i < argc; ++i) args.emplace_back(argv[i]);
    try {
        return ql::cli_main(args, std::cout);
    } catch (const std::exception& e) {
        last_error = e.what();
        return QLW_ERROR;
    }
}

int qlw_run_capture(int argc, const char* const* argv, char** output) {
    std::vector<std::string> args;
    for (int i = 0; i < argc; ++i) args.emplace_back(argv[i]);
    std::ostringstream out;
    int code;
    try {
        code = ql::cli_main(args, out);
    } catch (const std::exception& e) {
        last_error = e.what();
        return QLW_ERROR;
    }
    if (output) *output = dup_string(out.str());
    return code;
}

}  // extern "C"
