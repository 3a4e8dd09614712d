#include "ql/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include "ql/acceptance.hpp"
#include "ql/catalog.hpp"
#include "ql/completion.hpp"
#include "ql/effect.hpp"
#include "ql/modal.hpp"
#include "ql/orthopair.hpp"
#include "ql/proof.hpp"
#include "ql/semantics.hpp"

namespace ql {

std::string class_label(StructureClass k) {
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
    throw Error("bad structure class");
}

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in.good()) throw Error("cannot read " + path);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

bool machine_format(const std::string& format) { return format == "machine"; }

void kv(std::ostream& out, const std::string& format, const std::string& key,
        const std::string& value) {
    if (machine_format(format))
        out << key << '\t' << value << '\n';
    else
        out << key << ": " << value << '\n';
}

Structure load_structref(const std::string& ref) {
    if (ref.rfind("catalog:", 0) == 0) return catalog_structure(ref.substr(8));
    return Structure::load(slurp(ref));
}

std::vector<NamedStructure> parse_structs(const std::string& list) {
    std::vector<NamedStructure> out;
    std::stringstream ss(list);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        if (tok.rfind("catalog:", 0) == 0) {
            out.push_back({tok.substr(8), catalog_structure(tok.substr(8))});
            continue;
        }
        try {
            out.push_back({tok, catalog_structure(tok)});
        } catch (const Error&) {
            out.push_back({tok, Structure::load(slurp(tok))});
        }
    }
    if (out.empty()) throw Error("empty structure list");
    return out;
}

std::vector<NamedStructure> default_omls() {
    return parse_structs("BOOL(2),MO2,MO(3),G12,B30");
}

Assignment parse_assignment(const Structure& st, const std::string& text) {
    Assignment v;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        auto eq = tok.find('=');
        if (eq == std::string::npos)
            throw Error("assignments are written literal=element");
        v[tok.substr(0, eq)] = st.index(tok.substr(eq + 1));
    }
    return v;
}

std::vector<FormulaPtr> parse_premises(Dialect d, const std::string& text) {
    std::vector<FormulaPtr> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ';'))
        if (tok.find_first_not_of(" \t") != std::string::npos)
            out.push_back(parse_formula(d, tok));
    return out;
}

int report_verdict(std::ostream& out, const std::string& format,
                   const Verdict& v, bool full_witness) {
    if (!v.has_value()) {
        kv(out, format, "result", "holds");
        return 0;
    }
    kv(out, format, "result", "countermodel");
    kv(out, format, "structure", v->structure);
    if (full_witness)
        for (const auto& [lit, el] : v->assignment)
            kv(out, format, lit, el);
    return 1;
}

KripkeRealization load_frameref(const std::string& ref) {
    if (ref.rfind("catalog:", 0) == 0)
        return from_algebra(catalog_structure(ref.substr(8)), {});
    return load_frame(slurp(ref));
}

uint64_t world_set(const OrthoFrame& fr, const std::string& text) {
    if (text == "-") return 0;
    uint64_t mask = 0;
    std::stringstream ss(text);
    std::string w;
    while (std::getline(ss, w, '.'))
        if (!w.empty()) mask |= uint64_t{1} << fr.world(w);
    return mask;
}

std::string world_list(const OrthoFrame& fr, uint64_t mask) {
    std::string out;
    for (int w = 0; w < fr.size(); ++w)
        if ((mask >> w) & 1) {
            if (!out.empty()) out += ".";
            out += fr.worlds[w];
        }
    return out.empty() ? std::string("-") : out;
}

FirstOrderModel load_fo_model(const std::string& path) {
    FirstOrderModel m;
    std::istringstream in(slurp(path));
    std::string line;
    bool have_structure = false;
    auto individual = [&](const std::string& name) {
        for (size_t i = 0; i < m.domain.size(); ++i)
            if (m.domain[i] == name) return static_cast<int>(i);
        throw Error("unknown individual " + name);
    };
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        std::string key;
        if (!(ls >> key)) continue;
        if (key == "structure:") {
            std::string ref;
            ls >> ref;
            m.st = load_structref(ref);
            have_structure = true;
        } else if (key == "domain:") {
            std::string d;
            while (ls >> d) m.domain.push_back(d);
        } else if (key == "constant:") {
            std::string name, eq, ind;
            if (!(ls >> name >> eq >> ind) || eq != "=")
                throw Error("malformed constant: line");
            m.constants[name] = individual(ind);
        } else if (key == "pred:") {
            std::string name;
            if (!(ls >> name)) throw Error("malformed pred: line");
            std::vector<std::string> parts;
            std::string tok;
            while (ls >> tok) parts.push_back(tok);
            if (parts.size() < 2 || parts[parts.size() - 2] != "=")
                throw Error("malformed pred: line");
            std::vector<int> args;
            for (size_t i = 0; i + 2 < parts.size(); ++i)
                args.push_back(individual(parts[i]));
            m.predicates[name][args] = m.st.index(parts.back());
        } else {
            throw Error("unknown model line " + key);
        }
    }
    if (!have_structure || m.domain.empty())
        throw Error("model file needs structure: and domain: lines");
    return m;
}

void print_om_form(std::ostream& out, const std::string& format,
                   const std::string& name, const OmForm& f) {
    std::string s = f.status == OmForm::Holds    ? "holds"
                    : f.status == OmForm::Fails ? "fails"
                                                : "inapplicable";
    if (f.status == OmForm::Fails)
        for (const auto& w : f.witness) s += " " + w;
    kv(out, format, name, s);
}

int run_catalog(std::ostream& out, const std::string& format) {
    for (const auto& n : catalog_structure_names())
        kv(out, format, "structure", n);
    for (const char* n : {"M3", "M4"}) kv(out, format, "qmv-table", n);
    for (const char* n : {"K5EA", "BOOL2EA"})
        kv(out, format, "partial-table", n);
    return 0;
}

int run_validate(std::ostream& out, const std::string& format,
                 const std::string& ref) {
    Structure st = load_structref(ref);
    auto rep = st.validate();
    if (machine_format(format))
        kv(out, format, "class", class_label(rep.kind));
    else
        out << class_label(rep.kind) << '\n';
    if (rep.kind == StructureClass::Invalid) {
        if (!rep.structural_error.empty())
            kv(out, format, "error", rep.structural_error);
        for (const auto& f : rep.failures) {
            std::string w = f.axiom;
            for (const auto& x : f.witness) w += " " + x;
            kv(out, format, "failure", w);
        }
        return 1;
    }
    return 0;
}

int run_props(std::ostream& out, const std::string& format,
              const std::string& ref) {
    Structure st = load_structref(ref);
    auto rep = st.validate();
    kv(out, format, "class", class_label(rep.kind));
    kv(out, format, "size", std::to_string(st.size()));
    kv(out, format, "lattice", rep.lattice ? "yes" : "no");
    if (rep.kind == StructureClass::Invalid) return 1;
    std::string atoms;
    for (int a : st.atoms()) atoms += (atoms.empty() ? "" : " ") + st.name(a);
    kv(out, format, "atoms", atoms);
    if (rep.lattice) {
        auto om = st.orthomodular_forms();
        print_om_form(out, format, "om-decomposition", om.omI);
        print_om_form(out, format, "om-complement", om.omII);
        print_om_form(out, format, "om-cancellation", om.omIII);
        print_om_form(out, format, "om-polynomial", om.omIV);
        auto oal = st.check_oal();
        kv(out, format, "orthoarguesian",
           oal ? "fails " + st.name((*oal)[0]) + " " + st.name((*oal)[1]) +
                     " " + st.name((*oal)[2])
               : "holds");
    }
    auto reg = st.regularity_failure();
    kv(out, format, "regular",
       reg ? "fails " + st.name((*reg)[0]) + " " + st.name((*reg)[1])
           : "holds");
    if (st.has_bz()) {
        auto b1 = st.bz3_axiom_i_failure();
        kv(out, format, "bz3-demorgan",
           b1 ? "fails " + st.name((*b1)[0]) + " " + st.name((*b1)[1])
              : "holds");
        auto b2 = st.bz3_axiom_ii_failure();
        kv(out, format, "bz3-interconnection",
           b2 ? "fails " + st.name((*b2)[0]) + " " + st.name((*b2)[1])
              : "holds");
    }
    return 0;
}

int run_reproduce(std::ostream& out, const std::string& id,
                  const std::string& fixtures) {
    std::vector<CriterionResult> results;
    if (id == "all")
        results = run_all_criteria(fixtures);
    else
        results.push_back(run_criterion(id, fixtures));
    int failures = 0;
    for (const auto& r : results) {
        out << (r.pass ? "PASS " : "FAIL ") << r.id << '\n';
        for (const auto& d : r.details) out << "  " << d << '\n';
        if (!r.pass) ++failures;
    }
    return failures == 0 ? 0 : 1;
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out) {
    CLI::App app{"workbench for finite quantum-logic structures", "qlw"};
    app.require_subcommand(1);
    std::string format = "plain";
    app.add_option("--format", format, "report format")
        ->check(CLI::IsMember({"plain", "machine"}));

    auto sub = [&](const std::string& name, const std::string& desc) {
        CLI::App* s = app.add_subcommand(name, desc);
        s->fallthrough();
        return s;
    };

    auto* c_catalog = sub("catalog", "list the shipped fixtures");

    std::string v_ref;
    auto* c_validate = sub("validate", "classify a structure");
    c_validate->add_option("structure", v_ref)->required();

    std::string p_ref;
    auto* c_props = sub("props", "full property report for a structure");
    c_props->add_option("structure", p_ref)->required();

    std::string e_ref, e_formula, e_assign, e_dialect = "OL";
    auto* c_eval = sub("eval", "evaluate a formula in a structure");
    c_eval->add_option("structure", e_ref)->required();
    c_eval->add_option("formula", e_formula)->required();
    c_eval->add_option("--assign", e_assign, "literal=element,...");
    c_eval->add_option("--dialect", e_dialect);

    std::string t_formula, t_structs, t_dialect = "OL";
    auto* c_valid = sub("valid", "test a formula for logical truth");
    c_valid->add_option("formula", t_formula)->required();
    c_valid->add_option("--structs", t_structs, "comma-separated references");
    c_valid->add_option("--dialect", t_dialect);

    std::string q_conclusion, q_premises, q_structs, q_dialect = "OL";
    bool q_weak = false;
    auto* c_conseq = sub("conseq", "test a consequence claim");
    c_conseq->add_option("conclusion", q_conclusion)->required();
    c_conseq->add_option("--premises", q_premises, "semicolon-separated");
    c_conseq->add_flag("--weak", q_weak, "weak consequence");
    c_conseq->add_option("--structs", q_structs);
    c_conseq->add_option("--dialect", q_dialect);

    std::string m_conclusion, m_premises, m_structs, m_dialect = "OL";
    auto* c_counter = sub("countermodel",
                          "search a countermodel and print the witness");
    c_counter->add_option("conclusion", m_conclusion)->required();
    c_counter->add_option("--premises", m_premises);
    c_counter->add_option("--structs", m_structs);
    c_counter->add_option("--dialect", m_dialect);

    std::string fo_model, fo_formula, fo_sigma;
    auto* c_fo = sub("fo-eval", "evaluate a first-order formula");
    c_fo->add_option("model", fo_model)->required();
    c_fo->add_option("formula", fo_formula)->required();
    c_fo->add_option("--sigma", fo_sigma, "variable=individual,...");

    std::string k_ref, k_formula, k_world, k_assign, k_dialect = "OL";
    bool k_export = false;
    auto* c_kripke = sub("kripke", "frame reports and Kripkean evaluation");
    c_kripke->add_option("frame", k_ref,
                         "frame file or catalog:NAME for the canonical frame")
        ->required();
    c_kripke->add_option("formula", k_formula);
    c_kripke->add_option("--world", k_world, "test truth at one world");
    c_kripke->add_option("--assign", k_assign,
                         "literal=w1.w2,... with - for the empty set");
    c_kripke->add_flag("--export", k_export, "print the frame file");
    c_kripke->add_option("--dialect", k_dialect);

    std::string tr_formula;
    auto* c_translate = sub("translate", "modal translation of a formula");
    c_translate->add_option("formula", tr_formula)->required();

    std::string co_ref;
    bool co_bz = false;
    auto* c_complete = sub("complete", "MacNeille completion report");
    c_complete->add_option("structure", co_ref)->required();
    c_complete->add_flag("--bz", co_bz, "carry the second complement");

    std::string qm_ref;
    int qm_conditional = 0;
    auto* c_qmv = sub("qmv", "validate a total-sum table");
    c_qmv->add_option("table", qm_ref, "M3, M4 or a table file")->required();
    c_qmv->add_option("--conditional", qm_conditional,
                      "search a conditional term to this depth");

    std::string pa_conclusion, pa_premises, pa_tables = "K5EA,BOOL2EA",
                pa_dialect = "UPaQL";
    bool pa_per_occurrence = false;
    auto* c_paql = sub("paql", "partial quantum logic consequence");
    c_paql->add_option("conclusion", pa_conclusion)->required();
    c_paql->add_option("--premises", pa_premises);
    c_paql->add_option("--tables", pa_tables, "K5EA, BOOL2EA or table files");
    c_paql->add_option("--dialect", pa_dialect);
    c_paql->add_flag("--per-occurrence", pa_per_occurrence);

    auto* c_bz3 = sub("bz3", "orthopair semantics over a frame");
    c_bz3->require_subcommand(1);
    std::string b_ref, b_formula, b_assign;
    auto* c_bz3_eval = c_bz3->add_subcommand("eval", "evaluate to an orthopair");
    c_bz3_eval->fallthrough();
    c_bz3_eval->add_option("frame", b_ref)->required();
    c_bz3_eval->add_option("formula", b_formula)->required();
    c_bz3_eval->add_option("--assign", b_assign,
                           "literal=pos|neg with dot-joined worlds, - empty");
    std::string b_check_ref;
    auto* c_bz3_check = c_bz3->add_subcommand(
        "check-theorem142", "pair laws over every orthopair of the frame");
    c_bz3_check->fallthrough();
    c_bz3_check->add_option("frame", b_check_ref)->required();

    auto* c_proof = sub("proof", "derivation checking and search");
    c_proof->require_subcommand(1);
    std::string pr_file;
    auto* c_proof_check = c_proof->add_subcommand("check", "check a derivation");
    c_proof_check->fallthrough();
    c_proof_check->add_option("file", pr_file)->required();
    std::string ps_calculus, ps_conclusion, ps_premises;
    int ps_depth = 6;
    auto* c_proof_search =
        c_proof->add_subcommand("search", "bounded backward search");
    c_proof_search->fallthrough();
    c_proof_search->add_option("calculus", ps_calculus)->required();
    c_proof_search->add_option("conclusion", ps_conclusion)->required();
    c_proof_search->add_option("--premises", ps_premises);
    c_proof_search->add_option("--depth", ps_depth);
    std::string ph_file;
    auto* c_proof_harness = c_proof->add_subcommand(
        "harness", "semantic soundness of every step");
    c_proof_harness->fallthrough();
    c_proof_harness->add_option("file", ph_file)->required();

    std::string r_id, r_fixtures = "tests/fixtures";
    auto* c_reproduce = sub("reproduce", "replay an acceptance criterion");
    c_reproduce->add_option("criterion", r_id, "criterion id or all")
        ->required();
    c_reproduce->add_option("--fixtures", r_fixtures, "fixtures directory");

    std::vector<std::string> argv_strings;
    argv_strings.push_back("qlw");
    argv_strings.insert(argv_strings.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& s : argv_strings) argv.push_back(s.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        out << "error: " << e.what() << '\n';
        return 2;
    }

    try {
        if (app.got_subcommand(c_catalog)) return run_catalog(out, format);
        if (app.got_subcommand(c_validate))
            return run_validate(out, format, v_ref);
        if (app.got_subcommand(c_props)) return run_props(out, format, p_ref);
        if (app.got_subcommand(c_eval)) {
            Structure st = load_structref(e_ref);
            auto f = parse_formula(dialect_from(e_dialect), e_formula);
            int r = evaluate(st, parse_assignment(st, e_assign), f);
            if (machine_format(format))
                kv(out, format, "value", st.name(r));
            else
                out << st.name(r) << '\n';
            return 0;
        }
        if (app.got_subcommand(c_valid)) {
            auto structs =
                t_structs.empty() ? default_omls() : parse_structs(t_structs);
            auto f = parse_formula(dialect_from(t_dialect), t_formula);
            return report_verdict(out, format, logical_truth(structs, f),
                                  true);
        }
        if (app.got_subcommand(c_conseq)) {
            auto structs =
                q_structs.empty() ? default_omls() : parse_structs(q_structs);
            Dialect d = dialect_from(q_dialect);
            auto prem = parse_premises(d, q_premises);
            auto conc = parse_formula(d, q_conclusion);
            Verdict v = q_weak ? weak_consequence(structs, prem, conc)
                               : consequence(structs, prem, conc);
            return report_verdict(out, format, v, false);
        }
        if (app.got_subcommand(c_counter)) {
            auto structs =
                m_structs.empty() ? default_omls() : parse_structs(m_structs);
            Dialect d = dialect_from(m_dialect);
            auto prem = parse_premises(d, m_premises);
            auto conc = parse_formula(d, m_conclusion);
            Verdict v = prem.empty() ? logical_truth(structs, conc)
                                     : consequence(structs, prem, conc);
            if (!v.has_value()) {
                kv(out, format, "result", "none");
                return 0;
            }
            kv(out, format, "structure", v->structure);
            for (const auto& [lit, el] : v->assignment) kv(out, format, lit, el);
            return 1;
        }
        if (app.got_subcommand(c_fo)) {
            FirstOrderModel m = load_fo_model(fo_model);
            std::map<std::string, int> sigma;
            std::stringstream ss(fo_sigma);
            std::string tok;
            while (std::getline(ss, tok, ',')) {
                if (tok.empty()) continue;
                auto eq = tok.find('=');
                if (eq == std::string::npos)
                    throw Error("sigma entries are variable=individual");
                std::string ind = tok.substr(eq + 1);
                int idx = -1;
                for (size_t i = 0; i < m.domain.size(); ++i)
                    if (m.domain[i] == ind) idx = static_cast<int>(i);
                if (idx < 0) throw Error("unknown individual " + ind);
                sigma[tok.substr(0, eq)] = idx;
            }
            int r = fo_evaluate(m, sigma, parse_fo(fo_formula));
            if (machine_format(format))
                kv(out, format, "value", m.st.name(r));
            else
                out << m.st.name(r) << '\n';
            return 0;
        }
        if (app.got_subcommand(c_kripke)) {
            KripkeRealization k = load_frameref(k_ref);
            if (k_export) {
                out << save_frame(k);
                return 0;
            }
            if (k_formula.empty()) {
                auto bad = k.validate();
                kv(out, format, "flavor", to_string(k.frame.flavor));
                kv(out, format, "worlds",
                   std::to_string(k.frame.worlds.size()));
                kv(out, format, "propositions", std::to_string(k.pi.size()));
                kv(out, format, "valid", bad ? "no " + *bad : "yes");
                return bad ? 1 : 0;
            }
            std::stringstream ss(k_assign);
            std::string tok;
            while (std::getline(ss, tok, ',')) {
                if (tok.empty()) continue;
                auto eq = tok.find('=');
                if (eq == std::string::npos)
                    throw Error("assignments are written literal=w1.w2");
                k.rho[tok.substr(0, eq)] =
                    world_set(k.frame, tok.substr(eq + 1));
            }
            auto f = parse_formula(dialect_from(k_dialect), k_formula);
            if (!k_world.empty()) {
                bool h = holds(k, k.frame.world(k_world), f);
                kv(out, format, "holds", h ? "yes" : "no");
                return h ? 0 : 1;
            }
            kv(out, format, "extension", world_list(k.frame, extension(k, f)));
            return 0;
        }
        if (app.got_subcommand(c_translate)) {
            auto f = parse_formula(Dialect::OL, tr_formula);
            if (machine_format(format))
                kv(out, format, "translation", print_formula(tau(f)));
            else
                out << print_formula(tau(f)) << '\n';
            return 0;
        }
        if (app.got_subcommand(c_complete)) {
            Structure st = load_structref(co_ref);
            Completion co = co_bz ? macneille_bz(st) : macneille(st);
            kv(out, format, "class", class_label(co.lattice.validate().kind));
            kv(out, format, "size", std::to_string(co.lattice.size()));
            for (int a = 0; a < st.size(); ++a)
                kv(out, format, "embed",
                   st.name(a) + " -> " + co.lattice.name(co.h[a]));
            for (int c = 0; c < co.lattice.size(); ++c) {
                std::string members;
                for (int a = 0; a < st.size(); ++a)
                    if ((co.cuts[c] >> a) & 1)
                        members += (members.empty() ? "" : " ") + st.name(a);
                kv(out, format, "cut", co.lattice.name(c) + " = " + members);
            }
            return 0;
        }
        if (app.got_subcommand(c_qmv)) {
            QmvTable m = (qm_ref == "M3" || qm_ref == "M4")
                             ? catalog_qmv(qm_ref)
                             : QmvTable::load(slurp(qm_ref));
            auto rep = validate_qmv(m);
            kv(out, format, "qmv", rep.qmv ? "yes" : "no");
            kv(out, format, "mv", rep.mv ? "yes" : "no");
            for (const auto& f : rep.failures) kv(out, format, "failure", f);
            if (qm_conditional > 0) {
                auto term = conditional_search(m, qm_conditional);
                kv(out, format, "conditional", term ? *term : "none");
            }
            return rep.qmv ? 0 : 1;
        }
        if (app.got_subcommand(c_paql)) {
            std::vector<PartialTable> tables;
            std::stringstream ss(pa_tables);
            std::string tok;
            while (std::getline(ss, tok, ',')) {
                if (tok.empty()) continue;
                if (tok == "K5EA" || tok == "BOOL2EA")
                    tables.push_back(catalog_partial(tok));
                else
                    tables.push_back(PartialTable::load(slurp(tok)));
            }
            Dialect d = dialect_from(pa_dialect);
            auto prem = parse_premises(d, pa_premises);
            auto conc = parse_formula(d, pa_conclusion);
            auto v = paql_consequence(tables, d, prem, conc,
                                      pa_per_occurrence);
            if (!v.has_value()) {
                kv(out, format, "result", "sound");
                return 0;
            }
            kv(out, format, "result", "countermodel");
            kv(out, format, "table", std::to_string(v->table));
            kv(out, format, "bound", v->bound);
            for (const auto& [slot, el] : v->valuation)
                kv(out, format, slot, el);
            return 1;
        }
        if (app.got_subcommand(c_bz3)) {
            if (c_bz3->got_subcommand(c_bz3_check)) {
                PairAlgebra pa(load_frameref(b_check_ref).frame);
                auto bad = pair_law_failure(pa);
                kv(out, format, "result", bad ? *bad : "holds");
                kv(out, format, "pairs", std::to_string(pa.pairs().size()));
                return bad ? 1 : 0;
            }
            PairAlgebra pa(load_frameref(b_ref).frame);
            PairAssignment rho;
            std::stringstream ss(b_assign);
            std::string tok;
            while (std::getline(ss, tok, ',')) {
                if (tok.empty()) continue;
                auto eq = tok.find('=');
                auto bar = tok.find('|', eq);
                if (eq == std::string::npos || bar == std::string::npos)
                    throw Error("pair assignments are literal=pos|neg");
                rho[tok.substr(0, eq)] = pa.make_pair(
                    world_set(pa.frame(), tok.substr(eq + 1, bar - eq - 1)),
                    world_set(pa.frame(), tok.substr(bar + 1)));
            }
            auto f = parse_formula(Dialect::BZL3, b_formula);
            if (machine_format(format))
                kv(out, format, "value", pa.pair_name(bzl3_evaluate(pa, rho, f)));
            else
                out << pa.pair_name(bzl3_evaluate(pa, rho, f)) << '\n';
            return 0;
        }
        if (app.got_subcommand(c_proof)) {
            if (c_proof->got_subcommand(c_proof_check)) {
                Derivation raw = parse_derivation(slurp(pr_file));
                Derivation d;
                try {
                    d = macro_expand(raw);
                } catch (const Error& e) {
                    kv(out, format, "result",
                       std::string("rejected: ") + e.what());
                    return 1;
                }
                CheckResult r = check(d);
                if (r.accepted) {
                    kv(out, format, "result", "accepted");
                    kv(out, format, "steps", std::to_string(d.steps.size()));
                    return 0;
                }
                kv(out, format, "result",
                   "rejected at step " + std::to_string(r.step + 1) + ": " +
                       r.reason);
                return 1;
            }
            if (c_proof->got_subcommand(c_proof_search)) {
                Calculus c = calculus_from(ps_calculus);
                std::vector<std::string> prem;
                std::stringstream ss(ps_premises);
                std::string tok;
                while (std::getline(ss, tok, ';'))
                    if (tok.find_first_not_of(" \t") != std::string::npos)
                        prem.push_back(tok);
                auto found =
                    search(c, make_config(c, prem, ps_conclusion), ps_depth);
                if (!found) {
                    kv(out, format, "result",
                       "no derivation within depth " +
                           std::to_string(ps_depth));
                    return 1;
                }
                out << print_derivation(*found);
                return 0;
            }
            Derivation raw = parse_derivation(slurp(ph_file));
            Derivation d;
            try {
                d = macro_expand(raw);
            } catch (const Error& e) {
                kv(out, format, "result",
                   std::string("rejected: ") + e.what());
                return 1;
            }
            if (!check(d).accepted) {
                kv(out, format, "result", "rejected");
                return 1;
            }
            std::vector<NamedStructure> cat;
            for (const auto& n : catalog_structure_names())
                cat.push_back({n, catalog_structure(n)});
            HarnessResult h = soundness_harness(
                d, cat, {catalog_partial("K5EA"), catalog_partial("BOOL2EA")});
            if (h.ok) {
                kv(out, format, "result", "sound");
                return 0;
            }
            kv(out, format, "result",
               "countermodel at step " + std::to_string(h.step + 1));
            kv(out, format, "model", h.model);
            kv(out, format, "detail", h.detail);
            return 1;
        }
        if (app.got_subcommand(c_reproduce))
            return run_reproduce(out, r_id, r_fixtures);
    } catch (const Error& e) {
        out << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        out << "error: " << e.what() << '\n';
        return 2;
    }
    out << "error: no command\n";
    return 2;
}

}  // namespace ql
