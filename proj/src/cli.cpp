#include "eulink/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <sstream>

#include "eulink/congruence.hpp"
#include "eulink/constructible_function.hpp"
#include "eulink/corpus.hpp"
#include "eulink/document.hpp"
#include "eulink/errors.hpp"
#include "eulink/links.hpp"
#include "eulink/monodromy.hpp"
#include "eulink/report.hpp"
#include "eulink/selfcheck.hpp"

namespace eulink::cli {

namespace {

std::string istr(const Integer& v) { return v.get_str(); }

std::string fvec(const Complex& K) {
    std::ostringstream os;
    os << K.size() << " cells [";
    auto f = K.f_vector();
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (i) os << ",";
        os << f[i];
    }
    os << "]";
    return os.str();
}

struct Options {
    std::string doc_path;
    std::string corpus_name;
    bool json = false;
    int subdivide = 0;
    long long mod_override = 0;
};

using VertexMaps = std::map<std::string, std::map<Vertex, Vertex>>;

Document load(const Options& opt, VertexMaps* vmaps = nullptr) {
    Document doc;
    if (!opt.doc_path.empty() && !opt.corpus_name.empty())
        throw input_error("give either --doc or --corpus, not both");
    else if (!opt.doc_path.empty())
        doc = load_document_file(opt.doc_path);
    else if (!opt.corpus_name.empty())
        doc = corpus_document(opt.corpus_name);
    else
        throw input_error("no document given (use --doc FILE or --corpus NAME)");
    doc.validate();
    if (opt.subdivide > 0) {
        doc = subdivide_document(doc, opt.subdivide, vmaps);
        doc.validate();
    }
    return doc;
}

long long transported(const Options& opt, const VertexMaps& vmaps, const std::string& cname,
                      long long v) {
    if (v < 0 || opt.subdivide <= 0) return v;
    auto cit = vmaps.find(cname);
    if (cit == vmaps.end()) throw input_error("subdivide: unknown complex '" + cname + "'");
    auto vit = cit->second.find(static_cast<Vertex>(v));
    if (vit == cit->second.end())
        throw input_error("subdivide: vertex " + std::to_string(v) + " not in '" + cname + "'");
    return vit->second;
}

Integer residue_modulus(const Options& opt, std::size_t k, bool divisibility) {
    if (opt.mod_override != 0) {
        Integer m(static_cast<long>(opt.mod_override));
        if (m < 2 || (m & (m - 1)) != 0)
            throw input_error("--mod must be a power of two, at least 2");
        return m;
    }
    Integer m = 1;
    m <<= (divisibility ? k : k + 1);
    return m;
}

void emit(const Report& report, const Options& opt, std::ostream& out) {
    if (opt.json)
        out << report.to_json().dump(2) << "\n";
    else
        out << report.to_text();
}

void add_delta_report(Report& report, const DeltaReport& dr, const Options& opt) {
    report.add("k", static_cast<long long>(dr.k));
    Integer div = 1;
    div <<= dr.k;
    report.add("divisor", istr(div));
    report.add("delta_global", istr(dr.global_delta));
    for (const auto& [v, value] : dr.local_deltas)
        report.add("delta_local[" + std::to_string(v) + "]", istr(value));
    report.add("divisibility_pass", dr.divisibility_pass ? "true" : "false");
    if (!dr.residues.empty()) {
        report.add("residue_modulus", istr(dr.modulus));
        for (const auto& [label, residues] : dr.residues) {
            std::ostringstream os;
            os << "{";
            bool first = true;
            for (const auto& r : residues) {
                if (!first) os << ",";
                os << istr(r);
                first = false;
            }
            os << "}";
            report.add("residues[" + label + "]", os.str());
        }
        report.add("constancy_pass", dr.constancy_pass ? "true" : "false");
    }
    for (const auto& cert : dr.certificates)
        report.add_certificate(cert.kind + " at " + cert.location + ": " + cert.detail);
    (void)opt;
}

int cmd_chi(const Options& opt, const std::string& set_name, const std::string& complex_name,
            std::ostream& out) {
    Document doc = load(opt);
    Report report;
    report.add("command", "chi");
    report.add("document", doc.name);
    if (!set_name.empty()) {
        ConstructibleSet s = doc.set(set_name);
        report.add("set", set_name);
        report.add("carriers", static_cast<long long>(s.carriers().size()));
        report.add("closed", s.is_closed() ? "true" : "false");
        report.add("open", s.is_open() ? "true" : "false");
        report.add("locally_closed", s.is_locally_closed() ? "true" : "false");
        report.add("chi", istr(chi(s)));
        report.add("chi_c", istr(chi_c(s)));
    } else if (!complex_name.empty()) {
        Complex K = doc.complex(complex_name);
        report.add("complex", complex_name);
        report.add("cells", fvec(K));
        report.add("chi", istr(chi_of_complex(K)));
        report.add("chi_c", istr(chi_of_complex(K)));
    } else {
        throw input_error("chi: give --set or --complex");
    }
    report.set_verdict(Verdict::pass);
    emit(report, opt, out);
    return report.exit_code();
}

int cmd_link(const Options& opt, const std::string& complex_name, long long vertex,
             const std::string& simplex_arg, const std::string& set_name, long long at_vertex,
             std::ostream& out) {
    VertexMaps vmaps;
    Document doc = load(opt, &vmaps);
    vertex = transported(opt, vmaps, complex_name, vertex);
    at_vertex = transported(opt, vmaps, complex_name, at_vertex);
    Report report;
    report.add("command", "link");
    report.add("document", doc.name);
    Complex X = doc.complex(complex_name);
    report.add("complex", complex_name);
    if (vertex >= 0) {
        Complex lk = vertex_link(static_cast<Vertex>(vertex), X);
        report.add("vertex", vertex);
        report.add("link_cells", fvec(lk));
        report.add("chi", istr(chi_of_complex(lk)));
    } else if (!simplex_arg.empty()) {
        std::vector<Vertex> verts;
        std::stringstream ss(simplex_arg);
        for (std::string part; std::getline(ss, part, ',');) verts.push_back(std::stoi(part));
        Simplex s = make_simplex(verts);
        report.add("simplex", simplex_to_string(s));
        report.add("point_link_chi", istr(point_link_chi(s, X)));
    } else if (!set_name.empty()) {
        ConstructibleSet y = doc.set(set_name);
        if (!y.is_closed()) throw input_error("link: the subcomplex must be closed");
        Complex Y = Complex::from_closed_set(y.carriers());
        LinkModel lm = at_vertex >= 0
                           ? localized_link(static_cast<Vertex>(at_vertex), Y, X)
                           : subcomplex_link(Y, X);
        report.add("subcomplex", set_name);
        if (at_vertex >= 0) report.add("localized_at", at_vertex);
        report.add("link_cells", fvec(*lm.complex));
        report.add("chi", istr(lm.chi_value()));
        report.add("provenance", lm.provenance);
    } else {
        throw input_error("link: give --vertex, --simplex or --set");
    }
    report.set_verdict(Verdict::pass);
    emit(report, opt, out);
    return report.exit_code();
}

int cmd_iterated_link(const Options& opt, const std::string& family_name, long long at_vertex,
                      std::ostream& out) {
    VertexMaps vmaps;
    Document doc = load(opt, &vmaps);
    if (!doc.families.count(family_name))
        throw input_error("document: unknown family '" + family_name + "'");
    at_vertex = transported(opt, vmaps, doc.families.at(family_name).complex, at_vertex);
    OrderedFamily family = doc.family(family_name);
    Report report;
    report.add("command", "iterated-link");
    report.add("document", doc.name);
    report.add("family", family_name);
    report.add("members", static_cast<long long>(family.k()));
    LinkModel lm = at_vertex >= 0
                       ? localized_iterated_link(static_cast<Vertex>(at_vertex), family,
                                                 *family.parent)
                       : iterated_link(family, *family.parent);
    if (at_vertex >= 0) report.add("localized_at", at_vertex);
    report.add("link_cells", fvec(*lm.complex));
    report.add("chi", istr(lm.chi_value()));
    report.add("provenance", lm.provenance);
    report.set_verdict(Verdict::pass);
    emit(report, opt, out);
    return report.exit_code();
}

int cmd_delta(const Options& opt, const std::string& family_name, long long infinity,
              std::ostream& out) {
    VertexMaps vmaps;
    Document doc = load(opt, &vmaps);
    if (!doc.families.count(family_name))
        throw input_error("document: unknown family '" + family_name + "'");
    infinity = transported(opt, vmaps, doc.families.at(family_name).complex, infinity);
    OrderedFamily family = doc.family(family_name);
    Report report;
    report.add("command", "delta");
    report.add("document", doc.name);
    report.add("family", family_name);
    DeltaReport dr = divisibility_check(family);
    if (opt.mod_override != 0) dr.modulus = residue_modulus(opt, dr.k, false);
    add_delta_report(report, dr, opt);
    if (infinity >= 0) {
        CompactificationDelta cd = compactification_delta(family, static_cast<Vertex>(infinity));
        report.add("infinity_vertex", infinity);
        report.add("delta_noncompact", istr(cd.delta_noncompact));
        report.add("delta_compactified", istr(cd.delta_compactified));
        report.add("correction", istr(cd.correction));
        report.add("links_at_infinity_delta", istr(cd.links_at_infinity_delta));
        report.add("decomposition_holds", cd.contract_holds() ? "true" : "false");
        if (!cd.contract_holds())
            throw internal_error("compactification decomposition identity failed");
    }
    report.set_verdict(dr.divisibility_pass ? Verdict::pass : Verdict::obstruction);
    emit(report, opt, out);
    return report.exit_code();
}

int cmd_audit(const Options& opt, bool sullivan, bool cor_duality, bool constancy,
              const std::string& complex_name, const std::string& family_name,
              const std::string& strat_name, std::ostream& out) {
    Document doc = load(opt);
    Report report;
    report.add("command", "audit");
    report.add("document", doc.name);
    Verdict verdict = Verdict::pass;

    if (sullivan) {
        if (complex_name.empty()) throw input_error("audit --sullivan needs --complex");
        auto parent = doc.complex_ptr(complex_name);
        report.add("check", "evenness of the link operator on the indicator function");
        report.add("complex", complex_name);
        report.add("cells", static_cast<long long>(parent->size()));
        EvennessReport ev = evenness_audit(constant_one(parent));
        report.add("odd_cells", static_cast<long long>(ev.odd_cells.size()));
        for (const auto& [cell, value] : ev.odd_cells)
            report.add_certificate("link operator value odd at cell " + simplex_to_string(cell) +
                                   ": " + istr(value));
        if (!ev.pass()) verdict = Verdict::obstruction;
    }
    if (cor_duality) {
        if (complex_name.empty()) throw input_error("audit --duality needs --complex");
        auto parent = doc.complex_ptr(complex_name);
        report.add("check", "even link operator and per-stratum duality residues");
        report.add("complex", complex_name);
        ConstructibleFunction one = constant_one(parent);
        EvennessReport ev = evenness_audit(one);
        report.add("odd_cells", static_cast<long long>(ev.odd_cells.size()));
        for (const auto& [cell, value] : ev.odd_cells)
            report.add_certificate("link operator value odd at cell " + simplex_to_string(cell) +
                                   ": " + istr(value));
        if (!ev.pass()) verdict = Verdict::obstruction;
        ConstructibleFunction dual = duality_op(one);
        Integer modulus = residue_modulus(opt, 1, false);
        if (!strat_name.empty()) {
            Stratification strat = doc.stratification(strat_name);
            for (const auto& [label, cells] : strat.strata) {
                std::set<Integer> residues;
                for (const auto& s : cells) residues.insert(mod_residue(dual.value(s), modulus));
                std::ostringstream os;
                os << "{";
                bool first = true;
                for (const auto& r : residues) {
                    if (!first) os << ",";
                    os << istr(r);
                    first = false;
                }
                os << "}";
                report.add("duality_residues[" + label + "]", os.str());
                if (strat.irreducible.at(label) && residues.size() > 1) {
                    verdict = Verdict::obstruction;
                    report.add_certificate("duality residues not constant on stratum " + label);
                }
            }
        }
    }
    if (constancy) {
        if (family_name.empty() || strat_name.empty())
            throw input_error("audit --constancy needs --family and --strat");
        OrderedFamily family = doc.family(family_name);
        Stratification strat = doc.stratification(strat_name);
        report.add("check", "divisibility and generic constancy of local deltas");
        report.add("family", family_name);
        report.add("stratification", strat_name);
        Integer mod_override = opt.mod_override != 0 ? residue_modulus(opt, family.k(), false) : 0;
        DeltaReport dr = constancy_audit(family, strat, mod_override);
        add_delta_report(report, dr, opt);
        if (!dr.divisibility_pass || !dr.constancy_pass) verdict = Verdict::obstruction;
    }
    if (!sullivan && !cor_duality && !constancy)
        throw input_error("audit: choose --sullivan, --duality or --constancy");
    report.set_verdict(verdict);
    emit(report, opt, out);
    return report.exit_code();
}

int cmd_monodromy(const Options& opt, const std::string& poly_name, int check_k,
                  const std::string& check_l, const std::string& chis_arg, std::ostream& out) {
    Report report;
    report.add("command", "monodromy");
    if (!poly_name.empty()) {
        Document doc = load(opt);
        WeightedPoly f = doc.polynomial(poly_name);
        report.add("document", doc.name);
        report.add("polynomial", poly_name);
        report.add("weights", "(" + std::to_string(f.w1) + "," + std::to_string(f.w2) + ")");
        report.add("degree", f.degree);
        FiberCongruenceReport fc = verify_fiber_congruences(f);
        report.add("divisor", fc.monodromy.divisor.to_string());
        report.add("mu", istr(fc.monodromy.mu));
        report.add("mult_one", istr(fc.monodromy.mult_one));
        report.add("mult_minus_one", istr(fc.monodromy.mult_minus_one));
        report.add("l_one", istr(fc.monodromy.l_one));
        report.add("l_minus_one", istr(fc.monodromy.l_minus_one));
        report.add("chi_plus", istr(fc.fiber.chi_plus));
        report.add("chi_minus", istr(fc.fiber.chi_minus));
        {
            std::ostringstream os;
            for (int s : fc.fiber.sign_sequence) os << (s == 0 ? '0' : (s > 0 ? '+' : '-'));
            report.add("sign_sequence", os.str());
        }
        report.add("difference_congruence",
                   istr(fc.difference) + " = 2*l(-1) = " + istr(2 * fc.monodromy.l_minus_one) +
                       " mod 4");
        report.add("sum_congruence",
                   istr(fc.sum) + " = 2*l(+1) = " + istr(2 * fc.monodromy.l_one) + " mod 4");
        report.set_verdict(Verdict::pass);
    } else if (check_k >= 0) {
        // Data-level alternating-sum checker.
        std::map<std::string, Integer> chis;
        std::stringstream ss(chis_arg);
        for (std::string part; std::getline(ss, part, ',');) {
            auto eq = part.find('=');
            if (eq == std::string::npos)
                throw input_error("monodromy: bad --chis entry '" + part + "' (want key=value)");
            chis.emplace(part.substr(0, eq), Integer(part.substr(eq + 1)));
        }
        Integer l_value(check_l.empty() ? std::string("0") : check_l);
        AlternatingCongruenceReport ac = verify_alternating_congruence(chis, l_value, check_k);
        report.add("check", "alternating fibre congruence");
        report.add("k", check_k);
        report.add("alternating_sum", istr(ac.alternating_sum));
        report.add("l_value", istr(ac.l_value));
        report.add("divisible", ac.divisible ? "true" : "false");
        report.add("congruent", ac.congruent ? "true" : "false");
        if (!ac.pass()) {
            report.add_certificate("alternating sum " + istr(ac.alternating_sum) +
                                   " fails the 2^k divisibility or congruence");
            report.set_verdict(Verdict::obstruction);
        }
    } else {
        throw input_error("monodromy: give --poly NAME, or --check-k with --chis");
    }
    emit(report, opt, out);
    return report.exit_code();
}

int cmd_corpus(const Options& opt, bool list, const std::string& show, const std::string& dump_dir,
               std::ostream& out) {
    if (list || (show.empty() && dump_dir.empty())) {
        Report report;
        report.add("command", "corpus");
        for (const auto& name : corpus_names()) report.add("document", name);
        report.set_verdict(Verdict::pass);
        emit(report, opt, out);
        return report.exit_code();
    }
    if (!show.empty()) {
        out << serialize_document(corpus_document(show));
        return 0;
    }
    for (const auto& doc : corpus()) {
        std::string path = dump_dir + "/" + doc.name + ".json";
        std::ofstream f(path);
        if (!f) throw input_error("corpus: cannot write '" + path + "'");
        f << serialize_document(doc);
        out << "wrote " << path << "\n";
    }
    return 0;
}

int cmd_selftest(const Options& opt, std::ostream& out) {
    Report report;
    report.add("command", "selftest");
    report.add("corpus_documents", static_cast<long long>(corpus_names().size()));
    std::size_t failures = 0;
    for (const auto& check : run_all_checks()) {
        report.add(check.label, (check.pass ? "ok  " : "FAIL") + std::string(" | ") + check.detail);
        if (!check.pass) ++failures;
    }
    report.add("checks_failed", static_cast<long long>(failures));
    report.set_verdict(failures == 0 ? Verdict::pass : Verdict::error);
    emit(report, opt, out);
    return failures == 0 ? 0 : 3;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out) {
    CLI::App app{"exact Euler-characteristic link calculus"};
    app.require_subcommand(1);
    Options opt;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--doc", opt.doc_path, "document file");
        cmd->add_option("--corpus", opt.corpus_name, "bundled corpus document");
        cmd->add_flag("--json", opt.json, "emit the report as JSON");
        cmd->add_option("--mod", opt.mod_override, "override the residue modulus (power of two)");
        cmd->add_option("--subdivide", opt.subdivide, "barycentrically subdivide n times first");
    };

    std::string set_name, complex_name, simplex_arg, family_name, strat_name, poly_name;
    std::string chis_arg, check_l, corpus_show, corpus_dump;
    long long vertex = -1, at_vertex = -1, infinity = -1;
    int check_k = -1;
    bool sullivan = false, cor_duality = false, constancy = false, corpus_list = false;

    CLI::App* chi_cmd = app.add_subcommand("chi", "Euler characteristics of a named set");
    add_common(chi_cmd);
    chi_cmd->add_option("--set", set_name);
    chi_cmd->add_option("--complex", complex_name);

    CLI::App* link_cmd = app.add_subcommand("link", "vertex, point, subcomplex and localized links");
    add_common(link_cmd);
    link_cmd->add_option("--complex", complex_name)->required();
    link_cmd->add_option("--vertex", vertex);
    link_cmd->add_option("--simplex", simplex_arg);
    link_cmd->add_option("--set", set_name);
    link_cmd->add_option("--at", at_vertex);

    CLI::App* iter_cmd = app.add_subcommand("iterated-link", "iterated link of an ordered family");
    add_common(iter_cmd);
    iter_cmd->add_option("--family", family_name)->required();
    iter_cmd->add_option("--at", at_vertex);

    CLI::App* delta_cmd = app.add_subcommand("delta", "inclusion-exclusion invariants and divisibility");
    add_common(delta_cmd);
    delta_cmd->add_option("--family", family_name)->required();
    delta_cmd->add_option("--infinity", infinity);

    CLI::App* audit_cmd = app.add_subcommand("audit", "obstruction audits");
    add_common(audit_cmd);
    audit_cmd->add_flag("--sullivan", sullivan);
    audit_cmd->add_flag("--duality", cor_duality);
    audit_cmd->add_flag("--constancy", constancy);
    audit_cmd->add_option("--complex", complex_name);
    audit_cmd->add_option("--family", family_name);
    audit_cmd->add_option("--strat", strat_name);

    CLI::App* mono_cmd = app.add_subcommand("monodromy", "plane curve monodromy and fibre data");
    add_common(mono_cmd);
    mono_cmd->add_option("--poly", poly_name);
    mono_cmd->add_option("--check-k", check_k);
    mono_cmd->add_option("--check-l", check_l);
    mono_cmd->add_option("--chis", chis_arg);

    CLI::App* corpus_cmd = app.add_subcommand("corpus", "bundled documents");
    add_common(corpus_cmd);
    corpus_cmd->add_flag("--list", corpus_list);
    corpus_cmd->add_option("--show", corpus_show);
    corpus_cmd->add_option("--dump", corpus_dump);

    CLI::App* selftest_cmd = app.add_subcommand("selftest", "full invariant suite on the corpus");
    add_common(selftest_cmd);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            // --help and friends.
            std::ostringstream help;
            int code = app.exit(e, help, help);
            out << help.str();
            return code;
        }
        out << "error: " << e.what() << "\n";
        out << "VERDICT: error\n";
        return 2;
    }

    try {
        if (chi_cmd->parsed()) return cmd_chi(opt, set_name, complex_name, out);
        if (link_cmd->parsed())
            return cmd_link(opt, complex_name, vertex, simplex_arg, set_name, at_vertex, out);
        if (iter_cmd->parsed()) return cmd_iterated_link(opt, family_name, at_vertex, out);
        if (delta_cmd->parsed()) return cmd_delta(opt, family_name, infinity, out);
        if (audit_cmd->parsed())
            return cmd_audit(opt, sullivan, cor_duality, constancy, complex_name, family_name,
                             strat_name, out);
        if (mono_cmd->parsed())
            return cmd_monodromy(opt, poly_name, check_k, check_l, chis_arg, out);
        if (corpus_cmd->parsed()) return cmd_corpus(opt, corpus_list, corpus_show, corpus_dump, out);
        if (selftest_cmd->parsed()) return cmd_selftest(opt, out);
        throw input_error("no subcommand given");
    } catch (const internal_error& e) {
        out << "internal-consistency error: " << e.what() << "\n";
        out << "VERDICT: error\n";
        return 3;
    } catch (const input_error& e) {
        out << "error: " << e.what() << "\n";
        out << "VERDICT: error\n";
        return 2;
    } catch (const std::exception& e) {
        out << "error: " << e.what() << "\n";
        out << "VERDICT: error\n";
        return 2;
    }
}

}  // namespace eulink::cli
