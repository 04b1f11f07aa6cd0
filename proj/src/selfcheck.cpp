#include "eulink/selfcheck.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "eulink/constructible_function.hpp"
#include "eulink/corpus.hpp"
#include "eulink/errors.hpp"
#include "eulink/links.hpp"
#include "eulink/monodromy.hpp"
#include "eulink/subdivision.hpp"

namespace eulink {

namespace {

std::string istr(const Integer& v) { return v.get_str(); }

CheckResult result(std::string label, bool pass, std::string detail) {
    return CheckResult{std::move(label), pass, std::move(detail)};
}

// Connected components of the 1-skeleton.
std::size_t component_count(const Complex& K) {
    std::map<Vertex, Vertex> parent;
    for (Vertex v : K.vertices()) parent[v] = v;
    std::function<Vertex(Vertex)> find = [&](Vertex v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (const auto& s : K.simplices())
        for (std::size_t i = 1; i < s.size(); ++i) parent[find(s[0])] = find(s[i]);
    std::set<Vertex> roots;
    for (Vertex v : K.vertices()) roots.insert(find(v));
    return roots.size();
}

}  // namespace

Complex random_complex(Rng& rng, int max_vertices, int max_generators, int max_arity,
                       std::size_t max_simplices) {
    const int n = 4 + static_cast<int>(rng() % static_cast<unsigned>(max_vertices - 3));
    const int g = 3 + static_cast<int>(rng() % static_cast<unsigned>(max_generators - 2));
    std::vector<Simplex> gens;
    for (int i = 0; i < g; ++i) {
        const int arity = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_arity));
        std::set<Vertex> s;
        for (int j = 0; j < arity; ++j) s.insert(static_cast<Vertex>(rng() % static_cast<unsigned>(n)));
        gens.emplace_back(s.begin(), s.end());
    }
    Complex K = Complex::from_generators(gens);
    while (K.size() > max_simplices && !gens.empty()) {
        gens.pop_back();
        K = Complex::from_generators(gens);
    }
    return K;
}

SimplexSet random_carrier_subset(Rng& rng, const Complex& K) {
    SimplexSet out;
    for (const auto& s : K.simplices())
        if (rng() % 2 == 0) out.insert(s);
    return out;
}

Complex random_closed_subcomplex(Rng& rng, const Complex& K) {
    std::vector<Simplex> gens;
    for (const auto& s : K.simplices())
        if (rng() % 3 == 0) gens.push_back(s);
    return Complex::from_generators(gens);
}

SimplexSet random_locally_closed(Rng& rng, const Complex& K) {
    Complex z1 = random_closed_subcomplex(rng, K);
    Complex z2 = random_closed_subcomplex(rng, K);
    return set_minus(z1.simplices(), z2.simplices());
}

Integer chi_complement_model(const SimplexSet& carriers) {
    if (carriers.empty()) return 0;
    SimplexSet closure;
    for (const auto& s : carriers)
        for (auto& f : faces(s)) closure.insert(std::move(f));
    Complex A = Complex::from_closed_set(std::move(closure));
    SubdivisionMap sd = barycentric_subdivision(A);
    std::set<Vertex> keep;
    for (const auto& [v, s] : sd.carrier)
        if (carriers.count(s)) keep.insert(v);
    return chi_of_complex(full_subcomplex(*sd.target, keep));
}

std::vector<CheckResult> check_corpus_documents() {
    std::vector<CheckResult> out;
    for (const auto& doc : corpus()) {
        std::string label = "corpus[" + doc.name + "]";
        try {
            doc.validate();
            std::string once = serialize_document(doc);
            Document reparsed = parse_document(once);
            reparsed.validate();
            std::string twice = serialize_document(reparsed);
            if (once != twice) {
                out.push_back(result(label, false, "serialization does not round-trip"));
                continue;
            }
            out.push_back(result(label, true, "validated, round-trip stable"));
        } catch (const std::exception& e) {
            out.push_back(result(label, false, e.what()));
        }
    }
    return out;
}

std::vector<CheckResult> check_evenness_obstructions() {
    std::vector<CheckResult> out;
    for (const auto& doc : corpus()) {
        for (const auto& [cname, decl] : doc.complexes) {
            if (!decl.algebraic && !doc.expect_obstruction) continue;
            auto parent = doc.complex_ptr(cname);
            EvennessReport report = evenness_audit(constant_one(parent));
            std::string label = "evenness[" + doc.name + "/" + cname + "]";
            std::ostringstream detail;
            detail << report.odd_cells.size() << " odd cells";
            if (!report.odd_cells.empty())
                detail << ", first " << simplex_to_string(report.odd_cells.front().first)
                       << " value " << istr(report.odd_cells.front().second);
            bool ok = doc.expect_obstruction ? !report.pass() : report.pass();
            out.push_back(result(label, ok, detail.str()));
        }
    }
    return out;
}

std::vector<CheckResult> check_link_identity_randomized(int instances, unsigned seed) {
    Rng rng(seed);
    int failures = 0;
    std::string first_failure;
    for (int i = 0; i < instances; ++i) {
        Complex X = random_complex(rng);
        Complex Y = random_closed_subcomplex(rng, X);
        SimplexSet U = random_carrier_subset(rng, X);
        LinkModel lm = subcomplex_link(Y, X);
        SimplexSet refined = lm.subdivision ? lm.subdivision->refine(U) : U;
        Integer lhs = chi(lm.trace(refined));
        Integer rhs = chi(Y.simplices()) + chi(set_minus(U, Y.simplices())) -
                      chi(set_union(U, Y.simplices()));
        if (lhs != rhs) {
            ++failures;
            if (first_failure.empty()) {
                std::ostringstream os;
                os << "instance " << i << ": link trace chi " << istr(lhs)
                   << " != identity value " << istr(rhs);
                first_failure = os.str();
            }
        }
    }
    std::ostringstream detail;
    detail << instances << " randomized instances, " << failures << " failures";
    if (failures) detail << "; " << first_failure;
    std::vector<CheckResult> out;
    out.push_back(result("link_identity[randomized]", failures == 0, detail.str()));

    // Fixture: a two-edge arc in the circle has a two-point link.
    {
        Document hex = corpus_document("hexagon");
        auto X = hex.complex("X");
        auto arc = hex.set("arc");
        LinkModel lm = subcomplex_link(Complex::from_closed_set(arc.carriers()), X);
        bool ok = lm.chi_value() == 2 && lm.complex->dimension() <= 0;
        out.push_back(result("link_identity[hexagon/arc]", ok,
                             "chi " + istr(lm.chi_value()) + ", dimension " +
                                 std::to_string(lm.complex->dimension())));
    }
    // Fixture: the equator of the octahedral sphere has two disjoint circles
    // as its link.
    {
        Document oct = corpus_document("s2_octahedron");
        auto X = oct.complex("X");
        auto equator = oct.set("equator");
        LinkModel lm = subcomplex_link(Complex::from_closed_set(equator.carriers()), X);
        bool degrees_ok = true;
        std::map<Vertex, int> degree;
        for (const auto& s : lm.complex->simplices())
            if (s.size() == 2) {
                degree[s[0]]++;
                degree[s[1]]++;
            }
        for (Vertex v : lm.complex->vertices())
            if (degree[v] != 2) degrees_ok = false;
        bool ok = lm.chi_value() == 0 && component_count(*lm.complex) == 2 && degrees_ok &&
                  lm.complex->dimension() == 1;
        out.push_back(result("link_identity[s2/equator]", ok,
                             "chi " + istr(lm.chi_value()) + ", components " +
                                 std::to_string(component_count(*lm.complex))));
    }
    return out;
}

std::vector<CheckResult> check_chi_cross_validation(int instances, unsigned seed) {
    Rng rng(seed);
    int failures = 0, closed_failures = 0;
    for (int i = 0; i < instances; ++i) {
        Complex X = random_complex(rng);
        SimplexSet S = random_locally_closed(rng, X);
        if (chi(S) != chi_complement_model(S)) ++failures;
        Complex Z = random_closed_subcomplex(rng, X);
        if (chi(Z.simplices()) != chi_c(Z.simplices())) ++closed_failures;
    }
    std::ostringstream detail;
    detail << instances << " locally closed instances, " << failures
           << " complement-model mismatches; " << closed_failures
           << " closed-set chi mismatches";
    std::vector<CheckResult> out;
    out.push_back(
        result("chi_cross_validation[randomized]", failures == 0 && closed_failures == 0,
               detail.str()));
    return out;
}

namespace {

const std::vector<std::pair<std::string, std::string>>& family_fixtures() {
    static const std::vector<std::pair<std::string, std::string>> fixtures = {
        {"hexagon", "pt"},
        {"boundary_delta3", "pt"},
        {"theta_cone", "apex"},
        {"s2_octahedron", "equator"},
        {"s2_octahedron", "point_equator"},
        {"tripod_prism", "axis"},
        {"whitney_umbrella", "axis"},
        {"whitney_umbrella", "origin_axis"},
        {"line_compactified", "p_inf"},
        {"plane_compactified", "p_inf"},
        {"double_cone_hexagon", "apex_axis"},
    };
    return fixtures;
}

}  // namespace

std::vector<CheckResult> check_nested_family_links() {
    std::vector<CheckResult> out;
    for (const auto& [doc_name, fam_name] : family_fixtures()) {
        Document doc = corpus_document(doc_name);
        OrderedFamily family = doc.family(fam_name);
        std::string label = "family_links[" + doc_name + "/" + fam_name + "]";
        try {
            Integer delta = delta_global(family);
            LinkModel lm = iterated_link(family, *family.parent);
            Integer link_chi = lm.chi_value();
            bool global_ok = delta == link_chi;
            // Local agreement at every vertex is enforced by the cross-check
            // inside delta_local; any disagreement throws.
            for (Vertex v : family.parent->vertices()) (void)delta_local(v, family);
            out.push_back(result(label, global_ok,
                                 "delta " + istr(delta) + ", iterated link chi " + istr(link_chi) +
                                     ", local values cross-checked at " +
                                     std::to_string(family.parent->vertices().size()) +
                                     " vertices"));
        } catch (const std::exception& e) {
            out.push_back(result(label, false, e.what()));
        }
    }
    // Empty family: the invariant reduces to the Euler characteristic.
    {
        Document hex = corpus_document("hexagon");
        auto parent = hex.complex_ptr("X");
        OrderedFamily empty = OrderedFamily::create(parent, {}, {}, "empty");
        Integer delta = delta_global(empty);
        LinkModel lm = iterated_link(empty, *parent);
        bool ok = delta == chi_of_complex(*parent) && lm.chi_value() == delta;
        out.push_back(result("family_links[hexagon/empty]", ok, "delta " + istr(delta)));
    }
    return out;
}

std::vector<CheckResult> check_divisibility() {
    std::vector<CheckResult> out;
    for (const auto& [doc_name, fam_name] : family_fixtures()) {
        if (doc_name == "double_cone_hexagon") continue;  // truncated model, no expectation
        Document doc = corpus_document(doc_name);
        OrderedFamily family = doc.family(fam_name);
        const auto& decl = doc.complexes.at(doc.families.at(fam_name).complex);
        bool expect_pass = decl.algebraic && !doc.expect_obstruction;
        DeltaReport report = divisibility_check(family);
        std::string label = "divisibility[" + doc_name + "/" + fam_name + "]";
        std::ostringstream detail;
        detail << "delta " << istr(report.global_delta) << " mod " << istr(report.modulus)
               << (report.divisibility_pass ? ": divisible" : ": obstruction");
        if (!report.certificates.empty())
            detail << " (" << report.certificates.front().location << ": "
                   << report.certificates.front().detail << ")";
        out.push_back(result(label, report.divisibility_pass == expect_pass, detail.str()));
    }
    return out;
}

std::vector<CheckResult> check_double_cone_identity() {
    std::vector<CheckResult> out;
    for (const auto& [doc_name, fam_name] : family_fixtures()) {
        if (doc_name == "double_cone_hexagon") continue;  // avoid stacking cones twice
        Document doc = corpus_document(doc_name);
        OrderedFamily family = doc.family(fam_name);
        std::string label = "double_cone[" + doc_name + "/" + fam_name + "]";
        try {
            DoubleCone dc = double_cone(family);
            Integer base = delta_global(family);
            Integer apex_delta = delta_local(dc.apex, dc.family);
            Integer apex_link = chi_of_complex(vertex_link(dc.apex, dc.complex));
            bool ok = apex_delta == 2 * base && apex_link == 2 * chi_of_complex(*family.parent);
            out.push_back(result(label, ok,
                                 "apex delta " + istr(apex_delta) + " vs twice " + istr(base) +
                                     "; apex link chi " + istr(apex_link)));
        } catch (const std::exception& e) {
            out.push_back(result(label, false, e.what()));
        }
    }
    return out;
}

std::vector<CheckResult> check_constancy() {
    std::vector<CheckResult> out;
    auto residue_detail = [](const DeltaReport& report) {
        std::ostringstream os;
        for (const auto& [label, residues] : report.residues) {
            os << label << "={";
            bool first = true;
            for (const auto& r : residues) {
                if (!first) os << ",";
                os << istr(r);
                first = false;
            }
            os << "} ";
        }
        return os.str();
    };

    struct Expectation {
        std::string doc, family, strat;
        std::map<std::string, std::set<long>> residues;  // empty = only require pass
    };
    std::vector<Expectation> expectations = {
        {"whitney_umbrella", "axis", "by_axis",
         {{"axis_plus", {0}}, {"axis_minus", {0}}, {"origin", {2}}, {"infinity", {2}}, {"canopy", {0}}}},
        {"whitney_umbrella", "origin_axis", "by_axis", {}},
        {"s2_octahedron", "point_equator", "by_equator",
         {{"p", {4}}, {"equator_rest", {0}}, {"caps", {0}}}},
        {"hexagon", "pt", "by_point", {{"p", {2}}, {"rest", {0}}}},
        {"boundary_delta3", "pt", "by_point", {{"p", {0}}, {"rest", {0}}}},
    };
    for (const auto& exp : expectations) {
        Document doc = corpus_document(exp.doc);
        DeltaReport report = constancy_audit(doc.family(exp.family), doc.stratification(exp.strat));
        bool ok = report.constancy_pass;
        for (const auto& [stratum, expected] : exp.residues) {
            std::set<Integer> want;
            for (long r : expected) want.insert(Integer(r));
            auto it = report.residues.find(stratum);
            if (it == report.residues.end() || it->second != want) ok = false;
        }
        out.push_back(result("constancy[" + exp.doc + "/" + exp.family + "]", ok,
                             residue_detail(report)));
    }

    // Synthetic failure: one declared-irreducible stratum holding two
    // vertices with different residues must produce a certificate.
    {
        Document hex = corpus_document("hexagon");
        auto parent = hex.complex_ptr("X");
        OrderedFamily family = hex.family("pt");
        SimplexSet pair{{0}, {3}};
        SimplexSet rest;
        for (const auto& s : parent->simplices())
            if (!pair.count(s)) rest.insert(s);
        Stratification strat = Stratification::create(
            parent, {{"pair", pair}, {"rest", rest}}, {{"pair", true}, {"rest", false}},
            "synthetic");
        DeltaReport report = constancy_audit(family, strat);
        bool ok = !report.constancy_pass && !report.certificates.empty() &&
                  report.residues.at("pair").size() == 2;
        out.push_back(result("constancy[synthetic_two_residues]", ok, residue_detail(report)));
    }
    return out;
}

std::vector<CheckResult> check_duality_residues() {
    std::vector<CheckResult> out;
    for (const auto& doc : corpus()) {
        for (const auto& [cname, decl] : doc.complexes) {
            if (!decl.algebraic) continue;
            auto parent = doc.complex_ptr(cname);
            ConstructibleFunction one = constant_one(parent);
            EvennessReport evenness = evenness_audit(one);
            std::string label = "duality[" + doc.name + "/" + cname + "]";
            if (!evenness.pass()) {
                out.push_back(result(label, false, "link operator has odd values"));
                continue;
            }
            ConstructibleFunction dual = duality_op(one);
            bool ok = true;
            std::ostringstream detail;
            detail << "even link values";
            for (const auto& [sname, sdecl] : doc.stratifications) {
                (void)sdecl;
                Stratification strat = doc.stratification(sname);
                for (const auto& [stratum_label, cells] : strat.strata) {
                    if (!strat.irreducible.at(stratum_label)) continue;
                    std::set<Integer> residues;
                    for (const auto& s : cells) residues.insert(mod_residue(dual.value(s), 4));
                    if (residues.size() > 1) ok = false;
                    detail << "; " << stratum_label << " mod4={";
                    bool first = true;
                    for (const auto& r : residues) {
                        if (!first) detail << ",";
                        detail << istr(r);
                        first = false;
                    }
                    detail << "}";
                }
            }
            out.push_back(result(label, ok, detail.str()));
        }
    }
    return out;
}

std::vector<CheckResult> check_compactification() {
    std::vector<CheckResult> out;
    auto run_case = [&](const std::string& doc_name, Vertex infinity, long expect_noncompact,
                        long expect_compact, long expect_correction, long expect_literal) {
        Document doc = corpus_document(doc_name);
        OrderedFamily family = doc.family("p_inf");
        CompactificationDelta cd = compactification_delta(family, infinity);
        bool ok = cd.contract_holds() && cd.delta_noncompact == expect_noncompact &&
                  cd.delta_compactified == expect_compact && cd.correction == expect_correction &&
                  cd.links_at_infinity_delta == expect_literal;
        std::ostringstream detail;
        detail << istr(cd.delta_noncompact) << " = " << istr(cd.delta_compactified) << " - "
               << istr(cd.correction) << "; literal links-at-infinity delta "
               << istr(cd.links_at_infinity_delta);
        out.push_back(result("compactification[" + doc_name + "]", ok, detail.str()));
    };
    run_case("line_compactified", 0, 2, 4, 2, 0);
    run_case("plane_compactified", 0, 0, 0, 0, 0);

    // A compact base glued to an isolated point at infinity: zero correction.
    {
        std::vector<Simplex> gens;
        for (int i = 0; i < 6; ++i) gens.push_back(make_simplex({i, (i + 1) % 6}));
        gens.push_back(Simplex{6});
        auto parent = make_complex_ptr(Complex::from_generators(gens));
        Complex member = Complex::from_generators({Simplex{0}, Simplex{6}});
        OrderedFamily family = OrderedFamily::create(parent, {member}, {true}, "p_inf");
        CompactificationDelta cd = compactification_delta(family, 6);
        bool ok = cd.contract_holds() && cd.correction == 0 &&
                  cd.delta_noncompact == cd.delta_compactified && cd.delta_noncompact == 2;
        out.push_back(result("compactification[compact_base]", ok,
                             istr(cd.delta_noncompact) + " = " + istr(cd.delta_compactified) +
                                 " - " + istr(cd.correction)));
    }
    return out;
}

std::vector<CheckResult> check_monodromy_table() {
    struct Row {
        std::string name;
        long mu, l_one, l_minus_one, chi_plus, chi_minus;
        std::string divisor;
    };
    const std::vector<Row> table = {
        {"circle", 1, 0, 0, 0, 0, "L1"},
        {"crossing", 1, 0, 0, 2, 2, "L1"},
        {"cusp", 2, 1, 0, 1, 1, "L1 - L2 - L3 + L6"},
        {"line_cusp", 7, 0, 0, 2, 2, "L1 - L3 + L9"},
        {"node_xy", 1, 0, 0, 2, 2, "L1"},
        {"quartic_pair", 9, -2, -2, 0, 0, "L1 + 2*L4"},
        {"tacnode_like", 3, 0, 0, 0, 0, "L1 - L2 + L4"},
        {"three_lines", 4, -1, 0, 3, 3, "L1 + L3"},
    };
    Document curves = corpus_document("plane_curves");
    std::vector<CheckResult> out;
    for (const auto& row : table) {
        std::string label = "monodromy[" + row.name + "]";
        try {
            WeightedPoly f = curves.polynomial(row.name);
            FiberCongruenceReport report = verify_fiber_congruences(f);
            bool ok = report.monodromy.mu == row.mu && report.monodromy.l_one == row.l_one &&
                      report.monodromy.l_minus_one == row.l_minus_one &&
                      report.fiber.chi_plus == row.chi_plus &&
                      report.fiber.chi_minus == row.chi_minus &&
                      report.monodromy.divisor.to_string() == row.divisor;
            if (f.degree % 2 == 1 && report.fiber.chi_plus != report.fiber.chi_minus) ok = false;
            std::ostringstream detail;
            detail << "divisor " << report.monodromy.divisor.to_string() << ", mu "
                   << istr(report.monodromy.mu) << ", chi (" << istr(report.fiber.chi_plus) << ","
                   << istr(report.fiber.chi_minus) << "), congruences hold";
            out.push_back(result(label, ok, detail.str()));
        } catch (const std::exception& e) {
            out.push_back(result(label, false, e.what()));
        }
    }
    return out;
}

std::vector<CheckResult> check_local_link_identities() {
    std::vector<CheckResult> out;

    // Generic points of a one-dimensional subset: the vertex link of the
    // ambient and the localized link of the subset determine each other
    // through the odd-dimension case of the join decomposition.
    {
        Document oct = corpus_document("s2_octahedron");
        Complex X = oct.complex("X");
        Complex equator = Complex::from_closed_set(oct.set("equator").carriers());
        bool ok = true;
        std::ostringstream detail;
        for (Vertex v : equator.vertices()) {
            Integer ambient = chi_of_complex(vertex_link(v, X));
            Integer localized = localized_link(v, equator, X).chi_value();
            detail << "v" << v << ":(" << istr(ambient) << "," << istr(localized) << ") ";
            if (ambient != 2 - localized) ok = false;
        }
        out.push_back(result("case_formula[s2/equator]", ok, detail.str()));
    }
    {
        Document prism = corpus_document("tripod_prism");
        Complex X = prism.complex("X");
        Complex axis = Complex::from_closed_set(prism.set("axis").carriers());
        Integer ambient = chi_of_complex(vertex_link(4, X));
        Integer localized = localized_link(4, axis, X).chi_value();
        Complex tripod = build_complex({{0, 1}, {0, 2}, {0, 3}});
        Integer transverse = chi_of_complex(vertex_link(0, tripod));
        bool ok = ambient == 2 - localized && localized == transverse && localized == 3;
        out.push_back(result("case_formula[tripod_prism/axis]", ok,
                             "ambient " + istr(ambient) + ", localized " + istr(localized) +
                                 ", transverse model " + istr(transverse)));
    }

    // At every vertex of the subset: ambient vertex link chi decomposes into
    // localized link, link inside the subset, and the two-step iterated link.
    {
        const std::vector<std::pair<std::string, std::string>> cases = {
            {"s2_octahedron", "equator"},
            {"whitney_umbrella", "axis"},
            {"tripod_prism", "axis"},
        };
        for (const auto& [doc_name, set_name] : cases) {
            Document doc = corpus_document(doc_name);
            Complex X = doc.complex("X");
            Complex Y = Complex::from_closed_set(doc.set(set_name).carriers());
            bool ok = true;
            std::ostringstream detail;
            for (Vertex v : Y.vertices()) {
                Integer lhs = chi_of_complex(vertex_link(v, X));
                Integer localized = localized_link(v, Y, X).chi_value();
                Integer in_subset = chi_of_complex(vertex_link(v, Y));
                Complex point = Complex::from_generators({Simplex{v}});
                Integer iterated = iterated_link({point, Y}, X).chi_value();
                if (lhs != localized + in_subset - iterated) {
                    ok = false;
                    detail << "v" << v << ": " << istr(lhs) << " != " << istr(localized) << "+"
                           << istr(in_subset) << "-" << istr(iterated) << " ";
                }
            }
            if (ok) detail << "holds at " << Y.vertices().size() << " vertices";
            out.push_back(
                result("special_point_identity[" + doc_name + "/" + set_name + "]", ok,
                       detail.str()));
        }
    }

    // Vertex link chi is stable under one subdivision, and the link of a
    // one-point subcomplex specializes to the vertex link.
    {
        bool stable = true, specializes = true;
        for (const std::string& name :
             {std::string("hexagon"), std::string("boundary_delta3"), std::string("s2_octahedron"),
              std::string("whitney_umbrella")}) {
            Document doc = corpus_document(name);
            Complex X = doc.complex("X");
            SubdivisionMap sd = barycentric_subdivision(X);
            for (Vertex v : X.vertices()) {
                Integer direct = chi_of_complex(vertex_link(v, X));
                Integer refined = chi_of_complex(vertex_link(sd.transport_vertex(v), *sd.target));
                if (direct != refined) stable = false;
                Complex point = Complex::from_generators({Simplex{v}});
                if (subcomplex_link(point, X).chi_value() != direct) specializes = false;
            }
        }
        out.push_back(result("vertex_link[subdivision_stability]", stable, "all corpus vertices"));
        out.push_back(result("vertex_link[point_specialization]", specializes,
                             "one-point links match vertex links"));
    }

    // Derived neighborhoods retract onto their cores.
    {
        bool ok = true;
        std::ostringstream detail;
        Document hex = corpus_document("hexagon");
        Complex circle = hex.complex("X");
        Complex vertex = Complex::from_generators({Simplex{0}});
        ok = ok && chi(derived_neighborhood(vertex, circle)) == 1;
        Document oct = corpus_document("s2_octahedron");
        Complex sphere = oct.complex("X");
        Complex equator = Complex::from_closed_set(oct.set("equator").carriers());
        ok = ok && chi(derived_neighborhood(equator, sphere)) == 0;
        ConstructibleSet whole = derived_neighborhood(sphere, sphere);
        ok = ok && whole.carriers() == barycentric_subdivision(sphere).target->simplices();
        detail << "vertex in circle, equator band, whole complex";
        out.push_back(result("derived_neighborhood[chi]", ok, detail.str()));
    }
    return out;
}

std::vector<CheckResult> run_all_checks() {
    std::vector<CheckResult> all;
    auto append = [&](std::vector<CheckResult> part) {
        for (auto& r : part) all.push_back(std::move(r));
    };
    append(check_corpus_documents());
    append(check_evenness_obstructions());
    append(check_link_identity_randomized(120, 20260810u));
    append(check_chi_cross_validation(120, 20260811u));
    append(check_nested_family_links());
    append(check_divisibility());
    append(check_double_cone_identity());
    append(check_constancy());
    append(check_duality_residues());
    append(check_compactification());
    append(check_monodromy_table());
    append(check_local_link_identities());
    return all;
}

}  // namespace eulink
