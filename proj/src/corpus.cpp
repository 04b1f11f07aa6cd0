#include "eulink/corpus.hpp"

#include "eulink/congruence.hpp"
#include "eulink/errors.hpp"

namespace eulink {

namespace {

SetDecl closed_set(const std::string& complex, SimplexSet cells) {
    return SetDecl{complex, "closed", std::move(cells)};
}

SimplexSet closure_of(const std::vector<Simplex>& gens) {
    return Complex::from_generators(gens).simplices();
}

// Circle on six vertices 0..5.
Document make_hexagon() {
    Document doc;
    doc.name = "hexagon";
    doc.description = "circle triangulated as a hexagon";
    ComplexDecl cd;
    for (int i = 0; i < 6; ++i) cd.generators.push_back(make_simplex({i, (i + 1) % 6}));
    cd.algebraic = true;
    doc.complexes.emplace("X", cd);
    doc.sets.emplace("p", closed_set("X", {{0}}));
    doc.sets.emplace("arc", closed_set("X", closure_of({{0, 1}, {1, 2}})));
    doc.sets.emplace("rest", SetDecl{"X", "any", [] {
                                         SimplexSet all;
                                         for (int i = 0; i < 6; ++i) {
                                             if (i) all.insert({i});
                                             all.insert(make_simplex({i, (i + 1) % 6}));
                                         }
                                         return all;
                                     }()});
    doc.families.emplace("pt", FamilyDecl{"X", {"p"}, true, {true}});
    StratificationDecl strat;
    strat.complex = "X";
    strat.strata.emplace("p", StratumDecl{"p", true});
    strat.strata.emplace("rest", StratumDecl{"rest", true});
    doc.stratifications.emplace("by_point", strat);
    return doc;
}

// Boundary of the 3-simplex: a 2-sphere on four vertices.
Document make_boundary_delta3() {
    Document doc;
    doc.name = "boundary_delta3";
    doc.description = "two-sphere as the boundary of a tetrahedron";
    ComplexDecl cd;
    cd.generators = {make_simplex({0, 1, 2}), make_simplex({0, 1, 3}), make_simplex({0, 2, 3}),
                     make_simplex({1, 2, 3})};
    cd.algebraic = true;
    doc.complexes.emplace("X", cd);
    doc.sets.emplace("p", closed_set("X", {{0}}));
    SimplexSet rest;
    for (const auto& s : Complex::from_generators(cd.generators).simplices())
        if (s != Simplex{0}) rest.insert(s);
    doc.sets.emplace("rest", SetDecl{"X", "any", rest});
    doc.families.emplace("pt", FamilyDecl{"X", {"p"}, true, {true}});
    StratificationDecl strat;
    strat.complex = "X";
    strat.strata.emplace("p", StratumDecl{"p", true});
    strat.strata.emplace("rest", StratumDecl{"rest", true});
    doc.stratifications.emplace("by_point", strat);
    return doc;
}

// Cone over a theta graph: apex 0, theta vertices 1,2 joined by three arcs
// subdivided through 3, 4, 5. The link of the apex has odd Euler
// characteristic, so the evenness audit must flag it.
Document make_theta_cone() {
    Document doc;
    doc.name = "theta_cone";
    doc.description = "cone over a theta graph; the apex link has chi -1";
    doc.expect_obstruction = true;
    std::vector<Simplex> theta;
    for (int mid : {3, 4, 5}) {
        theta.push_back(make_simplex({1, mid}));
        theta.push_back(make_simplex({mid, 2}));
    }
    ComplexDecl cd;
    for (const auto& e : theta) {
        cd.generators.push_back(make_simplex({0, e[0], e[1]}));
    }
    doc.complexes.emplace("X", cd);
    doc.sets.emplace("apex", closed_set("X", {{0}}));
    doc.families.emplace("apex", FamilyDecl{"X", {"apex"}, true, {true}});
    return doc;
}

// Octahedral 2-sphere: poles 0 (north) and 1 (south), equator 2,3,4,5 with
// the marked point 2 on the equator.
Document make_s2_octahedron() {
    Document doc;
    doc.name = "s2_octahedron";
    doc.description = "two-sphere as an octahedron with an equator circle";
    ComplexDecl cd;
    for (int pole : {0, 1})
        for (int i = 0; i < 4; ++i)
            cd.generators.push_back(make_simplex({pole, 2 + i, 2 + (i + 1) % 4}));
    cd.algebraic = true;
    doc.complexes.emplace("X", cd);
    SimplexSet equator = closure_of({{2, 3}, {3, 4}, {4, 5}, {2, 5}});
    doc.sets.emplace("p", closed_set("X", {{2}}));
    doc.sets.emplace("equator", closed_set("X", equator));
    SimplexSet equator_rest = equator;
    equator_rest.erase({2});
    doc.sets.emplace("equator_rest", SetDecl{"X", "any", equator_rest});
    SimplexSet caps;
    for (const auto& s : Complex::from_generators(cd.generators).simplices())
        if (!equator.count(s)) caps.insert(s);
    doc.sets.emplace("caps", SetDecl{"X", "open", caps});
    doc.families.emplace("point_equator", FamilyDecl{"X", {"p", "equator"}, true, {true, true}});
    doc.families.emplace("equator", FamilyDecl{"X", {"equator"}, true, {true}});
    StratificationDecl strat;
    strat.complex = "X";
    strat.strata.emplace("p", StratumDecl{"p", true});
    strat.strata.emplace("equator_rest", StratumDecl{"equator_rest", true});
    strat.strata.emplace("caps", StratumDecl{"caps", true});
    doc.stratifications.emplace("by_equator", strat);
    return doc;
}

// Product of a tripod (cone on three points) with an interval, triangulated
// on three levels. The axis is the center edge path; its interior vertex has
// a three-point transverse link, which makes the whole complex fail the
// evenness obstruction (a tripod is not an algebraic set).
Document make_tripod_prism() {
    Document doc;
    doc.name = "tripod_prism";
    doc.description = "tripod times interval with the center axis marked";
    doc.expect_obstruction = true;
    // Level l vertices: center 4l, legs 4l+1, 4l+2, 4l+3 for l = 0,1,2.
    ComplexDecl cd;
    for (int l = 0; l < 2; ++l) {
        int c0 = 4 * l, c1 = 4 * (l + 1);
        for (int leg = 1; leg <= 3; ++leg) {
            int b0 = c0 + leg, b1 = c1 + leg;
            // Square c0 b0 c1 b1 split along the diagonal from c0.
            cd.generators.push_back(make_simplex({c0, b0, b1}));
            cd.generators.push_back(make_simplex({c0, c1, b1}));
        }
    }
    doc.complexes.emplace("X", cd);
    doc.sets.emplace("axis", closed_set("X", closure_of({{0, 4}, {4, 8}})));
    doc.families.emplace("axis", FamilyDecl{"X", {"axis"}, true, {false}});
    return doc;
}

// Compactified umbrella surface: the cone with apex 0 over (G + isolated 2)
// glued to the cone with apex 3 over the same base, where G is the graph of
// two arcs through the pole 1 with common endpoints 4 and 5. Vertex ids:
//   0 origin, 1 positive axis, 2 negative axis, 3 infinity,
//   4,5 zero-level canopy ends, 6..9 arc midpoints.
Document make_whitney_umbrella() {
    Document doc;
    doc.name = "whitney_umbrella";
    doc.description = "compactified umbrella surface with handle and axis circle";
    std::vector<Simplex> base_edges;
    for (int mid : {6, 7})
        for (auto [a, b] : {std::pair{4, mid}, std::pair{mid, 1}})
            base_edges.push_back(make_simplex({a, b}));
    for (int mid : {8, 9})
        for (auto [a, b] : {std::pair{1, mid}, std::pair{mid, 5}})
            base_edges.push_back(make_simplex({a, b}));
    ComplexDecl cd;
    for (int apex : {0, 3}) {
        for (const auto& e : base_edges) cd.generators.push_back(make_simplex({apex, e[0], e[1]}));
        cd.generators.push_back(make_simplex({apex, 2}));
    }
    cd.algebraic = true;
    doc.complexes.emplace("X", cd);

    SimplexSet axis = closure_of({{0, 1}, {1, 3}, {2, 3}, {0, 2}});
    doc.sets.emplace("origin", closed_set("X", {{0}}));
    doc.sets.emplace("infinity", closed_set("X", {{3}}));
    doc.sets.emplace("axis", closed_set("X", axis));
    doc.sets.emplace("axis_plus", SetDecl{"X", "any", {{1}, {0, 1}, {1, 3}}});
    doc.sets.emplace("axis_minus", SetDecl{"X", "any", {{2}, {0, 2}, {2, 3}}});
    SimplexSet canopy;
    for (const auto& s : Complex::from_generators(cd.generators).simplices())
        if (!axis.count(s)) canopy.insert(s);
    doc.sets.emplace("canopy", SetDecl{"X", "open", canopy});

    doc.families.emplace("axis", FamilyDecl{"X", {"axis"}, true, {true}});
    doc.families.emplace("origin_axis", FamilyDecl{"X", {"origin", "axis"}, true, {true, true}});

    StratificationDecl strat;
    strat.complex = "X";
    strat.strata.emplace("origin", StratumDecl{"origin", true});
    strat.strata.emplace("infinity", StratumDecl{"infinity", true});
    strat.strata.emplace("axis_plus", StratumDecl{"axis_plus", true});
    strat.strata.emplace("axis_minus", StratumDecl{"axis_minus", true});
    strat.strata.emplace("canopy", StratumDecl{"canopy", true});
    doc.stratifications.emplace("by_axis", strat);
    return doc;
}

// Circle with antipodal marked vertices: infinity at 0 and the point at 3.
// Removing the infinity cell leaves a line with one marked point.
Document make_line_compactified() {
    Document doc;
    doc.name = "line_compactified";
    doc.description = "compactified line: circle with a marked point and a point at infinity";
    ComplexDecl cd;
    for (int i = 0; i < 6; ++i) cd.generators.push_back(make_simplex({i, (i + 1) % 6}));
    cd.algebraic = true;
    doc.complexes.emplace("X", cd);
    doc.sets.emplace("p_inf", closed_set("X", {{0}, {3}}));
    doc.families.emplace("p_inf", FamilyDecl{"X", {"p_inf"}, true, {true}});
    return doc;
}

// Octahedral sphere with antipodal marked vertices: infinity at 0, point 1.
Document make_plane_compactified() {
    Document doc;
    doc.name = "plane_compactified";
    doc.description = "compactified plane: sphere with a marked point and a point at infinity";
    ComplexDecl cd;
    for (int pole : {0, 1})
        for (int i = 0; i < 4; ++i)
            cd.generators.push_back(make_simplex({pole, 2 + i, 2 + (i + 1) % 4}));
    cd.algebraic = true;
    doc.complexes.emplace("X", cd);
    doc.sets.emplace("p_inf", closed_set("X", {{0}, {1}}));
    doc.families.emplace("p_inf", FamilyDecl{"X", {"p_inf"}, true, {true}});
    return doc;
}

// Double cone over the hexagon circle carrying the doubled point family:
// apex 0, the two circle copies on odd/even ids. Built through the same
// construction the delta engine uses.
Document make_double_cone_hexagon() {
    std::vector<Simplex> gens;
    for (int i = 0; i < 6; ++i) gens.push_back(make_simplex({i, (i + 1) % 6}));
    Complex hexagon = Complex::from_generators(gens);
    Complex point = Complex::from_generators({Simplex{0}});
    OrderedFamily base = OrderedFamily::create(make_complex_ptr(hexagon), {point}, {true}, "pt");
    DoubleCone dc = double_cone(base);

    Document doc;
    doc.name = "double_cone_hexagon";
    doc.description = "double cone over a circle with the doubled point family";
    ComplexDecl cd;
    cd.generators = document_generators(dc.complex);
    cd.algebraic = true;
    doc.complexes.emplace("X", cd);
    doc.sets.emplace("apex", closed_set("X", dc.family.members[0].simplices()));
    doc.sets.emplace("axis", closed_set("X", dc.family.members[1].simplices()));
    doc.families.emplace("apex_axis", FamilyDecl{"X", {"apex", "axis"}, true, {true, true}});
    return doc;
}

// The eight reference polynomials of the monodromy table.
Document make_plane_curves() {
    Document doc;
    doc.name = "plane_curves";
    doc.description = "weighted homogeneous plane curve germs";
    auto add = [&](const std::string& name, int w1, int w2, long long d,
                   std::vector<std::tuple<int, int, long>> terms) {
        WeightedPoly f;
        f.name = name;
        f.w1 = w1;
        f.w2 = w2;
        f.degree = d;
        for (auto [a, b, c] : terms) f.terms[{a, b}] = Rational(c);
        doc.polynomials.emplace(name, std::move(f));
    };
    add("cusp", 3, 2, 6, {{2, 0, 1}, {0, 3, 1}});                 // x^2 + y^3
    add("node_xy", 1, 1, 2, {{1, 1, 1}});                         // x y
    add("circle", 1, 1, 2, {{2, 0, 1}, {0, 2, 1}});               // x^2 + y^2
    add("crossing", 1, 1, 2, {{2, 0, 1}, {0, 2, -1}});            // x^2 - y^2
    add("three_lines", 1, 1, 3, {{3, 0, 1}, {1, 2, -1}});         // x^3 - x y^2
    add("tacnode_like", 2, 1, 4, {{2, 0, 1}, {0, 4, 1}});         // x^2 + y^4
    add("quartic_pair", 1, 1, 4, {{4, 0, 1}, {0, 4, 1}});         // x^4 + y^4
    add("line_cusp", 3, 2, 9, {{3, 0, 1}, {1, 3, 1}});            // x^3 + x y^3
    return doc;
}

}  // namespace

std::vector<Document> corpus() {
    std::vector<Document> docs;
    docs.push_back(make_hexagon());
    docs.push_back(make_boundary_delta3());
    docs.push_back(make_theta_cone());
    docs.push_back(make_s2_octahedron());
    docs.push_back(make_tripod_prism());
    docs.push_back(make_whitney_umbrella());
    docs.push_back(make_line_compactified());
    docs.push_back(make_plane_compactified());
    docs.push_back(make_double_cone_hexagon());
    docs.push_back(make_plane_curves());
    return docs;
}

std::vector<std::string> corpus_names() {
    std::vector<std::string> names;
    for (const auto& d : corpus()) names.push_back(d.name);
    return names;
}

Document corpus_document(const std::string& name) {
    for (auto& d : corpus())
        if (d.name == name) return d;
    throw input_error("corpus: no document named '" + name + "'");
}

}  // namespace eulink
