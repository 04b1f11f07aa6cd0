#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "eulink/corpus.hpp"
#include "eulink/errors.hpp"
#include "eulink/links.hpp"
#include "eulink/selfcheck.hpp"

using namespace eulink;

namespace {

Complex hexagon() {
    std::vector<std::vector<Vertex>> gens;
    for (int i = 0; i < 6; ++i) gens.push_back({i, (i + 1) % 6});
    return build_complex(gens);
}

Complex sphere2() { return build_complex({{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}); }

Complex theta_cone() { return corpus_document("theta_cone").complex("X"); }

Complex octahedron() { return corpus_document("s2_octahedron").complex("X"); }

Complex umbrella() { return corpus_document("whitney_umbrella").complex("X"); }

}  // namespace

TEST_CASE("vertex link") {
    Complex lk = vertex_link(0, sphere2());
    CHECK(lk.f_vector() == std::vector<std::size_t>{3, 3});
    CHECK(chi_of_complex(lk) == 0);

    Complex theta = vertex_link(0, theta_cone());
    CHECK(theta.f_vector() == std::vector<std::size_t>{5, 6});
    CHECK(chi_of_complex(theta) == -1);

    Complex with_isolated = build_complex({{0}, {1, 2}});
    CHECK(vertex_link(0, with_isolated).empty());
    CHECK_THROWS_AS(vertex_link(9, with_isolated), input_error);
}

TEST_CASE("point link chi by join decomposition") {
    // Interior edge of a triangulated sphere: boundary of the edge joined
    // with two points, a circle.
    CHECK(point_link_chi({0, 1}, sphere2()) == 0);
    // Maximal simplex: the boundary sphere.
    CHECK(point_link_chi({0, 1, 2}, sphere2()) == 2);
    Complex path = build_complex({{0, 1}});
    CHECK(point_link_chi({0, 1}, path) == 2);
    CHECK_THROWS_AS(point_link_chi({4, 7}, path), input_error);
}

TEST_CASE("point link of a constructible set") {
    auto parent = make_complex_ptr(build_complex({{0, 1, 2}}));
    ConstructibleSet open_triangle(parent, {{0, 1, 2}});
    ConstructibleSet lk = point_link_constructible(0, open_triangle);
    CHECK(lk.carriers() == SimplexSet{{1, 2}});
    CHECK(chi(lk) == 1);

    // Closed complex: matches the vertex link.
    ConstructibleSet whole(parent, parent->simplices());
    ConstructibleSet lk2 = point_link_constructible(0, whole);
    CHECK(chi(lk2) == chi_of_complex(vertex_link(0, *parent)));

    ConstructibleSet far(parent, {{1}, {1, 2}});
    CHECK(point_link_constructible(0, far).empty());
}

TEST_CASE("subcomplex link of a vertex reduces to the vertex link") {
    Complex X = sphere2();
    LinkModel lm = subcomplex_link(build_complex({{0}}), X);
    CHECK(lm.chi_value() == 0);
    // Subdivided circle: six vertices and six edges.
    CHECK(lm.complex->f_vector() == std::vector<std::size_t>{6, 6});
}

TEST_CASE("subcomplex link fixtures") {
    // Two-edge arc in the circle: two points.
    LinkModel arc = subcomplex_link(build_complex({{0, 1}, {1, 2}}), hexagon());
    CHECK(arc.chi_value() == 2);
    CHECK(arc.complex->dimension() == 0);

    // Equator of the octahedral sphere: chi 0.
    Document oct = corpus_document("s2_octahedron");
    LinkModel eq = subcomplex_link(Complex::from_closed_set(oct.set("equator").carriers()),
                                   octahedron());
    CHECK(eq.chi_value() == 0);
    CHECK(eq.complex->dimension() == 1);

    CHECK_THROWS_AS(subcomplex_link(build_complex({{9, 10}}), hexagon()), input_error);
}

TEST_CASE("subcomplex link handles non-full cores by subdividing") {
    // Two opposite vertices of one edge's boundary: the subcomplex {0},{1}
    // is not full in the closed edge.
    Complex edge = build_complex({{0, 1}});
    Complex ends = build_complex({{0}, {1}});
    LinkModel lm = subcomplex_link(ends, edge);
    CHECK(lm.subdivision != nullptr);
    CHECK(lm.chi_value() == 2);
}

TEST_CASE("localized link") {
    Complex path = build_complex({{0, 1}, {1, 2}});
    LinkModel lm = localized_link(1, build_complex({{1}}), path);
    CHECK(lm.chi_value() == 2);
    CHECK(lm.complex->f_vector() == std::vector<std::size_t>{2});

    // Core equal to the whole complex: empty link.
    LinkModel empty = localized_link(1, path, path);
    CHECK(empty.complex->empty());

    // Vertex off the core: empty by definition.
    LinkModel off = localized_link(0, build_complex({{2}}), path);
    CHECK(off.complex->empty());

    // Positive axis point of the umbrella against the axis circle.
    Document doc = corpus_document("whitney_umbrella");
    Complex axis = Complex::from_closed_set(doc.set("axis").carriers());
    LinkModel axis_plus = localized_link(1, axis, umbrella());
    CHECK(axis_plus.chi_value() == 4);
}

TEST_CASE("iterated link") {
    // Single point in the circle: two points.
    Document hexdoc = corpus_document("hexagon");
    OrderedFamily pt = hexdoc.family("pt");
    LinkModel lm = iterated_link(pt, *pt.parent);
    CHECK(lm.chi_value() == 2);

    // Marked point and equator in the sphere: four points.
    Document oct = corpus_document("s2_octahedron");
    OrderedFamily pe = oct.family("point_equator");
    LinkModel lm2 = iterated_link(pe, *pe.parent);
    CHECK(lm2.chi_value() == 4);
    CHECK(lm2.complex->dimension() == 0);
    CHECK(lm2.complex->size() == 4);

    // Singleton family agrees with the one-step link.
    OrderedFamily eq = oct.family("equator");
    CHECK(iterated_link(eq, *eq.parent).chi_value() ==
          subcomplex_link(eq.members[0], *eq.parent).chi_value());

    // Non-nested families are rejected.
    auto parent = make_complex_ptr(hexagon());
    OrderedFamily bad = OrderedFamily::create(
        parent, {build_complex({{0}}), build_complex({{3}})}, {}, "bad");
    CHECK_FALSE(bad.nested);
    CHECK_THROWS_AS(iterated_link(bad, *parent), input_error);
}

TEST_CASE("localized iterated link") {
    Document oct = corpus_document("s2_octahedron");
    OrderedFamily pe = oct.family("point_equator");
    LinkModel lm = localized_iterated_link(2, pe, *pe.parent);
    CHECK(lm.chi_value() == 4);

    // Family of just the vertex: the subdivided vertex link.
    Document hexdoc = corpus_document("hexagon");
    OrderedFamily pt = hexdoc.family("pt");
    LinkModel vl = localized_iterated_link(0, pt, *pt.parent);
    CHECK(vl.chi_value() == chi_of_complex(vertex_link(0, *pt.parent)));

    // A vertex adjacent to the core: the star meets the core away from the
    // vertex, which forces the conical normalization; the link is empty.
    LinkModel adj = localized_iterated_link(1, pt, *pt.parent);
    CHECK(adj.chi_value() == 0);
    CHECK(adj.complex->empty());
}

TEST_CASE("derived neighborhood") {
    Complex circle = hexagon();
    ConstructibleSet star = derived_neighborhood(build_complex({{0}}), circle);
    CHECK(chi(star) == 1);
    CHECK(star.is_closed());

    Document oct = corpus_document("s2_octahedron");
    Complex equator = Complex::from_closed_set(oct.set("equator").carriers());
    ConstructibleSet band = derived_neighborhood(equator, octahedron());
    CHECK(chi(band) == 0);

    ConstructibleSet whole = derived_neighborhood(circle, circle);
    CHECK(whole.carriers() == barycentric_subdivision(circle).target->simplices());

    // Non-full core is rejected.
    Complex edge = build_complex({{0, 1}});
    CHECK_THROWS_AS(derived_neighborhood(build_complex({{0}, {1}}), edge), input_error);
}

TEST_CASE("link identity against the three-term chi formula") {
    Rng rng(21);
    for (int i = 0; i < 60; ++i) {
        Complex X = random_complex(rng);
        Complex Y = random_closed_subcomplex(rng, X);
        SimplexSet U = random_carrier_subset(rng, X);
        LinkModel lm = subcomplex_link(Y, X);
        SimplexSet refined = lm.subdivision ? lm.subdivision->refine(U) : U;
        Integer lhs = chi(lm.trace(refined));
        Integer rhs = chi(Y.simplices()) + chi(set_minus(U, Y.simplices())) -
                      chi(set_union(U, Y.simplices()));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("vertex link chi is stable under subdivision") {
    Rng rng(22);
    for (int i = 0; i < 15; ++i) {
        Complex X = random_complex(rng, 7, 8, 3, 80);
        if (X.vertices().empty()) continue;
        SubdivisionMap sd = barycentric_subdivision(X);
        for (Vertex v : X.vertices())
            CHECK(chi_of_complex(vertex_link(v, X)) ==
                  chi_of_complex(vertex_link(sd.transport_vertex(v), *sd.target)));
    }
}
