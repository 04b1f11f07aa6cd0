#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "eulink/constructible_function.hpp"
#include "eulink/corpus.hpp"
#include "eulink/errors.hpp"
#include "eulink/links.hpp"
#include "eulink/selfcheck.hpp"

using namespace eulink;

namespace {

ComplexPtr interval() { return make_complex_ptr(build_complex({{0, 1}})); }

ComplexPtr sphere2() {
    return make_complex_ptr(build_complex({{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}));
}

ConstructibleFunction random_function(Rng& rng, ComplexPtr parent) {
    std::map<Simplex, Integer> w;
    for (const auto& s : parent->simplices()) {
        long v = static_cast<long>(rng() % 7) - 3;
        if (v != 0) w[s] = v;
    }
    return ConstructibleFunction(parent, std::move(w));
}

}  // namespace

TEST_CASE("from_indicators") {
    auto parent = sphere2();
    ConstructibleFunction one = from_indicators(
        parent, {{1, ConstructibleSet(parent, parent->simplices())}});
    for (const auto& s : parent->simplices()) CHECK(one.value(s) == 1);

    // Inclusion-exclusion of two edges sharing a vertex gives the
    // indicator of the union.
    auto edges = make_complex_ptr(build_complex({{0, 1}, {1, 2}}));
    ConstructibleSet a(edges, build_complex({{0, 1}}).simplices());
    ConstructibleSet b(edges, build_complex({{1, 2}}).simplices());
    ConstructibleSet ab(edges, SimplexSet{{1}});
    ConstructibleFunction u = from_indicators(edges, {{1, a}, {1, b}, {-1, ab}});
    for (const auto& s : edges->simplices()) CHECK(u.value(s) == 1);

    CHECK(from_indicators(edges, {}).weights().empty());
    CHECK_THROWS_AS(from_indicators(edges, {{1, ConstructibleSet(edges, {{0, 1}})}}), input_error);
}

TEST_CASE("link operator on basic shapes") {
    // Closed interval: one at the endpoints, two on the open edge.
    ConstructibleFunction phi = constant_one(interval());
    ConstructibleFunction lp = lambda_op(phi);
    CHECK(lp.value({0}) == 1);
    CHECK(lp.value({1}) == 1);
    CHECK(lp.value({0, 1}) == 2);

    // Sphere: all point links are circles.
    ConstructibleFunction lp2 = lambda_op(constant_one(sphere2()));
    CHECK(lp2.weights().empty());

    // Cone over the theta graph: odd value at the apex.
    Document doc = corpus_document("theta_cone");
    auto cone = doc.complex_ptr("X");
    ConstructibleFunction lp3 = lambda_op(constant_one(cone));
    CHECK(lp3.value({0}) == -1);
}

TEST_CASE("link operator matches point link chi on closed complexes") {
    Rng rng(31);
    for (int i = 0; i < 25; ++i) {
        Complex X = random_complex(rng, 7, 8, 4, 120);
        auto parent = make_complex_ptr(X);
        ConstructibleFunction lp = lambda_op(constant_one(parent));
        for (const auto& s : X.simplices()) CHECK(lp.value(s) == point_link_chi(s, X));
    }
}

TEST_CASE("duality operator") {
    ConstructibleFunction phi = constant_one(interval());
    ConstructibleFunction d = duality_op(phi);
    CHECK(d.value({0}) == 0);
    CHECK(d.value({1}) == 0);
    CHECK(d.value({0, 1}) == -1);

    ConstructibleFunction one = constant_one(sphere2());
    CHECK(duality_op(one) == one);

    ConstructibleFunction zero(sphere2(), {});
    CHECK(duality_op(zero) == zero);
}

TEST_CASE("euler integral") {
    CHECK(euler_integral(constant_one(sphere2())) == 2);
    ConstructibleFunction edge(interval(), {{{0, 1}, 1}});
    CHECK(euler_integral(edge) == -1);
    Rng rng(32);
    auto parent = sphere2();
    ConstructibleFunction f = random_function(rng, parent);
    ConstructibleFunction g = random_function(rng, parent);
    CHECK(euler_integral(f + g.scaled(3)) == euler_integral(f) + 3 * euler_integral(g));
}

TEST_CASE("evenness audit") {
    Document doc = corpus_document("theta_cone");
    EvennessReport bad = evenness_audit(constant_one(doc.complex_ptr("X")));
    REQUIRE_FALSE(bad.pass());
    CHECK(bad.odd_cells.front().first == Simplex{0});
    CHECK(bad.odd_cells.front().second == -1);

    CHECK(evenness_audit(constant_one(sphere2())).pass());

    Document umb = corpus_document("whitney_umbrella");
    CHECK(evenness_audit(constant_one(umb.complex_ptr("X"))).pass());
}

TEST_CASE("link operator is linear and representation independent") {
    Rng rng(33);
    for (int i = 0; i < 20; ++i) {
        Complex X = random_complex(rng, 7, 8, 4, 120);
        auto parent = make_complex_ptr(X);
        ConstructibleFunction f = random_function(rng, parent);
        ConstructibleFunction g = random_function(rng, parent);
        Integer a = static_cast<long>(rng() % 5) - 2;
        Integer b = static_cast<long>(rng() % 5) - 2;
        CHECK(lambda_op(f.scaled(a) + g.scaled(b)) ==
              lambda_op(f).scaled(a) + lambda_op(g).scaled(b));

        Complex A = random_closed_subcomplex(rng, X);
        Complex B = random_closed_subcomplex(rng, X);
        auto ind = [&](const Complex& K) {
            return from_indicators(parent, {{1, ConstructibleSet(parent, K.simplices())}});
        };
        Complex uni = Complex::from_closed_set(set_union(A.simplices(), B.simplices()));
        Complex inter = Complex::from_closed_set(set_intersect(A.simplices(), B.simplices()));
        CHECK(lambda_op(ind(A)) + lambda_op(ind(B)) ==
              lambda_op(ind(uni)) + lambda_op(ind(inter)));
    }
}

TEST_CASE("link operator commutes with subdivision transport") {
    Rng rng(34);
    for (int i = 0; i < 10; ++i) {
        Complex X = random_complex(rng, 6, 6, 3, 60);
        auto parent = make_complex_ptr(X);
        ConstructibleFunction f = random_function(rng, parent);
        SubdivisionMap sd = barycentric_subdivision(X);
        CHECK(transport(lambda_op(f), sd) == lambda_op(transport(f, sd)));
    }
}
