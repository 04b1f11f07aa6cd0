#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "eulink/corpus.hpp"
#include "eulink/errors.hpp"
#include "eulink/monodromy.hpp"
#include "eulink/selfcheck.hpp"
#include "oracles.hpp"

using namespace eulink;

namespace {

WeightedPoly curve(const std::string& name) {
    return corpus_document("plane_curves").polynomial(name);
}

WeightedPoly make_poly(int w1, int w2, long long d,
                       std::vector<std::tuple<int, int, long>> terms) {
    WeightedPoly f;
    f.w1 = w1;
    f.w2 = w2;
    f.degree = d;
    for (auto [a, b, c] : terms) f.terms[{a, b}] = Rational(c);
    return f;
}

}  // namespace

TEST_CASE("validation") {
    CHECK_NOTHROW(validate(curve("cusp")));
    // Wrong weights break homogeneity.
    CHECK_THROWS_AS(validate(make_poly(1, 1, 2, {{2, 0, 1}, {0, 3, 1}})), input_error);
    // x^2 y is divisible by a square.
    CHECK_THROWS_AS(validate(make_poly(1, 1, 3, {{2, 1, 1}})), input_error);
    // (x + y)^2 has a repeated slice factor.
    CHECK_THROWS_AS(validate(make_poly(1, 1, 2, {{2, 0, 1}, {1, 1, 2}, {0, 2, 1}})), input_error);
    CHECK_THROWS_AS(validate(make_poly(0, 1, 1, {{0, 1, 1}})), input_error);
}

TEST_CASE("monodromy divisor fixtures") {
    CHECK(monodromy_divisor(curve("cusp")).to_string() == "L1 - L2 - L3 + L6");
    CHECK(monodromy_divisor(curve("tacnode_like")).to_string() == "L1 - L2 + L4");
    CHECK(monodromy_divisor(curve("line_cusp")).to_string() == "L1 - L3 + L9");
    CHECK(monodromy_divisor(curve("node_xy")).to_string() == "L1");
    CHECK(monodromy_divisor(curve("three_lines")).to_string() == "L1 + L3");
}

TEST_CASE("divisor eigenvalues match product enumeration") {
    // Integral d/w cases enumerate directly.
    for (const auto& name : {"cusp", "node_xy", "circle", "crossing", "three_lines",
                             "tacnode_like", "quartic_pair"}) {
        WeightedPoly f = curve(name);
        long long u1 = f.degree / f.w1, u2 = f.degree / f.w2;
        REQUIRE(u1 * f.w1 == f.degree);
        REQUIRE(u2 * f.w2 == f.degree);
        auto expected = test_oracles::product_eigenvalues(u1, u2);
        auto got = monodromy_divisor(f).eigenvalue_multiset();
        CHECK(got == expected);
    }
}

TEST_CASE("total eigenvalue count matches the Jacobian quotient dimension") {
    for (const auto& name :
         {"cusp", "node_xy", "circle", "three_lines", "tacnode_like", "quartic_pair", "line_cusp"}) {
        WeightedPoly f = curve(name);
        CHECK(monodromy_divisor(f).total_degree() ==
              test_oracles::jacobian_quotient_dimension(f));
    }
}

TEST_CASE("eigen data") {
    MonodromyData cusp = eigen_data(monodromy_divisor(curve("cusp")));
    CHECK(cusp.mu == 2);
    CHECK(cusp.mult_one == 0);
    CHECK(cusp.mult_minus_one == 0);
    CHECK(cusp.l_one == 1);
    CHECK(cusp.l_minus_one == 0);

    MonodromyData node = eigen_data(monodromy_divisor(curve("node_xy")));
    CHECK(node.mu == 1);
    CHECK(node.mult_one == 1);
    CHECK(node.l_one == 0);

    MonodromyData lines = eigen_data(monodromy_divisor(curve("three_lines")));
    CHECK(lines.mult_one == 2);
    CHECK(lines.l_one == -1);
    CHECK(lines.l_minus_one == 0);
}

TEST_CASE("real fibre chi fixtures") {
    struct Row {
        const char* name;
        long plus, minus;
    };
    for (const auto& row : std::vector<Row>{{"cusp", 1, 1},
                                            {"node_xy", 2, 2},
                                            {"circle", 0, 0},
                                            {"crossing", 2, 2},
                                            {"three_lines", 3, 3},
                                            {"tacnode_like", 0, 0},
                                            {"quartic_pair", 0, 0},
                                            {"line_cusp", 2, 2}}) {
        WeightedPoly f = curve(row.name);
        RealFiberData fd = real_fiber_chi(f);
        CHECK(fd.chi_plus == row.plus);
        CHECK(fd.chi_minus == row.minus);
        CHECK(fd.boundary_endpoints_plus == 2 * fd.chi_plus);
        CHECK(fd.boundary_endpoints_minus == 2 * fd.chi_minus);
        auto oracle = test_oracles::fiber_chi_circle_oracle(f);
        CHECK(fd.chi_plus == oracle.first);
        CHECK(fd.chi_minus == oracle.second);
    }
}

TEST_CASE("fibre congruences hold on the table") {
    for (const auto& name : {"cusp", "node_xy", "circle", "crossing", "three_lines",
                             "tacnode_like", "quartic_pair", "line_cusp"}) {
        FiberCongruenceReport report = verify_fiber_congruences(curve(name));
        CHECK(report.pass);
        // Odd total degree forces equal fibre characteristics.
        WeightedPoly f = curve(name);
        if (f.degree % 2 == 1) CHECK(report.fiber.chi_plus == report.fiber.chi_minus);
    }
}

TEST_CASE("fibre congruences hold on randomized reduced polynomials") {
    Rng rng(55);
    int tested = 0;
    while (tested < 60) {
        int w1 = 1 + static_cast<int>(rng() % 3);
        int w2 = 1 + static_cast<int>(rng() % 3);
        long long d = static_cast<long long>(std::lcm(w1, w2)) *
                      (1 + static_cast<long long>(rng() % 4));
        WeightedPoly f;
        f.w1 = w1;
        f.w2 = w2;
        f.degree = d;
        for (int a = 0; static_cast<long long>(a) * w1 <= d; ++a) {
            long long rem = d - static_cast<long long>(a) * w1;
            if (rem % w2) continue;
            long coeff = static_cast<long>(rng() % 7) - 3;
            if (coeff != 0) f.terms[{a, static_cast<int>(rem / w2)}] = Rational(coeff);
        }
        try {
            validate(f);
        } catch (const input_error&) {
            continue;
        }
        FiberCongruenceReport report = verify_fiber_congruences(f);
        CHECK(report.pass);
        auto oracle = test_oracles::fiber_chi_circle_oracle(f);
        CHECK(report.fiber.chi_plus == oracle.first);
        CHECK(report.fiber.chi_minus == oracle.second);
        if (d % 2 == 1) CHECK(report.fiber.chi_plus == report.fiber.chi_minus);
        ++tested;
    }
}

TEST_CASE("alternating congruence checker") {
    // Coordinate pair: every fibre is a point.
    std::map<std::string, Integer> chis{{"++", 1}, {"+-", 1}, {"-+", 1}, {"--", 1}};
    AlternatingCongruenceReport ok = verify_alternating_congruence(chis, 0, 2);
    CHECK(ok.alternating_sum == 0);
    CHECK(ok.pass());

    // One-function data reduces to the fibre difference congruence.
    FiberCongruenceReport cusp = verify_fiber_congruences(curve("cusp"));
    std::map<std::string, Integer> one{{"+", cusp.fiber.chi_plus}, {"-", cusp.fiber.chi_minus}};
    AlternatingCongruenceReport k1 =
        verify_alternating_congruence(one, cusp.monodromy.l_minus_one, 1);
    CHECK(k1.pass());

    // Synthetic failure.
    std::map<std::string, Integer> bad{{"++", 1}, {"+-", 0}, {"-+", 0}, {"--", 0}};
    AlternatingCongruenceReport fail = verify_alternating_congruence(bad, 0, 2);
    CHECK_FALSE(fail.divisible);
    CHECK_FALSE(fail.pass());

    CHECK_THROWS_AS(verify_alternating_congruence({{"+", 1}}, 0, 2), input_error);
}

TEST_CASE("root isolation toolbox") {
    // (t^2 - 2)(t - 1): three real roots.
    UPoly p(std::vector<Rational>{2, -2, -1, 1});
    auto pattern = sign_pattern_over_line(p);
    REQUIRE(pattern.size() == 7);
    CHECK(pattern[0] == -1);
    CHECK(pattern[2] == 1);
    CHECK(pattern[4] == -1);
    CHECK(pattern[6] == 1);

    // Repeated roots keep the sign on both sides.
    UPoly sq(std::vector<Rational>{0, 0, 1});  // t^2
    auto sq_pattern = sign_pattern_over_line(sq);
    REQUIRE(sq_pattern.size() == 3);
    CHECK(sq_pattern[0] == 1);
    CHECK(sq_pattern[1] == 0);
    CHECK(sq_pattern[2] == 1);

    CHECK(is_squarefree(UPoly(std::vector<Rational>{-1, 0, 1})));
    CHECK_FALSE(is_squarefree(sq));
    CHECK(isolate_real_roots(UPoly(std::vector<Rational>{1, 0, 1})).empty());
}
