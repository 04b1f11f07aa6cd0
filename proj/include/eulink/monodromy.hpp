#pragma once

#include <map>
#include <string>
#include <vector>

#include "eulink/numbers.hpp"
#include "eulink/upoly.hpp"

namespace eulink {

// A weighted homogeneous polynomial in two variables: every term x^a y^b
// satisfies a*w1 + b*w2 = d.
struct WeightedPoly {
    std::string name;
    int w1 = 1, w2 = 1;
    long long degree = 1;
    std::map<std::pair<int, int>, Rational> terms;  // (a, b) -> coefficient
};

// Checks weighted homogeneity and reducedness (squarefree slices f(1,t) and
// f(t,1), and multiplicity of x and of y at most one). Throws input_error.
void validate(const WeightedPoly& f);

// Univariate slices f(x0, t) for x0 = 1 or -1, and f(t, y0) likewise.
UPoly slice_in_y(const WeightedPoly& f, int x_value);
UPoly slice_in_x(const WeightedPoly& f, int y_value);

// Formal integer combination of symbols L_m, where L_m stands for the
// multiset of all m-th roots of unity. Encodes the eigenvalue multiplicities
// of the complex monodromy. Multiplication rule: L_a * L_b = gcd(a,b) *
// L_{lcm(a,b)}.
struct CyclotomicDivisor {
    std::map<long long, Integer> coeffs;  // m -> coefficient of L_m, zeros erased

    // Sum of m * c_m: the total eigenvalue count (the Milnor number).
    Integer total_degree() const;

    // Multiplicity per root of unity, keyed by the reduced fraction j/m
    // (0 <= j < m, gcd(j, m) = 1) representing exp(2 pi i j / m).
    std::map<std::pair<long long, long long>, Integer> eigenvalue_multiset() const;

    std::string to_string() const;
    bool operator==(const CyclotomicDivisor& o) const { return coeffs == o.coeffs; }
};

// Monodromy eigenvalue divisor of a valid weighted homogeneous polynomial:
// the expansion of (L_{u1}/v1 - 1)(L_{u2}/v2 - 1) with d/w_i = u_i/v_i in
// lowest terms. Guarded by three internal checks: integrality of the
// expansion, non-negativity of the eigenvalue multiset, and agreement of
// the total degree with (d-w1)(d-w2)/(w1*w2).
CyclotomicDivisor monodromy_divisor(const WeightedPoly& f);

struct MonodromyData {
    CyclotomicDivisor divisor;
    Integer mu = 0;              // total eigenvalue count
    Integer mult_one = 0;        // multiplicity of eigenvalue +1 on degree one
    Integer mult_minus_one = 0;  // multiplicity of eigenvalue -1
    Integer l_one = 0;           // alternating eigenspace dimension sum at +1
    Integer l_minus_one = 0;     // alternating eigenspace dimension sum at -1
};

MonodromyData eigen_data(const CyclotomicDivisor& divisor);

// Exact Euler characteristics of the positive and negative real fibres of f
// near the origin, from the cyclic sign sequence of f around a circle
// transversal to its zero rays: chi is half the number of (zero, adjacent
// positive side) incidences, and likewise for the negative side.
struct RealFiberData {
    Integer chi_plus = 0, chi_minus = 0;
    Integer boundary_endpoints_plus = 0, boundary_endpoints_minus = 0;
    std::vector<int> sign_sequence;  // cyclic: +1 / -1 / 0
};

RealFiberData real_fiber_chi(const WeightedPoly& f);

// Both congruences tying the real fibre Euler characteristics to the
// monodromy eigenvalue data:
//   chi_+ - chi_- even and congruent to 2 * l(-1) mod 4,
//   chi_+ + chi_- even and congruent to 2 * l(+1) mod 4.
// These hold unconditionally for valid input; violation raises
// internal_error.
struct FiberCongruenceReport {
    MonodromyData monodromy;
    RealFiberData fiber;
    Integer difference = 0, sum = 0;
    bool pass = true;
};

FiberCongruenceReport verify_fiber_congruences(const WeightedPoly& f);

// Data-level checker for the k-function generalization: the alternating sum
// of fibre Euler characteristics over all 2^k sign vectors must be divisible
// by 2^k and congruent to 2^k * l mod 2^{k+1}. Keys are strings over '+'
// and '-' of length k; |gamma| counts '-'. Failures are findings.
struct AlternatingCongruenceReport {
    int k = 0;
    Integer alternating_sum = 0;
    Integer l_value = 0;
    bool divisible = false;
    bool congruent = false;
    bool pass() const { return divisible && congruent; }
};

AlternatingCongruenceReport verify_alternating_congruence(
    const std::map<std::string, Integer>& chis, const Integer& l_value, int k);

}  // namespace eulink
