#pragma once

#include <vector>

#include "eulink/numbers.hpp"

namespace eulink {

// Dense univariate polynomial over the rationals; c[i] is the coefficient
// of t^i, trailing zeros stripped. The zero polynomial has an empty vector.
struct UPoly {
    std::vector<Rational> c;

    UPoly() = default;
    explicit UPoly(std::vector<Rational> coeffs);

    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; }
    const Rational& leading() const { return c.back(); }

    Rational eval(const Rational& x) const;
    UPoly derivative() const;

    UPoly operator+(const UPoly&) const;
    UPoly operator-(const UPoly&) const;
    UPoly operator*(const UPoly&) const;
    UPoly scaled(const Rational&) const;
};

// Remainder of the Euclidean division a = q*b + r with deg r < deg b.
UPoly remainder(const UPoly& a, const UPoly& b);

// Monic greatest common divisor; gcd(0, 0) = 0.
UPoly poly_gcd(UPoly a, UPoly b);

bool is_squarefree(const UPoly& p);

// p divided by gcd(p, p'): same distinct roots, all simple.
UPoly squarefree_part(const UPoly& p);

int sign_of(const Rational& q);
int sign_at(const UPoly& p, const Rational& x);
int sign_at_plus_infinity(const UPoly& p);
int sign_at_minus_infinity(const UPoly& p);

// Open isolating intervals (a_i, b_i) for the distinct real roots of a
// squarefree polynomial, ordered, pairwise disjoint with b_i <= a_{i+1};
// every endpoint is a non-root.
std::vector<std::pair<Rational, Rational>> isolate_real_roots(const UPoly& p);

// Signs of p along the real line interleaved with its distinct real roots:
// [s_0, 0, s_1, 0, ..., 0, s_r] where s_0 is the sign before the first root
// and s_r the sign after the last. A root-free polynomial yields one sign.
// p must be nonzero.
std::vector<int> sign_pattern_over_line(const UPoly& p);

}  // namespace eulink
