// Test-only oracles, kept independent of the implementation paths they
// check: eigenvalue multisets by direct product enumeration, the Milnor
// number by graded Jacobian-quotient dimensions, and fibre Euler
// characteristics from a rational parametrization of the round circle.
#pragma once

#include <map>
#include <numeric>
#include <vector>

#include "eulink/errors.hpp"
#include "eulink/monodromy.hpp"
#include "eulink/upoly.hpp"

namespace eulink::test_oracles {

using RootOfUnity = std::pair<long long, long long>;  // reduced j/m

inline RootOfUnity reduce_root(long long j, long long m) {
    j %= m;
    if (j < 0) j += m;
    long long g = std::gcd(j == 0 ? m : j, m);
    return {j / g, m / g};
}

// Eigenvalue multiset for d/w1 = u1, d/w2 = u2 (both integral): products of
// one nontrivial u1-th root and one nontrivial u2-th root of unity.
inline std::map<RootOfUnity, Integer> product_eigenvalues(long long u1, long long u2) {
    std::map<RootOfUnity, Integer> mult;
    for (long long i = 1; i < u1; ++i)
        for (long long j = 1; j < u2; ++j) {
            // exp(2 pi i (i/u1 + j/u2))
            long long num = i * u2 + j * u1;
            mult[reduce_root(num, u1 * u2)] += 1;
        }
    return mult;
}

// Dimension of the weighted-graded Jacobian quotient Q[x,y]/(f_x, f_y),
// summed degree by degree with exact rational elimination. Equals the total
// eigenvalue count for an isolated weighted homogeneous singularity.
inline Integer jacobian_quotient_dimension(const WeightedPoly& f) {
    std::map<std::pair<int, int>, Rational> fx, fy;
    for (const auto& [ab, c] : f.terms) {
        const auto [a, b] = ab;
        if (a > 0) fx[{a - 1, b}] += c * a;
        if (b > 0) fy[{a, b - 1}] += c * b;
    }
    auto monomials_of_wdeg = [&](long long D) {
        std::vector<std::pair<int, int>> out;
        for (int a = 0; static_cast<long long>(a) * f.w1 <= D; ++a) {
            long long rem = D - static_cast<long long>(a) * f.w1;
            if (rem % f.w2 == 0) out.push_back({a, static_cast<int>(rem / f.w2)});
        }
        return out;
    };
    auto rank_of = [](std::vector<std::vector<Rational>> rows) {
        std::size_t rank = 0;
        if (rows.empty()) return rank;
        const std::size_t cols = rows[0].size();
        for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
            std::size_t pivot = rank;
            while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
            if (pivot == rows.size()) continue;
            std::swap(rows[pivot], rows[rank]);
            for (std::size_t r = 0; r < rows.size(); ++r) {
                if (r == rank || rows[r][col] == 0) continue;
                Rational factor = rows[r][col] / rows[rank][col];
                for (std::size_t c = col; c < cols; ++c) rows[r][c] -= factor * rows[rank][c];
            }
            ++rank;
        }
        return rank;
    };

    const long long top = 2 * (f.degree - f.w1 - f.w2);
    const long long margin = f.degree;
    Integer total = 0;
    for (long long D = 0; D <= top + margin; ++D) {
        auto mons = monomials_of_wdeg(D);
        if (mons.empty()) continue;
        std::map<std::pair<int, int>, std::size_t> index;
        for (std::size_t i = 0; i < mons.size(); ++i) index[mons[i]] = i;
        std::vector<std::vector<Rational>> rows;
        auto add_rows = [&](const std::map<std::pair<int, int>, Rational>& part, long long pdeg) {
            if (D < pdeg) return;
            for (const auto& mult : monomials_of_wdeg(D - pdeg)) {
                std::vector<Rational> row(mons.size(), Rational(0));
                for (const auto& [ab, c] : part)
                    row[index.at({ab.first + mult.first, ab.second + mult.second})] += c;
                rows.push_back(std::move(row));
            }
        };
        add_rows(fx, f.degree - f.w1);
        add_rows(fy, f.degree - f.w2);
        const std::size_t dim = mons.size() - rank_of(rows);
        if (D > top && dim != 0)
            throw internal_error("jacobian oracle: algebra does not vanish above the top degree");
        total += Integer(static_cast<long>(dim));
    }
    return total;
}

// chi of the positive and negative fibres from the rational circle
// x = (1-s^2)/(1+s^2), y = 2s/(1+s^2): the sign pattern of the numerator
// polynomial in s, closed up through the point (-1, 0).
inline std::pair<Integer, Integer> fiber_chi_circle_oracle(const WeightedPoly& f) {
    int total_deg = 0;
    for (const auto& [ab, c] : f.terms) total_deg = std::max(total_deg, ab.first + ab.second);
    UPoly one_minus(std::vector<Rational>{1, 0, -1});  // 1 - s^2
    UPoly two_s(std::vector<Rational>{0, 2});          // 2 s
    UPoly one_plus(std::vector<Rational>{1, 0, 1});    // 1 + s^2
    auto power = [](const UPoly& base, int e) {
        UPoly acc(std::vector<Rational>{1});
        for (int i = 0; i < e; ++i) acc = acc * base;
        return acc;
    };
    UPoly numerator;
    for (const auto& [ab, c] : f.terms) {
        const auto [a, b] = ab;
        UPoly term = power(one_minus, a) * power(two_s, b) * power(one_plus, total_deg - a - b);
        numerator = numerator + term.scaled(c);
    }
    // Sign at (-1, 0): only pure x powers survive.
    Rational at_minus_one = 0;
    for (const auto& [ab, c] : f.terms)
        if (ab.second == 0) at_minus_one += (ab.first % 2 == 0) ? c : -c;

    std::vector<int> cyc = sign_pattern_over_line(numerator);
    cyc.push_back(sign_of(at_minus_one));

    Integer plus = 0, minus = 0;
    const std::size_t n = cyc.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (cyc[i] != 0) continue;
        for (std::size_t nb : {(i + n - 1) % n, (i + 1) % n}) {
            if (cyc[nb] > 0) plus += 1;
            if (cyc[nb] < 0) minus += 1;
        }
    }
    return {plus / 2, minus / 2};
}

}  // namespace eulink::test_oracles
