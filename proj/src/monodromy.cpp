#include "eulink/monodromy.hpp"

#include <numeric>
#include <sstream>

#include "eulink/errors.hpp"

namespace eulink {

namespace {

long long gcd_ll(long long a, long long b) { return std::gcd(a, b); }

int sign_or_zero(const Rational& q) { return sgn(q); }

}  // namespace

void validate(const WeightedPoly& f) {
    if (f.w1 <= 0 || f.w2 <= 0) throw input_error("polynomial: weights must be positive");
    if (f.degree <= 0) throw input_error("polynomial: degree must be positive");
    if (f.terms.empty()) throw input_error("polynomial: no terms");
    int min_a = -1, min_b = -1;
    for (const auto& [ab, coeff] : f.terms) {
        const auto [a, b] = ab;
        if (a < 0 || b < 0) throw input_error("polynomial: negative exponent");
        if (coeff == 0) throw input_error("polynomial: zero coefficient");
        if (static_cast<long long>(a) * f.w1 + static_cast<long long>(b) * f.w2 != f.degree) {
            std::ostringstream os;
            os << "polynomial: term x^" << a << " y^" << b
               << " violates weighted homogeneity for weights (" << f.w1 << "," << f.w2
               << ") and degree " << f.degree;
            throw input_error(os.str());
        }
        min_a = (min_a < 0) ? a : std::min(min_a, a);
        min_b = (min_b < 0) ? b : std::min(min_b, b);
    }
    if (min_a > 1) throw input_error("polynomial: not reduced (divisible by x^2)");
    if (min_b > 1) throw input_error("polynomial: not reduced (divisible by y^2)");
    if (!is_squarefree(slice_in_y(f, 1)))
        throw input_error("polynomial: not reduced (slice f(1,t) has a repeated factor)");
    if (!is_squarefree(slice_in_x(f, 1)))
        throw input_error("polynomial: not reduced (slice f(t,1) has a repeated factor)");
}

UPoly slice_in_y(const WeightedPoly& f, int x_value) {
    // Terms have pairwise distinct y-exponents (b determines a).
    int max_b = 0;
    for (const auto& [ab, coeff] : f.terms) max_b = std::max(max_b, ab.second);
    std::vector<Rational> c(static_cast<std::size_t>(max_b) + 1, Rational(0));
    for (const auto& [ab, coeff] : f.terms) {
        const auto [a, b] = ab;
        Rational v = coeff;
        if (x_value < 0 && a % 2 == 1) v = -v;
        c[static_cast<std::size_t>(b)] += v;
    }
    return UPoly(std::move(c));
}

UPoly slice_in_x(const WeightedPoly& f, int y_value) {
    int max_a = 0;
    for (const auto& [ab, coeff] : f.terms) max_a = std::max(max_a, ab.first);
    std::vector<Rational> c(static_cast<std::size_t>(max_a) + 1, Rational(0));
    for (const auto& [ab, coeff] : f.terms) {
        const auto [a, b] = ab;
        Rational v = coeff;
        if (y_value < 0 && b % 2 == 1) v = -v;
        c[static_cast<std::size_t>(a)] += v;
    }
    return UPoly(std::move(c));
}

Integer CyclotomicDivisor::total_degree() const {
    Integer total = 0;
    for (const auto& [m, cm] : coeffs) total += Integer(static_cast<long>(m)) * cm;
    return total;
}

std::map<std::pair<long long, long long>, Integer> CyclotomicDivisor::eigenvalue_multiset() const {
    std::map<std::pair<long long, long long>, Integer> mult;
    for (const auto& [m, cm] : coeffs) {
        for (long long j = 0; j < m; ++j) {
            long long g = gcd_ll(j == 0 ? m : j, m);
            std::pair<long long, long long> root{j / g, m / g};
            // exp(2 pi i j / m) is an n-th root of unity iff (m/g) | n; here
            // we accumulate over all symbols whose root set contains it.
            mult[root];  // ensure key exists
        }
    }
    for (auto& [root, value] : mult) {
        for (const auto& [m, cm] : coeffs)
            if (m % root.second == 0) value += cm;
    }
    // Drop zero entries for canonical form.
    for (auto it = mult.begin(); it != mult.end();) {
        if (it->second == 0)
            it = mult.erase(it);
        else
            ++it;
    }
    return mult;
}

std::string CyclotomicDivisor::to_string() const {
    if (coeffs.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, cm] : coeffs) {
        if (cm > 0 && !first) os << " + ";
        if (cm < 0) os << (first ? "-" : " - ");
        Integer a = abs(cm);
        if (a != 1) os << a.get_str() << "*";
        os << "L" << m;
        first = false;
    }
    return os.str();
}

CyclotomicDivisor monodromy_divisor(const WeightedPoly& f) {
    validate(f);
    const long long d = f.degree;
    const long long g1 = gcd_ll(d, f.w1), g2 = gcd_ll(d, f.w2);
    const long long u1 = d / g1, v1 = f.w1 / g1;
    const long long u2 = d / g2, v2 = f.w2 / g2;

    // (L_{u1}/v1 - L_1)(L_{u2}/v2 - L_1) under L_a L_b = gcd(a,b) L_{lcm}.
    std::map<long long, Rational> expansion;
    auto add = [&](long long m, const Rational& c) { expansion[m] += c; };
    const long long g = gcd_ll(u1, u2);
    const long long l = u1 / g * u2;
    add(l, Rational(static_cast<long>(g)) / (Rational(static_cast<long>(v1)) * static_cast<long>(v2)));
    add(u1, Rational(-1) / static_cast<long>(v1));
    add(u2, Rational(-1) / static_cast<long>(v2));
    add(1, Rational(1));

    CyclotomicDivisor divisor;
    for (const auto& [m, c] : expansion) {
        if (c == 0) continue;
        if (c.get_den() != 1)
            throw internal_error("monodromy divisor: non-integral coefficient " + c.get_str() +
                                 " at L" + std::to_string(m));
        divisor.coeffs[m] = Integer(c.get_num());
    }

    for (const auto& [root, mult] : divisor.eigenvalue_multiset())
        if (mult < 0)
            throw internal_error("monodromy divisor: negative eigenvalue multiplicity at root " +
                                 std::to_string(root.first) + "/" + std::to_string(root.second));

    Integer expected_mu = Integer(static_cast<long>(d - f.w1)) * Integer(static_cast<long>(d - f.w2));
    Integer ww = Integer(f.w1) * Integer(f.w2);
    if (expected_mu % ww != 0)
        throw internal_error("monodromy divisor: (d-w1)(d-w2) is not divisible by w1*w2");
    expected_mu /= ww;
    if (divisor.total_degree() != expected_mu)
        throw internal_error("monodromy divisor: total degree " +
                             divisor.total_degree().get_str() +
                             " does not match the weight formula " + expected_mu.get_str());
    return divisor;
}

MonodromyData eigen_data(const CyclotomicDivisor& divisor) {
    MonodromyData md;
    md.divisor = divisor;
    md.mu = divisor.total_degree();
    for (const auto& [m, cm] : divisor.coeffs) {
        md.mult_one += cm;
        if (m % 2 == 0) md.mult_minus_one += cm;
    }
    // Degree zero carries eigenvalue one exactly once (the fibre of a
    // reduced curve germ is connected), so the alternating sums are:
    md.l_one = 1 - md.mult_one;
    md.l_minus_one = -md.mult_minus_one;
    return md;
}

RealFiberData real_fiber_chi(const WeightedPoly& f) {
    validate(f);
    // Cyclic walk around a circle transversal to the zero rays of f: the
    // chart x = 1 with t ascending, the point (0,1), the chart x = -1 with t
    // descending, the point (0,-1).
    std::vector<int> cyc;
    auto p_pos = slice_in_y(f, 1);
    auto p_neg = slice_in_y(f, -1);
    std::vector<int> asc_pos = sign_pattern_over_line(p_pos);
    std::vector<int> asc_neg = sign_pattern_over_line(p_neg);

    // Sign at (0, 1) and (0, -1): the pure-y term decides, zero without one.
    Rational pure_y = 0;
    int pure_y_exp = 0;
    for (const auto& [ab, coeff] : f.terms)
        if (ab.first == 0) {
            pure_y = coeff;
            pure_y_exp = ab.second;
        }
    int axis_plus = sign_or_zero(pure_y);
    int axis_minus = (pure_y_exp % 2 == 0) ? axis_plus : -axis_plus;

    cyc.insert(cyc.end(), asc_pos.begin(), asc_pos.end());
    cyc.push_back(axis_plus);
    cyc.insert(cyc.end(), asc_neg.rbegin(), asc_neg.rend());
    cyc.push_back(axis_minus);

    RealFiberData out;
    out.sign_sequence = cyc;
    const std::size_t n = cyc.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (cyc[i] != 0) continue;
        for (std::size_t nb : {(i + n - 1) % n, (i + 1) % n}) {
            if (cyc[nb] > 0) out.boundary_endpoints_plus += 1;
            if (cyc[nb] < 0) out.boundary_endpoints_minus += 1;
            if (cyc[nb] == 0)
                throw internal_error("real fibre: adjacent zeros in the sign sequence");
        }
    }
    if (out.boundary_endpoints_plus % 2 != 0 || out.boundary_endpoints_minus % 2 != 0)
        throw internal_error("real fibre: odd boundary point count");
    out.chi_plus = out.boundary_endpoints_plus / 2;
    out.chi_minus = out.boundary_endpoints_minus / 2;
    return out;
}

FiberCongruenceReport verify_fiber_congruences(const WeightedPoly& f) {
    FiberCongruenceReport report;
    report.monodromy = eigen_data(monodromy_divisor(f));
    report.fiber = real_fiber_chi(f);
    report.difference = report.fiber.chi_plus - report.fiber.chi_minus;
    report.sum = report.fiber.chi_plus + report.fiber.chi_minus;

    auto congruent_mod4 = [](const Integer& a, const Integer& b) {
        return mod_residue(a - b, 4) == 0;
    };
    const std::string label = f.name.empty() ? "polynomial" : f.name;
    if (mod_residue(report.difference, 2) != 0)
        throw internal_error(label + ": chi difference " + report.difference.get_str() + " is odd");
    if (mod_residue(report.sum, 2) != 0)
        throw internal_error(label + ": chi sum " + report.sum.get_str() + " is odd");
    if (!congruent_mod4(report.difference, 2 * report.monodromy.l_minus_one))
        throw internal_error(label + ": chi difference " + report.difference.get_str() +
                             " is not congruent to 2*l(-1) = " +
                             (2 * report.monodromy.l_minus_one).get_str() + " mod 4");
    if (!congruent_mod4(report.sum, 2 * report.monodromy.l_one))
        throw internal_error(label + ": chi sum " + report.sum.get_str() +
                             " is not congruent to 2*l(+1) = " +
                             (2 * report.monodromy.l_one).get_str() + " mod 4");
    report.pass = true;
    return report;
}

AlternatingCongruenceReport verify_alternating_congruence(
    const std::map<std::string, Integer>& chis, const Integer& l_value, int k) {
    if (k < 0 || k > 20) throw input_error("alternating congruence: k out of range");
    AlternatingCongruenceReport report;
    report.k = k;
    report.l_value = l_value;
    const std::size_t expected = static_cast<std::size_t>(1) << k;
    if (chis.size() != expected)
        throw input_error("alternating congruence: expected " + std::to_string(expected) +
                          " sign vectors, got " + std::to_string(chis.size()));
    for (unsigned mask = 0; mask < expected; ++mask) {
        std::string key(static_cast<std::size_t>(k), '+');
        int parity = 0;
        for (int j = 0; j < k; ++j)
            if (mask & (1u << j)) {
                key[static_cast<std::size_t>(j)] = '-';
                ++parity;
            }
        auto it = chis.find(key);
        if (it == chis.end())
            throw input_error("alternating congruence: missing sign vector '" + key + "'");
        report.alternating_sum += (parity % 2 == 0) ? it->second : -it->second;
    }
    Integer mod_k = Integer(1) << k;
    Integer mod_k1 = mod_k * 2;
    report.divisible = divides(mod_k, report.alternating_sum);
    report.congruent = mod_residue(report.alternating_sum - mod_k * l_value, mod_k1) == 0;
    return report;
}

}  // namespace eulink
