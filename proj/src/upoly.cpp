#include "eulink/upoly.hpp"

#include <algorithm>

#include "eulink/errors.hpp"

namespace eulink {

namespace {

void strip(std::vector<Rational>& c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

}  // namespace

UPoly::UPoly(std::vector<Rational> coeffs) : c(std::move(coeffs)) { strip(c); }

Rational UPoly::eval(const Rational& x) const {
    Rational acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
}

UPoly UPoly::derivative() const {
    std::vector<Rational> d;
    for (std::size_t i = 1; i < c.size(); ++i) d.push_back(c[i] * Rational(static_cast<long>(i)));
    return UPoly(std::move(d));
}

UPoly UPoly::operator+(const UPoly& o) const {
    std::vector<Rational> d(std::max(c.size(), o.c.size()), Rational(0));
    for (std::size_t i = 0; i < c.size(); ++i) d[i] += c[i];
    for (std::size_t i = 0; i < o.c.size(); ++i) d[i] += o.c[i];
    return UPoly(std::move(d));
}

UPoly UPoly::operator-(const UPoly& o) const { return *this + o.scaled(Rational(-1)); }

UPoly UPoly::operator*(const UPoly& o) const {
    if (is_zero() || o.is_zero()) return UPoly();
    std::vector<Rational> d(c.size() + o.c.size() - 1, Rational(0));
    for (std::size_t i = 0; i < c.size(); ++i)
        for (std::size_t j = 0; j < o.c.size(); ++j) d[i + j] += c[i] * o.c[j];
    return UPoly(std::move(d));
}

UPoly UPoly::scaled(const Rational& s) const {
    if (s == 0) return UPoly();
    std::vector<Rational> d = c;
    for (auto& x : d) x *= s;
    return UPoly(std::move(d));
}

UPoly remainder(const UPoly& a, const UPoly& b) {
    if (b.is_zero()) throw internal_error("polynomial division by zero");
    std::vector<Rational> r = a.c;
    const int db = b.degree();
    while (static_cast<int>(r.size()) - 1 >= db && !r.empty()) {
        Rational factor = r.back() / b.leading();
        const std::size_t shift = r.size() - 1 - static_cast<std::size_t>(db);
        for (std::size_t i = 0; i < b.c.size(); ++i) r[shift + i] -= factor * b.c[i];
        r.pop_back();  // leading term cancels exactly
        strip(r);
    }
    return UPoly(std::move(r));
}

UPoly poly_gcd(UPoly a, UPoly b) {
    while (!b.is_zero()) {
        UPoly r = remainder(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a.scaled(Rational(1) / a.leading());
}

bool is_squarefree(const UPoly& p) {
    if (p.is_zero()) return false;
    if (p.degree() <= 1) return true;
    return poly_gcd(p, p.derivative()).degree() == 0;
}

UPoly squarefree_part(const UPoly& p) {
    if (p.is_zero() || p.degree() <= 1) return p;
    UPoly g = poly_gcd(p, p.derivative());
    if (g.degree() == 0) return p;
    // Exact division p / g.
    std::vector<Rational> r = p.c;
    std::vector<Rational> q(p.c.size() - g.c.size() + 1, Rational(0));
    while (static_cast<int>(r.size()) - 1 >= g.degree() && !r.empty()) {
        Rational factor = r.back() / g.leading();
        const std::size_t shift = r.size() - 1 - static_cast<std::size_t>(g.degree());
        q[shift] = factor;
        for (std::size_t i = 0; i < g.c.size(); ++i) r[shift + i] -= factor * g.c[i];
        strip(r);
    }
    if (!r.empty()) throw internal_error("squarefree part: non-exact division");
    return UPoly(std::move(q));
}

int sign_of(const Rational& q) { return sgn(q); }

int sign_at(const UPoly& p, const Rational& x) { return sgn(p.eval(x)); }

int sign_at_plus_infinity(const UPoly& p) { return p.is_zero() ? 0 : sgn(p.leading()); }

int sign_at_minus_infinity(const UPoly& p) {
    if (p.is_zero()) return 0;
    int s = sgn(p.leading());
    return (p.degree() % 2 == 0) ? s : -s;
}

namespace {

std::vector<UPoly> sturm_sequence(const UPoly& p) {
    std::vector<UPoly> seq;
    seq.push_back(p);
    seq.push_back(p.derivative());
    while (!seq.back().is_zero()) {
        UPoly r = remainder(seq[seq.size() - 2], seq.back());
        seq.push_back(r.scaled(Rational(-1)));
    }
    seq.pop_back();
    return seq;
}

int variations(const std::vector<int>& signs) {
    int count = 0, prev = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++count;
        prev = s;
    }
    return count;
}

int variations_at(const std::vector<UPoly>& seq, const Rational& x) {
    std::vector<int> signs;
    signs.reserve(seq.size());
    for (const auto& q : seq) signs.push_back(sign_at(q, x));
    return variations(signs);
}

// Number of distinct roots in (a, b]; with non-root endpoints this counts
// the open interval.
int roots_between(const std::vector<UPoly>& seq, const Rational& a, const Rational& b) {
    return variations_at(seq, a) - variations_at(seq, b);
}

// A split point of (a, b) that is not a root of p; the bisection midpoint is
// nudged by shrinking offsets until it clears the finitely many roots.
Rational non_root_split(const UPoly& p, const Rational& a, const Rational& b) {
    Rational mid = (a + b) / 2;
    if (sign_at(p, mid) != 0) return mid;
    Rational offset = (b - a) / 4;
    while (true) {
        for (int dir : {1, -1}) {
            Rational candidate = mid + offset * dir;
            if (candidate > a && candidate < b && sign_at(p, candidate) != 0) return candidate;
        }
        offset /= 2;
    }
}

void bisect(const UPoly& p, const std::vector<UPoly>& seq, const Rational& a, const Rational& b,
            int count, std::vector<std::pair<Rational, Rational>>& out) {
    if (count == 0) return;
    if (count == 1) {
        out.emplace_back(a, b);
        return;
    }
    Rational m = non_root_split(p, a, b);
    int left = roots_between(seq, a, m);
    bisect(p, seq, a, m, left, out);
    bisect(p, seq, m, b, count - left, out);
}

}  // namespace

std::vector<std::pair<Rational, Rational>> isolate_real_roots(const UPoly& p) {
    if (p.is_zero()) throw input_error("root isolation: zero polynomial");
    if (!is_squarefree(p)) throw input_error("root isolation: polynomial is not squarefree");
    std::vector<std::pair<Rational, Rational>> out;
    if (p.degree() == 0) return out;
    // Cauchy bound: all roots lie strictly inside [-B, B].
    Rational bound = 0;
    for (const auto& coeff : p.c) {
        Rational a = abs(coeff / p.leading());
        if (a > bound) bound = a;
    }
    bound += 1;
    auto seq = sturm_sequence(p);
    int total = roots_between(seq, -bound, bound);
    bisect(p, seq, -bound, bound, total, out);
    return out;
}

std::vector<int> sign_pattern_over_line(const UPoly& p) {
    if (p.is_zero()) throw input_error("sign pattern: zero polynomial");
    UPoly q = squarefree_part(p);
    auto intervals = isolate_real_roots(q);
    std::vector<int> pattern;
    if (intervals.empty()) {
        pattern.push_back(sign_at_plus_infinity(p));
        return pattern;
    }
    // Before the first root, then alternate (root, gap sign) using the right
    // endpoints of the isolating intervals as guaranteed non-root samples.
    pattern.push_back(sign_at(p, intervals.front().first));
    for (const auto& [a, b] : intervals) {
        pattern.push_back(0);
        pattern.push_back(sign_at(p, b));
    }
    return pattern;
}

}  // namespace eulink
