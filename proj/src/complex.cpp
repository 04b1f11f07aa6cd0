#include "eulink/complex.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "eulink/errors.hpp"

namespace eulink {

Simplex make_simplex(std::vector<Vertex> vertices) {
    if (vertices.empty()) throw input_error("simplex: empty vertex tuple");
    std::sort(vertices.begin(), vertices.end());
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (vertices[i] < 0) throw input_error("simplex: negative vertex id");
        if (i > 0 && vertices[i] == vertices[i - 1])
            throw input_error("simplex: duplicate vertex id " + std::to_string(vertices[i]));
    }
    return vertices;
}

bool is_face(const Simplex& a, const Simplex& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::vector<Simplex> proper_faces(const Simplex& s) {
    std::vector<Simplex> out;
    const std::size_t n = s.size();
    const unsigned full = (1u << n) - 1u;
    for (unsigned mask = 1; mask < full; ++mask) {
        Simplex f;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (1u << i)) f.push_back(s[i]);
        out.push_back(std::move(f));
    }
    return out;
}

std::vector<Simplex> faces(const Simplex& s) {
    std::vector<Simplex> out = proper_faces(s);
    out.push_back(s);
    return out;
}

std::string simplex_to_string(const Simplex& s) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) os << ',';
        os << s[i];
    }
    os << ')';
    return os.str();
}

std::string simplex_set_to_string(const SimplexSet& s) {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (const auto& x : s) {
        if (!first) os << ' ';
        os << simplex_to_string(x);
        first = false;
    }
    os << '}';
    return os.str();
}

SimplexSet set_union(const SimplexSet& a, const SimplexSet& b) {
    SimplexSet out = a;
    out.insert(b.begin(), b.end());
    return out;
}

SimplexSet set_minus(const SimplexSet& a, const SimplexSet& b) {
    SimplexSet out;
    for (const auto& s : a)
        if (!b.count(s)) out.insert(s);
    return out;
}

SimplexSet set_intersect(const SimplexSet& a, const SimplexSet& b) {
    SimplexSet out;
    for (const auto& s : a)
        if (b.count(s)) out.insert(s);
    return out;
}

bool is_subset(const SimplexSet& a, const SimplexSet& b) {
    return std::all_of(a.begin(), a.end(), [&](const Simplex& s) { return b.count(s) > 0; });
}

Complex Complex::from_generators(const std::vector<Simplex>& generators) {
    SimplexSet closed;
    for (const auto& g : generators)
        for (auto& f : faces(g)) closed.insert(std::move(f));
    Complex k;
    k.simplices_ = std::move(closed);
    for (const auto& s : k.simplices_)
        for (Vertex v : s) k.vertices_.insert(v);
    return k;
}

Complex Complex::from_closed_set(SimplexSet simplices) {
    for (const auto& s : simplices)
        for (const auto& f : proper_faces(s))
            if (!simplices.count(f))
                throw input_error("complex: set is not face-closed, missing " + simplex_to_string(f));
    Complex k;
    k.simplices_ = std::move(simplices);
    for (const auto& s : k.simplices_)
        for (Vertex v : s) k.vertices_.insert(v);
    return k;
}

int Complex::dimension() const {
    int d = -1;
    for (const auto& s : simplices_) d = std::max(d, dim(s));
    return d;
}

std::vector<std::size_t> Complex::f_vector() const {
    std::vector<std::size_t> f(static_cast<std::size_t>(dimension() + 1), 0);
    for (const auto& s : simplices_) f[static_cast<std::size_t>(dim(s))]++;
    return f;
}

Complex build_complex(const std::vector<std::vector<Vertex>>& generators) {
    std::vector<Simplex> gens;
    gens.reserve(generators.size());
    for (const auto& g : generators) gens.push_back(make_simplex(g));
    return Complex::from_generators(gens);
}

Integer chi_of_complex(const Complex& K) {
    Integer total = 0;
    for (const auto& s : K.simplices()) total += (dim(s) % 2 == 0) ? 1 : -1;
    return total;
}

bool is_subcomplex(const Complex& sub, const Complex& ambient) {
    return is_subset(sub.simplices(), ambient.simplices());
}

bool is_full_subcomplex(const Complex& sub, const Complex& ambient) {
    if (!is_subcomplex(sub, ambient)) return false;
    const auto& verts = sub.vertices();
    for (const auto& s : ambient.simplices()) {
        bool spanned = std::all_of(s.begin(), s.end(), [&](Vertex v) { return verts.count(v) > 0; });
        if (spanned && !sub.contains(s)) return false;
    }
    return true;
}

Complex full_subcomplex(const Complex& K, const std::set<Vertex>& verts) {
    SimplexSet out;
    for (const auto& s : K.simplices()) {
        bool spanned = std::all_of(s.begin(), s.end(), [&](Vertex v) { return verts.count(v) > 0; });
        if (spanned) out.insert(s);
    }
    return Complex::from_closed_set(std::move(out));
}

Complex relabel(const Complex& K, const std::map<Vertex, Vertex>& map) {
    SimplexSet out;
    for (const auto& s : K.simplices()) {
        std::vector<Vertex> t;
        t.reserve(s.size());
        for (Vertex v : s) t.push_back(map.at(v));
        out.insert(make_simplex(std::move(t)));
    }
    return Complex::from_closed_set(std::move(out));
}

Complex join(const Complex& K, const Complex& L) {
    std::map<Vertex, Vertex> mk, ml;
    Vertex next = 0;
    for (Vertex v : K.vertices()) mk[v] = next++;
    for (Vertex v : L.vertices()) ml[v] = next++;
    Complex k = relabel(K, mk);
    Complex l = relabel(L, ml);

    SimplexSet out = k.simplices();
    out.insert(l.simplices().begin(), l.simplices().end());
    for (const auto& a : k.simplices())
        for (const auto& b : l.simplices()) {
            Simplex u;
            u.reserve(a.size() + b.size());
            std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(u));
            out.insert(std::move(u));
        }
    Complex j;
    return Complex::from_closed_set(std::move(out));
}

}  // namespace eulink
