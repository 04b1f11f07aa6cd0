#include "eulink/subdivision.hpp"

#include <algorithm>

#include "eulink/errors.hpp"

namespace eulink {

namespace {

// Enumerates all chains of the poset, each chain reported as the set of
// vertex ids assigned to its elements. Elements are extended downward
// through proper faces, so every chain is produced exactly once from its
// maximal element.
void extend_chain(const SimplexSet& poset, const std::map<Simplex, Vertex>& id_of,
                  const Simplex& least, std::vector<Vertex>& acc, SimplexSet& out) {
    out.insert(make_simplex(acc));
    for (const auto& f : proper_faces(least)) {
        if (!poset.count(f)) continue;
        acc.push_back(id_of.at(f));
        extend_chain(poset, id_of, f, acc, out);
        acc.pop_back();
    }
}

}  // namespace

Complex order_complex(const SimplexSet& poset, std::map<Vertex, Simplex>* labels) {
    std::map<Simplex, Vertex> id_of;
    Vertex next = 0;
    for (const auto& s : poset) id_of[s] = next++;
    if (labels) {
        labels->clear();
        for (const auto& [s, v] : id_of) (*labels)[v] = s;
    }
    SimplexSet chains;
    for (const auto& s : poset) {
        std::vector<Vertex> acc{id_of.at(s)};
        extend_chain(poset, id_of, s, acc, chains);
    }
    return Complex::from_closed_set(std::move(chains));
}

SubdivisionMap barycentric_subdivision(const Complex& K) {
    SubdivisionMap m;
    std::map<Vertex, Simplex> labels;
    Complex target = order_complex(K.simplices(), &labels);
    m.source = make_complex_ptr(K);
    m.target = make_complex_ptr(std::move(target));
    m.carrier = std::move(labels);
    for (const auto& [v, s] : m.carrier) m.vertex_of[s] = v;
    return m;
}

SimplexSet SubdivisionMap::refine(const SimplexSet& carriers) const {
    SimplexSet out;
    for (const auto& c : target->simplices())
        if (carriers.count(carrier_of_cell(c))) out.insert(c);
    return out;
}

Vertex SubdivisionMap::transport_vertex(Vertex v) const {
    auto it = vertex_of.find(Simplex{v});
    if (it == vertex_of.end())
        throw input_error("subdivision: vertex " + std::to_string(v) + " not in source");
    return it->second;
}

Simplex SubdivisionMap::carrier_of_cell(const Simplex& target_simplex) const {
    // Elements of a chain are totally ordered by the face relation, so the
    // carrier with the most vertices is the maximum.
    const Simplex* best = nullptr;
    for (Vertex v : target_simplex) {
        const Simplex& s = carrier.at(v);
        if (!best || s.size() > best->size()) best = &s;
    }
    if (!best) throw input_error("subdivision: empty target simplex");
    return *best;
}

}  // namespace eulink
