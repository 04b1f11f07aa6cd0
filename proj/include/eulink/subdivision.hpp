#pragma once

#include <map>

#include "eulink/complex.hpp"
#include "eulink/simplex.hpp"

namespace eulink {

// Order complex of a set of simplices under the face order: one vertex per
// element (ids assigned 0.. in the canonical sorted order of the set), one
// simplex per chain. If labels is non-null it receives vertex id -> element.
Complex order_complex(const SimplexSet& poset, std::map<Vertex, Simplex>* labels = nullptr);

// One barycentric subdivision step: target = order complex of the full face
// poset of source, carrier(vertex) = the source simplex it subdivides.
struct SubdivisionMap {
    ComplexPtr source;
    ComplexPtr target;
    std::map<Vertex, Simplex> carrier;    // target vertex -> source simplex
    std::map<Simplex, Vertex> vertex_of;  // inverse of carrier

    // Cells of the target refining the given open cells: the chains whose
    // maximal element is a carrier. Closed carrier sets map to their
    // subdivisions.
    SimplexSet refine(const SimplexSet& carriers) const;

    // Target vertex sitting at a source vertex.
    Vertex transport_vertex(Vertex v) const;

    // Source simplex abstracted by target simplex c (max element of the chain).
    Simplex carrier_of_cell(const Simplex& target_simplex) const;
};

SubdivisionMap barycentric_subdivision(const Complex& K);

}  // namespace eulink
