#pragma once

#include <memory>
#include <vector>

#include "eulink/numbers.hpp"
#include "eulink/simplex.hpp"

namespace eulink {

// A finite abstract simplicial complex: a face-closed set of simplices.
// Immutable after construction; cheap enough to copy by value at the scales
// this library targets.
class Complex {
  public:
    Complex() = default;

    // Face closure of the given generators.
    static Complex from_generators(const std::vector<Simplex>& generators);

    // Adopts an already face-closed set; throws input_error otherwise.
    static Complex from_closed_set(SimplexSet simplices);

    const SimplexSet& simplices() const { return simplices_; }
    const std::set<Vertex>& vertices() const { return vertices_; }

    bool empty() const { return simplices_.empty(); }
    std::size_t size() const { return simplices_.size(); }
    int dimension() const;  // -1 for the empty complex
    bool contains(const Simplex& s) const { return simplices_.count(s) > 0; }
    bool has_vertex(Vertex v) const { return vertices_.count(v) > 0; }

    // Number of simplices per dimension, index = dimension.
    std::vector<std::size_t> f_vector() const;

    bool operator==(const Complex& other) const { return simplices_ == other.simplices_; }
    bool operator!=(const Complex& other) const { return !(*this == other); }

  private:
    SimplexSet simplices_;
    std::set<Vertex> vertices_;
};

// Face closure of generator tuples (validated via make_simplex).
Complex build_complex(const std::vector<std::vector<Vertex>>& generators);

// Euler characteristic of a (compact) complex: alternating simplex count.
Integer chi_of_complex(const Complex& K);

// sub is a subcomplex of ambient.
bool is_subcomplex(const Complex& sub, const Complex& ambient);

// Every ambient simplex whose vertices all lie in sub is a simplex of sub.
bool is_full_subcomplex(const Complex& sub, const Complex& ambient);

// Full subcomplex of K spanned by the given vertices.
Complex full_subcomplex(const Complex& K, const std::set<Vertex>& verts);

// Join of two complexes after relabelling both onto disjoint vertex ranges:
// K vertices map to 0..|V_K|-1 in sorted order, L vertices follow.
Complex join(const Complex& K, const Complex& L);

// Relabels vertices by the given map (must be injective on K's vertices).
Complex relabel(const Complex& K, const std::map<Vertex, Vertex>& map);

using ComplexPtr = std::shared_ptr<const Complex>;

inline ComplexPtr make_complex_ptr(Complex c) {
    return std::make_shared<const Complex>(std::move(c));
}

}  // namespace eulink
