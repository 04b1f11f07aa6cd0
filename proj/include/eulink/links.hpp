#pragma once

#include <map>
#include <string>

#include "eulink/complex.hpp"
#include "eulink/constructible_set.hpp"
#include "eulink/family.hpp"
#include "eulink/numbers.hpp"
#include "eulink/subdivision.hpp"

namespace eulink {

// Combinatorial model of a link: an order complex whose vertices abstract
// simplices (or chains) of the stage below, together with named traces of
// remaining subcomplexes as full subcomplexes.
struct LinkModel {
    ComplexPtr complex;
    // Link vertex -> the ambient simplex it abstracts.
    std::map<Vertex, Simplex> vertex_carrier;
    // Label -> marked vertex ids; the marking is the full subcomplex spanned.
    std::map<std::string, std::set<Vertex>> markings;
    std::string provenance;
    // Set when enforcing fullness required one barycentric subdivision of the
    // ambient input; carrier sets must be refined through it before trace().
    std::shared_ptr<const SubdivisionMap> subdivision;

    Complex marking_subcomplex(const std::string& label) const;

    // Trace of a constructible subset of the ambient complex on the link:
    // cells whose maximal carrier lies in the given set. Only meaningful for
    // single-stage links, where vertex carriers are ambient simplices.
    SimplexSet trace(const SimplexSet& ambient_carriers) const;

    Integer chi_value() const { return chi_of_complex(*complex); }
};

// Link of a vertex: all simplices s with v not in s and s+v in K.
Complex vertex_link(Vertex v, const Complex& K);

// Euler characteristic of the link of any point in the open cell of s:
// chi(boundary(s) * link(s; K)) via the join formula.
Integer point_link_chi(const Simplex& s, const Complex& K);

// Link of the point v inside a constructible set: carriers {s - v} over
// carriers s of V containing v (other than the vertex cell itself), living
// in the vertex link of v in the parent.
ConstructibleSet point_link_constructible(Vertex v, const ConstructibleSet& V);

// Link of a closed subcomplex Y in X: the order complex of
//   P = { s in X : s not in Y, s has a vertex in Y },
// the frontier of the derived neighborhood of Y. If Y is not full in X both
// are barycentrically subdivided once first (as are any trace inputs).
// For each named closed Z with Y <= Z <= X the resulting marking models the
// link of Y in Z.
LinkModel subcomplex_link(const Complex& Y, const Complex& X,
                          const std::map<std::string, Complex>& traces = {});

// Localized link at a vertex v of the link of Y in X: the order complex of
// P restricted to simplices containing v. Empty when v is not in Y.
LinkModel localized_link(Vertex v, const Complex& Y, const Complex& X,
                         const std::map<std::string, Complex>& traces = {});

// Iterated link of a nested family X_1 <= ... <= X_k: fold of
// subcomplex_link, with traces of the remaining members propagated through
// each stage. Throws input_error for non-nested families.
LinkModel iterated_link(const OrderedFamily& family, const Complex& X);
LinkModel iterated_link(const std::vector<Complex>& members, const Complex& X);

// Iterated link of the family's traces inside the closed star of v (the
// combinatorial ball at v). When some member meets the star without coning
// at v, everything is subdivided once first so that star traces are cones.
LinkModel localized_iterated_link(Vertex v, const OrderedFamily& family, const Complex& X);
LinkModel localized_iterated_link(Vertex v, const std::vector<Complex>& members, const Complex& X);

// Derived (regular) neighborhood of a full closed subcomplex: the closed
// subcomplex of the barycentric subdivision on chains whose minimum has a
// vertex in Y. Deformation-retracts to Y.
ConstructibleSet derived_neighborhood(const Complex& Y, const Complex& X);

}  // namespace eulink
