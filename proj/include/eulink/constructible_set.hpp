#pragma once

#include "eulink/complex.hpp"
#include "eulink/numbers.hpp"
#include "eulink/simplex.hpp"

namespace eulink {

// A union of open cells (relative interiors) of simplices of a parent
// complex. The carrier set is an arbitrary subset of the parent's simplices;
// no closure property is required.
class ConstructibleSet {
  public:
    ConstructibleSet(ComplexPtr parent, SimplexSet carriers);

    const Complex& parent() const { return *parent_; }
    ComplexPtr parent_ptr() const { return parent_; }
    const SimplexSet& carriers() const { return carriers_; }

    bool empty() const { return carriers_.empty(); }

    // Face-closed carrier set (a closed polyhedron).
    bool is_closed() const;
    // Coface-closed within the parent (an open subset).
    bool is_open() const;
    // Interval in the face poset: s <= t <= r with s, r carriers forces t in.
    bool is_locally_closed() const;

    // Face closure of the carriers.
    SimplexSet closure() const;
    // closure() minus the carriers; closed whenever the set is locally closed.
    SimplexSet frontier() const;

  private:
    ComplexPtr parent_;
    SimplexSet carriers_;
};

// Compactly-supported Euler characteristic: sum of (-1)^dim over carriers.
// Additive over disjoint carrier sets.
Integer chi_c(const SimplexSet& carriers);
Integer chi_c(const ConstructibleSet& s);

// Ordinary (homotopy-invariant) Euler characteristic of the union of open
// cells: the Euler characteristic of the order complex of the carrier poset
// under the face order, computed by the chain-counting recursion
//   g(s) = 1 - sum of g(t) over proper faces t of s inside the carrier set,
//   chi  = sum of g(s) over carriers.
// Equals chi_c on closed sets; no chain enumeration happens.
Integer chi(const SimplexSet& carriers);
Integer chi(const ConstructibleSet& s);

}  // namespace eulink
