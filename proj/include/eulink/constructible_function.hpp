#pragma once

#include <map>
#include <vector>

#include "eulink/complex.hpp"
#include "eulink/constructible_set.hpp"
#include "eulink/numbers.hpp"
#include "eulink/subdivision.hpp"

namespace eulink {

// An integer-valued function on a complex, constant on open cells: weights
// are stored per simplex, absent means zero.
class ConstructibleFunction {
  public:
    ConstructibleFunction(ComplexPtr parent, std::map<Simplex, Integer> weights);

    const Complex& parent() const { return *parent_; }
    ComplexPtr parent_ptr() const { return parent_; }
    const std::map<Simplex, Integer>& weights() const { return weights_; }

    Integer value(const Simplex& cell) const;

    ConstructibleFunction operator+(const ConstructibleFunction& other) const;
    ConstructibleFunction operator-(const ConstructibleFunction& other) const;
    ConstructibleFunction scaled(const Integer& c) const;

    bool operator==(const ConstructibleFunction& other) const;

  private:
    ComplexPtr parent_;
    std::map<Simplex, Integer> weights_;  // zero entries are erased
};

// Sum of c_i * indicator(closure X_i); every term must be closed.
ConstructibleFunction from_indicators(
    ComplexPtr parent, const std::vector<std::pair<Integer, ConstructibleSet>>& terms);

// Indicator of the whole complex.
ConstructibleFunction constant_one(ComplexPtr parent);

// Link operator: (lambda phi)(x) = Euler characteristic of the link of x
// weighted by phi near x. On the open cell of s the value is
//   (1 + (-1)^{|s|}) * w(s)  +  sum over proper cofaces t of (-1)^{|t|} w(t),
// which reduces to chi(boundary(s) * link(s;K)) on indicator functions of
// closed subcomplexes K.
ConstructibleFunction lambda_op(const ConstructibleFunction& phi);

// Duality operator: phi - lambda(phi).
ConstructibleFunction duality_op(const ConstructibleFunction& phi);

// Integral against the compactly-supported Euler characteristic:
// sum of w(s) * (-1)^dim(s).
Integer euler_integral(const ConstructibleFunction& phi);

struct EvennessReport {
    // Cells where lambda(phi) is odd, with the offending values.
    std::vector<std::pair<Simplex, Integer>> odd_cells;
    bool pass() const { return odd_cells.empty(); }
};

// Necessary condition for phi to be algebraically constructible; for the
// indicator of the whole complex this is the evenness obstruction for links
// of points in a real algebraic set.
EvennessReport evenness_audit(const ConstructibleFunction& phi);

// Transport through a barycentric subdivision: the refined function takes on
// each new cell the weight of the open cell it refines.
ConstructibleFunction transport(const ConstructibleFunction& phi, const SubdivisionMap& sd);

}  // namespace eulink
