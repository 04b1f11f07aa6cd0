#pragma once

#include <string>
#include <vector>

#include "eulink/complex.hpp"

namespace eulink {

// An ordered list of closed subcomplexes X_1, ..., X_k of a parent complex.
// `nested` records whether X_1 <= ... <= X_k (validated on construction);
// `algebraic` carries the user's per-member declaration that the subcomplex
// models a real algebraic set.
struct OrderedFamily {
    ComplexPtr parent;
    std::vector<Complex> members;
    bool nested = true;
    std::vector<bool> algebraic;
    std::string name;

    static OrderedFamily create(ComplexPtr parent, std::vector<Complex> members,
                                std::vector<bool> algebraic = {}, std::string name = "");

    std::size_t k() const { return members.size(); }

    // Difference pieces U_1, ..., U_{k+1} with X_0 empty and X_{k+1} the
    // parent: U_i = X_i minus X_{i-1} as carrier sets. They partition the
    // parent when the family is nested.
    std::vector<SimplexSet> pieces() const;
};

}  // namespace eulink
