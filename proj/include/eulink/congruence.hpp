#pragma once

#include <optional>
#include <string>
#include <vector>

#include "eulink/complex.hpp"
#include "eulink/constructible_function.hpp"
#include "eulink/constructible_set.hpp"
#include "eulink/family.hpp"
#include "eulink/numbers.hpp"

namespace eulink {

// Named constructible sets partitioning a complex, each locally closed, with
// per-stratum irreducibility declarations supplied by the user.
struct Stratification {
    ComplexPtr parent;
    std::vector<std::pair<std::string, SimplexSet>> strata;  // sorted by name
    std::map<std::string, bool> irreducible;
    std::string name;

    static Stratification create(ComplexPtr parent,
                                 std::vector<std::pair<std::string, SimplexSet>> strata,
                                 std::map<std::string, bool> irreducible, std::string name = "");
};

// Inclusion-exclusion Euler invariant of an ordered family: the alternating
// sum of chi over unions of the difference pieces U_1, ..., U_{k+1}.
Integer delta_global(const OrderedFamily& family);

// The local version at a vertex: each union is replaced by its germ at v,
// whose chi is chi of the carriers containing v (equal to the chi of the
// point link when v's cell is outside the union, and 1 when it is inside).
// For nested families the value is cross-checked against the localized
// iterated link; disagreement raises internal_error.
Integer delta_local(Vertex v, const OrderedFamily& family, bool cross_check = true);

struct DeltaCertificate {
    std::string kind;      // "divisibility" | "constancy"
    std::string location;  // vertex / stratum description
    std::string detail;
};

struct DeltaReport {
    std::size_t k = 0;
    Integer modulus = 1;  // 2^k for divisibility, 2^{k+1} (or override) for residues
    Integer global_delta = 0;
    std::map<Vertex, Integer> local_deltas;
    bool divisibility_pass = true;
    std::map<std::string, std::set<Integer>> residues;  // stratum -> residue set
    bool constancy_pass = true;
    std::vector<DeltaCertificate> certificates;
    std::optional<ConstructibleFunction> stalk_function;  // v -> delta_v on vertex cells
};

// Computes the global delta and the local delta at every vertex; passes when
// 2^k divides every value. Failures are findings, not errors.
DeltaReport divisibility_check(const OrderedFamily& family);

// Collects local-delta residues modulo 2^{k+1} (or mod_override when
// nonzero) over the vertices of each stratum; passes when every stratum
// flagged irreducible carries at most one residue. Also emits the vertex
// stalk function.
DeltaReport constancy_audit(const OrderedFamily& family, const Stratification& strat,
                            Integer mod_override = 0);

// The double cone over X: a single apex joined to two disjoint copies of X,
// so the link of the apex is two copies of X. The returned family is
// ({apex}, double cone over X_1, ..., double cone over X_k) and the apex is
// vertex 0. The local delta of the new family at the apex is exactly twice
// the global delta of the input family.
struct DoubleCone {
    Complex complex;
    OrderedFamily family;
    Vertex apex = 0;
};
DoubleCone double_cone(const OrderedFamily& family);

// Decomposition of the global delta of a one-point compactification: the
// input family lives on the compact model and every member contains the
// designated vertex at infinity. Reports the delta of the punctured
// (non-compact) family, the delta of the compact family, the link-at-
// infinity correction tying them together, and the literal delta of the
// links-at-infinity family for comparison.
struct CompactificationDelta {
    Integer delta_noncompact = 0;
    Integer delta_compactified = 0;
    Integer correction = 0;
    Integer links_at_infinity_delta = 0;
    bool contract_holds() const { return delta_noncompact == delta_compactified - correction; }
};
CompactificationDelta compactification_delta(const OrderedFamily& family, Vertex infinity);

}  // namespace eulink
