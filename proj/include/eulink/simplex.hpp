#pragma once

#include <set>
#include <string>
#include <vector>

namespace eulink {

using Vertex = int;

// A simplex is a nonempty, strictly increasing tuple of vertex ids.
using Simplex = std::vector<Vertex>;

// Canonical sorted-set ordering; used everywhere a deterministic iteration
// order is needed.
using SimplexSet = std::set<Simplex>;

// Sorts and validates a raw vertex tuple. Throws input_error on duplicates,
// negative ids, or an empty tuple.
Simplex make_simplex(std::vector<Vertex> vertices);

inline int dim(const Simplex& s) { return static_cast<int>(s.size()) - 1; }

// a is a (not necessarily proper) face of b.
bool is_face(const Simplex& a, const Simplex& b);

// All nonempty proper subsets.
std::vector<Simplex> proper_faces(const Simplex& s);

// All nonempty subsets, including s itself.
std::vector<Simplex> faces(const Simplex& s);

std::string simplex_to_string(const Simplex& s);
std::string simplex_set_to_string(const SimplexSet& s);

SimplexSet set_union(const SimplexSet& a, const SimplexSet& b);
SimplexSet set_minus(const SimplexSet& a, const SimplexSet& b);
SimplexSet set_intersect(const SimplexSet& a, const SimplexSet& b);
bool is_subset(const SimplexSet& a, const SimplexSet& b);

}  // namespace eulink
