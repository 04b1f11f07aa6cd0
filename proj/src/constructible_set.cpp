#include "eulink/constructible_set.hpp"

#include <map>

#include "eulink/errors.hpp"

namespace eulink {

ConstructibleSet::ConstructibleSet(ComplexPtr parent, SimplexSet carriers)
    : parent_(std::move(parent)), carriers_(std::move(carriers)) {
    if (!parent_) throw input_error("constructible set: null parent");
    for (const auto& s : carriers_)
        if (!parent_->contains(s))
            throw input_error("constructible set: carrier " + simplex_to_string(s) +
                              " is not a simplex of the parent");
}

bool ConstructibleSet::is_closed() const {
    for (const auto& s : carriers_)
        for (const auto& f : proper_faces(s))
            if (!carriers_.count(f)) return false;
    return true;
}

bool ConstructibleSet::is_open() const {
    for (const auto& s : parent_->simplices()) {
        if (carriers_.count(s)) continue;
        // A coface of a carrier lying outside the set breaks openness.
        for (const auto& f : proper_faces(s))
            if (carriers_.count(f)) return false;
    }
    return true;
}

bool ConstructibleSet::is_locally_closed() const {
    // s <= t <= r with s, r in the set must force t in. Equivalently the
    // frontier of the closure is face-closed below no carrier... checked
    // directly: for every carrier r and face t of r outside the set, no face
    // s of t may be a carrier.
    for (const auto& r : carriers_) {
        for (const auto& t : proper_faces(r)) {
            if (carriers_.count(t)) continue;
            for (const auto& s : proper_faces(t))
                if (carriers_.count(s)) return false;
        }
    }
    return true;
}

SimplexSet ConstructibleSet::closure() const {
    SimplexSet out;
    for (const auto& s : carriers_)
        for (auto& f : faces(s)) out.insert(std::move(f));
    return out;
}

SimplexSet ConstructibleSet::frontier() const { return set_minus(closure(), carriers_); }

Integer chi_c(const SimplexSet& carriers) {
    Integer total = 0;
    for (const auto& s : carriers) total += (dim(s) % 2 == 0) ? 1 : -1;
    return total;
}

Integer chi_c(const ConstructibleSet& s) { return chi_c(s.carriers()); }

Integer chi(const SimplexSet& carriers) {
    // Chain-counting recursion over the carrier poset. Processing in set
    // order works because every proper face precedes its cofaces in size,
    // and we look faces up explicitly.
    std::map<Simplex, Integer> g;
    // Order by size so faces are computed before cofaces.
    std::vector<const Simplex*> by_size;
    by_size.reserve(carriers.size());
    for (const auto& s : carriers) by_size.push_back(&s);
    std::stable_sort(by_size.begin(), by_size.end(),
                     [](const Simplex* a, const Simplex* b) { return a->size() < b->size(); });
    Integer total = 0;
    for (const Simplex* s : by_size) {
        Integer val = 1;
        for (const auto& f : proper_faces(*s)) {
            auto it = g.find(f);
            if (it != g.end()) val -= it->second;
        }
        g.emplace(*s, val);
        total += val;
    }
    return total;
}

Integer chi(const ConstructibleSet& s) { return chi(s.carriers()); }

}  // namespace eulink
