#pragma once

#include <map>
#include <string>
#include <vector>

#include "eulink/complex.hpp"
#include "eulink/congruence.hpp"
#include "eulink/constructible_set.hpp"
#include "eulink/family.hpp"
#include "eulink/monodromy.hpp"

namespace eulink {

// Declarations as they appear in a document file. Tags and flags are
// re-validated when the document is resolved against its complexes.
struct SetDecl {
    std::string complex;
    std::string kind;  // "closed" | "open" | "any"
    SimplexSet simplices;
};

struct FamilyDecl {
    std::string complex;
    std::vector<std::string> members;  // set names, each must be closed
    bool nested = true;
    std::vector<bool> algebraic;
};

struct StratumDecl {
    std::string set;
    bool irreducible = false;
};

struct StratificationDecl {
    std::string complex;
    std::map<std::string, StratumDecl> strata;
};

struct ComplexDecl {
    std::vector<Simplex> generators;
    bool algebraic = false;  // the complex models a real algebraic set
};

// A batch input: named complexes, constructible sets, ordered families,
// stratifications and weighted homogeneous polynomials. See the README for
// the exact JSON grammar.
struct Document {
    std::string format_version = "1";
    std::string name;
    std::string description;
    bool expect_obstruction = false;
    std::map<std::string, ComplexDecl> complexes;
    std::map<std::string, SetDecl> sets;
    std::map<std::string, FamilyDecl> families;
    std::map<std::string, StratificationDecl> stratifications;
    std::map<std::string, WeightedPoly> polynomials;

    // Resolution with validation; all throw input_error on bad references
    // or violated tags.
    Complex complex(const std::string& name) const;
    ComplexPtr complex_ptr(const std::string& name) const;
    ConstructibleSet set(const std::string& name) const;
    OrderedFamily family(const std::string& name) const;
    Stratification stratification(const std::string& name) const;
    WeightedPoly polynomial(const std::string& name) const;

    // Validates every declaration (references, tags, nesting, partitions,
    // polynomial well-formedness).
    void validate() const;
};

Document parse_document(const std::string& json_text);
std::string serialize_document(const Document& doc);

Document load_document_file(const std::string& path);

// Inclusion-maximal simplices, the natural generator list for emission.
std::vector<Simplex> document_generators(const Complex& K);

// Rewrites every complex as its n-fold barycentric subdivision, refining all
// set declarations along. vertex_maps (when non-null) receives, per complex
// name, the map from original vertex ids to their images.
Document subdivide_document(const Document& doc, int rounds,
                            std::map<std::string, std::map<Vertex, Vertex>>* vertex_maps = nullptr);

}  // namespace eulink
