#pragma once

#include <vector>

#include "eulink/document.hpp"

namespace eulink {

// Bundled example documents: spheres, a circle, cones that fail the
// evenness obstruction, a compactified umbrella surface with its axis
// family and stratification, compactified line/plane fixtures and a double
// cone. Deterministic content, validated by the self test.
std::vector<Document> corpus();

std::vector<std::string> corpus_names();

Document corpus_document(const std::string& name);

}  // namespace eulink
