#include "eulink/document.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "eulink/errors.hpp"

namespace eulink {

using nlohmann::json;

namespace {

Rational parse_rational(const std::string& text) {
    try {
        Rational q(text);
        q.canonicalize();
        return q;
    } catch (const std::exception&) {
        throw input_error("document: bad rational literal '" + text + "'");
    }
}

SimplexSet parse_simplex_list(const json& arr, const std::string& where) {
    if (!arr.is_array()) throw input_error("document: " + where + " must be an array of simplices");
    SimplexSet out;
    for (const auto& item : arr) {
        if (!item.is_array()) throw input_error("document: " + where + " entries must be arrays");
        std::vector<Vertex> verts;
        for (const auto& v : item) verts.push_back(v.get<Vertex>());
        out.insert(make_simplex(std::move(verts)));
    }
    return out;
}

json simplex_list_to_json(const SimplexSet& s) {
    json arr = json::array();
    for (const auto& simplex : s) arr.push_back(simplex);
    return arr;
}

// Generators for document emission: the inclusion-maximal simplices.
std::vector<Simplex> maximal_simplices(const Complex& K) {
    std::vector<Simplex> out;
    for (const auto& s : K.simplices()) {
        bool maximal = true;
        for (const auto& t : K.simplices()) {
            if (t.size() > s.size() && is_face(s, t)) {
                maximal = false;
                break;
            }
        }
        if (maximal) out.push_back(s);
    }
    return out;
}

}  // namespace

Complex Document::complex(const std::string& cname) const {
    auto it = complexes.find(cname);
    if (it == complexes.end()) throw input_error("document: unknown complex '" + cname + "'");
    return Complex::from_generators(it->second.generators);
}

ComplexPtr Document::complex_ptr(const std::string& cname) const {
    return make_complex_ptr(complex(cname));
}

ConstructibleSet Document::set(const std::string& sname) const {
    auto it = sets.find(sname);
    if (it == sets.end()) throw input_error("document: unknown set '" + sname + "'");
    const SetDecl& decl = it->second;
    ConstructibleSet cs(complex_ptr(decl.complex), decl.simplices);
    if (decl.kind == "closed") {
        if (!cs.is_closed())
            throw input_error("document: set '" + sname + "' is tagged closed but is not face-closed");
    } else if (decl.kind == "open") {
        if (!cs.is_open())
            throw input_error("document: set '" + sname + "' is tagged open but is not coface-closed");
    } else if (decl.kind != "any") {
        throw input_error("document: set '" + sname + "' has unknown kind '" + decl.kind + "'");
    }
    return cs;
}

OrderedFamily Document::family(const std::string& fname) const {
    auto it = families.find(fname);
    if (it == families.end()) throw input_error("document: unknown family '" + fname + "'");
    const FamilyDecl& decl = it->second;
    ComplexPtr parent = complex_ptr(decl.complex);
    std::vector<Complex> members;
    for (const auto& mname : decl.members) {
        ConstructibleSet cs = set(mname);
        if (cs.parent() != *parent)
            throw input_error("document: family '" + fname + "' member '" + mname +
                              "' lives on a different complex");
        if (!cs.is_closed())
            throw input_error("document: family '" + fname + "' member '" + mname +
                              "' is not closed");
        members.push_back(Complex::from_closed_set(cs.carriers()));
    }
    OrderedFamily fam = OrderedFamily::create(parent, std::move(members), decl.algebraic, fname);
    if (decl.nested && !fam.nested)
        throw input_error("document: family '" + fname + "' is declared nested but is not");
    fam.nested = fam.nested && decl.nested;
    return fam;
}

Stratification Document::stratification(const std::string& sname) const {
    auto it = stratifications.find(sname);
    if (it == stratifications.end())
        throw input_error("document: unknown stratification '" + sname + "'");
    const StratificationDecl& decl = it->second;
    ComplexPtr parent = complex_ptr(decl.complex);
    std::vector<std::pair<std::string, SimplexSet>> strata;
    std::map<std::string, bool> irreducible;
    for (const auto& [label, stratum] : decl.strata) {
        ConstructibleSet cs = set(stratum.set);
        if (cs.parent() != *parent)
            throw input_error("document: stratification '" + sname + "' stratum '" + label +
                              "' lives on a different complex");
        strata.emplace_back(label, cs.carriers());
        irreducible[label] = stratum.irreducible;
    }
    return Stratification::create(parent, std::move(strata), std::move(irreducible), sname);
}

WeightedPoly Document::polynomial(const std::string& pname) const {
    auto it = polynomials.find(pname);
    if (it == polynomials.end()) throw input_error("document: unknown polynomial '" + pname + "'");
    WeightedPoly f = it->second;
    validate(f);
    return f;
}

void Document::validate() const {
    for (const auto& [cname, decl] : complexes) {
        (void)decl;
        (void)complex(cname);
    }
    for (const auto& [sname, decl] : sets) {
        (void)decl;
        (void)set(sname);
    }
    for (const auto& [fname, decl] : families) {
        (void)decl;
        (void)family(fname);
    }
    for (const auto& [sname, decl] : stratifications) {
        (void)decl;
        (void)stratification(sname);
    }
    for (const auto& [pname, decl] : polynomials) {
        (void)decl;
        (void)polynomial(pname);
    }
}

Document parse_document(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::exception& e) {
        throw input_error(std::string("document: JSON parse failure: ") + e.what());
    }
    if (!j.is_object()) throw input_error("document: top level must be an object");

    Document doc;
    doc.format_version = j.value("format_version", std::string());
    if (doc.format_version != "1")
        throw input_error("document: unsupported format_version '" + doc.format_version + "'");
    doc.name = j.value("name", std::string());
    doc.description = j.value("description", std::string());
    doc.expect_obstruction = j.value("expect_obstruction", false);

    try {
        for (const auto& [cname, cj] : j.value("complexes", json::object()).items()) {
            ComplexDecl decl;
            const json& gens = cj.is_object() ? cj.at("generators") : cj;
            if (!gens.is_array()) throw input_error("document: complex generators must be an array");
            for (const auto& g : gens) {
                std::vector<Vertex> verts;
                for (const auto& v : g) verts.push_back(v.get<Vertex>());
                decl.generators.push_back(make_simplex(std::move(verts)));
            }
            if (cj.is_object()) decl.algebraic = cj.value("algebraic", false);
            doc.complexes.emplace(cname, std::move(decl));
        }
        for (const auto& [sname, sj] : j.value("sets", json::object()).items()) {
            SetDecl decl;
            decl.complex = sj.at("complex").get<std::string>();
            decl.kind = sj.value("kind", std::string("any"));
            decl.simplices = parse_simplex_list(sj.at("simplices"), "set '" + sname + "'");
            doc.sets.emplace(sname, std::move(decl));
        }
        for (const auto& [fname, fj] : j.value("families", json::object()).items()) {
            FamilyDecl decl;
            decl.complex = fj.at("complex").get<std::string>();
            for (const auto& m : fj.at("members")) decl.members.push_back(m.get<std::string>());
            decl.nested = fj.value("nested", true);
            if (fj.contains("algebraic"))
                for (const auto& b : fj.at("algebraic")) decl.algebraic.push_back(b.get<bool>());
            doc.families.emplace(fname, std::move(decl));
        }
        for (const auto& [sname, sj] : j.value("stratifications", json::object()).items()) {
            StratificationDecl decl;
            decl.complex = sj.at("complex").get<std::string>();
            for (const auto& [label, stj] : sj.at("strata").items()) {
                StratumDecl stratum;
                stratum.set = stj.at("set").get<std::string>();
                stratum.irreducible = stj.value("irreducible", false);
                decl.strata.emplace(label, std::move(stratum));
            }
            doc.stratifications.emplace(sname, std::move(decl));
        }
        for (const auto& [pname, pj] : j.value("polynomials", json::object()).items()) {
            WeightedPoly f;
            f.name = pname;
            f.w1 = pj.at("weights").at(0).get<int>();
            f.w2 = pj.at("weights").at(1).get<int>();
            f.degree = pj.at("degree").get<long long>();
            for (const auto& term : pj.at("terms")) {
                int a = term.at("a").get<int>();
                int b = term.at("b").get<int>();
                Rational c = parse_rational(term.at("c").get<std::string>());
                auto [pos, fresh] = f.terms.emplace(std::make_pair(a, b), c);
                if (!fresh)
                    throw input_error("document: polynomial '" + pname + "' repeats term (" +
                                      std::to_string(a) + "," + std::to_string(b) + ")");
            }
            doc.polynomials.emplace(pname, std::move(f));
        }
    } catch (const json::exception& e) {
        throw input_error(std::string("document: malformed field: ") + e.what());
    }
    return doc;
}

std::string serialize_document(const Document& doc) {
    json j;
    j["format_version"] = doc.format_version;
    j["name"] = doc.name;
    if (!doc.description.empty()) j["description"] = doc.description;
    if (doc.expect_obstruction) j["expect_obstruction"] = true;

    json complexes = json::object();
    for (const auto& [cname, decl] : doc.complexes) {
        json cj;
        json gens = json::array();
        for (const auto& g : decl.generators) gens.push_back(g);
        cj["generators"] = gens;
        if (decl.algebraic) cj["algebraic"] = true;
        complexes[cname] = cj;
    }
    j["complexes"] = complexes;

    json sets = json::object();
    for (const auto& [sname, decl] : doc.sets) {
        json sj;
        sj["complex"] = decl.complex;
        sj["kind"] = decl.kind;
        sj["simplices"] = simplex_list_to_json(decl.simplices);
        sets[sname] = sj;
    }
    if (!doc.sets.empty()) j["sets"] = sets;

    json families = json::object();
    for (const auto& [fname, decl] : doc.families) {
        json fj;
        fj["complex"] = decl.complex;
        fj["members"] = decl.members;
        fj["nested"] = decl.nested;
        if (!decl.algebraic.empty()) fj["algebraic"] = decl.algebraic;
        families[fname] = fj;
    }
    if (!doc.families.empty()) j["families"] = families;

    json strats = json::object();
    for (const auto& [sname, decl] : doc.stratifications) {
        json sj;
        sj["complex"] = decl.complex;
        json strata = json::object();
        for (const auto& [label, stratum] : decl.strata)
            strata[label] = {{"set", stratum.set}, {"irreducible", stratum.irreducible}};
        sj["strata"] = strata;
        strats[sname] = sj;
    }
    if (!doc.stratifications.empty()) j["stratifications"] = strats;

    json polys = json::object();
    for (const auto& [pname, f] : doc.polynomials) {
        json pj;
        pj["weights"] = {f.w1, f.w2};
        pj["degree"] = f.degree;
        json terms = json::array();
        for (const auto& [ab, c] : f.terms)
            terms.push_back({{"a", ab.first}, {"b", ab.second}, {"c", c.get_str()}});
        pj["terms"] = terms;
        polys[pname] = pj;
    }
    if (!doc.polynomials.empty()) j["polynomials"] = polys;

    return j.dump(2) + "\n";
}

Document load_document_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("document: cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_document(buf.str());
}

// Helper for corpus emission; declared here to keep the json dependency in
// one translation unit.
std::vector<Simplex> document_generators(const Complex& K) { return maximal_simplices(K); }

Document subdivide_document(const Document& doc, int rounds,
                            std::map<std::string, std::map<Vertex, Vertex>>* vertex_maps) {
    if (rounds <= 0) return doc;
    Document out = doc;
    if (vertex_maps) vertex_maps->clear();
    for (auto& [cname, decl] : out.complexes) {
        Complex K = Complex::from_generators(decl.generators);
        std::map<Vertex, Vertex> vmap;
        for (Vertex v : K.vertices()) vmap[v] = v;
        std::map<std::string, SimplexSet> carriers;
        for (const auto& [sname, sdecl] : out.sets)
            if (sdecl.complex == cname) carriers[sname] = sdecl.simplices;
        for (int round = 0; round < rounds; ++round) {
            SubdivisionMap sd = barycentric_subdivision(K);
            for (auto& [v0, v] : vmap) v = sd.transport_vertex(v);
            for (auto& [sname, cells] : carriers) cells = sd.refine(cells);
            K = *sd.target;
        }
        decl.generators = document_generators(K);
        for (auto& [sname, cells] : carriers) out.sets.at(sname).simplices = std::move(cells);
        if (vertex_maps) (*vertex_maps)[cname] = std::move(vmap);
    }
    return out;
}

}  // namespace eulink
