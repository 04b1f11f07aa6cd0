#include "eulink/links.hpp"

#include <algorithm>
#include <sstream>

#include "eulink/errors.hpp"

namespace eulink {

namespace {

bool has_vertex_in(const Simplex& s, const std::set<Vertex>& verts) {
    return std::any_of(s.begin(), s.end(), [&](Vertex v) { return verts.count(v) > 0; });
}

// Closed star of a vertex: all simplices s with s+v a simplex.
Complex closed_star(Vertex v, const Complex& X) {
    SimplexSet out;
    for (const auto& s : X.simplices()) {
        if (std::binary_search(s.begin(), s.end(), v)) {
            out.insert(s);
            continue;
        }
        Simplex t = s;
        t.insert(std::lower_bound(t.begin(), t.end(), v), v);
        if (X.contains(t)) out.insert(s);
    }
    return Complex::from_closed_set(std::move(out));
}

// Star of v inside a subcomplex M of the ambient: simplices of M whose join
// with v stays in M.
SimplexSet star_within(Vertex v, const Complex& M) {
    SimplexSet out;
    for (const auto& s : M.simplices()) {
        if (std::binary_search(s.begin(), s.end(), v)) {
            out.insert(s);
            continue;
        }
        Simplex t = s;
        t.insert(std::lower_bound(t.begin(), t.end(), v), v);
        if (M.contains(t)) out.insert(s);
    }
    return out;
}

struct StageInput {
    Complex ambient;
    Complex core;  // the subcomplex whose link is taken
    std::map<std::string, Complex> traces;
    std::shared_ptr<const SubdivisionMap> subdivision;  // set when fullness forced a step
    std::string note;
};

// Enforces fullness of the core by one barycentric subdivision, carrying the
// trace subcomplexes along.
StageInput normalize_stage(const Complex& X, const Complex& Y,
                           const std::map<std::string, Complex>& traces) {
    if (!is_subcomplex(Y, X)) throw input_error("link: subcomplex is not contained in the ambient complex");
    for (const auto& [label, Z] : traces) {
        if (!is_subcomplex(Y, Z) || !is_subcomplex(Z, X))
            throw input_error("link: trace '" + label + "' does not sit between the core and the ambient");
    }
    StageInput in;
    if (is_full_subcomplex(Y, X)) {
        in.ambient = X;
        in.core = Y;
        in.traces = traces;
        return in;
    }
    auto sd = std::make_shared<SubdivisionMap>(barycentric_subdivision(X));
    in.ambient = *sd->target;
    in.core = Complex::from_closed_set(sd->refine(Y.simplices()));
    for (const auto& [label, Z] : traces)
        in.traces.emplace(label, Complex::from_closed_set(sd->refine(Z.simplices())));
    in.subdivision = sd;
    in.note = "subdivided once to make the core full; ";
    return in;
}

LinkModel build_link(const StageInput& in, const SimplexSet& frontier_poset, std::string provenance) {
    LinkModel lm;
    std::map<Vertex, Simplex> labels;
    lm.complex = make_complex_ptr(order_complex(frontier_poset, &labels));
    lm.vertex_carrier = std::move(labels);
    for (const auto& [label, Z] : in.traces) {
        std::set<Vertex> marked;
        for (const auto& [id, s] : lm.vertex_carrier)
            if (Z.contains(s)) marked.insert(id);
        lm.markings.emplace(label, std::move(marked));
    }
    lm.provenance = in.note + std::move(provenance);
    lm.subdivision = in.subdivision;
    return lm;
}

}  // namespace

Complex LinkModel::marking_subcomplex(const std::string& label) const {
    auto it = markings.find(label);
    if (it == markings.end()) throw input_error("link model: no marking named '" + label + "'");
    return full_subcomplex(*complex, it->second);
}

SimplexSet LinkModel::trace(const SimplexSet& ambient_carriers) const {
    SimplexSet out;
    for (const auto& c : complex->simplices()) {
        const Simplex* best = nullptr;
        for (Vertex v : c) {
            const Simplex& s = vertex_carrier.at(v);
            if (!best || s.size() > best->size()) best = &s;
        }
        if (best && ambient_carriers.count(*best)) out.insert(c);
    }
    return out;
}

Complex vertex_link(Vertex v, const Complex& K) {
    if (!K.has_vertex(v))
        throw input_error("vertex link: vertex " + std::to_string(v) + " is not in the complex");
    SimplexSet out;
    for (const auto& s : K.simplices()) {
        if (!std::binary_search(s.begin(), s.end(), v)) continue;
        if (s.size() == 1) continue;
        Simplex t;
        t.reserve(s.size() - 1);
        for (Vertex w : s)
            if (w != v) t.push_back(w);
        out.insert(std::move(t));
    }
    return Complex::from_closed_set(std::move(out));
}

Integer point_link_chi(const Simplex& s, const Complex& K) {
    if (!K.contains(s))
        throw input_error("point link: " + simplex_to_string(s) + " is not a simplex of the complex");
    // chi(boundary(s)): a sphere of dimension |s|-2.
    Integer a = (s.size() % 2 == 0) ? 2 : 0;
    // chi(link(s; K)) over cofaces.
    Integer b = 0;
    for (const auto& t : K.simplices()) {
        if (t.size() <= s.size() || !is_face(s, t)) continue;
        int link_dim = static_cast<int>(t.size() - s.size()) - 1;
        b += (link_dim % 2 == 0) ? 1 : -1;
    }
    return a + b - a * b;
}

ConstructibleSet point_link_constructible(Vertex v, const ConstructibleSet& V) {
    const Complex& parent = V.parent();
    if (!parent.has_vertex(v))
        throw input_error("point link: vertex " + std::to_string(v) + " is not in the parent complex");
    Complex link = vertex_link(v, parent);
    SimplexSet carriers;
    for (const auto& s : V.carriers()) {
        if (s.size() == 1 || !std::binary_search(s.begin(), s.end(), v)) continue;
        Simplex t;
        t.reserve(s.size() - 1);
        for (Vertex w : s)
            if (w != v) t.push_back(w);
        carriers.insert(std::move(t));
    }
    return ConstructibleSet(make_complex_ptr(std::move(link)), std::move(carriers));
}

LinkModel subcomplex_link(const Complex& Y, const Complex& X,
                          const std::map<std::string, Complex>& traces) {
    StageInput in = normalize_stage(X, Y, traces);
    const auto& yverts = in.core.vertices();
    SimplexSet poset;
    for (const auto& s : in.ambient.simplices())
        if (!in.core.contains(s) && has_vertex_in(s, yverts)) poset.insert(s);
    return build_link(in, poset, "link of a closed subcomplex");
}

LinkModel localized_link(Vertex v, const Complex& Y, const Complex& X,
                         const std::map<std::string, Complex>& traces) {
    if (!X.has_vertex(v))
        throw input_error("localized link: vertex " + std::to_string(v) + " is not in the complex");
    if (!Y.has_vertex(v)) {
        LinkModel lm;
        lm.complex = make_complex_ptr(Complex());
        lm.provenance = "localized link at a vertex off the subcomplex: empty";
        return lm;
    }
    StageInput in = normalize_stage(X, Y, traces);
    Vertex w = in.subdivision ? in.subdivision->transport_vertex(v) : v;
    const auto& yverts = in.core.vertices();
    SimplexSet poset;
    for (const auto& s : in.ambient.simplices()) {
        if (!std::binary_search(s.begin(), s.end(), w)) continue;
        if (!in.core.contains(s) && has_vertex_in(s, yverts)) poset.insert(s);
    }
    return build_link(in, poset, "localized link at vertex " + std::to_string(v));
}

LinkModel iterated_link(const std::vector<Complex>& members, const Complex& X) {
    if (members.empty()) {
        LinkModel lm;
        lm.complex = make_complex_ptr(X);
        for (const auto& s : X.simplices())
            if (s.size() == 1) lm.vertex_carrier[s[0]] = s;
        lm.provenance = "iterated link of an empty family: the complex itself";
        return lm;
    }
    for (std::size_t i = 0; i + 1 < members.size(); ++i)
        if (!is_subcomplex(members[i], members[i + 1]))
            throw input_error("iterated link: unsupported non-nested family");
    if (!is_subcomplex(members.back(), X))
        throw input_error("iterated link: family members must be subcomplexes of the ambient complex");

    std::ostringstream prov;
    Complex ambient = X;
    std::vector<Complex> cur = members;
    if (!is_full_subcomplex(cur.front(), ambient)) {
        auto sd = barycentric_subdivision(ambient);
        ambient = *sd.target;
        for (auto& m : cur) m = Complex::from_closed_set(sd.refine(m.simplices()));
        prov << "subdivided once to make the first member full; ";
    }

    LinkModel lm;
    for (std::size_t i = 0; i < cur.size(); ++i) {
        std::map<std::string, Complex> traces;
        for (std::size_t j = i + 1; j < cur.size(); ++j)
            traces.emplace("member" + std::to_string(j), cur[j]);
        lm = subcomplex_link(cur[i], ambient, traces);
        ambient = *lm.complex;
        for (std::size_t j = i + 1; j < cur.size(); ++j)
            cur[j] = lm.marking_subcomplex("member" + std::to_string(j));
        prov << "stage " << (i + 1) << ": " << lm.complex->size() << " cells; ";
    }
    lm.markings.clear();
    lm.provenance = prov.str();
    return lm;
}

LinkModel iterated_link(const OrderedFamily& family, const Complex& X) {
    if (!family.nested) throw input_error("iterated link: unsupported non-nested family");
    return iterated_link(family.members, X);
}

LinkModel localized_iterated_link(Vertex v, const std::vector<Complex>& members, const Complex& X) {
    if (!X.has_vertex(v))
        throw input_error("localized iterated link: vertex " + std::to_string(v) +
                          " is not in the complex");
    Complex ambient = X;
    std::vector<Complex> cur = members;
    Vertex w = v;
    std::string note;

    // The closed star stands in for a small ball at v, which is only sound
    // when every member meets the star in its own star at v (a cone with
    // apex v). One subdivision forces that.
    Complex star = closed_star(w, ambient);
    bool conical = true;
    for (const auto& m : cur) {
        if (set_intersect(m.simplices(), star.simplices()) != star_within(w, m)) {
            conical = false;
            break;
        }
    }
    if (!conical) {
        auto sd = barycentric_subdivision(ambient);
        ambient = *sd.target;
        for (auto& m : cur) m = Complex::from_closed_set(sd.refine(m.simplices()));
        w = sd.transport_vertex(v);
        star = closed_star(w, ambient);
        note = "subdivided once to make star traces conical; ";
    }

    std::vector<Complex> traces;
    traces.reserve(cur.size());
    for (const auto& m : cur)
        traces.push_back(Complex::from_closed_set(set_intersect(m.simplices(), star.simplices())));
    LinkModel lm = iterated_link(traces, star);
    lm.provenance = note + "within the closed star of vertex " + std::to_string(v) + "; " + lm.provenance;
    return lm;
}

LinkModel localized_iterated_link(Vertex v, const OrderedFamily& family, const Complex& X) {
    if (!family.nested)
        throw input_error("localized iterated link: unsupported non-nested family");
    return localized_iterated_link(v, family.members, X);
}

ConstructibleSet derived_neighborhood(const Complex& Y, const Complex& X) {
    if (!is_subcomplex(Y, X))
        throw input_error("derived neighborhood: subcomplex is not contained in the complex");
    if (!is_full_subcomplex(Y, X))
        throw input_error("derived neighborhood: subcomplex must be full");
    SubdivisionMap sd = barycentric_subdivision(X);
    const auto& yverts = Y.vertices();
    SimplexSet carriers;
    for (const auto& c : sd.target->simplices()) {
        // Minimum of the chain: the element with the fewest vertices.
        const Simplex* least = nullptr;
        for (Vertex id : c) {
            const Simplex& s = sd.carrier.at(id);
            if (!least || s.size() < least->size()) least = &s;
        }
        if (least && has_vertex_in(*least, yverts)) carriers.insert(c);
    }
    return ConstructibleSet(sd.target, std::move(carriers));
}

}  // namespace eulink
