#include "eulink/congruence.hpp"

#include <algorithm>
#include <sstream>

#include "eulink/errors.hpp"
#include "eulink/links.hpp"

namespace eulink {

namespace {

Integer pow2(std::size_t e) {
    Integer m = 1;
    m <<= e;
    return m;
}

// Alternating inclusion-exclusion sum over nonempty subsets of the pieces,
// with term(union) supplied by the caller.
template <typename Term>
Integer alternating_sum(const std::vector<SimplexSet>& pieces, Term term) {
    const std::size_t n = pieces.size();
    Integer total = 0;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        SimplexSet u;
        int count = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (mask & (1u << i)) {
                u.insert(pieces[i].begin(), pieces[i].end());
                ++count;
            }
        }
        Integer t = term(u);
        total += (count % 2 == 1) ? t : -t;
    }
    return total;
}

SimplexSet cells_at_vertex(const SimplexSet& carriers, Vertex v) {
    SimplexSet out;
    for (const auto& s : carriers)
        if (std::binary_search(s.begin(), s.end(), v)) out.insert(s);
    return out;
}

}  // namespace

Stratification Stratification::create(ComplexPtr parent,
                                      std::vector<std::pair<std::string, SimplexSet>> strata,
                                      std::map<std::string, bool> irreducible, std::string name) {
    if (!parent) throw input_error("stratification: null parent");
    std::sort(strata.begin(), strata.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    SimplexSet seen;
    for (const auto& [label, cells] : strata) {
        for (const auto& s : cells) {
            if (!parent->contains(s))
                throw input_error("stratification: stratum '" + label + "' uses " +
                                  simplex_to_string(s) + " which is not in the parent");
            if (!seen.insert(s).second)
                throw input_error("stratification: strata overlap at " + simplex_to_string(s));
        }
        ConstructibleSet cs(parent, cells);
        if (!cs.is_locally_closed())
            throw input_error("stratification: stratum '" + label + "' is not locally closed");
    }
    if (seen != parent->simplices())
        throw input_error("stratification: strata do not cover the parent complex");
    Stratification st;
    st.parent = std::move(parent);
    st.strata = std::move(strata);
    st.irreducible = std::move(irreducible);
    st.name = std::move(name);
    return st;
}

Integer delta_global(const OrderedFamily& family) {
    return alternating_sum(family.pieces(), [](const SimplexSet& u) { return chi(u); });
}

Integer delta_local(Vertex v, const OrderedFamily& family, bool cross_check) {
    if (!family.parent->has_vertex(v))
        throw input_error("local delta: vertex " + std::to_string(v) + " is not in the complex");
    // Per-piece germs at v; unions of germs are germs of unions.
    std::vector<SimplexSet> germs;
    for (const auto& p : family.pieces()) germs.push_back(cells_at_vertex(p, v));
    Integer value = alternating_sum(germs, [](const SimplexSet& u) { return chi(u); });

    if (cross_check && family.nested) {
        LinkModel lm = localized_iterated_link(v, family, *family.parent);
        Integer link_chi = lm.chi_value();
        if (link_chi != value) {
            std::ostringstream os;
            os << "local delta mismatch at vertex " << v << ": inclusion-exclusion gives "
               << value.get_str() << " but the localized iterated link has chi "
               << link_chi.get_str();
            throw internal_error(os.str());
        }
    }
    return value;
}

DeltaReport divisibility_check(const OrderedFamily& family) {
    DeltaReport report;
    report.k = family.k();
    report.modulus = pow2(report.k);
    report.global_delta = delta_global(family);
    if (!divides(report.modulus, report.global_delta)) {
        report.divisibility_pass = false;
        report.certificates.push_back(
            {"divisibility", "global",
             "delta = " + report.global_delta.get_str() + " is not divisible by " +
                 report.modulus.get_str() +
                 (family.name.empty() ? "" : " (family " + family.name + ")")});
    }
    for (Vertex v : family.parent->vertices()) {
        Integer dv = delta_local(v, family);
        if (!divides(report.modulus, dv)) {
            report.divisibility_pass = false;
            report.certificates.push_back(
                {"divisibility", "vertex " + std::to_string(v),
                 "delta = " + dv.get_str() + " is not divisible by " + report.modulus.get_str() +
                     (family.name.empty() ? "" : " (family " + family.name + ")")});
        }
        report.local_deltas.emplace(v, std::move(dv));
    }
    return report;
}

DeltaReport constancy_audit(const OrderedFamily& family, const Stratification& strat,
                            Integer mod_override) {
    if (*strat.parent != *family.parent)
        throw input_error("constancy audit: stratification lives on a different complex");
    DeltaReport report = divisibility_check(family);
    report.modulus = (mod_override != 0) ? mod_override : pow2(report.k + 1);

    std::map<Simplex, Integer> stalk_weights;
    for (const auto& [v, dv] : report.local_deltas) stalk_weights.emplace(Simplex{v}, dv);

    for (const auto& [label, cells] : strat.strata) {
        std::set<Integer> residues;
        std::vector<Vertex> witnesses;
        for (const auto& [v, dv] : report.local_deltas) {
            if (!cells.count(Simplex{v})) continue;
            residues.insert(mod_residue(dv, report.modulus));
            witnesses.push_back(v);
        }
        bool flagged = false;
        if (auto it = strat.irreducible.find(label); it != strat.irreducible.end())
            flagged = it->second;
        if (flagged && residues.size() > 1) {
            report.constancy_pass = false;
            std::ostringstream os;
            os << "stratum carries residues {";
            bool first = true;
            for (const auto& r : residues) {
                if (!first) os << ", ";
                os << r.get_str();
                first = false;
            }
            os << "} mod " << report.modulus.get_str() << " at vertices";
            for (Vertex v : witnesses) os << ' ' << v;
            report.certificates.push_back({"constancy", "stratum " + label, os.str()});
        }
        report.residues.emplace(label, std::move(residues));
    }
    report.stalk_function = ConstructibleFunction(family.parent, std::move(stalk_weights));
    return report;
}

DoubleCone double_cone(const OrderedFamily& family) {
    const Complex& X = *family.parent;
    std::map<Vertex, Vertex> map_a, map_b;
    Vertex next = 1;
    for (Vertex v : X.vertices()) {
        map_a[v] = next++;
        map_b[v] = next++;
    }
    auto cone_both = [&](const Complex& base) {
        SimplexSet out;
        out.insert(Simplex{0});
        for (const auto* m : {&map_a, &map_b}) {
            for (const auto& s : base.simplices()) {
                Simplex t;
                t.reserve(s.size());
                for (Vertex v : s) t.push_back(m->at(v));
                std::sort(t.begin(), t.end());
                Simplex coned;
                coned.push_back(0);
                coned.insert(coned.end(), t.begin(), t.end());
                out.insert(std::move(t));
                out.insert(std::move(coned));
            }
        }
        return Complex::from_closed_set(std::move(out));
    };

    DoubleCone dc;
    dc.complex = cone_both(X);
    auto parent = make_complex_ptr(dc.complex);

    std::vector<Complex> members;
    std::vector<bool> algebraic;
    members.push_back(Complex::from_generators({Simplex{0}}));
    algebraic.push_back(true);
    for (std::size_t i = 0; i < family.members.size(); ++i) {
        members.push_back(cone_both(family.members[i]));
        algebraic.push_back(family.algebraic[i]);
    }
    dc.family = OrderedFamily::create(parent, std::move(members), std::move(algebraic),
                                      family.name.empty() ? "double_cone" : family.name + "_double_cone");
    dc.apex = 0;
    return dc;
}

CompactificationDelta compactification_delta(const OrderedFamily& family, Vertex infinity) {
    const Complex& X = *family.parent;
    if (!X.has_vertex(infinity))
        throw input_error("compactification: vertex " + std::to_string(infinity) +
                          " is not in the complex");
    const Simplex inf_cell{infinity};
    for (const auto& m : family.members)
        if (!m.contains(inf_cell))
            throw input_error("compactification: every member must contain the vertex at infinity");

    CompactificationDelta out;
    out.delta_compactified = delta_global(family);

    // Pieces of the punctured family: drop the infinity cell everywhere.
    std::vector<SimplexSet> pieces = family.pieces();
    for (auto& p : pieces) p.erase(inf_cell);
    const std::size_t n = pieces.size();
    out.delta_noncompact =
        alternating_sum(pieces, [](const SimplexSet& u) { return chi(u); });

    // Correction: alternating sum over subsets T of the pieces beyond the
    // first of (chi(link at infinity of U_1 + those pieces) - 1). The -1
    // normalization keeps the identity exact for every family size.
    {
        Integer total = 0;
        const std::size_t rest = n - 1;
        for (unsigned mask = 0; mask < (1u << rest); ++mask) {
            SimplexSet u = pieces[0];
            int count = 0;
            for (std::size_t i = 0; i < rest; ++i)
                if (mask & (1u << i)) {
                    u.insert(pieces[i + 1].begin(), pieces[i + 1].end());
                    ++count;
                }
            Integer link_chi = chi(cells_at_vertex(u, infinity));
            Integer term = link_chi - 1;
            total += (count % 2 == 0) ? term : -term;
        }
        out.correction = -total;
    }

    // Literal delta of the links-at-infinity family.
    {
        std::map<std::string, Complex> traces;
        for (std::size_t i = 0; i < family.members.size(); ++i)
            traces.emplace("member" + std::to_string(i), family.members[i]);
        LinkModel lm = subcomplex_link(Complex::from_generators({inf_cell}), X, traces);
        std::vector<Complex> link_members;
        for (std::size_t i = 0; i < family.members.size(); ++i)
            link_members.push_back(lm.marking_subcomplex("member" + std::to_string(i)));
        OrderedFamily link_family =
            OrderedFamily::create(lm.complex, std::move(link_members), {}, "links_at_infinity");
        out.links_at_infinity_delta = delta_global(link_family);
    }
    return out;
}

}  // namespace eulink
