#include "eulink/constructible_function.hpp"

#include "eulink/errors.hpp"

namespace eulink {

ConstructibleFunction::ConstructibleFunction(ComplexPtr parent, std::map<Simplex, Integer> weights)
    : parent_(std::move(parent)), weights_(std::move(weights)) {
    if (!parent_) throw input_error("constructible function: null parent");
    for (auto it = weights_.begin(); it != weights_.end();) {
        if (!parent_->contains(it->first))
            throw input_error("constructible function: weight on " + simplex_to_string(it->first) +
                              " which is not a cell of the parent");
        if (it->second == 0)
            it = weights_.erase(it);
        else
            ++it;
    }
}

Integer ConstructibleFunction::value(const Simplex& cell) const {
    auto it = weights_.find(cell);
    return it == weights_.end() ? Integer(0) : it->second;
}

ConstructibleFunction ConstructibleFunction::operator+(const ConstructibleFunction& other) const {
    if (*parent_ != *other.parent_)
        throw input_error("constructible function: mismatched parents");
    std::map<Simplex, Integer> w = weights_;
    for (const auto& [s, v] : other.weights_) w[s] += v;
    return ConstructibleFunction(parent_, std::move(w));
}

ConstructibleFunction ConstructibleFunction::operator-(const ConstructibleFunction& other) const {
    return *this + other.scaled(-1);
}

ConstructibleFunction ConstructibleFunction::scaled(const Integer& c) const {
    std::map<Simplex, Integer> w;
    if (c != 0)
        for (const auto& [s, v] : weights_) w.emplace(s, c * v);
    return ConstructibleFunction(parent_, std::move(w));
}

bool ConstructibleFunction::operator==(const ConstructibleFunction& other) const {
    return *parent_ == *other.parent_ && weights_ == other.weights_;
}

ConstructibleFunction from_indicators(
    ComplexPtr parent, const std::vector<std::pair<Integer, ConstructibleSet>>& terms) {
    std::map<Simplex, Integer> w;
    for (const auto& [coeff, set] : terms) {
        if (set.parent() != *parent)
            throw input_error("indicator: term lives on a different complex");
        if (!set.is_closed())
            throw input_error("indicator: term is not a closed subcomplex");
        for (const auto& s : set.carriers()) w[s] += coeff;
    }
    return ConstructibleFunction(std::move(parent), std::move(w));
}

ConstructibleFunction constant_one(ComplexPtr parent) {
    std::map<Simplex, Integer> w;
    for (const auto& s : parent->simplices()) w.emplace(s, 1);
    return ConstructibleFunction(std::move(parent), std::move(w));
}

ConstructibleFunction lambda_op(const ConstructibleFunction& phi) {
    std::map<Simplex, Integer> out;
    for (const auto& [t, wt] : phi.weights()) {
        // Diagonal term: the boundary sphere of t seen from inside its cell.
        if (t.size() % 2 == 0) out[t] += 2 * wt;
        // Off-diagonal: each proper face sees t with sign (-1)^{|t|}.
        const Integer contrib = (t.size() % 2 == 0) ? wt : -wt;
        for (const auto& f : proper_faces(t)) out[f] += contrib;
    }
    return ConstructibleFunction(phi.parent_ptr(), std::move(out));
}

ConstructibleFunction duality_op(const ConstructibleFunction& phi) { return phi - lambda_op(phi); }

Integer euler_integral(const ConstructibleFunction& phi) {
    Integer total = 0;
    for (const auto& [s, w] : phi.weights()) total += (dim(s) % 2 == 0) ? w : -w;
    return total;
}

EvennessReport evenness_audit(const ConstructibleFunction& phi) {
    ConstructibleFunction lp = lambda_op(phi);
    EvennessReport report;
    for (const auto& [s, v] : lp.weights())
        if (mod_residue(v, 2) != 0) report.odd_cells.emplace_back(s, v);
    return report;
}

ConstructibleFunction transport(const ConstructibleFunction& phi, const SubdivisionMap& sd) {
    if (*sd.source != phi.parent())
        throw input_error("transport: subdivision source differs from the function's parent");
    std::map<Simplex, Integer> w;
    for (const auto& c : sd.target->simplices()) {
        Integer v = phi.value(sd.carrier_of_cell(c));
        if (v != 0) w.emplace(c, std::move(v));
    }
    return ConstructibleFunction(sd.target, std::move(w));
}

}  // namespace eulink
