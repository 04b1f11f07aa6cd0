#include "eulink/family.hpp"

#include "eulink/errors.hpp"

namespace eulink {

OrderedFamily OrderedFamily::create(ComplexPtr parent, std::vector<Complex> members,
                                    std::vector<bool> algebraic, std::string name) {
    if (!parent) throw input_error("family: null parent");
    for (const auto& m : members)
        if (!is_subcomplex(m, *parent))
            throw input_error("family: member is not a subcomplex of the parent");
    if (algebraic.empty()) algebraic.assign(members.size(), false);
    if (algebraic.size() != members.size())
        throw input_error("family: algebraic flag count does not match member count");

    OrderedFamily f;
    f.parent = std::move(parent);
    f.nested = true;
    for (std::size_t i = 0; i + 1 < members.size(); ++i)
        if (!is_subcomplex(members[i], members[i + 1])) f.nested = false;
    f.members = std::move(members);
    f.algebraic = std::move(algebraic);
    f.name = std::move(name);
    return f;
}

std::vector<SimplexSet> OrderedFamily::pieces() const {
    std::vector<SimplexSet> out;
    SimplexSet prev;
    for (const auto& m : members) {
        out.push_back(set_minus(m.simplices(), prev));
        prev = m.simplices();
    }
    out.push_back(set_minus(parent->simplices(), prev));
    return out;
}

}  // namespace eulink
