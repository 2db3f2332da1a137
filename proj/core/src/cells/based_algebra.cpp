#include "greenbox/cells/based_algebra.hpp"

#include "greenbox/error.hpp"

namespace greenbox::cells {

std::string BasedAlgebra::name(int i) const {
    if (static_cast<size_t>(i) < names.size()) return names[static_cast<size_t>(i)];
    return "b" + std::to_string(i);
}

BasedAlgebra group_algebra(const std::vector<std::vector<int>>& table, const std::vector<int>& inverse) {
    BasedAlgebra a;
    a.size = table.size();
    a.ring = RingTag::Rationals;
    a.nonneg_structure_constants = true;
    a.multiply = [table](int i, int j) {
        return SparseVec{Term{Rational(1), table[static_cast<size_t>(i)][static_cast<size_t>(j)]}};
    };
    for (size_t i = 0; i < table.size(); ++i) a.generators.push_back(static_cast<int>(i));
    a.star = inverse;
    return a;
}

}  // namespace greenbox::cells
