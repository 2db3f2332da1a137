#pragma once

#include "greenbox/cells/scalar.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace greenbox::cells {

// A finite basis with a structure-constant oracle: multiply(i, j) returns the
// expansion of b_i * b_j. The oracle must be deterministic and safe to call
// concurrently.
struct BasedAlgebra {
    std::size_t size = 0;
    RingTag ring = RingTag::Rationals;
    std::function<SparseVec(int, int)> multiply;
    std::vector<int> generators;
    // No negative constants and no generator word that vanishes; this is what
    // makes the generator closure exact.
    bool nonneg_structure_constants = false;
    std::optional<std::vector<int>> star;
    std::vector<std::string> names;  // optional basis labels

    std::string name(int i) const;
};

// Group algebra of a finite group given by its multiplication table.
BasedAlgebra group_algebra(const std::vector<std::vector<int>>& table, const std::vector<int>& inverse);

}  // namespace greenbox::cells
