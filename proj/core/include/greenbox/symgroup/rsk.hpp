#pragma once

#include "greenbox/symgroup/partitions.hpp"
#include "greenbox/symgroup/permutation.hpp"

#include <map>
#include <string>
#include <vector>

namespace greenbox::symgroup {

using Tableau = std::vector<std::vector<int>>;

struct RskPair {
    Tableau P;
    Tableau Q;
    YoungPartition shape() const;
};

RskPair rsk(const Permutation& w);
Permutation inverse_rsk(const Tableau& P, const Tableau& Q);
std::string tableau_to_string(const Tableau& t);  // "[[1,3],[2]]"

struct TypeACells {
    int m = 0;
    std::vector<Permutation> elements;     // all of S_m
    std::vector<int> left_cell;            // per element, fiber of Q
    std::vector<int> right_cell;           // per element, fiber of P
    std::vector<int> two_sided_cell;       // per element, fiber of shape
    std::vector<YoungPartition> shapes;    // shape of each two-sided cell
    std::vector<long> left_cell_sizes;
    std::vector<long> two_sided_sizes;
};

TypeACells typeA_cells(int m);

}  // namespace greenbox::symgroup
