#pragma once

#include "greenbox/diagrams/partition_diagram.hpp"

#include <string>
#include <vector>

namespace greenbox::diagrams {

enum class Family {
    Transformation,
    PlanarTransformation,
    Partition,
    PlanarPartition,
    RookBrauer,
    Motzkin,
    Brauer,
    TemperleyLieb,
    Rook,
    PlanarRook,
    Symmetric,
    PlanarSymmetric,
};

const std::vector<Family>& all_families();
// The families closed under star, i.e. all but the two transformation monoids.
const std::vector<Family>& involutive_families();

std::string tag(Family f);
std::string display_name(Family f);
Family parse_family(const std::string& text);

bool is_planar_family(Family f);
bool is_involutive(Family f);
bool is_transformation_family(Family f);

bool in_family(const PartitionDiagram& a, Family f);

int enumeration_bound(Family f);
// All members on n strands in canonical order.
std::vector<PartitionDiagram> enumerate(Family f, int n);
// Same set, by filtering every set partition of the 2n labels (n <= 4).
std::vector<PartitionDiagram> enumerate_by_filtering(Family f, int n);

}  // namespace greenbox::diagrams
