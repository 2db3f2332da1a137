#pragma once

#include <string>
#include <vector>

namespace greenbox::symgroup {

// Weakly decreasing positive parts, English convention.
struct YoungPartition {
    std::vector<int> parts;

    YoungPartition() = default;
    explicit YoungPartition(std::vector<int> p);

    int size() const;
    int length() const { return static_cast<int>(parts.size()); }
    YoungPartition conjugate() const;
    std::string to_string() const;  // "(2,1)"

    friend bool operator==(const YoungPartition&, const YoungPartition&) = default;
    friend auto operator<=>(const YoungPartition&, const YoungPartition&) = default;
};

YoungPartition parse_partition(const std::string& text);

// All partitions of m, (m) first, in reverse lexicographic order.
std::vector<YoungPartition> partitions(int m);

// True when a precedes b in the dominance order with the one-row partition
// minimal, i.e. every partial sum of a is at least that of b.
bool dominance_leq(const YoungPartition& a, const YoungPartition& b);

// Partitions whose consecutive column lengths differ by less than p; p = 0
// stands for infinity.
std::vector<YoungPartition> p_restricted_partitions(int size, int p);

long hook_length_dimension(const YoungPartition& shape);

}  // namespace greenbox::symgroup
