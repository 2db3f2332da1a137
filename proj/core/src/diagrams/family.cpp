#include "greenbox/diagrams/family.hpp"

#include "greenbox/error.hpp"

#include <algorithm>
#include <array>
#include <functional>

namespace greenbox::diagrams {

const std::vector<Family>& all_families() {
    static const std::vector<Family> all = {
        Family::Transformation, Family::PlanarTransformation, Family::Partition, Family::PlanarPartition,
        Family::RookBrauer,     Family::Motzkin,              Family::Brauer,    Family::TemperleyLieb,
        Family::Rook,           Family::PlanarRook,           Family::Symmetric, Family::PlanarSymmetric};
    return all;
}

const std::vector<Family>& involutive_families() {
    static const std::vector<Family> inv = {Family::Partition,     Family::PlanarPartition, Family::RookBrauer,
                                            Family::Motzkin,       Family::Brauer,          Family::TemperleyLieb,
                                            Family::Rook,          Family::PlanarRook,      Family::Symmetric,
                                            Family::PlanarSymmetric};
    return inv;
}

std::string tag(Family f) {
    switch (f) {
        case Family::Transformation: return "t";
        case Family::PlanarTransformation: return "pt";
        case Family::Partition: return "p";
        case Family::PlanarPartition: return "pp";
        case Family::RookBrauer: return "robr";
        case Family::Motzkin: return "mo";
        case Family::Brauer: return "br";
        case Family::TemperleyLieb: return "tl";
        case Family::Rook: return "ro";
        case Family::PlanarRook: return "pro";
        case Family::Symmetric: return "sym";
        case Family::PlanarSymmetric: return "psym";
    }
    return "?";
}

std::string display_name(Family f) {
    switch (f) {
        case Family::Transformation: return "FullTransformation";
        case Family::PlanarTransformation: return "PlanarTransformation";
        case Family::Partition: return "Partition";
        case Family::PlanarPartition: return "PlanarPartition";
        case Family::RookBrauer: return "RookBrauer";
        case Family::Motzkin: return "Motzkin";
        case Family::Brauer: return "Brauer";
        case Family::TemperleyLieb: return "TemperleyLieb";
        case Family::Rook: return "Rook";
        case Family::PlanarRook: return "PlanarRook";
        case Family::Symmetric: return "Symmetric";
        case Family::PlanarSymmetric: return "PlanarSymmetric";
    }
    return "?";
}

Family parse_family(const std::string& text) {
    std::string low;
    for (char c : text) low += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    for (Family f : all_families()) {
        std::string name = display_name(f);
        std::string lname;
        for (char c : name) lname += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        if (low == tag(f) || low == lname) return f;
    }
    if (low == "transformation") return Family::Transformation;
    throw InvalidInput("unknown family '" + text + "'");
}

bool is_planar_family(Family f) {
    switch (f) {
        case Family::PlanarTransformation:
        case Family::PlanarPartition:
        case Family::Motzkin:
        case Family::TemperleyLieb:
        case Family::PlanarRook:
        case Family::PlanarSymmetric: return true;
        default: return false;
    }
}

bool is_transformation_family(Family f) {
    return f == Family::Transformation || f == Family::PlanarTransformation;
}

bool is_involutive(Family f) { return !is_transformation_family(f); }

namespace {

struct BlockShape {
    int bottom = 0;
    int top = 0;
};

std::vector<BlockShape> shapes(const PartitionDiagram& a) {
    std::vector<BlockShape> s(static_cast<size_t>(a.block_count()));
    for (int i = 0; i < a.label_count(); ++i) {
        auto& b = s[static_cast<size_t>(a.block_of(i))];
        (i < a.bottom_count() ? b.bottom : b.top)++;
    }
    return s;
}

}  // namespace

bool in_family(const PartitionDiagram& a, Family f) {
    if (!a.is_square()) return false;
    auto s = shapes(a);
    auto all = [&](auto pred) { return std::all_of(s.begin(), s.end(), pred); };
    bool planar_ok = !is_planar_family(f) || a.is_planar();
    if (!planar_ok) return false;
    switch (f) {
        case Family::Transformation:
        case Family::PlanarTransformation: return all([](const BlockShape& b) { return b.top == 1; });
        case Family::Partition:
        case Family::PlanarPartition: return true;
        case Family::RookBrauer:
        case Family::Motzkin: return all([](const BlockShape& b) { return b.bottom + b.top <= 2; });
        case Family::Brauer:
        case Family::TemperleyLieb: return all([](const BlockShape& b) { return b.bottom + b.top == 2; });
        case Family::Rook:
        case Family::PlanarRook:
            return all([](const BlockShape& b) { return b.bottom + b.top == 1 || (b.bottom == 1 && b.top == 1); });
        case Family::Symmetric: return all([](const BlockShape& b) { return b.bottom == 1 && b.top == 1; });
        case Family::PlanarSymmetric: return a == PartitionDiagram::identity(a.n());
    }
    return false;
}

int enumeration_bound(Family f) {
    switch (f) {
        case Family::Partition: return 4;
        case Family::PlanarPartition:
        case Family::Transformation:
        case Family::Brauer:
        case Family::RookBrauer: return 6;
        default: return 8;
    }
}

namespace {

using Emit = std::function<void(const std::vector<int>&)>;

// Set partitions of `count` items in item order with block sizes in [lo, hi].
void set_partitions(int count, int lo, int hi, const Emit& emit) {
    std::vector<int> ids(static_cast<size_t>(count));
    std::vector<int> sizes;
    std::function<void(int)> rec = [&](int i) {
        if (i == count) {
            for (int s : sizes)
                if (s < lo) return;
            emit(ids);
            return;
        }
        // prune: blocks still below lo need at least that many items
        int need = 0;
        for (int s : sizes) need += std::max(0, lo - s);
        if (need > count - i) return;
        for (size_t b = 0; b < sizes.size(); ++b) {
            if (sizes[b] >= hi) continue;
            ids[static_cast<size_t>(i)] = static_cast<int>(b);
            ++sizes[b];
            rec(i + 1);
            --sizes[b];
        }
        ids[static_cast<size_t>(i)] = static_cast<int>(sizes.size());
        sizes.push_back(1);
        rec(i + 1);
        sizes.pop_back();
    };
    rec(0);
}

// Noncrossing set partitions of positions 0..count-1 with block sizes in [lo, hi].
void noncrossing_partitions(int count, int lo, int hi, const Emit& emit) {
    std::vector<int> ids(static_cast<size_t>(count), -1);
    int next_id = 0;
    // Fill [start, end) then call k.
    std::function<void(int, int, const std::function<void()>&)> fill;
    fill = [&](int start, int end, const std::function<void()>& k) {
        if (start == end) {
            k();
            return;
        }
        int id = next_id++;
        ids[static_cast<size_t>(start)] = id;
        // extend the block of `start` whose latest element is `prev` with size `size`
        std::function<void(int, int)> grow = [&](int prev, int size) {
            if (size >= lo) fill(prev + 1, end, k);
            if (size >= hi) return;
            for (int j = prev + 1; j < end; ++j) {
                // positions prev+1..j-1 form an inner region
                fill(prev + 1, j, [&, j, size]() {
                    ids[static_cast<size_t>(j)] = id;
                    grow(j, size + 1);
                    ids[static_cast<size_t>(j)] = -1;
                });
            }
        };
        grow(start, 1);
        ids[static_cast<size_t>(start)] = -1;
        --next_id;
    };
    fill(0, count, [&]() { emit(ids); });
}

std::vector<int> boundary_to_labels(const std::vector<int>& pos_ids, int n) {
    std::vector<int> ids(static_cast<size_t>(2 * n));
    for (int p = 0; p < 2 * n; ++p) {
        int label = p < n ? p : n + (2 * n - 1 - p);
        ids[static_cast<size_t>(label)] = pos_ids[static_cast<size_t>(p)];
    }
    return ids;
}

}  // namespace

std::vector<PartitionDiagram> enumerate(Family f, int n) {
    if (n < 0) throw InvalidInput("negative strand count");
    if (n > enumeration_bound(f))
        throw BoundExceeded("enumeration of " + tag(f) + " is limited to n <= " + std::to_string(enumeration_bound(f)));
    std::vector<PartitionDiagram> out;
    auto push_labels = [&](const std::vector<int>& ids) { out.push_back(PartitionDiagram::from_block_ids(n, n, ids)); };
    auto push_boundary = [&](const std::vector<int>& pos) { push_labels(boundary_to_labels(pos, n)); };
    const int big = 2 * n + 1;
    switch (f) {
        case Family::Partition: set_partitions(2 * n, 1, big, push_labels); break;
        case Family::RookBrauer: set_partitions(2 * n, 1, 2, push_labels); break;
        case Family::Brauer: set_partitions(2 * n, 2, 2, push_labels); break;
        case Family::PlanarPartition: noncrossing_partitions(2 * n, 1, big, push_boundary); break;
        case Family::Motzkin: noncrossing_partitions(2 * n, 1, 2, push_boundary); break;
        case Family::TemperleyLieb: noncrossing_partitions(2 * n, 2, 2, push_boundary); break;
        case Family::Transformation:
        case Family::PlanarTransformation: {
            std::vector<int> w(static_cast<size_t>(n), 1);
            bool planar = f == Family::PlanarTransformation;
            std::function<void(int)> rec = [&](int i) {
                if (i == n) {
                    out.push_back(one_line_to_diagram(w));
                    return;
                }
                int start = (planar && i > 0) ? w[static_cast<size_t>(i - 1)] : 1;
                for (int v = start; v <= n; ++v) {
                    w[static_cast<size_t>(i)] = v;
                    rec(i + 1);
                }
            };
            if (n == 0) out.push_back(PartitionDiagram::identity(0));
            else rec(0);
            break;
        }
        case Family::Rook:
        case Family::PlanarRook: {
            // image[i] = top partner of bottom i, or -1
            std::vector<int> image(static_cast<size_t>(n), -1);
            std::vector<bool> used(static_cast<size_t>(n), false);
            bool planar = f == Family::PlanarRook;
            std::function<void(int, int)> rec = [&](int i, int floor) {
                if (i == n) {
                    std::vector<int> ids(static_cast<size_t>(2 * n));
                    for (int j = 0; j < n; ++j) ids[static_cast<size_t>(n + j)] = j;
                    for (int b = 0; b < n; ++b)
                        ids[static_cast<size_t>(b)] =
                            image[static_cast<size_t>(b)] >= 0 ? image[static_cast<size_t>(b)] : n + b;
                    push_labels(ids);
                    return;
                }
                image[static_cast<size_t>(i)] = -1;
                rec(i + 1, floor);
                for (int j = planar ? floor : 0; j < n; ++j) {
                    if (used[static_cast<size_t>(j)]) continue;
                    used[static_cast<size_t>(j)] = true;
                    image[static_cast<size_t>(i)] = j;
                    rec(i + 1, j + 1);
                    used[static_cast<size_t>(j)] = false;
                    image[static_cast<size_t>(i)] = -1;
                }
            };
            rec(0, 0);
            break;
        }
        case Family::Symmetric: {
            std::vector<int> perm(static_cast<size_t>(n));
            for (int i = 0; i < n; ++i) perm[static_cast<size_t>(i)] = i + 1;
            do {
                out.push_back(one_line_to_diagram(perm));
            } while (std::next_permutation(perm.begin(), perm.end()));
            if (n == 0) out = {PartitionDiagram::identity(0)};
            break;
        }
        case Family::PlanarSymmetric: out.push_back(PartitionDiagram::identity(n)); break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<PartitionDiagram> enumerate_by_filtering(Family f, int n) {
    if (n > 4) throw BoundExceeded("filtering enumeration is limited to n <= 4");
    std::vector<PartitionDiagram> out;
    set_partitions(2 * n, 1, 2 * n + 1, [&](const std::vector<int>& ids) {
        auto d = PartitionDiagram::from_block_ids(n, n, ids);
        if (in_family(d, f)) out.push_back(d);
    });
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace greenbox::diagrams
