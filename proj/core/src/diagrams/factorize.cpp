#include "greenbox/diagrams/factorize.hpp"

#include "greenbox/error.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace greenbox::diagrams {

namespace {

struct ThroughInfo {
    std::vector<int> by_bottom;  // block ids ordered by least bottom label
    std::vector<int> by_top;     // block ids ordered by least top label
};

ThroughInfo through_info(const PartitionDiagram& a) {
    int blocks = a.block_count();
    std::vector<bool> has_bottom(static_cast<size_t>(blocks)), has_top(static_cast<size_t>(blocks));
    for (int i = 0; i < a.bottom_count(); ++i) has_bottom[static_cast<size_t>(a.block_of(i))] = true;
    for (int j = 0; j < a.top_count(); ++j) has_top[static_cast<size_t>(a.block_of(Label{true, j}))] = true;
    ThroughInfo info;
    std::vector<bool> seen(static_cast<size_t>(blocks));
    for (int i = 0; i < a.bottom_count(); ++i) {
        int b = a.block_of(i);
        if (has_top[static_cast<size_t>(b)] && !seen[static_cast<size_t>(b)]) {
            seen[static_cast<size_t>(b)] = true;
            info.by_bottom.push_back(b);
        }
    }
    std::fill(seen.begin(), seen.end(), false);
    for (int j = 0; j < a.top_count(); ++j) {
        int b = a.block_of(Label{true, j});
        if (has_bottom[static_cast<size_t>(b)] && !seen[static_cast<size_t>(b)]) {
            seen[static_cast<size_t>(b)] = true;
            info.by_top.push_back(b);
        }
    }
    return info;
}

int rank_in(const std::vector<int>& order, int block) {
    return static_cast<int>(std::find(order.begin(), order.end(), block) - order.begin());
}

}  // namespace

PartitionDiagram bottom_half(const PartitionDiagram& a) {
    ThroughInfo info = through_info(a);
    int lam = static_cast<int>(info.by_bottom.size());
    std::vector<int> ids(static_cast<size_t>(a.bottom_count() + lam));
    for (int i = 0; i < a.bottom_count(); ++i) ids[static_cast<size_t>(i)] = a.block_of(i);
    for (int k = 0; k < lam; ++k) ids[static_cast<size_t>(a.bottom_count() + k)] = info.by_bottom[static_cast<size_t>(k)];
    return PartitionDiagram::from_block_ids(a.bottom_count(), lam, ids);
}

PartitionDiagram top_half(const PartitionDiagram& a) {
    ThroughInfo info = through_info(a);
    int lam = static_cast<int>(info.by_top.size());
    std::vector<int> ids(static_cast<size_t>(lam + a.top_count()));
    for (int k = 0; k < lam; ++k) ids[static_cast<size_t>(k)] = info.by_top[static_cast<size_t>(k)];
    for (int j = 0; j < a.top_count(); ++j) ids[static_cast<size_t>(lam + j)] = a.block_of(Label{true, j});
    return PartitionDiagram::from_block_ids(lam, a.top_count(), ids);
}

PartitionDiagram permutation_diagram(const std::vector<int>& perm) {
    int k = static_cast<int>(perm.size());
    std::vector<int> ids(static_cast<size_t>(2 * k));
    for (int i = 0; i < k; ++i) {
        ids[static_cast<size_t>(i)] = perm[static_cast<size_t>(i)];
        ids[static_cast<size_t>(k + i)] = i;
    }
    return PartitionDiagram::from_block_ids(k, k, ids);
}

Factorization factorize(const PartitionDiagram& a) {
    ThroughInfo info = through_info(a);
    Factorization f;
    f.through = static_cast<int>(info.by_bottom.size());
    f.bottom = bottom_half(a);
    f.top = top_half(a);
    for (int b : info.by_bottom) f.middle.push_back(rank_in(info.by_top, b));
    return f;
}

Factorization factorize(const PartitionDiagram& a, Family fam) {
    if (!in_family(a, fam)) throw InvalidInput("diagram is not in family " + tag(fam));
    return factorize(a);
}

PartitionDiagram recompose(const Factorization& f) {
    ScaledDiagram lower = multiply(permutation_diagram(f.middle), f.bottom);
    ScaledDiagram full = multiply(f.top, lower.diagram);
    if (lower.closed + full.closed != 0) throw VerificationFailure("recomposition produced closed components");
    return full.diagram;
}

std::vector<int> through_counts(Family f, int n) {
    std::vector<int> out;
    switch (f) {
        case Family::Brauer:
        case Family::TemperleyLieb:
            for (int l = n % 2; l <= n; l += 2) out.push_back(l);
            break;
        case Family::Symmetric:
        case Family::PlanarSymmetric: out.push_back(n); break;
        case Family::Transformation:
        case Family::PlanarTransformation:
            for (int l = n == 0 ? 0 : 1; l <= n; ++l) out.push_back(l);
            break;
        default:
            for (int l = 0; l <= n; ++l) out.push_back(l);
    }
    return out;
}

namespace {

// Candidate halves: a set partition of n points with `lambda` blocks marked as
// through blocks. Returned as bottom halves n -> lambda.
void candidate_bottom_halves(int n, int lambda, const std::function<void(const PartitionDiagram&)>& emit) {
    std::vector<int> ids(static_cast<size_t>(n));
    std::function<void(int, int)> rec = [&](int i, int blocks) {
        if (i == n) {
            if (lambda > blocks) return;
            // choose which blocks are through, as an increasing subset
            std::vector<int> pick(static_cast<size_t>(lambda));
            std::function<void(int, int)> choose = [&](int k, int from) {
                if (k == lambda) {
                    // through blocks ordered by least element = block id order
                    std::vector<int> all = ids;
                    for (int t = 0; t < lambda; ++t) all.push_back(pick[static_cast<size_t>(t)]);
                    emit(PartitionDiagram::from_block_ids(n, lambda, all));
                    return;
                }
                for (int b = from; b < blocks; ++b) {
                    pick[static_cast<size_t>(k)] = b;
                    choose(k + 1, b + 1);
                }
            };
            choose(0, 0);
            return;
        }
        for (int b = 0; b <= blocks; ++b) {
            ids[static_cast<size_t>(i)] = b;
            rec(i + 1, std::max(blocks, b + 1));
        }
    };
    rec(0, 0);
}

// Canonical lambda -> n top half used to complete a bottom half of a
// transformation: through strand k goes to top k, other tops are alone.
PartitionDiagram standard_image(int n, int lambda) {
    std::vector<int> ids(static_cast<size_t>(lambda + n));
    for (int k = 0; k < lambda; ++k) ids[static_cast<size_t>(k)] = k;
    for (int j = 0; j < n; ++j) ids[static_cast<size_t>(lambda + j)] = j;
    return PartitionDiagram::from_block_ids(lambda, n, ids);
}

// Canonical n -> lambda bottom half used to complete a top half of a
// transformation: bottom k < lambda goes to strand k, the rest join strand lambda-1.
PartitionDiagram standard_kernel(int n, int lambda) {
    std::vector<int> ids(static_cast<size_t>(n + lambda));
    for (int i = 0; i < n; ++i) ids[static_cast<size_t>(i)] = std::min(i, lambda - 1);
    for (int k = 0; k < lambda; ++k) ids[static_cast<size_t>(n + k)] = k;
    return PartitionDiagram::from_block_ids(n, lambda, ids);
}

}  // namespace

std::vector<PartitionDiagram> bottom_halves(Family f, int n, int lambda) {
    if (n > 8 || (f == Family::Partition && n > 6)) throw BoundExceeded("half enumeration bound exceeded");
    std::set<PartitionDiagram> out;
    if (lambda < 0 || lambda > n) return {};
    candidate_bottom_halves(n, lambda, [&](const PartitionDiagram& beta) {
        PartitionDiagram completion = is_transformation_family(f) ? multiply(standard_image(n, lambda), beta).diagram
                                                                  : multiply(beta.star(), beta).diagram;
        if (in_family(completion, f) && completion.through_strands() == lambda) out.insert(beta);
    });
    return {out.begin(), out.end()};
}

std::vector<PartitionDiagram> top_halves(Family f, int n, int lambda) {
    if (!is_transformation_family(f)) {
        std::vector<PartitionDiagram> out;
        for (const auto& b : bottom_halves(f, n, lambda)) out.push_back(b.star());
        std::sort(out.begin(), out.end());
        return out;
    }
    std::set<PartitionDiagram> out;
    if (lambda > n || (lambda < 1 && n > 0)) return {};
    candidate_bottom_halves(n, lambda, [&](const PartitionDiagram& beta) {
        PartitionDiagram tau = beta.star();
        PartitionDiagram completion = multiply(tau, standard_kernel(n, lambda)).diagram;
        if (in_family(completion, f) && completion.through_strands() == lambda) out.insert(tau);
    });
    return {out.begin(), out.end()};
}

}  // namespace greenbox::diagrams
