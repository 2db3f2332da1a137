#include "greenbox/cells/cell_structure.hpp"
#include "greenbox/dihedral/dihedral_algebra.hpp"
#include "greenbox/sandwich/gram.hpp"
#include "greenbox/sandwich/simples.hpp"

#include <benchmark/benchmark.h>

using namespace greenbox;
using diagrams::Family;
using sandwich::Delta;

namespace {

void BM_Enumerate(benchmark::State& state, Family f) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(diagrams::enumerate(f, n));
}
BENCHMARK_CAPTURE(BM_Enumerate, brauer, Family::Brauer)->DenseRange(3, 6);
BENCHMARK_CAPTURE(BM_Enumerate, temperley_lieb, Family::TemperleyLieb)->DenseRange(3, 7);
BENCHMARK_CAPTURE(BM_Enumerate, partition, Family::Partition)->DenseRange(2, 4);

void BM_DiagramCells(benchmark::State& state, Family f) {
    const int n = static_cast<int>(state.range(0));
    auto basis = sandwich::diagram_basis(f, n);
    for (auto _ : state) {
        auto alg = sandwich::diagram_algebra(basis, Delta::generic());
        benchmark::DoNotOptimize(cells::compute_cells(alg));
    }
}
BENCHMARK_CAPTURE(BM_DiagramCells, transformation, Family::Transformation)->DenseRange(2, 4);
BENCHMARK_CAPTURE(BM_DiagramCells, brauer, Family::Brauer)->DenseRange(2, 4);
BENCHMARK_CAPTURE(BM_DiagramCells, motzkin, Family::Motzkin)->DenseRange(2, 4);

void BM_GramDeterminant(benchmark::State& state, Family f) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(sandwich::gram_determinant(sandwich::gram_matrix(f, n, n - 2)));
}
BENCHMARK_CAPTURE(BM_GramDeterminant, brauer, Family::Brauer)->DenseRange(4, 6);
BENCHMARK_CAPTURE(BM_GramDeterminant, rook_brauer, Family::RookBrauer)->DenseRange(4, 5);

void BM_TransformationSimples(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(sandwich::simple_table(Family::Transformation, n, Delta::generic()));
}
BENCHMARK(BM_TransformationSimples)->DenseRange(3, 5);

void BM_DihedralAlgebra(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(dihedral::dihedral_based_algebra(n, dihedral::VMode::Generic));
}
BENCHMARK(BM_DihedralAlgebra)->DenseRange(5, 15, 2);

void BM_DihedralSimples(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(dihedral::dihedral_simples(n, dihedral::VMode::One));
}
BENCHMARK(BM_DihedralSimples)->DenseRange(5, 13, 2);

}  // namespace

BENCHMARK_MAIN();
