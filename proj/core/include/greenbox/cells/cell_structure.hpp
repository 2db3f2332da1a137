#pragma once

#include "greenbox/cells/based_algebra.hpp"

#include <string>
#include <vector>

namespace greenbox::cells {

struct Idempotent {
    int element = 0;
    Scalar eigenvalue;
};

struct HCell {
    std::vector<int> elements;
    std::vector<Idempotent> idempotents;  // strict ones; empty means none detected
    bool strictly_idempotent() const { return !idempotents.empty(); }
};

struct JCell {
    std::vector<int> elements;
    std::vector<std::vector<int>> left_cells;   // columns, ordered by least element
    std::vector<std::vector<int>> right_cells;  // rows, ordered by least element
    std::vector<std::vector<HCell>> grid;       // grid[row][col]
    bool idempotent = false;
    int order_rank = 0;  // length of the longest chain below this cell
};

struct CellStructure {
    std::size_t basis_size = 0;
    bool used_generators = false;
    std::vector<JCell> jcells;        // ordered by least element
    std::vector<int> jcell_of;        // per basis element
    std::vector<int> left_index_of;   // per basis element, column in its J-cell
    std::vector<int> right_index_of;  // per basis element, row in its J-cell
    std::vector<std::vector<int>> covers;   // covers[a]: J-cells directly above a
    std::vector<std::vector<bool>> below;   // below[a][b]: a <_lr b strictly

    bool strictly_above(int a, int b) const { return below[static_cast<size_t>(b)][static_cast<size_t>(a)]; }
    int top() const;     // unique maximal J-cell, or -1
    int bottom() const;  // unique minimal J-cell, or -1
};

inline constexpr std::size_t kGeneratorBound = 60000;
inline constexpr std::size_t kFullBasisBound = 5000;

enum class Closure {
    Auto,        // generator graph when generators exist and nonneg_structure_constants holds
    Generators,  // generator graph; requires nonneg_structure_constants
    FullBasis,
};

struct CellOptions {
    Closure closure = Closure::Auto;
};

CellStructure compute_cells(const BasedAlgebra& alg, CellOptions opts = {});

enum class ReduceMode {
    ModIdeal,  // drop components strictly above the cell
    InCell,    // keep only components inside the cell
};

SparseVec higher_ideal_reduce(const CellStructure& cs, const SparseVec& x, int jcell, ReduceMode mode);

// Elements e of the H-cell with e*e = s*e modulo the higher ideal, s != 0.
std::vector<Idempotent> strict_idempotents(const BasedAlgebra& alg, const CellStructure& cs, const HCell& h,
                                           int jcell);

struct SandwichReport {
    bool pass = true;
    std::string first_failure;
};

SandwichReport verify_sandwich_pair(const BasedAlgebra& alg, const CellStructure& cs);

bool is_admissible_monoid(const CellStructure& cs);

struct EggBoxEntry {
    std::size_t h_size = 0;
    bool idempotent = false;
};

struct EggBox {
    std::size_t rows = 0, cols = 0;
    std::vector<std::vector<EggBoxEntry>> grid;
};

EggBox eggbox(const CellStructure& cs, int jcell);

// Renderings. keys label J-cells; integer-looking keys are written as numbers.
std::string eggbox_json(const CellStructure& cs, const std::vector<std::string>& keys, const std::string& family,
                        int n);
std::string jorder_dot(const CellStructure& cs, const std::vector<std::string>& keys);
std::string eggbox_ascii(const CellStructure& cs, int jcell);

}  // namespace greenbox::cells
