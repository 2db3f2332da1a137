#include "greenbox/cells/cell_structure.hpp"

#include "greenbox/error.hpp"
#include "greenbox/util/parallel.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "json.hpp"

namespace greenbox::cells {

namespace {

using Graph = std::vector<std::vector<int>>;

// Iterative Tarjan; component ids are assigned in completion order.
std::vector<int> scc(const Graph& g, int& count) {
    const int n = static_cast<int>(g.size());
    std::vector<int> index(static_cast<size_t>(n), -1), low(static_cast<size_t>(n)), comp(static_cast<size_t>(n), -1);
    std::vector<bool> on_stack(static_cast<size_t>(n));
    std::vector<int> stack;
    std::vector<std::pair<int, size_t>> call;
    int next = 0;
    count = 0;
    for (int root = 0; root < n; ++root) {
        if (index[static_cast<size_t>(root)] != -1) continue;
        call.emplace_back(root, 0);
        while (!call.empty()) {
            auto& [v, edge] = call.back();
            auto vs = static_cast<size_t>(v);
            if (edge == 0 && index[vs] == -1) {
                index[vs] = low[vs] = next++;
                stack.push_back(v);
                on_stack[vs] = true;
            }
            if (edge < g[vs].size()) {
                int w = g[vs][edge++];
                auto ws = static_cast<size_t>(w);
                if (index[ws] == -1) {
                    call.emplace_back(w, 0);
                } else if (on_stack[ws]) {
                    low[vs] = std::min(low[vs], index[ws]);
                }
                continue;
            }
            if (low[vs] == index[vs]) {
                for (;;) {
                    int w = stack.back();
                    stack.pop_back();
                    on_stack[static_cast<size_t>(w)] = false;
                    comp[static_cast<size_t>(w)] = count;
                    if (w == v) break;
                }
                ++count;
            }
            int done = v;
            call.pop_back();
            if (!call.empty()) {
                auto ps = static_cast<size_t>(call.back().first);
                low[ps] = std::min(low[ps], low[static_cast<size_t>(done)]);
            }
        }
    }
    return comp;
}

// Groups elements by component id, groups ordered by least element.
std::vector<std::vector<int>> group_by(const std::vector<int>& comp, const std::vector<int>& elems) {
    std::map<int, size_t> slot;
    std::vector<std::vector<int>> out;
    for (int e : elems) {
        int c = comp[static_cast<size_t>(e)];
        auto it = slot.find(c);
        if (it == slot.end()) {
            slot.emplace(c, out.size());
            out.push_back({e});
        } else {
            out[it->second].push_back(e);
        }
    }
    return out;
}

bool scalar_equal_one_term(const SparseVec& v, int e, Scalar* s) {
    if (v.size() != 1 || v[0].index != e || is_zero(v[0].coeff)) return false;
    if (s) *s = v[0].coeff;
    return true;
}

SparseVec compact(const SparseVec& v) {
    SparseVec out;
    for (const auto& t : v)
        if (!is_zero(t.coeff)) out.push_back(t);
    return out;
}

}  // namespace

int CellStructure::top() const {
    int found = -1;
    for (size_t j = 0; j < jcells.size(); ++j)
        if (covers[j].empty()) {
            if (found != -1) return -1;
            found = static_cast<int>(j);
        }
    return found;
}

int CellStructure::bottom() const {
    int found = -1;
    for (size_t j = 0; j < jcells.size(); ++j) {
        bool minimal = true;
        for (size_t k = 0; k < jcells.size(); ++k)
            if (below[k][j]) minimal = false;
        if (minimal) {
            if (found != -1) return -1;
            found = static_cast<int>(j);
        }
    }
    return found;
}

CellStructure compute_cells(const BasedAlgebra& alg, CellOptions opts) {
    const size_t N = alg.size;
    bool gens = false;
    switch (opts.closure) {
        case Closure::Auto: gens = alg.nonneg_structure_constants && !alg.generators.empty(); break;
        case Closure::Generators:
            if (!alg.nonneg_structure_constants)
                throw InvalidInput("generator closure requires nonnegative structure constants");
            if (alg.generators.empty()) throw InvalidInput("generator closure requested without generators");
            gens = true;
            break;
        case Closure::FullBasis: gens = false; break;
    }
    if (gens && N > kGeneratorBound) throw BoundExceeded("cell engine: basis larger than 60000");
    if (!gens && N > kFullBasisBound) throw BoundExceeded("cell engine: basis larger than 5000 without generators");

    std::vector<int> acting;
    if (gens) acting = alg.generators;
    else {
        acting.resize(N);
        std::iota(acting.begin(), acting.end(), 0);
    }

    Graph left(N), right(N);
    util::parallel_for(N, [&](size_t a) {
        std::vector<int> lt, rt;
        for (int c : acting) {
            for (const auto& t : alg.multiply(c, static_cast<int>(a)))
                if (!is_zero(t.coeff)) lt.push_back(t.index);
            for (const auto& t : alg.multiply(static_cast<int>(a), c))
                if (!is_zero(t.coeff)) rt.push_back(t.index);
        }
        std::sort(lt.begin(), lt.end());
        lt.erase(std::unique(lt.begin(), lt.end()), lt.end());
        std::sort(rt.begin(), rt.end());
        rt.erase(std::unique(rt.begin(), rt.end()), rt.end());
        left[a] = std::move(lt);
        right[a] = std::move(rt);
    });
    Graph both(N);
    for (size_t a = 0; a < N; ++a) {
        both[a] = left[a];
        both[a].insert(both[a].end(), right[a].begin(), right[a].end());
        std::sort(both[a].begin(), both[a].end());
        both[a].erase(std::unique(both[a].begin(), both[a].end()), both[a].end());
    }
    int nl = 0, nr = 0, nj = 0;
    auto lcomp = scc(left, nl);
    auto rcomp = scc(right, nr);
    auto jcomp = scc(both, nj);

    CellStructure cs;
    cs.basis_size = N;
    cs.used_generators = gens;
    std::vector<int> all(N);
    std::iota(all.begin(), all.end(), 0);
    auto jgroups = group_by(jcomp, all);
    cs.jcell_of.assign(N, -1);
    cs.left_index_of.assign(N, -1);
    cs.right_index_of.assign(N, -1);
    for (size_t j = 0; j < jgroups.size(); ++j) {
        JCell jc;
        jc.elements = jgroups[j];
        jc.left_cells = group_by(lcomp, jc.elements);
        jc.right_cells = group_by(rcomp, jc.elements);
        for (size_t c = 0; c < jc.left_cells.size(); ++c)
            for (int e : jc.left_cells[c]) cs.left_index_of[static_cast<size_t>(e)] = static_cast<int>(c);
        for (size_t r = 0; r < jc.right_cells.size(); ++r)
            for (int e : jc.right_cells[r]) cs.right_index_of[static_cast<size_t>(e)] = static_cast<int>(r);
        jc.grid.assign(jc.right_cells.size(), std::vector<HCell>(jc.left_cells.size()));
        for (int e : jc.elements) {
            cs.jcell_of[static_cast<size_t>(e)] = static_cast<int>(j);
            jc.grid[static_cast<size_t>(cs.right_index_of[static_cast<size_t>(e)])]
                   [static_cast<size_t>(cs.left_index_of[static_cast<size_t>(e)])]
                       .elements.push_back(e);
        }
        cs.jcells.push_back(std::move(jc));
    }

    // J-order
    const size_t J = cs.jcells.size();
    std::vector<std::set<int>> up(J);
    for (size_t a = 0; a < N; ++a)
        for (int b : both[a]) {
            int ja = cs.jcell_of[a], jb = cs.jcell_of[static_cast<size_t>(b)];
            if (ja != jb) up[static_cast<size_t>(ja)].insert(jb);
        }
    cs.below.assign(J, std::vector<bool>(J, false));
    for (size_t s = 0; s < J; ++s) {
        std::vector<int> todo(up[s].begin(), up[s].end());
        while (!todo.empty()) {
            int x = todo.back();
            todo.pop_back();
            if (cs.below[s][static_cast<size_t>(x)]) continue;
            cs.below[s][static_cast<size_t>(x)] = true;
            for (int y : up[static_cast<size_t>(x)]) todo.push_back(y);
        }
    }
    cs.covers.assign(J, {});
    for (size_t a = 0; a < J; ++a)
        for (size_t b = 0; b < J; ++b) {
            if (!cs.below[a][b]) continue;
            bool direct = true;
            for (size_t c = 0; c < J && direct; ++c)
                if (cs.below[a][c] && cs.below[c][b]) direct = false;
            if (direct) cs.covers[a].push_back(static_cast<int>(b));
        }
    // longest chain below each cell
    std::vector<size_t> order(J);
    std::iota(order.begin(), order.end(), 0);
    std::vector<int> count_below(J, 0);
    for (size_t a = 0; a < J; ++a)
        for (size_t b = 0; b < J; ++b)
            if (cs.below[b][a]) ++count_below[a];
    std::sort(order.begin(), order.end(), [&](size_t x, size_t y) { return count_below[x] < count_below[y]; });
    for (size_t a : order) {
        int r = 0;
        for (size_t b = 0; b < J; ++b)
            if (cs.below[b][a]) r = std::max(r, cs.jcells[b].order_rank + 1);
        cs.jcells[a].order_rank = r;
    }

    // strict idempotents
    std::vector<std::vector<Idempotent>> found(N);
    util::parallel_for(N, [&](size_t e) {
        int j = cs.jcell_of[e];
        SparseVec red = higher_ideal_reduce(cs, alg.multiply(static_cast<int>(e), static_cast<int>(e)), j,
                                            ReduceMode::ModIdeal);
        Scalar s;
        if (scalar_equal_one_term(red, static_cast<int>(e), &s)) found[e].push_back(Idempotent{static_cast<int>(e), s});
    });
    for (auto& jc : cs.jcells) {
        for (auto& row : jc.grid)
            for (auto& h : row) {
                for (int e : h.elements)
                    for (auto& idem : found[static_cast<size_t>(e)]) h.idempotents.push_back(idem);
                if (h.strictly_idempotent()) jc.idempotent = true;
            }
    }
    return cs;
}

SparseVec higher_ideal_reduce(const CellStructure& cs, const SparseVec& x, int jcell, ReduceMode mode) {
    SparseVec out;
    for (const auto& t : compact(x)) {
        int jt = cs.jcell_of[static_cast<size_t>(t.index)];
        bool keep = mode == ReduceMode::InCell ? jt == jcell : !cs.strictly_above(jt, jcell);
        if (keep) out.push_back(t);
    }
    return out;
}

std::vector<Idempotent> strict_idempotents(const BasedAlgebra& alg, const CellStructure& cs, const HCell& h,
                                           int jcell) {
    std::vector<Idempotent> out;
    for (int e : h.elements) {
        SparseVec red = higher_ideal_reduce(cs, alg.multiply(e, e), jcell, ReduceMode::ModIdeal);
        Scalar s;
        if (scalar_equal_one_term(red, e, &s)) out.push_back(Idempotent{e, s});
    }
    return out;
}

SandwichReport verify_sandwich_pair(const BasedAlgebra& alg, const CellStructure& cs) {
    SandwichReport rep;
    auto fail = [&](const std::string& why) {
        if (rep.pass) rep.first_failure = why;
        rep.pass = false;
    };
    for (size_t j = 0; j < cs.jcells.size(); ++j) {
        const auto& jc = cs.jcells[j];
        std::string where = "J-cell " + std::to_string(j) + ": ";
        std::set<size_t> lsizes, rsizes, hsizes;
        for (const auto& l : jc.left_cells) lsizes.insert(l.size());
        for (const auto& r : jc.right_cells) rsizes.insert(r.size());
        for (const auto& row : jc.grid)
            for (const auto& h : row) hsizes.insert(h.elements.size());
        if (lsizes.size() != 1) fail(where + "left cells of different sizes");
        if (rsizes.size() != 1) fail(where + "right cells of different sizes");
        if (hsizes.size() != 1) {
            std::string list;
            for (size_t s : hsizes) list += (list.empty() ? "" : ",") + std::to_string(s);
            fail(where + "H-cells of different sizes {" + list + "}");
        }
        if (hsizes.count(0)) fail(where + "empty H-cell");
        size_t h = *hsizes.begin();
        if (jc.elements.size() != jc.left_cells.size() * h * jc.right_cells.size())
            fail(where + "|J| != #L*|H|*#R");
        if (alg.star) {
            const auto& st = *alg.star;
            if (jc.left_cells.size() != jc.right_cells.size()) fail(where + "not square");
            for (const auto& l : jc.left_cells) {
                std::vector<int> img;
                for (int e : l) img.push_back(st[static_cast<size_t>(e)]);
                std::sort(img.begin(), img.end());
                bool matched = false;
                for (const auto& r : jc.right_cells) {
                    std::vector<int> rr = r;
                    std::sort(rr.begin(), rr.end());
                    if (rr == img) matched = true;
                }
                if (!matched) fail(where + "star does not map a left cell onto a right cell");
            }
        }
    }
    return rep;
}

bool is_admissible_monoid(const CellStructure& cs) {
    for (const auto& jc : cs.jcells) {
        if (jc.idempotent) continue;
        for (const auto& row : jc.grid)
            for (const auto& h : row)
                if (h.elements.size() != 1) return false;
    }
    return true;
}

EggBox eggbox(const CellStructure& cs, int jcell) {
    const auto& jc = cs.jcells.at(static_cast<size_t>(jcell));
    EggBox box;
    box.rows = jc.right_cells.size();
    box.cols = jc.left_cells.size();
    for (const auto& row : jc.grid) {
        std::vector<EggBoxEntry> r;
        for (const auto& h : row) r.push_back(EggBoxEntry{h.elements.size(), h.strictly_idempotent()});
        box.grid.push_back(r);
    }
    return box;
}

namespace {

nlohmann::json key_json(const std::string& key) {
    if (!key.empty() && key.find_first_not_of("-0123456789") == std::string::npos && key != "-") {
        try {
            return std::stol(key);
        } catch (const std::exception&) {
        }
    }
    return key;
}

std::string key_of(const std::vector<std::string>& keys, size_t j) {
    return j < keys.size() ? keys[j] : std::to_string(j);
}

}  // namespace

std::string eggbox_json(const CellStructure& cs, const std::vector<std::string>& keys, const std::string& family,
                        int n) {
    nlohmann::json out;
    out["family"] = family;
    out["n"] = n;
    out["jcells"] = nlohmann::json::array();
    for (size_t j = 0; j < cs.jcells.size(); ++j) {
        const auto& jc = cs.jcells[j];
        EggBox box = eggbox(cs, static_cast<int>(j));
        nlohmann::json e;
        e["key"] = key_json(key_of(keys, j));
        e["order_rank"] = jc.order_rank;
        e["num_left"] = box.cols;
        e["num_right"] = box.rows;
        std::set<size_t> hs;
        nlohmann::json sizes = nlohmann::json::array(), idem = nlohmann::json::array();
        for (const auto& row : box.grid) {
            nlohmann::json srow = nlohmann::json::array(), irow = nlohmann::json::array();
            for (const auto& entry : row) {
                hs.insert(entry.h_size);
                srow.push_back(entry.h_size);
                irow.push_back(entry.idempotent ? 1 : 0);
            }
            sizes.push_back(srow);
            idem.push_back(irow);
        }
        if (hs.size() == 1) e["h_size"] = *hs.begin();
        else e["h_size"] = sizes;
        e["size"] = jc.elements.size();
        e["idempotent"] = jc.idempotent;
        e["idempotent_grid"] = idem;
        out["jcells"].push_back(e);
    }
    return out.dump();
}

std::string jorder_dot(const CellStructure& cs, const std::vector<std::string>& keys) {
    std::ostringstream os;
    os << "digraph jorder {\n  rankdir=BT;\n";
    for (size_t j = 0; j < cs.jcells.size(); ++j)
        os << "  j" << j << " [label=\"" << key_of(keys, j) << "\"" << (cs.jcells[j].idempotent ? "" : ", style=dashed")
           << "];\n";
    for (size_t a = 0; a < cs.covers.size(); ++a)
        for (int b : cs.covers[a]) os << "  j" << a << " -> j" << b << ";\n";
    os << "}\n";
    return os.str();
}

std::string eggbox_ascii(const CellStructure& cs, int jcell) {
    EggBox box = eggbox(cs, jcell);
    std::ostringstream os;
    std::string rule = "+";
    for (size_t c = 0; c < box.cols; ++c) rule += "-----+";
    os << rule << "\n";
    for (const auto& row : box.grid) {
        os << "|";
        for (const auto& e : row) {
            std::string cell = std::to_string(e.h_size) + (e.idempotent ? "*" : " ");
            os << std::string(4 - std::min<size_t>(4, cell.size()), ' ') << cell << " |";
        }
        os << "\n" << rule << "\n";
    }
    return os.str();
}

}  // namespace greenbox::cells
