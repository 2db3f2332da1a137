#include "greenbox/symgroup/rsk.hpp"

#include "greenbox/error.hpp"

#include <algorithm>
#include <map>

namespace greenbox::symgroup {

YoungPartition RskPair::shape() const {
    std::vector<int> parts;
    for (const auto& row : P) parts.push_back(static_cast<int>(row.size()));
    return YoungPartition(parts);
}

RskPair rsk(const Permutation& w) {
    RskPair out;
    for (int i = 0; i < w.size(); ++i) {
        int x = w(i) + 1;
        size_t r = 0;
        for (;; ++r) {
            if (r == out.P.size()) {
                out.P.push_back({x});
                out.Q.push_back({i + 1});
                break;
            }
            auto& row = out.P[r];
            auto it = std::upper_bound(row.begin(), row.end(), x);
            if (it == row.end()) {
                row.push_back(x);
                out.Q[r].push_back(i + 1);
                break;
            }
            std::swap(*it, x);
        }
    }
    return out;
}

Permutation inverse_rsk(const Tableau& P0, const Tableau& Q0) {
    Tableau P = P0, Q = Q0;
    int m = 0;
    for (const auto& row : P) m += static_cast<int>(row.size());
    std::vector<int> word(static_cast<size_t>(m));
    for (int step = m; step >= 1; --step) {
        size_t r = 0;
        bool found = false;
        for (; r < Q.size(); ++r)
            if (!Q[r].empty() && Q[r].back() == step) {
                found = true;
                break;
            }
        if (!found || P[r].empty()) throw InvalidInput("inverse_rsk: tableaux do not match");
        Q[r].pop_back();
        int x = P[r].back();
        P[r].pop_back();
        for (size_t k = r; k-- > 0;) {
            auto& row = P[k];
            auto it = std::lower_bound(row.begin(), row.end(), x);
            if (it == row.begin()) throw InvalidInput("inverse_rsk: not a standard tableau");
            --it;
            std::swap(*it, x);
        }
        word[static_cast<size_t>(step - 1)] = x;
        while (!P.empty() && P.back().empty()) {
            P.pop_back();
            Q.pop_back();
        }
    }
    return Permutation::from_one_line(word);
}

std::string tableau_to_string(const Tableau& t) {
    std::string s = "[";
    for (size_t r = 0; r < t.size(); ++r) {
        s += r ? ",[" : "[";
        for (size_t c = 0; c < t[r].size(); ++c) s += (c ? "," : "") + std::to_string(t[r][c]);
        s += "]";
    }
    return s + "]";
}

TypeACells typeA_cells(int m) {
    if (m < 0 || m > 7) throw BoundExceeded("type A cells are limited to m <= 7");
    TypeACells out;
    out.m = m;
    out.elements = all_permutations(m);
    std::map<Tableau, int> lq, rp;
    std::map<YoungPartition, int, std::greater<>> sh;
    std::vector<RskPair> pairs;
    for (const auto& w : out.elements) pairs.push_back(rsk(w));
    for (const auto& p : pairs) sh.emplace(p.shape(), 0);
    int k = 0;
    for (auto& [shape, id] : sh) {
        id = k++;
        out.shapes.push_back(shape);
    }
    out.two_sided_sizes.assign(out.shapes.size(), 0);
    for (const auto& p : pairs) {
        auto li = lq.emplace(p.Q, static_cast<int>(lq.size())).first->second;
        auto ri = rp.emplace(p.P, static_cast<int>(rp.size())).first->second;
        int ti = sh.at(p.shape());
        out.left_cell.push_back(li);
        out.right_cell.push_back(ri);
        out.two_sided_cell.push_back(ti);
        if (static_cast<size_t>(li) >= out.left_cell_sizes.size()) out.left_cell_sizes.push_back(0);
        ++out.left_cell_sizes[static_cast<size_t>(li)];
        ++out.two_sided_sizes[static_cast<size_t>(ti)];
    }
    return out;
}

}  // namespace greenbox::symgroup
