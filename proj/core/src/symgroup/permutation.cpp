#include "greenbox/symgroup/permutation.hpp"

#include "greenbox/error.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace greenbox::symgroup {

Permutation::Permutation(std::vector<int> img) : img_(std::move(img)) {
    std::vector<bool> seen(img_.size());
    for (int x : img_) {
        if (x < 0 || x >= size() || seen[static_cast<size_t>(x)]) throw InvalidInput("not a permutation");
        seen[static_cast<size_t>(x)] = true;
    }
}

Permutation Permutation::identity(int m) {
    std::vector<int> v(static_cast<size_t>(m));
    std::iota(v.begin(), v.end(), 0);
    return Permutation(v);
}

Permutation Permutation::from_one_line(const std::vector<int>& w) {
    std::vector<int> v;
    for (int x : w) v.push_back(x - 1);
    return Permutation(v);
}

std::vector<int> Permutation::one_line() const {
    std::vector<int> w;
    for (int x : img_) w.push_back(x + 1);
    return w;
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(img_.size());
    for (size_t i = 0; i < img_.size(); ++i) inv[static_cast<size_t>(img_[i])] = static_cast<int>(i);
    return Permutation(inv);
}

std::vector<int> Permutation::cycle_type() const {
    std::vector<int> ct;
    std::vector<bool> seen(img_.size());
    for (size_t i = 0; i < img_.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (size_t j = i; !seen[j]; j = static_cast<size_t>(img_[j])) {
            seen[j] = true;
            ++len;
        }
        ct.push_back(len);
    }
    std::sort(ct.begin(), ct.end(), std::greater<int>());
    return ct;
}

int Permutation::sign() const {
    int s = 1;
    for (int len : cycle_type())
        if (len % 2 == 0) s = -s;
    return s;
}

Permutation operator*(const Permutation& p, const Permutation& q) {
    if (p.size() != q.size()) throw InvalidInput("permutation sizes differ");
    std::vector<int> r(q.img_.size());
    for (size_t i = 0; i < r.size(); ++i) r[i] = p.img_[static_cast<size_t>(q.img_[i])];
    return Permutation(r);
}

std::string Permutation::to_string() const {
    std::string s;
    bool wide = size() >= 10;
    for (int x : img_) {
        if (wide && !s.empty()) s += " ";
        s += std::to_string(x + 1);
    }
    return s;
}

std::vector<Permutation> all_permutations(int m) {
    std::vector<int> v(static_cast<size_t>(m));
    std::iota(v.begin(), v.end(), 0);
    std::vector<Permutation> out;
    do {
        out.emplace_back(v);
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

long permutation_index(const Permutation& p) {
    int m = p.size();
    long idx = 0;
    std::vector<bool> used(static_cast<size_t>(m));
    long fact = 1;
    for (int k = 2; k < m; ++k) fact *= k;
    for (int i = 0; i < m; ++i) {
        int smaller = 0;
        for (int v = 0; v < p(i); ++v)
            if (!used[static_cast<size_t>(v)]) ++smaller;
        used[static_cast<size_t>(p(i))] = true;
        idx += smaller * fact;
        if (m - 1 - i > 0) fact /= (m - 1 - i);
    }
    return idx;
}

}  // namespace greenbox::symgroup
