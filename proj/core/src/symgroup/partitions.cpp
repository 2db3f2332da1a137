#include "greenbox/symgroup/partitions.hpp"

#include "greenbox/error.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>

namespace greenbox::symgroup {

YoungPartition::YoungPartition(std::vector<int> p) : parts(std::move(p)) {
    for (int x : parts)
        if (x <= 0) throw InvalidInput("partition parts must be positive");
    if (!std::is_sorted(parts.begin(), parts.end(), std::greater<int>()))
        throw InvalidInput("partition parts must be weakly decreasing");
}

int YoungPartition::size() const {
    int s = 0;
    for (int x : parts) s += x;
    return s;
}

YoungPartition YoungPartition::conjugate() const {
    std::vector<int> c;
    if (!parts.empty())
        for (int j = 0; j < parts[0]; ++j) {
            int len = 0;
            for (int x : parts)
                if (x > j) ++len;
            c.push_back(len);
        }
    return YoungPartition(c);
}

std::string YoungPartition::to_string() const {
    std::string s = "(";
    for (size_t i = 0; i < parts.size(); ++i) s += (i ? "," : "") + std::to_string(parts[i]);
    return s + ")";
}

YoungPartition parse_partition(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)) && c != '(' && c != ')') s += c;
    std::vector<int> parts;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
            throw InvalidInput("malformed partition '" + text + "'");
        parts.push_back(std::stoi(tok));
    }
    return YoungPartition(parts);
}

std::vector<YoungPartition> partitions(int m) {
    std::vector<YoungPartition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int rest, int maxpart) {
        if (rest == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int k = std::min(rest, maxpart); k >= 1; --k) {
            cur.push_back(k);
            rec(rest - k, k);
            cur.pop_back();
        }
    };
    rec(m, m);
    return out;
}

bool dominance_leq(const YoungPartition& a, const YoungPartition& b) {
    if (a.size() != b.size()) throw InvalidInput("dominance: partitions of different sizes");
    int sa = 0, sb = 0;
    size_t len = std::max(a.parts.size(), b.parts.size());
    for (size_t i = 0; i < len; ++i) {
        sa += i < a.parts.size() ? a.parts[i] : 0;
        sb += i < b.parts.size() ? b.parts[i] : 0;
        if (sa < sb) return false;
    }
    return true;
}

std::vector<YoungPartition> p_restricted_partitions(int size, int p) {
    std::vector<YoungPartition> out;
    for (auto& lam : partitions(size)) {
        if (p == 0) {
            out.push_back(lam);
            continue;
        }
        auto cols = lam.conjugate().parts;
        bool ok = true;
        for (size_t i = 0; i < cols.size(); ++i) {
            int next = i + 1 < cols.size() ? cols[i + 1] : 0;
            if (cols[i] - next >= p) ok = false;
        }
        if (ok) out.push_back(lam);
    }
    return out;
}

long hook_length_dimension(const YoungPartition& shape) {
    auto conj = shape.conjugate().parts;
    long num = 1, den = 1;
    for (int k = 2; k <= shape.size(); ++k) num *= k;
    for (size_t i = 0; i < shape.parts.size(); ++i)
        for (int j = 0; j < shape.parts[i]; ++j) {
            long hook = (shape.parts[i] - j - 1) + (conj[static_cast<size_t>(j)] - static_cast<int>(i) - 1) + 1;
            den *= hook;
        }
    return num / den;
}

}  // namespace greenbox::symgroup
