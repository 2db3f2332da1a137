#include "greenbox/diagrams/partition_diagram.hpp"

#include "greenbox/error.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "json.hpp"

namespace greenbox::diagrams {

std::string Label::to_string() const { return (top ? "t" : "b") + std::to_string(index); }

Label parse_label(const std::string& text) {
    if (text.size() < 2 || (text[0] != 'b' && text[0] != 't')) throw InvalidInput("bad label '" + text + "'");
    for (size_t i = 1; i < text.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(text[i]))) throw InvalidInput("bad label '" + text + "'");
    return Label{text[0] == 't', std::stoi(text.substr(1))};
}

PartitionDiagram PartitionDiagram::from_block_ids(int bottom, int top, const std::vector<int>& ids) {
    if (bottom < 0 || top < 0 || bottom + top > kMaxLabels) throw BoundExceeded("diagram too large");
    if (static_cast<int>(ids.size()) != bottom + top) throw InvalidInput("block id count mismatch");
    PartitionDiagram d;
    d.m_ = static_cast<std::uint8_t>(bottom);
    d.n_ = static_cast<std::uint8_t>(top);
    std::array<int, 128> slot;
    slot.fill(-1);
    std::vector<std::pair<int, int>> other;
    int next = 0;
    for (size_t i = 0; i < ids.size(); ++i) {
        int id = ids[i];
        int k;
        if (id >= 0 && id < 128) {
            if (slot[static_cast<size_t>(id)] < 0) slot[static_cast<size_t>(id)] = next++;
            k = slot[static_cast<size_t>(id)];
        } else {
            auto it = std::find_if(other.begin(), other.end(), [id](const auto& p) { return p.first == id; });
            if (it == other.end()) {
                other.emplace_back(id, next++);
                k = other.back().second;
            } else {
                k = it->second;
            }
        }
        d.rgs_[i] = static_cast<std::uint8_t>(k);
    }
    return d;
}

PartitionDiagram PartitionDiagram::make(int bottom, int top, const std::vector<std::vector<Label>>& blocks) {
    if (bottom + top > kMaxLabels) throw BoundExceeded("diagram too large");
    std::vector<int> ids(static_cast<size_t>(bottom + top), -1);
    for (size_t b = 0; b < blocks.size(); ++b) {
        if (blocks[b].empty()) throw InvalidInput("empty block");
        for (const Label& l : blocks[b]) {
            int lim = l.top ? top : bottom;
            if (l.index < 0 || l.index >= lim) throw InvalidInput("label out of range: " + l.to_string());
            int pos = l.top ? bottom + l.index : l.index;
            if (ids[static_cast<size_t>(pos)] != -1) throw InvalidInput("label repeated: " + l.to_string());
            ids[static_cast<size_t>(pos)] = static_cast<int>(b);
        }
    }
    for (size_t i = 0; i < ids.size(); ++i)
        if (ids[i] == -1) {
            Label l = i < static_cast<size_t>(bottom) ? Label{false, static_cast<int>(i)}
                                                      : Label{true, static_cast<int>(i) - bottom};
            throw InvalidInput("label missing: " + l.to_string());
        }
    return from_block_ids(bottom, top, ids);
}

PartitionDiagram PartitionDiagram::identity(int n) {
    std::vector<int> ids(static_cast<size_t>(2 * n));
    for (int i = 0; i < n; ++i) ids[static_cast<size_t>(i)] = ids[static_cast<size_t>(n + i)] = i;
    return from_block_ids(n, n, ids);
}

int PartitionDiagram::block_count() const {
    int c = 0;
    for (int i = 0; i < label_count(); ++i) c = std::max(c, rgs_[static_cast<size_t>(i)] + 1);
    return c;
}

std::vector<std::vector<Label>> PartitionDiagram::blocks() const {
    std::vector<std::vector<Label>> out(static_cast<size_t>(block_count()));
    for (int i = 0; i < label_count(); ++i) out[rgs_[static_cast<size_t>(i)]].push_back(label(i));
    return out;
}

int PartitionDiagram::through_strands() const {
    std::uint32_t bot = 0, top = 0;
    for (int i = 0; i < m_; ++i) bot |= 1u << rgs_[static_cast<size_t>(i)];
    for (int i = m_; i < m_ + n_; ++i) top |= 1u << rgs_[static_cast<size_t>(i)];
    return __builtin_popcount(bot & top);
}

bool PartitionDiagram::is_planar() const {
    // Boundary cycle: b0..b(m-1) left to right, then t(n-1)..t0.
    int L = label_count();
    std::array<int, kMaxLabels> seq{};
    for (int i = 0; i < m_; ++i) seq[static_cast<size_t>(i)] = rgs_[static_cast<size_t>(i)];
    for (int j = 0; j < n_; ++j) seq[static_cast<size_t>(m_ + n_ - 1 - j)] = rgs_[static_cast<size_t>(m_ + j)];
    std::array<int, kMaxLabels> last{};
    std::array<bool, kMaxLabels> seen{};
    for (int i = 0; i < L; ++i) last[static_cast<size_t>(seq[static_cast<size_t>(i)])] = i;
    std::vector<int> stack;
    for (int i = 0; i < L; ++i) {
        int b = seq[static_cast<size_t>(i)];
        if (!seen[static_cast<size_t>(b)]) {
            seen[static_cast<size_t>(b)] = true;
            if (last[static_cast<size_t>(b)] > i) stack.push_back(b);
        } else {
            if (stack.empty() || stack.back() != b) return false;
            if (last[static_cast<size_t>(b)] == i) stack.pop_back();
        }
    }
    return true;
}

PartitionDiagram PartitionDiagram::star() const {
    std::vector<int> ids(static_cast<size_t>(label_count()));
    for (int j = 0; j < n_; ++j) ids[static_cast<size_t>(j)] = rgs_[static_cast<size_t>(m_ + j)];
    for (int i = 0; i < m_; ++i) ids[static_cast<size_t>(n_ + i)] = rgs_[static_cast<size_t>(i)];
    return from_block_ids(n_, m_, ids);
}

bool operator<(const PartitionDiagram& a, const PartitionDiagram& b) {
    if (a.m_ != b.m_) return a.m_ < b.m_;
    if (a.n_ != b.n_) return a.n_ < b.n_;
    return std::lexicographical_compare(a.rgs_.begin(), a.rgs_.begin() + a.label_count(), b.rgs_.begin(),
                                        b.rgs_.begin() + b.label_count());
}

size_t PartitionDiagram::hash() const {
    std::uint64_t h = 1469598103934665603ULL ^ (static_cast<std::uint64_t>(m_) << 8 | n_);
    for (int i = 0; i < label_count(); ++i) {
        h ^= rgs_[static_cast<size_t>(i)];
        h *= 1099511628211ULL;
    }
    return static_cast<size_t>(h);
}

std::string PartitionDiagram::to_text() const {
    std::ostringstream os;
    if (is_square()) os << "n=" << int(n_) << "; [";
    else os << "n=" << int(m_) << ":" << int(n_) << "; [";
    bool first_block = true;
    for (const auto& blk : blocks()) {
        if (!first_block) os << " | ";
        first_block = false;
        for (size_t i = 0; i < blk.size(); ++i) os << (i ? " " : "") << blk[i].to_string();
    }
    os << "]";
    return os.str();
}

std::string PartitionDiagram::to_json() const {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& blk : blocks()) {
        nlohmann::json b = nlohmann::json::array();
        for (const auto& l : blk) b.push_back(l.to_string());
        j.push_back(b);
    }
    return j.dump();
}

ScaledDiagram multiply(const PartitionDiagram& a, const PartitionDiagram& b) {
    if (a.bottom_count() != b.top_count()) throw InvalidInput("multiply: strand counts differ");
    const int bm = b.bottom_count(), k = b.top_count(), an = a.top_count();
    const int total = bm + k + an;
    std::array<int, 3 * PartitionDiagram::kMaxLabels> parent;
    for (int i = 0; i < total; ++i) parent[static_cast<size_t>(i)] = i;
    auto find = [&](int x) {
        while (parent[static_cast<size_t>(x)] != x) {
            parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            x = parent[static_cast<size_t>(x)];
        }
        return x;
    };
    auto unite = [&](int x, int y) {
        x = find(x);
        y = find(y);
        if (x != y) parent[static_cast<size_t>(std::max(x, y))] = std::min(x, y);
    };
    std::array<int, PartitionDiagram::kMaxLabels> first;
    first.fill(-1);
    // b occupies nodes 0..bm+k-1 with its own label order.
    for (int i = 0; i < bm + k; ++i) {
        int blk = b.block_of(i);
        if (first[static_cast<size_t>(blk)] < 0) first[static_cast<size_t>(blk)] = i;
        else unite(first[static_cast<size_t>(blk)], i);
    }
    first.fill(-1);
    // a occupies nodes bm..bm+k+an-1.
    for (int i = 0; i < k + an; ++i) {
        int blk = a.block_of(i);
        int node = bm + i;
        if (first[static_cast<size_t>(blk)] < 0) first[static_cast<size_t>(blk)] = node;
        else unite(first[static_cast<size_t>(blk)], node);
    }
    std::array<bool, 3 * PartitionDiagram::kMaxLabels> outer{};
    std::vector<int> ids;
    ids.reserve(static_cast<size_t>(bm + an));
    for (int i = 0; i < bm; ++i) {
        int r = find(i);
        outer[static_cast<size_t>(r)] = true;
        ids.push_back(r);
    }
    for (int i = bm + k; i < total; ++i) {
        int r = find(i);
        outer[static_cast<size_t>(r)] = true;
        ids.push_back(r);
    }
    int closed = 0;
    for (int i = bm; i < bm + k; ++i)
        if (find(i) == i && !outer[static_cast<size_t>(i)]) ++closed;
    return {closed, PartitionDiagram::from_block_ids(bm, an, ids)};
}

PartitionDiagram parse_diagram(const std::string& text) {
    auto fail = [&](const std::string& why) { throw InvalidInput("malformed diagram '" + text + "': " + why); };
    auto semi = text.find(';');
    if (semi == std::string::npos) fail("missing ';'");
    std::string head = text.substr(0, semi);
    head.erase(std::remove_if(head.begin(), head.end(), [](unsigned char c) { return std::isspace(c); }), head.end());
    if (head.rfind("n=", 0) != 0) fail("missing n=");
    int m = 0, n = 0;
    try {
        std::string sizes = head.substr(2);
        auto colon = sizes.find(':');
        if (colon == std::string::npos) {
            m = n = std::stoi(sizes);
        } else {
            m = std::stoi(sizes.substr(0, colon));
            n = std::stoi(sizes.substr(colon + 1));
        }
    } catch (const std::logic_error&) {
        fail("bad n");
    }
    std::string body = text.substr(semi + 1);
    auto lb = body.find('['), rb = body.rfind(']');
    if (lb == std::string::npos || rb == std::string::npos || rb < lb) fail("missing brackets");
    body = body.substr(lb + 1, rb - lb - 1);
    std::vector<std::vector<Label>> blocks;
    std::stringstream ss(body);
    std::string part;
    while (std::getline(ss, part, '|')) {
        std::stringstream ps(part);
        std::string tok;
        std::vector<Label> blk;
        while (ps >> tok) blk.push_back(parse_label(tok));
        if (blk.empty()) fail("empty block");
        blocks.push_back(blk);
    }
    return PartitionDiagram::make(m, n, blocks);
}

PartitionDiagram diagram_from_json(const std::string& json) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json);
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInput(std::string("diagram json: ") + e.what());
    }
    if (!j.is_array()) throw InvalidInput("diagram json must be an array of blocks");
    std::vector<std::vector<Label>> blocks;
    int m = 0, n = 0;
    for (const auto& b : j) {
        if (!b.is_array()) throw InvalidInput("diagram json block must be an array");
        std::vector<Label> blk;
        for (const auto& l : b) {
            if (!l.is_string()) throw InvalidInput("diagram json label must be a string");
            Label lab = parse_label(l.get<std::string>());
            (lab.top ? n : m) = std::max(lab.top ? n : m, lab.index + 1);
            blk.push_back(lab);
        }
        blocks.push_back(blk);
    }
    return PartitionDiagram::make(m, n, blocks);
}

PartitionDiagram one_line_to_diagram(const std::vector<int>& word) {
    int n = static_cast<int>(word.size());
    std::vector<int> ids(static_cast<size_t>(2 * n));
    for (int i = 0; i < n; ++i) {
        if (word[static_cast<size_t>(i)] < 1 || word[static_cast<size_t>(i)] > n)
            throw InvalidInput("one-line entry out of range");
        ids[static_cast<size_t>(i)] = word[static_cast<size_t>(i)] - 1;
    }
    for (int j = 0; j < n; ++j) ids[static_cast<size_t>(n + j)] = j;
    return PartitionDiagram::from_block_ids(n, n, ids);
}

std::vector<int> parse_one_line(const std::string& word) {
    std::string s;
    for (char c : word)
        if (c != '(' && c != ')') s += c;
    std::vector<int> out;
    bool separated = s.find_first_of(" ,") != std::string::npos;
    if (separated) {
        std::replace(s.begin(), s.end(), ',', ' ');
        std::stringstream ss(s);
        std::string tok;
        while (ss >> tok) {
            for (char c : tok)
                if (!std::isdigit(static_cast<unsigned char>(c))) throw InvalidInput("bad one-line word '" + word + "'");
            out.push_back(std::stoi(tok));
        }
    } else {
        for (char c : s) {
            if (!std::isdigit(static_cast<unsigned char>(c))) throw InvalidInput("bad one-line word '" + word + "'");
            out.push_back(c - '0');
        }
    }
    if (out.empty()) throw InvalidInput("empty one-line word");
    return out;
}

PartitionDiagram one_line_to_diagram(const std::string& word) { return one_line_to_diagram(parse_one_line(word)); }

std::vector<int> diagram_to_one_line(const PartitionDiagram& a) {
    if (!a.is_square()) throw InvalidInput("not a transformation");
    int n = a.n();
    std::vector<int> top_of_block(static_cast<size_t>(a.block_count()), -1);
    for (int j = 0; j < n; ++j) {
        int b = a.block_of(Label{true, j});
        if (top_of_block[static_cast<size_t>(b)] != -1) throw InvalidInput("not a transformation");
        top_of_block[static_cast<size_t>(b)] = j;
    }
    std::vector<int> word;
    for (int i = 0; i < n; ++i) {
        int t = top_of_block[static_cast<size_t>(a.block_of(Label{false, i}))];
        if (t < 0) throw InvalidInput("not a transformation");
        word.push_back(t + 1);
    }
    return word;
}

}  // namespace greenbox::diagrams
