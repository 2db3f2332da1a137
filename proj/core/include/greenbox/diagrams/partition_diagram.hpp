#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace greenbox::diagrams {

struct Label {
    bool top = false;
    int index = 0;

    friend bool operator==(const Label&, const Label&) = default;
    std::string to_string() const;
};

Label parse_label(const std::string& text);

// A set partition of bottom points b0..b(m-1) and top points t0..t(n-1).
// Square diagrams (m == n) are the monoid elements; rectangular ones arise as
// halves of factorizations. Stored as a restricted growth string over the
// labels in the order b0.., t0.., which is the canonical form.
class PartitionDiagram {
public:
    static constexpr int kMaxLabels = 32;

    PartitionDiagram() = default;

    // Block id per label; any labeling works, it is canonicalized.
    static PartitionDiagram from_block_ids(int bottom, int top, const std::vector<int>& ids);
    static PartitionDiagram make(int bottom, int top, const std::vector<std::vector<Label>>& blocks);
    static PartitionDiagram make(int n, const std::vector<std::vector<Label>>& blocks) { return make(n, n, blocks); }
    static PartitionDiagram identity(int n);

    int bottom_count() const { return m_; }
    int top_count() const { return n_; }
    int n() const { return n_; }
    bool is_square() const { return m_ == n_; }
    int label_count() const { return m_ + n_; }

    int block_of(int label) const { return rgs_[static_cast<size_t>(label)]; }
    int block_of(Label l) const { return block_of(l.top ? m_ + l.index : l.index); }
    int block_count() const;
    std::vector<std::vector<Label>> blocks() const;
    Label label(int index) const { return index < m_ ? Label{false, index} : Label{true, index - m_}; }

    int through_strands() const;
    bool is_planar() const;
    PartitionDiagram star() const;

    std::string to_text() const;
    std::string to_json() const;

    friend bool operator==(const PartitionDiagram& a, const PartitionDiagram& b) {
        return a.m_ == b.m_ && a.n_ == b.n_ && a.rgs_ == b.rgs_;
    }
    friend bool operator!=(const PartitionDiagram& a, const PartitionDiagram& b) { return !(a == b); }
    friend bool operator<(const PartitionDiagram& a, const PartitionDiagram& b);

    size_t hash() const;

private:
    std::uint8_t m_ = 0, n_ = 0;
    std::array<std::uint8_t, kMaxLabels> rgs_{};
};

struct ScaledDiagram {
    int closed = 0;  // coefficient is d^closed
    PartitionDiagram diagram;
};

// a above b; requires a.bottom_count() == b.top_count().
ScaledDiagram multiply(const PartitionDiagram& a, const PartitionDiagram& b);

PartitionDiagram parse_diagram(const std::string& text);
PartitionDiagram diagram_from_json(const std::string& json);

// Transformations in one-line notation, entries 1..n: bottom i joins top f(i).
PartitionDiagram one_line_to_diagram(const std::vector<int>& word);
PartitionDiagram one_line_to_diagram(const std::string& word);
std::vector<int> diagram_to_one_line(const PartitionDiagram& a);
std::vector<int> parse_one_line(const std::string& word);

}  // namespace greenbox::diagrams

template <>
struct std::hash<greenbox::diagrams::PartitionDiagram> {
    size_t operator()(const greenbox::diagrams::PartitionDiagram& d) const { return d.hash(); }
};
