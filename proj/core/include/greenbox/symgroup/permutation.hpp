#pragma once

#include <string>
#include <vector>

namespace greenbox::symgroup {

// One-line permutation of {1..m}; stored 0-based, image[i] = w(i+1)-1.
// Products compose as functions: (p*q)(i) = p(q(i)).
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> zero_based_images);
    static Permutation identity(int m);
    static Permutation from_one_line(const std::vector<int>& one_based);

    int size() const { return static_cast<int>(img_.size()); }
    int operator()(int i) const { return img_[static_cast<size_t>(i)]; }
    const std::vector<int>& images() const { return img_; }
    std::vector<int> one_line() const;

    Permutation inverse() const;
    int sign() const;
    std::vector<int> cycle_type() const;  // descending
    friend Permutation operator*(const Permutation& p, const Permutation& q);
    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

    std::string to_string() const;

private:
    std::vector<int> img_;
};

// All permutations of m letters in lexicographic one-line order.
std::vector<Permutation> all_permutations(int m);
// Position in all_permutations(m).
long permutation_index(const Permutation& p);

}  // namespace greenbox::symgroup
