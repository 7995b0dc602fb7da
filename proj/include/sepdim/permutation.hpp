#pragma once

#include <vector>

#include "sepdim/errors.hpp"

namespace sepdim {

// Total order of 0..n-1. order()[pos] = vertex, rank_of(v) = position.
class Permutation {
public:
    Permutation() = default;

    explicit Permutation(std::vector<int> order);

    static Permutation identity(int n);

    int size() const { return static_cast<int>(order_.size()); }
    int vertex_at(int pos) const { return order_[static_cast<std::size_t>(pos)]; }
    int rank_of(int v) const { return rank_[static_cast<std::size_t>(v)]; }

    const std::vector<int>& order() const { return order_; }
    const std::vector<int>& ranks() const { return rank_; }

    Permutation reversed() const;

    friend bool operator==(const Permutation& a, const Permutation& b) {
        return a.order_ == b.order_;
    }
    friend bool operator<(const Permutation& a, const Permutation& b) {
        return a.order_ < b.order_;
    }

private:
    std::vector<int> order_;
    std::vector<int> rank_;
};

struct PermutationFamily {
    int n = 0;
    std::vector<Permutation> members;
};

// Integer embedding of vertices into k axes. For rank embeddings every
// column is a permutation of 0..n-1, but the operations below accept
// arbitrary integer coordinates (ties included).
struct SeparatingEmbedding {
    int k = 0;
    std::vector<std::vector<int>> coords;  // coords[v] has length k
};

}  // namespace sepdim
