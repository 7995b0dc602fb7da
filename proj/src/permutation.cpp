#include "sepdim/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace sepdim {

Permutation::Permutation(std::vector<int> order) : order_(std::move(order)) {
    const int n = static_cast<int>(order_.size());
    rank_.assign(static_cast<std::size_t>(n), -1);
    for (int pos = 0; pos < n; ++pos) {
        int v = order_[static_cast<std::size_t>(pos)];
        if (v < 0 || v >= n)
            throw domain_error("permutation entry out of range: " + std::to_string(v));
        if (rank_[static_cast<std::size_t>(v)] != -1)
            throw domain_error("permutation repeats vertex " + std::to_string(v));
        rank_[static_cast<std::size_t>(v)] = pos;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    return Permutation(std::move(order));
}

Permutation Permutation::reversed() const {
    std::vector<int> order(order_.rbegin(), order_.rend());
    return Permutation(std::move(order));
}

}  // namespace sepdim
