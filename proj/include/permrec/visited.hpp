#pragma once

#include <cstdint>
#include <unordered_set>
#include <vector>

#include "permrec/arith.hpp"
#include "permrec/limits.hpp"
#include "permrec/permutation.hpp"

namespace permrec {

/// Set of permutations of one degree. Dense bitmap keyed by Lehmer rank for
/// small degrees, hash set of packed one-line codes otherwise.
class VisitedSet {
public:
    VisitedSet(int n, const SearchLimits& limits) : dense_(n <= limits.dense_max_degree) {
        if (dense_) bits_.assign(static_cast<std::size_t>(factorial(n)), false);
    }

    bool dense() const noexcept { return dense_; }

    /// Returns true when p was not yet present.
    bool insert(const Permutation& p) {
        if (dense_) {
            auto ref = bits_[rank(p)];
            if (ref) return false;
            ref = true;
            ++size_;
            return true;
        }
        const bool added = codes_.insert(p.packed()).second;
        if (added) ++size_;
        return added;
    }

    bool contains(const Permutation& p) const {
        if (dense_) return bits_[rank(p)];
        return codes_.contains(p.packed());
    }

    std::size_t size() const noexcept { return size_; }

private:
    bool dense_;
    std::vector<bool> bits_;
    std::unordered_set<std::uint64_t> codes_;
    std::size_t size_ = 0;
};

} // namespace permrec
