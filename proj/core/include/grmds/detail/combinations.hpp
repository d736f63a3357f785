#pragma once

#include <cstddef>
#include <numeric>
#include <vector>

namespace grmds::detail {

/// Calls fn on every r-subset of {0..n-1} in lexicographic order until fn
/// returns false.  Returns false iff some call returned false.
template <typename Fn>
bool for_each_combination(std::size_t n, std::size_t r, Fn&& fn) {
    std::vector<std::size_t> idx(r);
    std::iota(idx.begin(), idx.end(), 0);
    if (r > n) return true;
    while (true) {
        if (!fn(idx)) return false;
        // advance
        std::size_t i = r;
        while (i > 0) {
            --i;
            if (idx[i] != i + n - r) {
                ++idx[i];
                for (std::size_t j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
                break;
            }
            if (i == 0) return true;
        }
        if (r == 0) return true;
    }
}

}  // namespace grmds::detail
