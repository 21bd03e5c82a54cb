#pragma once

#include <algorithm>
#include <array>
#include <vector>

// Test-only ground truth, deliberately independent of the library: an
// unpruned permutation search over every order-3 fill. Cross-checks the
// pruned enumerator.
namespace testutil {

inline bool magic3(const std::array<int, 9>& a) {
    const int s = a[0] + a[1] + a[2];
    return a[3] + a[4] + a[5] == s && a[6] + a[7] + a[8] == s &&
           a[0] + a[3] + a[6] == s && a[1] + a[4] + a[7] == s && a[2] + a[5] + a[8] == s &&
           a[0] + a[4] + a[8] == s && a[2] + a[4] + a[6] == s;
}

/// All normal magic squares of order 3, found by trying all 9! fills.
inline std::vector<std::array<int, 9>> brute_force_order3() {
    std::array<int, 9> a{1, 2, 3, 4, 5, 6, 7, 8, 9};
    std::vector<std::array<int, 9>> found;
    do {
        if (magic3(a)) found.push_back(a);
    } while (std::next_permutation(a.begin(), a.end()));
    return found;
}

}  // namespace testutil
