#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "udlrc/locality.hpp"

namespace udlrc {

/// Integer ceiling of a / b for b > 0 and any sign of a.
[[nodiscard]] constexpr int ceil_div(int a, int b) noexcept {
    return a >= 0 ? (a + b - 1) / b : -((-a) / b);
}

struct BoundReport {
    std::string name;
    int value = 0;
    /// 1-based pivot class (s* or sigma); 0 when the bound has none.
    int pivot = 0;
    /// Subtracted terms in evaluation order, for auditing.
    std::vector<int> terms;
    /// Class order used (0-based indices into the spec), identity unless permuted.
    std::vector<std::size_t> permutation;
};

/// sum_j k_j.
[[nodiscard]] int dimension_bound(const DerivedSpec& spec);

/// min { j : k_1 + ... + k_j >= k }, 1-based. Throws DimensionInfeasible when k > sum k_j.
[[nodiscard]] int sstar(const DerivedSpec& spec);

/// d <= n - k + 1 - sum_{j<s*} (n_j - k_j) - (ceil((k - sum_{j<s*} k_j) / r_{s*}) - 1)(delta_{s*} - 1).
[[nodiscard]] BoundReport distance_bound_udlrc(const DerivedSpec& spec);

/// Same shape with measured per-class G-ranks in place of k_j and pivot
/// sigma = min { j : grank(N_1) + ... + grank(N_j) >= k }.
[[nodiscard]] BoundReport distance_bound_sigma(const DerivedSpec& spec, std::span<const int> granks);

/// Single-locality (r, delta) bound n - k + 1 - (ceil(k / r) - 1)(delta - 1).
[[nodiscard]] int distance_bound_rdelta(int n, int k, int r, int delta);

/// Disjoint r-locality bound (every delta_j = 2, r nondecreasing), evaluated as published:
/// s* = max { 0 <= j <= s-1 : sum_{j'<=j} ceil(n_j'/(r_j'+1)) r_j' < k - 1 } + 1, with an empty
/// set counting as 0.
[[nodiscard]] BoundReport distance_bound_disjoint_r(const DerivedSpec& spec);

/// Minimum of distance_bound_udlrc over every ordering of the classes (s <= 8).
[[nodiscard]] BoundReport permuted_tightest_bound(const DerivedSpec& spec);

}  // namespace udlrc
