#pragma once

#include <cstddef>
#include <vector>

namespace udlrc {

/// One locality class N_j: n symbols, each repairable inside N_j by a punctured code of
/// length at most r + delta - 1 and distance at least delta.
struct LocalityClass {
    int n = 0;
    int r = 0;
    int delta = 0;

    /// Class made of m full local groups of length r + delta - 1.
    [[nodiscard]] static LocalityClass with_groups(int r, int delta, int m) {
        return {m * (r + delta - 1), r, delta};
    }

    friend bool operator==(const LocalityClass&, const LocalityClass&) = default;
};

/// Raw user input. t == 0 means "use n_Gab".
struct LocalitySpec {
    std::vector<LocalityClass> classes;
    int k = 0;
    int q = 0;
    int t = 0;

    friend bool operator==(const LocalitySpec&, const LocalitySpec&) = default;
};

/// Per-class quantities derived from (n_j, r_j, delta_j):
/// n_j = p (r + delta - 1) + rem with 0 <= rem <= r + delta - 2, and the dimension ceiling
///   k_j = p r                          if rem <= delta - 2
///   k_j = n_j - ceil(m_j)(delta - 1)   otherwise.
struct ClassParams {
    int n = 0;
    int r = 0;
    int delta = 0;
    int p = 0;
    int rem = 0;
    int k_bound = 0;

    [[nodiscard]] int group_length() const noexcept { return r + delta - 1; }
    [[nodiscard]] bool whole_groups() const noexcept { return rem == 0; }
    /// Number of local groups; meaningful when whole_groups().
    [[nodiscard]] int groups() const noexcept { return p; }
};

struct DerivedSpec {
    LocalitySpec input;
    std::vector<ClassParams> classes;
    int n = 0;
    int k = 0;
    /// sum m_j r_j over classes with whole groups (0 if any class is fractional).
    int n_gab = 0;
    /// r nondecreasing and delta nonincreasing in class order.
    bool ordered = false;

    [[nodiscard]] std::size_t s() const noexcept { return classes.size(); }
    [[nodiscard]] int dimension_ceiling() const noexcept {
        int sum = 0;
        for (const auto& c : classes) sum += c.k_bound;
        return sum;
    }
};

[[nodiscard]] ClassParams derive_class(const LocalityClass& c);

[[nodiscard]] bool ordered_condition(const std::vector<LocalityClass>& classes) noexcept;

/// Checks what every bound needs (k >= 1, r >= 1, delta >= 2, n_j >= 1) and derives the
/// per-class parameters. q and t are not inspected.
[[nodiscard]] DerivedSpec derive_params(const LocalitySpec& spec);

/// derive_params plus every constraint of the Gabidulin-based construction:
/// whole local groups, k <= n_Gab <= t, q prime with q >= r_j + delta_j - 1, t within range.
/// Fills in t = n_Gab when the input leaves it at 0.
[[nodiscard]] DerivedSpec validate_spec(const LocalitySpec& spec);

}  // namespace udlrc
