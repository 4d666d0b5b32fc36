#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "udlrc/code.hpp"
#include "udlrc/finite_field.hpp"
#include "udlrc/matrix.hpp"

namespace udlrc {

inline constexpr std::size_t kOracleMaxLength = 24;

// ---------------------------------------------------------------------------
// Rank oracles
// ---------------------------------------------------------------------------

/// rank(G|_T) over F_{q^t}.
[[nodiscard]] std::size_t grank(const ExtField& field, const Matrix<ExtElem>& gen, std::span<const std::size_t> symbols);

/// Erasures outside T are correctable exactly when grank(T) = k.
[[nodiscard]] bool decodable(const ExtField& field, const Matrix<ExtElem>& gen, std::span<const std::size_t> symbols);

struct DistanceCertificate {
    std::size_t d = 0;
    /// A largest set with grank <= k - 1; its size is n - d.
    IndexSet witness;
    std::size_t witness_rank = 0;
};

/// d = n - max { |T| : grank(T) <= k - 1 }, scanning subset sizes downward from n - 1 and
/// stopping at the first size that holds a rank-deficient subset. Requires rank(G) = k
/// (the row count) and n <= max_length.
[[nodiscard]] DistanceCertificate min_distance_oracle(const ExtField& field, const Matrix<ExtElem>& gen,
                                                      std::size_t max_length = kOracleMaxLength);

/// Minimum distance of the punctured code G|_S, whatever its dimension. Returns nullopt for the
/// zero code (every column of S vanishes), whose distance is undefined.
[[nodiscard]] std::optional<std::size_t> punctured_distance(const ExtField& field, const Matrix<ExtElem>& gen,
                                                            std::span<const std::size_t> support);

/// Some S with i in S, S inside class_symbols, |S| <= r + delta - 1 and punctured distance >= delta.
/// Candidates are tried by increasing size, then lexicographically. class_symbols is limited to 16.
[[nodiscard]] std::optional<IndexSet> locality_witness_search(const ExtField& field, const Matrix<ExtElem>& gen,
                                                              std::size_t i, std::span<const std::size_t> class_symbols,
                                                              int r, int delta);

// ---------------------------------------------------------------------------
// Nested repair-set chain Q_0 ⊂ Q_1 ⊂ ... ⊂ Q_L used by the dimension and distance bounds
// ---------------------------------------------------------------------------

struct RepairChain {
    std::size_t class_index = 0;
    std::vector<IndexSet> sets;            // Q_0 = {} ... Q_L
    std::vector<std::size_t> picked;       // picked symbol at step l (size L)
    std::vector<std::size_t> ranks;        // grank(Q_l), size L + 1
    std::size_t class_rank = 0;            // grank(N_j)

    [[nodiscard]] std::size_t steps() const noexcept { return picked.size(); }
};

/// While grank(Q_l) < grank(N_j): pick the smallest i in N_j \ Q_l that raises the rank, and
/// set Q_{l+1} = Q_l ∪ S_i with S_i the local group containing i.
[[nodiscard]] RepairChain repair_chain(const CodeInstance& code, std::size_t class_index);

struct ChainVerdict {
    bool ok = true;
    /// 0 when ok; otherwise the first failing claim (1: rank step <= r, 2: size step >=
    /// rank step + delta - 1, 3: L >= ceil(grank(N_j) / r)).
    int violated_claim = 0;
    std::size_t step = 0;
};

[[nodiscard]] ChainVerdict verify_chain(const RepairChain& trace, int r, int delta);

struct ClassRankReport {
    std::size_t class_index = 0;
    std::size_t grank = 0;
    int k_bound = 0;
    bool within_bound = false;
    /// Only meaningful when k = n_Gab: grank(N_j) = m_j r_j = k_j.
    bool equality_expected = false;
    bool equality_holds = false;
};

/// Measures grank(N_j) per class against the ceiling k_j.
[[nodiscard]] std::vector<ClassRankReport> class_rank_check(const CodeInstance& code);

struct DeficientWitness {
    IndexSet set;
    std::size_t grank = 0;
    int sigma = 0;         // 1-based
    std::size_t depth = 0; // l, number of chain steps taken from class sigma
    int gamma_lower = 0;   // sum_{j<sigma}(n_j - grank(N_j)) + l (delta_sigma - 1)
    bool rank_ok = false;  // grank <= k - 1
    bool gamma_ok = false; // |T| - grank >= gamma_lower
};

/// T = N_1 ⊔ ... ⊔ N_{sigma-1} ⊔ Q_l with l = ceil((k - sum_{j<sigma} grank(N_j)) / r_sigma) - 1.
[[nodiscard]] DeficientWitness deficient_witness_set(const CodeInstance& code);

// ---------------------------------------------------------------------------
// Worst-case erasure patterns
// ---------------------------------------------------------------------------

/// Remaining set of size n - e filled greedily from G_1 onward, lowest indices first inside the
/// last, partially taken group.
[[nodiscard]] ErasurePattern worst_case_pattern(const LocalGroupLayout& layout, std::size_t erased_count);

/// Moves symbols from later groups into earlier incomplete groups until no group with missing
/// symbols precedes a group with present ones. Each recorded entry is the remaining set after
/// one move; the input itself is not included.
[[nodiscard]] std::vector<IndexSet> transform_pattern(const LocalGroupLayout& layout, IndexSet remaining);

struct TightnessReport {
    int sstar = 0;
    std::size_t tau = 0;
    std::size_t greedy_rank = 0;
    bool greedy_ok = false;
    bool exhaustive_run = false;
    bool exhaustive_ok = false;
    std::size_t exhaustive_sets = 0;
    std::size_t lower_bound = 0;  // n - tau + 1
    int upper_bound = 0;
    bool certified = false;
};

/// Lower-bounds d by showing every tau-subset keeps E-rank >= k (greedy worst case, plus an
/// exhaustive cross-check when C(n, tau) <= exhaustive_limit) and compares against the upper
/// bound. Throws OrderedConditionRequired when the spec is not ordered.
[[nodiscard]] TightnessReport certify_tightness(const CodeInstance& code, std::size_t exhaustive_limit = 1u << 20);

// ---------------------------------------------------------------------------
// Subset enumeration helper
// ---------------------------------------------------------------------------

/// Calls visit(subset) for every size-`size` subset of `universe` in lexicographic order; stops
/// early when visit returns false. Returns false iff stopped early.
template <class Visit>
bool for_each_subset(std::span<const std::size_t> universe, std::size_t size, Visit&& visit) {
    const std::size_t n = universe.size();
    if (size > n) return true;
    std::vector<std::size_t> pos(size);
    for (std::size_t i = 0; i < size; ++i) pos[i] = i;
    IndexSet subset(size);
    for (;;) {
        for (std::size_t i = 0; i < size; ++i) subset[i] = universe[pos[i]];
        if (!visit(static_cast<const IndexSet&>(subset))) return false;
        std::size_t i = size;
        while (i > 0 && pos[i - 1] == n - size + i - 1) --i;
        if (i == 0) return true;
        ++pos[i - 1];
        for (std::size_t j = i; j < size; ++j) pos[j] = pos[j - 1] + 1;
    }
}

[[nodiscard]] std::size_t binomial(std::size_t n, std::size_t k) noexcept;

}  // namespace udlrc
