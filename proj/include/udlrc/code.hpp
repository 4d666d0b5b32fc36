#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "udlrc/finite_field.hpp"
#include "udlrc/gabidulin.hpp"
#include "udlrc/locality.hpp"
#include "udlrc/matrix.hpp"

namespace udlrc {

/// Sorted, duplicate-free list of symbol indices.
using IndexSet = std::vector<std::size_t>;

[[nodiscard]] IndexSet complement(std::span<const std::size_t> set, std::size_t n);

/// Local groups G_1, ..., G_|L|. Groups appear in class order and, inside a class, in symbol
/// order; for specs meeting the ordered condition this is also the worst-case fill order.
struct LocalGroupLayout {
    std::size_t n = 0;
    std::vector<IndexSet> groups;
    std::vector<std::size_t> class_of;  // group -> class j
    std::vector<std::size_t> group_of;  // symbol -> group
    std::vector<int> r_of;              // group -> r_j
    std::vector<int> delta_of;          // group -> delta_j
    bool ordered = false;
};

struct ErasurePattern {
    IndexSet erased;
    IndexSet remaining;

    [[nodiscard]] static ErasurePattern from_erased(std::size_t n, IndexSet erased);
    [[nodiscard]] static ErasurePattern from_remaining(std::size_t n, IndexSet remaining);
};

/// Systematic [r + delta - 1, r] Reed-Solomon generator over F_q with locators 0, 1, ...,
/// r + delta - 2: row i is the Lagrange basis polynomial of locator i (i < r) evaluated at every
/// locator.
[[nodiscard]] Matrix<BaseElem> mds_local_generator(int r, int delta, const PrimeField& field);

/// A Gabidulin-precoded code with per-group MDS encoding. Immutable after build_code.
class CodeInstance {
public:
    [[nodiscard]] const DerivedSpec& spec() const noexcept { return spec_; }
    [[nodiscard]] const ExtField& field() const noexcept { return field_; }
    [[nodiscard]] const LocalGroupLayout& layout() const noexcept { return layout_; }
    [[nodiscard]] const Matrix<ExtElem>& generator() const noexcept { return gen_; }
    /// Evaluation point y_i carried by codeword symbol i.
    [[nodiscard]] const std::vector<ExtElem>& points() const noexcept { return point_of_; }
    [[nodiscard]] const EvaluationPoints& gab_points() const noexcept { return gab_points_; }
    /// Local generator used by group g.
    [[nodiscard]] const Matrix<BaseElem>& local_generator(std::size_t g) const {
        return local_gens_[layout_.class_of[g]];
    }
    /// First Gabidulin symbol feeding group g; the group consumes r_j consecutive ones.
    [[nodiscard]] std::size_t gab_offset(std::size_t g) const { return gab_offset_[g]; }
    /// Symbol indices of class j (N_j).
    [[nodiscard]] IndexSet class_symbols(std::size_t j) const;

    [[nodiscard]] std::size_t n() const noexcept { return layout_.n; }
    [[nodiscard]] std::size_t k() const noexcept { return static_cast<std::size_t>(spec_.k); }

private:
    friend CodeInstance build_code(const LocalitySpec& spec);

    CodeInstance(DerivedSpec spec, ExtField field, EvaluationPoints gab_points);

    DerivedSpec spec_;
    ExtField field_;
    EvaluationPoints gab_points_;
    LocalGroupLayout layout_;
    std::vector<Matrix<BaseElem>> local_gens_;  // per class
    std::vector<std::size_t> gab_offset_;       // per group
    std::vector<ExtElem> point_of_;
    Matrix<ExtElem> gen_;
};

[[nodiscard]] CodeInstance build_code(const LocalitySpec& spec);

/// message * generator.
[[nodiscard]] std::vector<ExtElem> encode(const CodeInstance& code, std::span<const ExtElem> message);

/// Gabidulin encoding followed by local MDS encoding of each group.
[[nodiscard]] std::vector<ExtElem> encode_pipeline(const CodeInstance& code, std::span<const ExtElem> message);

/// Rank over F_q of the evaluation points on T, summed group by group.
[[nodiscard]] std::size_t erank(const CodeInstance& code, std::span<const std::size_t> symbols);

struct DecodeResult {
    std::vector<ExtElem> message;
    std::vector<ExtElem> codeword;
    std::size_t locally_repaired = 0;
    std::size_t globally_repaired = 0;
    std::size_t remaining_rank = 0;
};

/// Local repair inside every group with at most delta_j - 1 erasures, then interpolation from
/// a greedily chosen F_q-independent set of k known symbols. `received` has n entries; values at
/// erased positions are ignored. Throws UndecodableError when erank(remaining) < k.
[[nodiscard]] DecodeResult decode_erasures(const CodeInstance& code, std::span<const ExtElem> received,
                                           const ErasurePattern& pattern);

}  // namespace udlrc
