#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "udlrc/finite_field.hpp"
#include "udlrc/matrix.hpp"

namespace udlrc {

/// f(x) = sum_i coeffs[i] * x^(q^i). The map x -> f(x) is F_q-linear.
struct LinearizedPoly {
    std::vector<ExtElem> coeffs;

    friend bool operator==(const LinearizedPoly&, const LinearizedPoly&) = default;
};

/// Points of F_{q^t} that are linearly independent over F_q (checked on construction).
class EvaluationPoints {
public:
    EvaluationPoints(const ExtField& field, std::vector<ExtElem> points);

    [[nodiscard]] std::span<const ExtElem> points() const noexcept { return points_; }
    [[nodiscard]] std::size_t size() const noexcept { return points_.size(); }
    [[nodiscard]] const ExtElem& operator[](std::size_t i) const noexcept { return points_[i]; }

private:
    std::vector<ExtElem> points_;
};

struct Evaluation {
    ExtElem point;
    ExtElem value;
};

[[nodiscard]] ExtElem lin_eval(const ExtField& field, const LinearizedPoly& f, const ExtElem& x);

/// k x n matrix with entry (i, j) = points[j]^(q^i). Row vector a times this matrix is the
/// Gabidulin codeword of message a.
[[nodiscard]] Matrix<ExtElem> moore_matrix(const ExtField& field, std::span<const ExtElem> points, std::size_t k);

[[nodiscard]] std::vector<ExtElem> gabidulin_encode(const ExtField& field, std::span<const ExtElem> message,
                                                    const EvaluationPoints& points);

/// Recovers f from exactly k evaluations by solving the k x k Moore system. Throws
/// RankDeficientPoints when the points are dependent over F_q (the Moore matrix is singular
/// exactly then).
[[nodiscard]] LinearizedPoly interpolate(const ExtField& field, std::span<const Evaluation> evals);

/// The polynomial-basis prefix 1, a, ..., a^(n-1).
[[nodiscard]] EvaluationPoints default_points(const ExtField& field, std::size_t n);

}  // namespace udlrc
