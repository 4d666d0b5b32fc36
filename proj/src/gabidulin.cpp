#include "udlrc/gabidulin.hpp"

#include <string>
#include <utility>

namespace udlrc {

EvaluationPoints::EvaluationPoints(const ExtField& field, std::vector<ExtElem> points) : points_(std::move(points)) {
    if (points_.size() > field.degree()) {
        throw Error(ErrorCode::TooManyPoints, std::to_string(points_.size()) + " points exceed t = " +
                                                  std::to_string(field.degree()));
    }
    for (const auto& p : points_) {
        if (!field.contains(p)) throw Error(ErrorCode::LengthMismatch, "point outside the field");
    }
    const std::size_t rank = rank_over_base(field, points_);
    if (rank != points_.size()) {
        throw Error(ErrorCode::RankDeficientPoints,
                    "rank " + std::to_string(rank) + " for " + std::to_string(points_.size()) + " points");
    }
}

ExtElem lin_eval(const ExtField& field, const LinearizedPoly& f, const ExtElem& x) {
    ExtElem acc = field.zero();
    ExtElem power = x;  // x^(q^i)
    for (std::size_t i = 0; i < f.coeffs.size(); ++i) {
        if (i > 0) power = field.frobenius_power(power, 1);
        acc = field.add(acc, field.mul(f.coeffs[i], power));
    }
    return acc;
}

Matrix<ExtElem> moore_matrix(const ExtField& field, std::span<const ExtElem> points, std::size_t k) {
    Matrix<ExtElem> m(k, points.size(), field.zero());
    for (std::size_t j = 0; j < points.size(); ++j) {
        ExtElem power = points[j];
        for (std::size_t i = 0; i < k; ++i) {
            if (i > 0) power = field.frobenius_power(power, 1);
            m(i, j) = power;
        }
    }
    return m;
}

std::vector<ExtElem> gabidulin_encode(const ExtField& field, std::span<const ExtElem> message,
                                      const EvaluationPoints& points) {
    if (message.size() > points.size()) {
        throw Error(ErrorCode::MessageTooLong, "k = " + std::to_string(message.size()) + " > n = " +
                                                   std::to_string(points.size()));
    }
    const LinearizedPoly f{{message.begin(), message.end()}};
    std::vector<ExtElem> codeword;
    codeword.reserve(points.size());
    for (const auto& x : points.points()) codeword.push_back(lin_eval(field, f, x));
    return codeword;
}

LinearizedPoly interpolate(const ExtField& field, std::span<const Evaluation> evals) {
    const std::size_t k = evals.size();
    Matrix<ExtElem> system(k, k, field.zero());
    std::vector<ExtElem> rhs;
    rhs.reserve(k);
    for (std::size_t i = 0; i < k; ++i) {
        ExtElem power = evals[i].point;
        for (std::size_t j = 0; j < k; ++j) {
            if (j > 0) power = field.frobenius_power(power, 1);
            system(i, j) = power;
        }
        rhs.push_back(evals[i].value);
    }
    try {
        return {solve_linear(field, std::move(system), std::move(rhs))};
    } catch (const Error& e) {
        if (e.code() != ErrorCode::SingularMatrix) throw;
        throw Error(ErrorCode::RankDeficientPoints, "interpolation points are dependent over F_q");
    }
}

EvaluationPoints default_points(const ExtField& field, std::size_t n) {
    if (n > field.degree()) {
        throw Error(ErrorCode::TooManyPoints, "n = " + std::to_string(n) + " > t = " + std::to_string(field.degree()));
    }
    std::vector<ExtElem> pts;
    pts.reserve(n);
    for (std::size_t i = 0; i < n; ++i) pts.push_back(field.basis(i));
    return EvaluationPoints(field, std::move(pts));
}

}  // namespace udlrc
