#include "udlrc/bounds.hpp"

#include <algorithm>
#include <numeric>

#include "udlrc/error.hpp"

namespace udlrc {

namespace {

std::vector<std::size_t> identity(std::size_t s) {
    std::vector<std::size_t> p(s);
    std::iota(p.begin(), p.end(), std::size_t{0});
    return p;
}

DerivedSpec reorder(const DerivedSpec& spec, const std::vector<std::size_t>& perm) {
    DerivedSpec out = spec;
    for (std::size_t j = 0; j < perm.size(); ++j) {
        out.classes[j] = spec.classes[perm[j]];
        out.input.classes[j] = spec.input.classes[perm[j]];
    }
    out.ordered = ordered_condition(out.input.classes);
    return out;
}

}  // namespace

int dimension_bound(const DerivedSpec& spec) {
    return spec.dimension_ceiling();
}

int sstar(const DerivedSpec& spec) {
    int cumulative = 0;
    for (std::size_t j = 0; j < spec.s(); ++j) {
        cumulative += spec.classes[j].k_bound;
        if (cumulative >= spec.k) return static_cast<int>(j) + 1;
    }
    throw Error(ErrorCode::DimensionInfeasible, "dimension infeasible: k = " + std::to_string(spec.k) +
                                                    " > sum k_j = " + std::to_string(cumulative));
}

BoundReport distance_bound_udlrc(const DerivedSpec& spec) {
    BoundReport report;
    report.name = "distance";
    report.pivot = sstar(spec);
    report.permutation = identity(spec.s());
    const auto pivot = static_cast<std::size_t>(report.pivot - 1);
    int value = spec.n - spec.k + 1;
    int prefix_k = 0;
    for (std::size_t j = 0; j < pivot; ++j) {
        const int term = spec.classes[j].n - spec.classes[j].k_bound;
        report.terms.push_back(term);
        value -= term;
        prefix_k += spec.classes[j].k_bound;
    }
    const ClassParams& c = spec.classes[pivot];
    const int last = (ceil_div(spec.k - prefix_k, c.r) - 1) * (c.delta - 1);
    report.terms.push_back(last);
    report.value = value - last;
    return report;
}

BoundReport distance_bound_sigma(const DerivedSpec& spec, std::span<const int> granks) {
    if (granks.size() != spec.s()) {
        throw Error(ErrorCode::LengthMismatch, "need one G-rank per class");
    }
    BoundReport report;
    report.name = "distance_measured";
    report.permutation = identity(spec.s());
    int cumulative = 0;
    for (std::size_t j = 0; j < granks.size(); ++j) {
        cumulative += granks[j];
        if (cumulative >= spec.k) {
            report.pivot = static_cast<int>(j) + 1;
            break;
        }
    }
    if (report.pivot == 0) {
        throw Error(ErrorCode::RankInfeasible, "sum of G-ranks " + std::to_string(cumulative) + " < k = " +
                                                   std::to_string(spec.k));
    }
    const auto pivot = static_cast<std::size_t>(report.pivot - 1);
    int value = spec.n - spec.k + 1;
    int prefix = 0;
    for (std::size_t j = 0; j < pivot; ++j) {
        const int term = spec.classes[j].n - granks[j];
        report.terms.push_back(term);
        value -= term;
        prefix += granks[j];
    }
    const ClassParams& c = spec.classes[pivot];
    const int last = (ceil_div(spec.k - prefix, c.r) - 1) * (c.delta - 1);
    report.terms.push_back(last);
    report.value = value - last;
    return report;
}

int distance_bound_rdelta(int n, int k, int r, int delta) {
    if (k < 1 || r < 1 || delta < 2) {
        throw Error(ErrorCode::PreconditionViolated, "need k >= 1, r >= 1, delta >= 2");
    }
    return n - k + 1 - (ceil_div(k, r) - 1) * (delta - 1);
}

BoundReport distance_bound_disjoint_r(const DerivedSpec& spec) {
    for (std::size_t j = 0; j < spec.s(); ++j) {
        if (spec.classes[j].delta != 2) {
            throw Error(ErrorCode::PreconditionViolated, "class " + std::to_string(j + 1) + " has delta != 2");
        }
        if (j > 0 && spec.classes[j - 1].r > spec.classes[j].r) {
            throw Error(ErrorCode::PreconditionViolated, "r_j must be nondecreasing");
        }
    }
    // contribution of class j: ceil(n_j / (r_j + 1)) groups of r_j symbols
    std::vector<int> groups;
    for (const auto& c : spec.classes) groups.push_back(ceil_div(c.n, c.r + 1));

    int best = -1;  // largest feasible j in [0, s-1]
    int cumulative = 0;
    for (std::size_t j = 0; j < spec.s(); ++j) {
        if (cumulative < spec.k - 1) best = static_cast<int>(j);
        cumulative += groups[j] * spec.classes[j].r;
    }
    BoundReport report;
    report.name = "distance_disjoint_r";
    report.pivot = best + 1;
    if (report.pivot < 1) report.pivot = 1;
    report.permutation = identity(spec.s());
    const auto pivot = static_cast<std::size_t>(report.pivot - 1);
    int value = spec.n - spec.k + 2;
    int prefix = 0;
    for (std::size_t j = 0; j < pivot; ++j) {
        report.terms.push_back(groups[j]);
        value -= groups[j];
        prefix += groups[j] * spec.classes[j].r;
    }
    const int last = ceil_div(spec.k - prefix, spec.classes[pivot].r);
    report.terms.push_back(last);
    report.value = value - last;
    return report;
}

BoundReport permuted_tightest_bound(const DerivedSpec& spec) {
    if (spec.s() > 8) throw Error(ErrorCode::TooManyClasses, std::to_string(spec.s()) + " classes (limit 8)");
    std::vector<std::size_t> perm = identity(spec.s());
    BoundReport best;
    bool have = false;
    do {
        BoundReport candidate = distance_bound_udlrc(reorder(spec, perm));
        if (!have || candidate.value < best.value) {
            best = std::move(candidate);
            best.permutation = perm;
            have = true;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    best.name = "distance_permuted";
    return best;
}

}  // namespace udlrc
