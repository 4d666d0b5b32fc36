#include "udlrc/code.hpp"

#include <algorithm>
#include <cassert>
#include <string>
#include <utility>

namespace udlrc {

namespace {

void check_indices(std::span<const std::size_t> set, std::size_t n) {
    for (std::size_t i : set) {
        if (i >= n) throw Error(ErrorCode::IndexOutOfRange, "symbol " + std::to_string(i) + " >= n = " + std::to_string(n));
    }
}

/// Incrementally maintained echelon basis of a subspace of F_q^t.
class BaseSpan {
public:
    explicit BaseSpan(const ExtField& field) : field_(field) {}

    /// Adds x; returns true when it was outside the current span.
    bool insert(const ExtElem& x) {
        const PrimeField& fq = field_.base();
        ExtElem v = x;
        for (std::size_t b = 0; b < basis_.size(); ++b) {
            const BaseElem c{v[pivots_[b]]};
            if (c.value != 0) v = field_.sub(v, field_.scale(c, basis_[b]));
        }
        std::size_t pivot = 0;
        while (pivot < field_.degree() && v[pivot] == 0) ++pivot;
        if (pivot == field_.degree()) return false;
        v = field_.scale(fq.inv({v[pivot]}), v);
        // keep the basis fully reduced so the reduction above stays one pass
        for (auto& row : basis_) {
            const BaseElem c{row[pivot]};
            if (c.value != 0) row = field_.sub(row, field_.scale(c, v));
        }
        basis_.push_back(v);
        pivots_.push_back(pivot);
        return true;
    }

    [[nodiscard]] std::size_t rank() const noexcept { return basis_.size(); }

private:
    const ExtField& field_;
    std::vector<ExtElem> basis_;
    std::vector<std::size_t> pivots_;
};

}  // namespace

IndexSet complement(std::span<const std::size_t> set, std::size_t n) {
    std::vector<bool> in(n, false);
    for (std::size_t i : set) {
        if (i < n) in[i] = true;
    }
    IndexSet out;
    for (std::size_t i = 0; i < n; ++i) {
        if (!in[i]) out.push_back(i);
    }
    return out;
}

ErasurePattern ErasurePattern::from_erased(std::size_t n, IndexSet erased) {
    std::ranges::sort(erased);
    erased.erase(std::unique(erased.begin(), erased.end()), erased.end());
    check_indices(erased, n);
    ErasurePattern p;
    p.remaining = complement(erased, n);
    p.erased = std::move(erased);
    return p;
}

ErasurePattern ErasurePattern::from_remaining(std::size_t n, IndexSet remaining) {
    std::ranges::sort(remaining);
    remaining.erase(std::unique(remaining.begin(), remaining.end()), remaining.end());
    check_indices(remaining, n);
    ErasurePattern p;
    p.erased = complement(remaining, n);
    p.remaining = std::move(remaining);
    return p;
}

Matrix<BaseElem> mds_local_generator(int r, int delta, const PrimeField& field) {
    if (r < 1 || delta < 2) throw Error(ErrorCode::SpecInvalid, "local code needs r >= 1 and delta >= 2");
    const int len = r + delta - 1;
    if (static_cast<int>(field.order()) < len) {
        throw Error(ErrorCode::FieldTooSmall,
                    "q = " + std::to_string(field.order()) + " < r + delta - 1 = " + std::to_string(len));
    }
    Matrix<BaseElem> g(static_cast<std::size_t>(r), static_cast<std::size_t>(len), field.zero());
    for (int i = 0; i < r; ++i) {
        for (int c = 0; c < len; ++c) {
            BaseElem value = field.one();
            for (int j = 0; j < r; ++j) {
                if (j == i) continue;
                value = field.mul(value, field.div(field.elem(c - j), field.elem(i - j)));
            }
            g(static_cast<std::size_t>(i), static_cast<std::size_t>(c)) = value;
        }
    }
    return g;
}

CodeInstance::CodeInstance(DerivedSpec spec, ExtField field, EvaluationPoints gab_points)
    : spec_(std::move(spec)), field_(std::move(field)), gab_points_(std::move(gab_points)) {}

IndexSet CodeInstance::class_symbols(std::size_t j) const {
    if (j >= spec_.s()) throw Error(ErrorCode::IndexOutOfRange, "class " + std::to_string(j));
    IndexSet out;
    for (std::size_t g = 0; g < layout_.groups.size(); ++g) {
        if (layout_.class_of[g] == j) out.insert(out.end(), layout_.groups[g].begin(), layout_.groups[g].end());
    }
    return out;
}

CodeInstance build_code(const LocalitySpec& input) {
    DerivedSpec spec = validate_spec(input);
    const PrimeField fq(static_cast<std::uint32_t>(spec.input.q));
    ExtField field(fq, static_cast<std::size_t>(spec.input.t));
    EvaluationPoints gab = default_points(field, static_cast<std::size_t>(spec.n_gab));
    const auto n = static_cast<std::size_t>(spec.n);
    const auto k = static_cast<std::size_t>(spec.k);

    CodeInstance code(std::move(spec), std::move(field), std::move(gab));
    const DerivedSpec& sp = code.spec_;
    const ExtField& f = code.field_;

    LocalGroupLayout& layout = code.layout_;
    layout.n = n;
    layout.ordered = sp.ordered;
    layout.group_of.assign(n, 0);
    std::size_t symbol = 0;
    std::size_t gab_index = 0;
    for (std::size_t j = 0; j < sp.s(); ++j) {
        const ClassParams& c = sp.classes[j];
        code.local_gens_.push_back(mds_local_generator(c.r, c.delta, fq));
        for (int m = 0; m < c.groups(); ++m) {
            IndexSet group;
            for (int i = 0; i < c.group_length(); ++i) {
                layout.group_of[symbol] = layout.groups.size();
                group.push_back(symbol++);
            }
            layout.groups.push_back(std::move(group));
            layout.class_of.push_back(j);
            layout.r_of.push_back(c.r);
            layout.delta_of.push_back(c.delta);
            code.gab_offset_.push_back(gab_index);
            gab_index += static_cast<std::size_t>(c.r);
        }
    }

    // y_i = sum_l g_{l,i} x_l over the group's Gabidulin points.
    code.point_of_.assign(n, f.zero());
    const Matrix<ExtElem> moore = moore_matrix(f, code.gab_points_.points(), k);
    code.gen_ = Matrix<ExtElem>(k, n, f.zero());
    for (std::size_t g = 0; g < layout.groups.size(); ++g) {
        const Matrix<BaseElem>& local = code.local_generator(g);
        const std::size_t offset = code.gab_offset_[g];
        for (std::size_t c = 0; c < layout.groups[g].size(); ++c) {
            const std::size_t sym = layout.groups[g][c];
            for (std::size_t l = 0; l < local.rows(); ++l) {
                const BaseElem coeff = local(l, c);
                if (fq.is_zero(coeff)) continue;
                code.point_of_[sym] = f.add(code.point_of_[sym], f.scale(coeff, code.gab_points_[offset + l]));
                for (std::size_t i = 0; i < k; ++i) {
                    code.gen_(i, sym) = f.add(code.gen_(i, sym), f.scale(coeff, moore(i, offset + l)));
                }
            }
        }
    }
    return code;
}

std::vector<ExtElem> encode(const CodeInstance& code, std::span<const ExtElem> message) {
    if (message.size() != code.k()) {
        throw Error(ErrorCode::LengthMismatch, "message has " + std::to_string(message.size()) +
                                                   " symbols, expected k = " + std::to_string(code.k()));
    }
    const ExtField& f = code.field();
    const Matrix<ExtElem>& gen = code.generator();
    std::vector<ExtElem> out(code.n(), f.zero());
    for (std::size_t i = 0; i < gen.rows(); ++i) {
        if (f.is_zero(message[i])) continue;
        for (std::size_t c = 0; c < gen.cols(); ++c) out[c] = f.add(out[c], f.mul(message[i], gen(i, c)));
    }
    return out;
}

std::vector<ExtElem> encode_pipeline(const CodeInstance& code, std::span<const ExtElem> message) {
    if (message.size() != code.k()) {
        throw Error(ErrorCode::LengthMismatch, "message has " + std::to_string(message.size()) +
                                                   " symbols, expected k = " + std::to_string(code.k()));
    }
    const ExtField& f = code.field();
    const std::vector<ExtElem> gab = gabidulin_encode(f, message, code.gab_points());
    const LocalGroupLayout& layout = code.layout();
    std::vector<ExtElem> out(code.n(), f.zero());
    for (std::size_t g = 0; g < layout.groups.size(); ++g) {
        const Matrix<BaseElem>& local = code.local_generator(g);
        const std::size_t offset = code.gab_offset(g);
        for (std::size_t c = 0; c < layout.groups[g].size(); ++c) {
            ExtElem v = f.zero();
            for (std::size_t l = 0; l < local.rows(); ++l) v = f.add(v, f.scale(local(l, c), gab[offset + l]));
            out[layout.groups[g][c]] = v;
        }
    }
    return out;
}

std::size_t erank(const CodeInstance& code, std::span<const std::size_t> symbols) {
    check_indices(symbols, code.n());
    const LocalGroupLayout& layout = code.layout();
    std::vector<std::vector<ExtElem>> per_group(layout.groups.size());
    for (std::size_t i : symbols) per_group[layout.group_of[i]].push_back(code.points()[i]);
    std::size_t total = 0;
    for (const auto& pts : per_group) total += rank_over_base(code.field(), pts);
#ifndef NDEBUG
    std::vector<ExtElem> pooled;
    for (std::size_t i : symbols) pooled.push_back(code.points()[i]);
    assert(total == rank_over_base(code.field(), pooled) && "group subspaces must form a direct sum");
#endif
    return total;
}

DecodeResult decode_erasures(const CodeInstance& code, std::span<const ExtElem> received,
                             const ErasurePattern& pattern) {
    const std::size_t n = code.n();
    if (received.size() != n) {
        throw Error(ErrorCode::LengthMismatch, "received word has " + std::to_string(received.size()) +
                                                   " symbols, expected n = " + std::to_string(n));
    }
    if (pattern.erased.size() + pattern.remaining.size() != n) {
        throw Error(ErrorCode::LengthMismatch, "erasure pattern does not partition [n]");
    }
    check_indices(pattern.erased, n);
    const ExtField& f = code.field();
    const PrimeField& fq = f.base();
    const LocalGroupLayout& layout = code.layout();

    DecodeResult result;
    std::vector<ExtElem> word(received.begin(), received.end());
    std::vector<bool> known(n, true);
    for (std::size_t i : pattern.erased) {
        known[i] = false;
        word[i] = f.zero();
    }

    // Phase 1: local MDS repair.
    for (std::size_t g = 0; g < layout.groups.size(); ++g) {
        const IndexSet& group = layout.groups[g];
        std::vector<std::size_t> present;  // positions inside the group
        for (std::size_t c = 0; c < group.size(); ++c) {
            if (known[group[c]]) present.push_back(c);
        }
        const std::size_t missing = group.size() - present.size();
        const auto r = static_cast<std::size_t>(layout.r_of[g]);
        if (missing == 0 || missing > static_cast<std::size_t>(layout.delta_of[g] - 1)) continue;
        const Matrix<BaseElem>& local = code.local_generator(g);
        present.resize(r);
        // v_S = u * local|_S  =>  u = v_S * (local|_S)^{-1}
        const Matrix<BaseElem> sub_inv = inverse(fq, local.columns(present));
        std::vector<ExtElem> u(r, f.zero());
        for (std::size_t l = 0; l < r; ++l) {
            for (std::size_t s = 0; s < r; ++s) {
                u[l] = f.add(u[l], f.scale(sub_inv(s, l), word[group[present[s]]]));
            }
        }
        for (std::size_t c = 0; c < group.size(); ++c) {
            if (known[group[c]]) continue;
            ExtElem v = f.zero();
            for (std::size_t l = 0; l < r; ++l) v = f.add(v, f.scale(local(l, c), u[l]));
            word[group[c]] = v;
            known[group[c]] = true;
            ++result.locally_repaired;
        }
    }

    // Phase 2: pick F_q-independent points in index order, interpolate f.
    BaseSpan independent(f);
    std::vector<Evaluation> evals;
    for (std::size_t i = 0; i < n; ++i) {
        if (!known[i]) continue;
        if (independent.insert(code.points()[i])) {
            if (evals.size() < code.k()) evals.push_back({code.points()[i], word[i]});
        }
    }
    result.remaining_rank = independent.rank();
    if (evals.size() < code.k()) throw UndecodableError(result.remaining_rank, code.k());
    result.message = interpolate(f, evals).coeffs;

    const std::vector<ExtElem> reencoded = encode(code, result.message);
    for (std::size_t i = 0; i < n; ++i) {
        if (!known[i]) ++result.globally_repaired;
    }
    result.codeword = reencoded;
    return result;
}

}  // namespace udlrc
