#include "udlrc/analysis.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "udlrc/bounds.hpp"

namespace udlrc {

namespace {

IndexSet set_union(const IndexSet& a, const IndexSet& b) {
    IndexSet out;
    std::ranges::set_union(a, b, std::back_inserter(out));
    return out;
}

}  // namespace

std::size_t binomial(std::size_t n, std::size_t k) noexcept {
    if (k > n) return 0;
    k = std::min(k, n - k);
    std::size_t result = 1;
    for (std::size_t i = 1; i <= k; ++i) {
        const std::size_t num = n - k + i;
        if (result > std::numeric_limits<std::size_t>::max() / num) return std::numeric_limits<std::size_t>::max();
        result = result * num / i;
    }
    return result;
}

std::size_t grank(const ExtField& field, const Matrix<ExtElem>& gen, std::span<const std::size_t> symbols) {
    if (symbols.empty()) return 0;
    return matrix_rank(field, gen.columns(symbols));
}

bool decodable(const ExtField& field, const Matrix<ExtElem>& gen, std::span<const std::size_t> symbols) {
    return grank(field, gen, symbols) == gen.rows();
}

DistanceCertificate min_distance_oracle(const ExtField& field, const Matrix<ExtElem>& gen, std::size_t max_length) {
    const std::size_t n = gen.cols();
    const std::size_t k = gen.rows();
    if (n > max_length) {
        throw Error(ErrorCode::TooLarge, "n = " + std::to_string(n) + " exceeds the oracle budget " +
                                             std::to_string(max_length));
    }
    IndexSet all(n);
    for (std::size_t i = 0; i < n; ++i) all[i] = i;
    if (k == 0 || grank(field, gen, all) < k) {
        throw Error(ErrorCode::RankDeficientGenerator, "generator rank below its row count " + std::to_string(k));
    }
    DistanceCertificate cert;
    for (std::size_t size = n; size-- > 0;) {
        const bool exhausted = for_each_subset(all, size, [&](const IndexSet& subset) {
            const std::size_t rank = grank(field, gen, subset);
            if (rank + 1 > k) return true;
            cert.d = n - size;
            cert.witness = subset;
            cert.witness_rank = rank;
            return false;
        });
        if (!exhausted) return cert;
    }
    // Unreachable: the empty set always has rank 0 <= k - 1.
    throw Error(ErrorCode::RankDeficientGenerator, "no rank-deficient subset found");
}

std::optional<std::size_t> punctured_distance(const ExtField& field, const Matrix<ExtElem>& gen,
                                              std::span<const std::size_t> support) {
    const std::size_t dim = grank(field, gen, support);
    if (dim == 0) return std::nullopt;
    const IndexSet universe(support.begin(), support.end());
    for (std::size_t size = universe.size(); size-- > 0;) {
        const bool exhausted = for_each_subset(universe, size, [&](const IndexSet& subset) {
            return grank(field, gen, subset) >= dim;
        });
        if (!exhausted) return universe.size() - size;
    }
    return std::nullopt;
}

std::optional<IndexSet> locality_witness_search(const ExtField& field, const Matrix<ExtElem>& gen, std::size_t i,
                                                std::span<const std::size_t> class_symbols, int r, int delta) {
    if (class_symbols.size() > 16) {
        throw Error(ErrorCode::TooLarge, "class of " + std::to_string(class_symbols.size()) + " symbols (limit 16)");
    }
    if (std::ranges::find(class_symbols, i) == class_symbols.end()) {
        throw Error(ErrorCode::IndexOutOfRange, "symbol " + std::to_string(i) + " is not in the class");
    }
    IndexSet others;
    for (std::size_t s : class_symbols) {
        if (s != i) others.push_back(s);
    }
    std::ranges::sort(others);
    const auto max_size = std::min<std::size_t>(static_cast<std::size_t>(r + delta - 1), class_symbols.size());
    std::optional<IndexSet> found;
    for (std::size_t size = 1; size <= max_size && !found; ++size) {
        for_each_subset(others, size - 1, [&](const IndexSet& rest) {
            IndexSet candidate = rest;
            candidate.insert(std::ranges::upper_bound(candidate, i), i);
            const auto d = punctured_distance(field, gen, candidate);
            if (d && *d >= static_cast<std::size_t>(delta)) {
                found = std::move(candidate);
                return false;
            }
            return true;
        });
    }
    return found;
}

RepairChain repair_chain(const CodeInstance& code, std::size_t class_index) {
    const ExtField& f = code.field();
    const Matrix<ExtElem>& gen = code.generator();
    const LocalGroupLayout& layout = code.layout();
    const IndexSet members = code.class_symbols(class_index);

    RepairChain trace;
    trace.class_index = class_index;
    trace.class_rank = grank(f, gen, members);
    trace.sets.emplace_back();
    trace.ranks.push_back(0);
    while (trace.ranks.back() < trace.class_rank) {
        const IndexSet& current = trace.sets.back();
        std::optional<std::size_t> pick;
        for (std::size_t i : members) {
            if (std::ranges::binary_search(current, i)) continue;
            IndexSet grown = current;
            grown.insert(std::ranges::upper_bound(grown, i), i);
            if (grank(f, gen, grown) > trace.ranks.back()) {
                pick = i;
                break;
            }
        }
        if (!pick) throw Error(ErrorCode::PreconditionViolated, "no rank-increasing symbol left in the class");
        IndexSet next = set_union(current, layout.groups[layout.group_of[*pick]]);
        trace.picked.push_back(*pick);
        trace.ranks.push_back(grank(f, gen, next));
        trace.sets.push_back(std::move(next));
    }
    return trace;
}

ChainVerdict verify_chain(const RepairChain& trace, int r, int delta) {
    for (std::size_t l = 1; l < trace.sets.size(); ++l) {
        const auto rank_step = static_cast<long>(trace.ranks[l]) - static_cast<long>(trace.ranks[l - 1]);
        const auto size_step = static_cast<long>(trace.sets[l].size()) - static_cast<long>(trace.sets[l - 1].size());
        if (rank_step > r) return {false, 1, l};
        if (size_step < rank_step + delta - 1) return {false, 2, l};
    }
    const auto needed = static_cast<std::size_t>(ceil_div(static_cast<int>(trace.class_rank), r));
    if (trace.steps() < needed) return {false, 3, trace.steps()};
    return {};
}

std::vector<ClassRankReport> class_rank_check(const CodeInstance& code) {
    std::vector<ClassRankReport> out;
    const DerivedSpec& spec = code.spec();
    for (std::size_t j = 0; j < spec.s(); ++j) {
        ClassRankReport rep;
        rep.class_index = j;
        rep.grank = grank(code.field(), code.generator(), code.class_symbols(j));
        rep.k_bound = spec.classes[j].k_bound;
        rep.within_bound = static_cast<int>(rep.grank) <= rep.k_bound;
        rep.equality_expected = spec.k == spec.n_gab;
        rep.equality_holds = static_cast<int>(rep.grank) == rep.k_bound;
        out.push_back(rep);
    }
    return out;
}

DeficientWitness deficient_witness_set(const CodeInstance& code) {
    const DerivedSpec& spec = code.spec();
    std::vector<IndexSet> members;
    std::vector<int> ranks;
    for (std::size_t j = 0; j < spec.s(); ++j) {
        members.push_back(code.class_symbols(j));
        ranks.push_back(static_cast<int>(grank(code.field(), code.generator(), members.back())));
    }
    DeficientWitness w;
    w.sigma = distance_bound_sigma(spec, ranks).pivot;
    const auto sigma = static_cast<std::size_t>(w.sigma - 1);
    int prefix_rank = 0;
    for (std::size_t j = 0; j < sigma; ++j) {
        w.set = set_union(w.set, members[j]);
        prefix_rank += ranks[j];
        w.gamma_lower += spec.classes[j].n - ranks[j];
    }
    const ClassParams& c = spec.classes[sigma];
    w.depth = static_cast<std::size_t>(ceil_div(spec.k - prefix_rank, c.r) - 1);
    const RepairChain trace = repair_chain(code, sigma);
    if (w.depth >= trace.sets.size()) {
        throw Error(ErrorCode::PreconditionViolated, "chain shorter than the required depth");
    }
    w.set = set_union(w.set, trace.sets[w.depth]);
    w.gamma_lower += static_cast<int>(w.depth) * (c.delta - 1);
    w.grank = grank(code.field(), code.generator(), w.set);
    w.rank_ok = w.grank + 1 <= code.k();
    w.gamma_ok = static_cast<int>(w.set.size()) - static_cast<int>(w.grank) >= w.gamma_lower;
    return w;
}

ErasurePattern worst_case_pattern(const LocalGroupLayout& layout, std::size_t erased_count) {
    if (erased_count > layout.n) {
        throw Error(ErrorCode::CountOutOfRange, std::to_string(erased_count) + " erasures for n = " +
                                                    std::to_string(layout.n));
    }
    std::size_t keep = layout.n - erased_count;
    IndexSet remaining;
    for (const auto& group : layout.groups) {
        for (std::size_t i : group) {
            if (keep == 0) break;
            remaining.push_back(i);
            --keep;
        }
    }
    return ErasurePattern::from_remaining(layout.n, std::move(remaining));
}

std::vector<IndexSet> transform_pattern(const LocalGroupLayout& layout, IndexSet remaining) {
    std::ranges::sort(remaining);
    std::vector<bool> present(layout.n, false);
    for (std::size_t i : remaining) {
        if (i >= layout.n) throw Error(ErrorCode::IndexOutOfRange, "symbol " + std::to_string(i));
        present[i] = true;
    }
    const auto count_present = [&](std::size_t g) {
        return static_cast<std::size_t>(
            std::ranges::count_if(layout.groups[g], [&](std::size_t i) { return present[i]; }));
    };

    std::vector<IndexSet> steps;
    for (;;) {
        std::optional<std::size_t> first_incomplete;
        std::optional<std::size_t> last_present;
        for (std::size_t g = 0; g < layout.groups.size(); ++g) {
            const std::size_t have = count_present(g);
            if (!first_incomplete && have < layout.groups[g].size()) first_incomplete = g;
            if (have > 0) last_present = g;
        }
        if (!first_incomplete || !last_present || *last_present <= *first_incomplete) break;
        const IndexSet& into = layout.groups[*first_incomplete];
        const IndexSet& from = layout.groups[*last_present];
        std::size_t moves = std::min(into.size() - count_present(*first_incomplete), count_present(*last_present));
        // lowest erased indices of the earlier group replace lowest present indices of the later one
        auto in_it = into.begin();
        auto out_it = from.begin();
        for (; moves > 0; --moves) {
            while (present[*in_it]) ++in_it;
            while (!present[*out_it]) ++out_it;
            present[*in_it] = true;
            present[*out_it] = false;
        }
        IndexSet snapshot;
        for (std::size_t i = 0; i < layout.n; ++i) {
            if (present[i]) snapshot.push_back(i);
        }
        steps.push_back(std::move(snapshot));
    }
    return steps;
}

TightnessReport certify_tightness(const CodeInstance& code, std::size_t exhaustive_limit) {
    const DerivedSpec& spec = code.spec();
    if (!spec.ordered) {
        throw Error(ErrorCode::OrderedConditionRequired, "r_j must be nondecreasing and delta_j nonincreasing");
    }
    TightnessReport rep;
    rep.sstar = sstar(spec);
    const auto pivot = static_cast<std::size_t>(rep.sstar - 1);
    int tau = spec.k;
    int prefix = 0;
    for (std::size_t j = 0; j < pivot; ++j) {
        const ClassParams& c = spec.classes[j];
        tau += c.groups() * (c.delta - 1);
        prefix += c.groups() * c.r;
    }
    const ClassParams& c = spec.classes[pivot];
    tau += (ceil_div(spec.k - prefix, c.r) - 1) * (c.delta - 1);
    rep.tau = static_cast<std::size_t>(tau);
    const std::size_t n = code.n();

    const ErasurePattern greedy = worst_case_pattern(code.layout(), n - rep.tau);
    rep.greedy_rank = erank(code, greedy.remaining);
    rep.greedy_ok = rep.greedy_rank >= code.k();

    if (binomial(n, rep.tau) <= exhaustive_limit) {
        rep.exhaustive_run = true;
        IndexSet all(n);
        for (std::size_t i = 0; i < n; ++i) all[i] = i;
        rep.exhaustive_ok = for_each_subset(all, rep.tau, [&](const IndexSet& subset) {
            ++rep.exhaustive_sets;
            return decodable(code.field(), code.generator(), subset);
        });
    }
    rep.lower_bound = n - rep.tau + 1;
    rep.upper_bound = distance_bound_udlrc(spec).value;
    rep.certified = rep.greedy_ok && (!rep.exhaustive_run || rep.exhaustive_ok) &&
                    static_cast<int>(rep.lower_bound) == rep.upper_bound;
    return rep;
}

}  // namespace udlrc
