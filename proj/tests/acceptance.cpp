// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "instances.hpp"
#include "udlrc/analysis.hpp"
#include "udlrc/bounds.hpp"
#include "udlrc/code.hpp"

using namespace udlrc;
using testing::grp;

namespace {

struct Verdict {
    bool ok = true;
    std::string detail;

    void fail(const std::string& why) {
        if (ok) detail = why;
        ok = false;
    }
};

Verdict tightness_reference() {
    Verdict v;
    const DerivedSpec spec = validate_spec(testing::reference(4));
    const int bound = distance_bound_udlrc(spec).value;
    const CodeInstance code = build_code(testing::reference(4));
    const auto d = min_distance_oracle(code.field(), code.generator()).d;
    v.detail = "bound=" + std::to_string(bound) + " oracle=" + std::to_string(d);
    if (bound != 3) v.fail("bound " + std::to_string(bound) + " != 3");
    if (d != 3) v.fail("oracle " + std::to_string(d) + " != 3");
    return v;
}

Verdict dimension_tightness() {
    Verdict v;
    const CodeInstance code = build_code(testing::reference(5));
    const auto g = grank(code.field(), code.generator(), testing::all_symbols(code.n()));
    const int sum = dimension_bound(code.spec());
    v.detail = "grank=" + std::to_string(g) + " sum_kj=" + std::to_string(sum);
    if (g != 5 || sum != 5) v.fail(v.detail);
    return v;
}

Verdict group_ranks() {
    Verdict v;
    std::size_t subsets = 0;
    for (const auto& inst : testing::instances()) {
        const CodeInstance code = build_code(inst.spec);
        const auto& layout = code.layout();
        for (std::size_t g = 0; g < layout.groups.size(); ++g) {
            const IndexSet& group = layout.groups[g];
            for (std::uint32_t mask = 0; mask < (1u << group.size()); ++mask) {
                IndexSet sub;
                for (std::size_t b = 0; b < group.size(); ++b) {
                    if (mask >> b & 1u) sub.push_back(group[b]);
                }
                ++subsets;
                const std::size_t want = std::min<std::size_t>(sub.size(), layout.r_of[g]);
                if (erank(code, sub) != want) v.fail(inst.name + " group " + std::to_string(g + 1));
            }
        }
    }
    if (v.ok) v.detail = std::to_string(subsets) + " subsets";
    return v;
}

Verdict worst_case() {
    Verdict v;
    const CodeInstance code = build_code(testing::reference(4));
    const auto& layout = code.layout();
    const std::size_t n = code.n();
    std::vector<std::size_t> worst(n + 1);
    for (std::size_t e = 0; e <= n; ++e) worst[e] = erank(code, worst_case_pattern(layout, e).remaining);
    std::size_t sequences = 0;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        const IndexSet r = testing::from_mask(mask, n);
        const std::size_t rank = erank(code, r);
        if (rank < worst[n - r.size()]) v.fail("pattern mask " + std::to_string(mask) + " below worst case");
        std::size_t prev = rank;
        for (const auto& step : transform_pattern(layout, r)) {
            const std::size_t cur = erank(code, step);
            if (cur > prev) v.fail("rank increased while transforming mask " + std::to_string(mask));
            prev = cur;
        }
        if (prev != worst[n - r.size()]) v.fail("mask " + std::to_string(mask) + " ends above the worst case");
        ++sequences;
    }
    if (v.ok) v.detail = std::to_string(sequences) + " remaining sets";
    return v;
}

Verdict decoding() {
    Verdict v;
    const CodeInstance code = build_code(testing::reference(4));
    const std::size_t n = code.n();
    std::mt19937_64 rng(2024);
    std::size_t decoded = 0;
    std::vector<ErasurePattern> small;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        const IndexSet e = testing::from_mask(mask, n);
        if (e.size() <= 2) small.push_back(ErasurePattern::from_erased(n, e));
    }
    for (int trial = 0; trial < 100; ++trial) {
        const auto msg = testing::random_word(code.field(), code.k(), rng);
        const auto cw = encode(code, msg);
        for (const auto& p : small) {
            auto received = cw;
            for (auto i : p.erased) received[i] = code.field().zero();
            try {
                if (decode_erasures(code, received, p).message != msg) v.fail("wrong message");
                ++decoded;
            } catch (const Error& e) {
                v.fail(std::string("decode threw: ") + e.what());
            }
        }
    }
    bool found = false;
    std::size_t failing_rank = 0;
    const auto cw = encode(code, testing::random_word(code.field(), code.k(), rng));
    for (std::uint32_t mask = 0; mask < (1u << n) && !found; ++mask) {
        const IndexSet e = testing::from_mask(mask, n);
        if (e.size() != 3) continue;
        try {
            (void)decode_erasures(code, cw, ErasurePattern::from_erased(n, e));
        } catch (const UndecodableError& err) {
            found = err.remaining_rank() < code.k();
            failing_rank = err.remaining_rank();
        }
    }
    if (!found) v.fail("no 3-erasure pattern failed");
    if (v.ok) {
        v.detail = std::to_string(decoded) + " decodes; 3-erasure failure with rank " + std::to_string(failing_rank);
    }
    return v;
}

Verdict chains() {
    Verdict v;
    std::size_t traces = 0;
    for (const auto& inst : testing::instances()) {
        const CodeInstance code = build_code(inst.spec);
        for (std::size_t j = 0; j < code.spec().s(); ++j) {
            const auto& c = code.spec().classes[j];
            const ChainVerdict r = verify_chain(repair_chain(code, j), c.r, c.delta);
            ++traces;
            if (!r.ok) v.fail(inst.name + " class " + std::to_string(j + 1) + " claim " + std::to_string(r.violated_claim));
        }
    }
    if (v.ok) v.detail = std::to_string(traces) + " traces";
    return v;
}

Verdict witnesses() {
    Verdict v;
    for (const auto& inst : testing::instances()) {
        const CodeInstance code = build_code(inst.spec);
        const DeficientWitness w = deficient_witness_set(code);
        const int d = static_cast<int>(min_distance_oracle(code.field(), code.generator()).d);
        const int n = static_cast<int>(code.n()), k = static_cast<int>(code.k());
        const int size = static_cast<int>(w.set.size()), rank = static_cast<int>(w.grank);
        if (rank > k - 1) v.fail(inst.name + ": grank(T) >= k");
        if (n - size < d) v.fail(inst.name + ": n - |T| < d");
        if (d > n - k + 1 - (size - rank)) v.fail(inst.name + ": redundancy inequality");
    }
    if (v.ok) v.detail = std::to_string(testing::instances().size()) + " instances";
    return v;
}

// Every single-class spec in the grid, then 50 of them spread evenly across it.
Verdict reduction_sweep() {
    Verdict v;
    std::vector<LocalitySpec> grid;
    for (int q : {5, 7}) {
        for (int r = 1; r <= 4; ++r) {
            for (int delta = 2; delta <= 4; ++delta) {
                if (q < r + delta - 1) continue;
                for (int m = 1; m <= 3; ++m) {
                    for (int k = 1; k <= m * r; ++k) grid.push_back({{grp(r, delta, m)}, k, q, 0});
                }
            }
        }
    }
    const std::size_t samples = 50;
    std::size_t oracle_runs = 0;
    for (std::size_t i = 0; i < samples; ++i) {
        const LocalitySpec& s = grid[i * grid.size() / samples];
        const DerivedSpec d = validate_spec(s);
        const auto& c = d.classes[0];
        const int bound = distance_bound_udlrc(d).value;
        if (bound != distance_bound_rdelta(d.n, d.k, c.r, c.delta)) v.fail("bound mismatch at sample " + std::to_string(i));
        if (d.n <= 16) {
            const CodeInstance code = build_code(s);
            const auto od = min_distance_oracle(code.field(), code.generator(), 16).d;
            ++oracle_runs;
            if (static_cast<int>(od) != bound) {
                v.fail("oracle " + std::to_string(od) + " != bound " + std::to_string(bound) + " for " +
                       "q=" + std::to_string(s.q) + " r=" + std::to_string(c.r) + " delta=" + std::to_string(c.delta) +
                       " n=" + std::to_string(d.n) + " k=" + std::to_string(d.k));
            }
        }
    }
    if (v.ok) {
        v.detail = std::to_string(samples) + " of " + std::to_string(grid.size()) + " specs, " +
                   std::to_string(oracle_runs) + " oracle runs";
    }
    return v;
}

std::string comparison_report() {
    std::ostringstream out;
    for (int r1 = 1; r1 <= 3; ++r1) {
        for (int r2 = r1; r2 <= 3; ++r2) {
            for (int m1 = 1; m1 <= 2; ++m1) {
                for (int m2 = 1; m2 <= 2; ++m2) {
                    LocalitySpec s{{grp(r1, 2, m1), grp(r2, 2, m2)}, 1, 5, 0};
                    const int ceiling = derive_params(s).dimension_ceiling();
                    for (int k = 1; k <= ceiling; ++k) {
                        s.k = k;
                        const DerivedSpec d = derive_params(s);
                        const int a = distance_bound_udlrc(d).value;
                        const int b = distance_bound_disjoint_r(d).value;
                        out << r1 << ',' << m1 << ';' << r2 << ',' << m2 << ";k=" << k << ' ' << a << ' ' << b << ' '
                            << (a < b ? "tighter" : a == b ? "equal" : "looser") << '\n';
                    }
                }
            }
        }
    }
    return out.str();
}

Verdict disjoint_r_comparison() {
    Verdict v;
    const std::string first = comparison_report();
    const std::string second = comparison_report();
    if (first != second) v.fail("report not deterministic");
    std::size_t rows = 0, tighter = 0, equal = 0, looser = 0;
    std::istringstream in(first);
    for (std::string line; std::getline(in, line);) {
        ++rows;
        if (line.ends_with("tighter")) ++tighter;
        else if (line.ends_with("equal")) ++equal;
        else ++looser;
    }
    if (rows == 0) v.fail("empty report");
    if (v.ok) {
        v.detail = std::to_string(rows) + " specs: " + std::to_string(tighter) + " tighter, " + std::to_string(equal) +
                   " equal, " + std::to_string(looser) + " looser";
    }
    return v;
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        double limit_s;
        std::function<Verdict()> run;
    };
    const std::vector<Criterion> criteria{
        {"1 distance bound tight on reference instance", 10, tightness_reference},
        {"2 dimension bound tight at k = n_Gab", 0, dimension_tightness},
        {"3 local group ranks", 5, group_ranks},
        {"4 worst-case erasure patterns", 30, worst_case},
        {"5 decoding completeness", 60, decoding},
        {"6 nested repair-set chains", 0, chains},
        {"7 rank-deficient witness sets", 0, witnesses},
        {"8 single-class reduction sweep", 300, reduction_sweep},
        {"9 disjoint-r bound comparison", 0, disjoint_r_comparison},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Verdict v;
        try {
            v = c.run();
        } catch (const std::exception& e) {
            v.fail(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.limit_s > 0 && secs > c.limit_s) v.fail("took " + std::to_string(secs) + " s");
        failures += !v.ok;
        std::printf("%s  criterion %s (%.2f s): %s\n", v.ok ? "PASS" : "FAIL", c.name, secs, v.detail.c_str());
    }
    return failures == 0 ? 0 : 1;
}
