#include <doctest.h>

#include <algorithm>
#include <random>

#include "instances.hpp"
#include "udlrc/analysis.hpp"
#include "udlrc/code.hpp"

using namespace udlrc;
using testing::grp;

namespace {

ErrorCode code_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an exception");
    return ErrorCode::ParseError;
}

// Minimum nonzero weight over every codeword of a small code over F_q.
std::size_t weight_oracle(const PrimeField& f, const Matrix<BaseElem>& g) {
    const std::uint32_t q = f.order();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < g.rows(); ++i) total *= q;
    std::size_t best = g.cols();
    for (std::uint64_t idx = 1; idx < total; ++idx) {
        std::vector<BaseElem> m(g.rows());
        std::uint64_t rest = idx;
        for (auto& x : m) {
            x = BaseElem{static_cast<std::uint32_t>(rest % q)};
            rest /= q;
        }
        std::size_t w = 0;
        for (std::size_t c = 0; c < g.cols(); ++c) {
            BaseElem acc = f.zero();
            for (std::size_t r = 0; r < g.rows(); ++r) acc = f.add(acc, f.mul(m[r], g(r, c)));
            w += !f.is_zero(acc);
        }
        best = std::min(best, w);
    }
    return best;
}

// Same over F_{q^t}; only used where (q^t)^k stays small.
std::size_t weight_oracle(const ExtField& f, const Matrix<ExtElem>& g) {
    const std::uint64_t size = [&] {
        std::uint64_t s = 1;
        for (std::size_t i = 0; i < f.degree(); ++i) s *= f.base().order();
        return s;
    }();
    std::vector<ExtElem> all;
    for (std::uint64_t v = 0; v < size; ++v) {
        ExtElem x(f.degree());
        std::uint64_t rest = v;
        for (std::size_t c = 0; c < f.degree(); ++c) {
            x.set(c, static_cast<std::uint32_t>(rest % f.base().order()));
            rest /= f.base().order();
        }
        all.push_back(x);
    }
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < g.rows(); ++i) total *= size;
    std::size_t best = g.cols();
    for (std::uint64_t idx = 1; idx < total; ++idx) {
        std::uint64_t rest = idx;
        std::vector<ExtElem> m;
        for (std::size_t r = 0; r < g.rows(); ++r) {
            m.push_back(all[rest % size]);
            rest /= size;
        }
        std::size_t w = 0;
        for (std::size_t c = 0; c < g.cols(); ++c) {
            ExtElem acc = f.zero();
            for (std::size_t r = 0; r < g.rows(); ++r) acc = f.add(acc, f.mul(m[r], g(r, c)));
            w += !f.is_zero(acc);
        }
        best = std::min(best, w);
    }
    return best;
}

Matrix<ExtElem> lift(const ExtField& f, const Matrix<BaseElem>& g) {
    Matrix<ExtElem> out(g.rows(), g.cols(), f.zero());
    for (std::size_t r = 0; r < g.rows(); ++r) {
        for (std::size_t c = 0; c < g.cols(); ++c) out(r, c) = f.embed(g(r, c));
    }
    return out;
}

}  // namespace

TEST_CASE("validate_spec on the reference instance") {
    const DerivedSpec d = validate_spec(testing::reference());
    CHECK(d.n == 8);
    CHECK(d.n_gab == 5);
    CHECK(d.ordered);
    CHECK(d.input.t == 5);
    CHECK(d.classes[0].k_bound == 2);
    CHECK(d.classes[1].k_bound == 3);
}

TEST_CASE("validate_spec rejections") {
    CHECK(code_of([] { (void)validate_spec({{grp(2, 3, 1)}, 3, 5, 4}); }) == ErrorCode::SpecInvalid);
    CHECK(code_of([] { (void)validate_spec({{{10, 2, 3}}, 2, 5, 8}); }) == ErrorCode::SpecInvalid);
    CHECK(code_of([] { (void)validate_spec({{grp(2, 1, 1)}, 1, 5, 4}); }) == ErrorCode::SpecInvalid);
    CHECK(code_of([] { (void)validate_spec({{grp(0, 2, 1)}, 1, 5, 4}); }) == ErrorCode::SpecInvalid);
    CHECK(code_of([] { (void)validate_spec({{grp(3, 3, 1)}, 2, 3, 4}); }) == ErrorCode::SpecInvalid);  // q < 5
    CHECK(code_of([] { (void)validate_spec({{grp(2, 3, 1)}, 1, 4, 4}); }) == ErrorCode::SpecInvalid);  // q not prime
    CHECK(code_of([] { (void)validate_spec({{grp(2, 3, 2)}, 1, 5, 3}); }) == ErrorCode::SpecInvalid);  // t < n_Gab
    CHECK(code_of([] { (void)validate_spec({{grp(2, 3, 1)}, 0, 5, 4}); }) == ErrorCode::SpecInvalid);
}

TEST_CASE("raw class parameters follow the dimension ceiling formula") {
    const ClassParams c = derive_class({10, 2, 3});
    CHECK(c.p == 2);
    CHECK(c.rem == 2);
    CHECK(c.k_bound == 4);
    // rem <= delta - 2 branch: n = 2*4 + 1 with delta = 3.
    const ClassParams e = derive_class({9, 2, 3});
    CHECK(e.p == 2);
    CHECK(e.rem == 1);
    CHECK(e.k_bound == 4);
    for (int r = 1; r <= 4; ++r) {
        for (int delta = 2; delta <= 4; ++delta) {
            for (int n = 1; n <= 30; ++n) {
                const ClassParams p = derive_class({n, r, delta});
                const int len = r + delta - 1;
                REQUIRE(p.p * len + p.rem == n);
                REQUIRE(p.rem <= len - 1);
                const int ceil_m = (n + len - 1) / len;
                const int expect = p.rem <= delta - 2 ? (n / len) * r : n - ceil_m * (delta - 1);
                REQUIRE(p.k_bound == expect);
            }
        }
    }
}

TEST_CASE("ordered condition") {
    CHECK(ordered_condition({grp(2, 3, 1), grp(3, 2, 1)}));
    CHECK_FALSE(ordered_condition({grp(3, 2, 1), grp(2, 3, 1)}));
    CHECK(ordered_condition({grp(2, 2, 1), grp(2, 2, 1)}));
    CHECK_FALSE(ordered_condition({grp(2, 2, 1), grp(3, 3, 1)}));
}

TEST_CASE("local MDS generators") {
    const PrimeField f5(5);
    const auto g = mds_local_generator(2, 3, f5);
    CHECK(g.rows() == 2);
    CHECK(g.cols() == 4);
    CHECK(weight_oracle(f5, g) == 3);
    for (std::uint32_t q : {2u, 3u, 5u, 7u}) {
        const PrimeField f(q);
        for (int r = 1; r <= 4; ++r) {
            for (int delta = 2; delta <= 5; ++delta) {
                if (static_cast<int>(q) < r + delta - 1) {
                    CHECK(code_of([&] { (void)mds_local_generator(r, delta, f); }) == ErrorCode::FieldTooSmall);
                    continue;
                }
                const auto m = mds_local_generator(r, delta, f);
                CAPTURE(q);
                CAPTURE(r);
                CAPTURE(delta);
                // Systematic prefix.
                for (int i = 0; i < r; ++i) {
                    for (int j = 0; j < r; ++j) REQUIRE(m(i, j) == (i == j ? f.one() : f.zero()));
                }
                REQUIRE(weight_oracle(f, m) == static_cast<std::size_t>(delta));
                if (delta == 2) {
                    // One parity column: all coefficients nonzero (a scaled parity check).
                    for (int i = 0; i < r; ++i) REQUIRE(!f.is_zero(m(i, r)));
                }
                if (r == 1) {
                    for (int j = 0; j < delta; ++j) REQUIRE(m(0, j) == f.one());
                }
            }
        }
    }
}

TEST_CASE("reference build") {
    const CodeInstance code = build_code(testing::reference());
    CHECK(code.n() == 8);
    CHECK(code.k() == 4);
    CHECK(code.generator().rows() == 4);
    CHECK(code.generator().cols() == 8);
    CHECK(grank(code.field(), code.generator(), testing::all_symbols(8)) == 4);
    CHECK(code.layout().groups == std::vector<IndexSet>{{0, 1, 2, 3}, {4, 5, 6, 7}});
    CHECK(code.class_symbols(1) == IndexSet{4, 5, 6, 7});
    const CodeInstance full = build_code(testing::reference(5));
    CHECK(grank(full.field(), full.generator(), testing::all_symbols(8)) == 5);
}

TEST_CASE("encode paths agree and symbols are evaluations at their points") {
    std::mt19937_64 rng(31);
    for (const auto& inst : testing::instances()) {
        CAPTURE(inst.name);
        const CodeInstance code = build_code(inst.spec);
        const auto& f = code.field();
        CHECK(encode(code, std::vector<ExtElem>(code.k(), f.zero())) == std::vector<ExtElem>(code.n(), f.zero()));
        for (int trial = 0; trial < 100; ++trial) {
            const auto msg = testing::random_word(f, code.k(), rng);
            const auto cw = encode(code, msg);
            REQUIRE(cw == encode_pipeline(code, msg));
            for (std::size_t i = 0; i < code.n(); ++i) {
                REQUIRE(cw[i] == lin_eval(f, LinearizedPoly{msg}, code.points()[i]));
            }
        }
        CHECK_THROWS_AS((void)encode(code, testing::random_word(f, code.k() + 1, rng)), Error);
    }
}

TEST_CASE("local groups: subset ranks, direct sum, and distance") {
    for (const auto& inst : testing::instances()) {
        CAPTURE(inst.name);
        const CodeInstance code = build_code(inst.spec);
        const auto& layout = code.layout();
        for (std::size_t g = 0; g < layout.groups.size(); ++g) {
            const IndexSet& group = layout.groups[g];
            const int r = layout.r_of[g];
            REQUIRE(static_cast<int>(group.size()) == r + layout.delta_of[g] - 1);
            // Points live in the span of the group's Gabidulin points.
            std::vector<ExtElem> gab;
            for (int l = 0; l < r; ++l) gab.push_back(code.gab_points()[code.gab_offset(g) + l]);
            for (std::size_t i : group) {
                auto with = gab;
                with.push_back(code.points()[i]);
                REQUIRE(rank_over_base(code.field(), with) == static_cast<std::size_t>(r));
            }
            for (std::uint32_t mask = 0; mask < (1u << group.size()); ++mask) {
                IndexSet sub;
                for (std::size_t b = 0; b < group.size(); ++b) {
                    if (mask >> b & 1u) sub.push_back(group[b]);
                }
                REQUIRE(erank(code, sub) == std::min<std::size_t>(sub.size(), r));
            }
            const auto d = punctured_distance(code.field(), code.generator(), group);
            REQUIRE(d.has_value());
            REQUIRE(*d >= static_cast<std::size_t>(layout.delta_of[g]));
        }
        // Pooled rank over arbitrary subsets equals the group-wise sum.
        const std::size_t n = code.n();
        std::mt19937_64 rng(32);
        for (int trial = 0; trial < 300; ++trial) {
            const IndexSet t = testing::from_mask(static_cast<std::uint32_t>(rng()) & ((1u << n) - 1), n);
            std::vector<ExtElem> pts;
            for (auto i : t) pts.push_back(code.points()[i]);
            REQUIRE(erank(code, t) == rank_over_base(code.field(), pts));
        }
    }
}

TEST_CASE("grank and erank on construction codes") {
    for (const auto& inst : testing::instances()) {
        CAPTURE(inst.name);
        const CodeInstance code = build_code(inst.spec);
        const std::size_t n = code.n();
        if (n > 10) continue;
        for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
            const IndexSet t = testing::from_mask(mask, n);
            const std::size_t e = erank(code, t);
            const std::size_t g = grank(code.field(), code.generator(), t);
            REQUIRE(g == std::min(code.k(), e));
            REQUIRE(decodable(code.field(), code.generator(), t) == (e >= code.k()));
            if (code.k() == static_cast<std::size_t>(code.spec().n_gab)) REQUIRE(g == e);
        }
    }
}

TEST_CASE("distance oracle agrees with codeword enumeration on a tiny instance") {
    const CodeInstance code = build_code({{grp(1, 3, 1), grp(2, 2, 1)}, 2, 3, 3});
    const auto cert = min_distance_oracle(code.field(), code.generator());
    CHECK(cert.d == weight_oracle(code.field(), code.generator()));
    const CodeInstance k3 = build_code({{grp(1, 3, 1), grp(2, 2, 1)}, 3, 3, 3});
    CHECK(min_distance_oracle(k3.field(), k3.generator()).d == weight_oracle(k3.field(), k3.generator()));
    const PrimeField f5(5);
    const ExtField e(f5, 1);
    const auto g = mds_local_generator(2, 3, f5);
    CHECK(min_distance_oracle(e, lift(e, g)).d == 3);
}

TEST_CASE("erasure decoding") {
    std::mt19937_64 rng(33);
    const CodeInstance code = build_code(testing::reference());
    const auto& f = code.field();
    const auto msg = testing::random_word(f, 4, rng);
    const auto cw = encode(code, msg);

    const auto none = decode_erasures(code, cw, ErasurePattern::from_erased(8, {}));
    CHECK(none.message == msg);
    CHECK(none.codeword == cw);

    // delta_1 - 1 = 2 erasures inside group 1: local repair only.
    auto damaged = cw;
    damaged[1] = damaged[3] = f.zero();
    const auto local = decode_erasures(code, damaged, ErasurePattern::from_erased(8, {1, 3}));
    CHECK(local.message == msg);
    CHECK(local.locally_repaired == 2);
    CHECK(local.globally_repaired == 0);

    // Whole group 1 plus one symbol of group 2: erank 3 < 4.
    try {
        (void)decode_erasures(code, cw, ErasurePattern::from_erased(8, {0, 1, 2, 3, 4}));
        FAIL("expected Undecodable");
    } catch (const UndecodableError& e) {
        CHECK(e.code() == ErrorCode::Undecodable);
        CHECK(e.remaining_rank() == 3);
    }

    CHECK_THROWS_AS((void)decode_erasures(code, std::span(cw).first(7), ErasurePattern::from_erased(8, {})), Error);
}

TEST_CASE("decoding round trip on every decodable pattern") {
    std::mt19937_64 rng(34);
    for (const auto& inst : testing::instances()) {
        CAPTURE(inst.name);
        const CodeInstance code = build_code(inst.spec);
        const std::size_t n = code.n();
        if (n > 10) continue;
        for (int trial = 0; trial < 3; ++trial) {
            const auto msg = testing::random_word(code.field(), code.k(), rng);
            const auto cw = encode(code, msg);
            for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
                const auto pattern = ErasurePattern::from_erased(n, testing::from_mask(mask, n));
                auto received = cw;
                for (auto i : pattern.erased) received[i] = testing::random_elem(code.field(), rng);
                const std::size_t rank = erank(code, pattern.remaining);
                if (rank >= code.k()) {
                    const auto out = decode_erasures(code, received, pattern);
                    REQUIRE(out.message == msg);
                    REQUIRE(out.codeword == cw);
                } else {
                    bool threw = false;
                    try {
                        (void)decode_erasures(code, received, pattern);
                    } catch (const UndecodableError& e) {
                        threw = true;
                        REQUIRE(e.remaining_rank() == rank);
                    }
                    REQUIRE(threw);
                }
            }
        }
    }
}

TEST_CASE("erasure pattern bookkeeping") {
    const auto p = ErasurePattern::from_erased(6, {4, 1});
    CHECK(p.erased == IndexSet{1, 4});
    CHECK(p.remaining == IndexSet{0, 2, 3, 5});
    const auto r = ErasurePattern::from_remaining(6, {0, 2, 3, 5});
    CHECK(r.erased == p.erased);
    CHECK_THROWS_AS((void)ErasurePattern::from_erased(6, {6}), Error);
    CHECK(complement(IndexSet{0, 2}, 4) == IndexSet{1, 3});
}
