#include "udlrc/locality.hpp"

#include <algorithm>
#include <string>

#include "udlrc/error.hpp"
#include "udlrc/finite_field.hpp"

namespace udlrc {

namespace {

[[noreturn]] void invalid(const std::string& what) {
    throw Error(ErrorCode::SpecInvalid, what);
}

}  // namespace

ClassParams derive_class(const LocalityClass& c) {
    ClassParams out;
    out.n = c.n;
    out.r = c.r;
    out.delta = c.delta;
    const int len = c.r + c.delta - 1;
    out.p = c.n / len;
    out.rem = c.n % len;
    if (out.rem <= c.delta - 2) {
        out.k_bound = out.p * c.r;
    } else {
        out.k_bound = c.n - (out.p + 1) * (c.delta - 1);
    }
    return out;
}

bool ordered_condition(const std::vector<LocalityClass>& classes) noexcept {
    for (std::size_t j = 1; j < classes.size(); ++j) {
        if (classes[j - 1].r > classes[j].r || classes[j - 1].delta < classes[j].delta) return false;
    }
    return true;
}

DerivedSpec derive_params(const LocalitySpec& spec) {
    if (spec.classes.empty()) invalid("at least one locality class is required");
    if (spec.k < 1) invalid("k must be >= 1");
    DerivedSpec out;
    out.input = spec;
    out.k = spec.k;
    bool all_whole = true;
    for (std::size_t j = 0; j < spec.classes.size(); ++j) {
        const auto& c = spec.classes[j];
        const std::string tag = "class " + std::to_string(j + 1) + ": ";
        if (c.r < 1) invalid(tag + "r must be >= 1");
        if (c.delta < 2) invalid(tag + "delta must be >= 2");
        if (c.n < 1) invalid(tag + "n must be >= 1");
        out.classes.push_back(derive_class(c));
        out.n += c.n;
        all_whole = all_whole && out.classes.back().whole_groups();
    }
    if (all_whole) {
        for (const auto& c : out.classes) out.n_gab += c.p * c.r;
    }
    out.ordered = ordered_condition(spec.classes);
    return out;
}

DerivedSpec validate_spec(const LocalitySpec& spec) {
    DerivedSpec out = derive_params(spec);
    for (std::size_t j = 0; j < out.classes.size(); ++j) {
        const auto& c = out.classes[j];
        if (!c.whole_groups()) {
            invalid("class " + std::to_string(j + 1) + ": non-integral m_j (n_j = " + std::to_string(c.n) +
                    " is not a multiple of r + delta - 1 = " + std::to_string(c.group_length()) + ")");
        }
    }
    if (spec.k > out.n_gab) {
        invalid("dimension overflow: k = " + std::to_string(spec.k) + " > n_Gab = " + std::to_string(out.n_gab));
    }
    if (spec.q < 2 || !is_prime(static_cast<std::uint32_t>(spec.q))) {
        invalid("q = " + std::to_string(spec.q) + " is not prime");
    }
    if (spec.q >= (1 << 16)) invalid("q = " + std::to_string(spec.q) + " exceeds 2^16");
    int longest = 0;
    for (const auto& c : out.classes) longest = std::max(longest, c.group_length());
    if (spec.q < longest) {
        invalid("field too small: q = " + std::to_string(spec.q) + " < max(r_j + delta_j - 1) = " +
                std::to_string(longest));
    }
    if (out.input.t == 0) out.input.t = out.n_gab;
    if (out.input.t < out.n_gab) {
        invalid("n_Gab = " + std::to_string(out.n_gab) + " > t = " + std::to_string(out.input.t));
    }
    if (out.input.t > static_cast<int>(kMaxExtDegree)) {
        invalid("t = " + std::to_string(out.input.t) + " exceeds " + std::to_string(kMaxExtDegree));
    }
    return out;
}

}  // namespace udlrc
