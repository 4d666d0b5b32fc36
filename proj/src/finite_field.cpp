#include "udlrc/finite_field.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "udlrc/matrix.hpp"

namespace udlrc {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::DivisionByZero: return "DivisionByZero";
        case ErrorCode::SingularMatrix: return "SingularMatrix";
        case ErrorCode::NotPrime: return "NotPrime";
        case ErrorCode::FieldTooLarge: return "FieldTooLarge";
        case ErrorCode::RankDeficientPoints: return "RankDeficientPoints";
        case ErrorCode::MessageTooLong: return "MessageTooLong";
        case ErrorCode::TooManyPoints: return "TooManyPoints";
        case ErrorCode::SpecInvalid: return "SpecInvalid";
        case ErrorCode::FieldTooSmall: return "FieldTooSmall";
        case ErrorCode::LengthMismatch: return "LengthMismatch";
        case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorCode::Undecodable: return "Undecodable";
        case ErrorCode::DimensionInfeasible: return "DimensionInfeasible";
        case ErrorCode::RankInfeasible: return "RankInfeasible";
        case ErrorCode::PreconditionViolated: return "PreconditionViolated";
        case ErrorCode::TooManyClasses: return "TooManyClasses";
        case ErrorCode::TooLarge: return "TooLarge";
        case ErrorCode::RankDeficientGenerator: return "RankDeficientGenerator";
        case ErrorCode::CountOutOfRange: return "CountOutOfRange";
        case ErrorCode::OrderedConditionRequired: return "OrderedConditionRequired";
        case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

bool is_prime(std::uint32_t q) noexcept {
    if (q < 2) return false;
    for (std::uint32_t d = 2; d * d <= q; ++d) {
        if (q % d == 0) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// F_q
// ---------------------------------------------------------------------------

PrimeField::PrimeField(std::uint32_t q) : q_(q) {
    if (!is_prime(q)) throw Error(ErrorCode::NotPrime, "q = " + std::to_string(q));
    if (q >= (1u << 16)) throw Error(ErrorCode::FieldTooLarge, "q = " + std::to_string(q) + " exceeds 2^16");
}

BaseElem PrimeField::elem(std::int64_t v) const noexcept {
    const auto q = static_cast<std::int64_t>(q_);
    return {static_cast<std::uint32_t>(((v % q) + q) % q)};
}

BaseElem PrimeField::add(Elem a, Elem b) const noexcept {
    const std::uint32_t s = a.value + b.value;
    return {s >= q_ ? s - q_ : s};
}

BaseElem PrimeField::sub(Elem a, Elem b) const noexcept {
    return {a.value >= b.value ? a.value - b.value : a.value + q_ - b.value};
}

BaseElem PrimeField::neg(Elem a) const noexcept {
    return {a.value == 0 ? 0 : q_ - a.value};
}

BaseElem PrimeField::mul(Elem a, Elem b) const noexcept {
    return {a.value * b.value % q_};
}

BaseElem PrimeField::inv(Elem a) const {
    if (a.value == 0) throw Error(ErrorCode::DivisionByZero, "inverse of 0 in F_" + std::to_string(q_));
    // Fermat: a^(q-2).
    std::uint64_t result = 1;
    std::uint64_t b = a.value;
    for (std::uint32_t e = q_ - 2; e != 0; e >>= 1) {
        if (e & 1u) result = result * b % q_;
        b = b * b % q_;
    }
    return {static_cast<std::uint32_t>(result)};
}

BaseElem PrimeField::div(Elem a, Elem b) const {
    return mul(a, inv(b));
}

// ---------------------------------------------------------------------------
// Polynomials over F_q, constant term first, trimmed of leading zeros.
// ---------------------------------------------------------------------------

namespace {

using Poly = std::vector<std::uint32_t>;

void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly poly_mod(Poly a, const Poly& m, const PrimeField& f) {
    trim(a);
    const std::size_t dm = m.size() - 1;
    const BaseElem lead_inv = f.inv({m.back()});
    while (a.size() > dm) {
        const std::size_t shift = a.size() - 1 - dm;
        const BaseElem c = f.mul({a.back()}, lead_inv);
        for (std::size_t i = 0; i <= dm; ++i) {
            a[shift + i] = f.sub({a[shift + i]}, f.mul(c, {m[i]})).value;
        }
        trim(a);
    }
    return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, const PrimeField& f) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = f.add({out[i + j]}, f.mul({a[i]}, {b[j]})).value;
    }
    return poly_mod(std::move(out), m, f);
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& m, const PrimeField& f) {
    Poly result{1};
    base = poly_mod(std::move(base), m, f);
    for (; e != 0; e >>= 1) {
        if (e & 1u) result = poly_mulmod(result, base, m, f);
        base = poly_mulmod(base, base, m, f);
    }
    return poly_mod(std::move(result), m, f);
}

Poly poly_gcd(Poly a, Poly b, const PrimeField& f) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = poly_mod(a, b, f);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

Poly poly_sub(Poly a, const Poly& b, const PrimeField& f) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = f.sub({a[i]}, {b[i]}).value;
    trim(a);
    return a;
}

bool has_root(const Poly& p, const PrimeField& f) {
    for (std::uint32_t x = 0; x < f.order(); ++x) {
        BaseElem acc{0};
        for (std::size_t i = p.size(); i-- > 0;) acc = f.add(f.mul(acc, {x}), {p[i]});
        if (acc.value == 0) return true;
    }
    return false;
}

}  // namespace

bool is_irreducible(const PrimeField& field, std::span<const std::uint32_t> poly) {
    Poly p(poly.begin(), poly.end());
    for (auto& c : p) c %= field.order();
    trim(p);
    if (p.size() < 2) return false;
    const std::size_t deg = p.size() - 1;
    if (deg == 1) return true;
    if (has_root(p, field)) return false;
    if (deg <= 3) return true;
    const Poly x{0, 1};
    Poly h = x;
    for (std::size_t i = 1; i <= deg / 2; ++i) {
        h = poly_powmod(h, field.order(), p, field);
        const Poly g = poly_gcd(p, poly_sub(h, x, field), field);
        if (g.size() > 1) return false;
    }
    return true;
}

std::vector<std::uint32_t> find_irreducible(std::uint32_t q, std::size_t t) {
    const PrimeField field(q);
    if (t == 0) throw Error(ErrorCode::PreconditionViolated, "extension degree must be >= 1");
    // Odometer over the t lower coefficients, constant term least significant.
    std::vector<std::uint32_t> poly(t + 1, 0);
    poly[t] = 1;
    for (;;) {
        if (is_irreducible(field, poly)) return poly;
        std::size_t i = 0;
        while (i < t && ++poly[i] == q) poly[i++] = 0;
        if (i == t) break;
    }
    throw Error(ErrorCode::PreconditionViolated, "no irreducible polynomial found");
}

// ---------------------------------------------------------------------------
// F_{q^t}
// ---------------------------------------------------------------------------

ExtElem::ExtElem(std::size_t degree) : degree_(static_cast<std::uint8_t>(degree)) {}

ExtField::ExtField(PrimeField base, std::size_t t)
    : ExtField(base, t <= kMaxExtDegree && t >= 1 ? find_irreducible(base.order(), t)
                                                   : std::vector<std::uint32_t>(t + 1, 1)) {}

ExtField::ExtField(PrimeField base, std::vector<std::uint32_t> modulus)
    : base_(base), t_(modulus.empty() ? 0 : modulus.size() - 1), modulus_(std::move(modulus)) {
    if (t_ < 1 || t_ > kMaxExtDegree) {
        throw Error(ErrorCode::FieldTooLarge, "extension degree " + std::to_string(t_) + " outside [1, " +
                                                  std::to_string(kMaxExtDegree) + "]");
    }
    if (modulus_.back() != 1) throw Error(ErrorCode::PreconditionViolated, "modulus must be monic");
    for (auto c : modulus_) {
        if (c >= base_.order()) throw Error(ErrorCode::PreconditionViolated, "modulus coefficient out of range");
    }
    if (!is_irreducible(base_, modulus_)) throw Error(ErrorCode::PreconditionViolated, "modulus is reducible");
}

ExtElem ExtField::one() const {
    return embed(base_.one());
}

ExtElem ExtField::embed(BaseElem c) const {
    ExtElem x(t_);
    x.set(0, c.value);
    return x;
}

ExtElem ExtField::basis(std::size_t i) const {
    if (i >= t_) throw Error(ErrorCode::IndexOutOfRange, "basis index " + std::to_string(i));
    ExtElem x(t_);
    x.set(i, 1);
    return x;
}

ExtElem ExtField::from_coords(std::span<const std::uint32_t> coords) const {
    if (coords.size() != t_) {
        throw Error(ErrorCode::LengthMismatch,
                    "expected " + std::to_string(t_) + " coordinates, got " + std::to_string(coords.size()));
    }
    ExtElem x(t_);
    for (std::size_t i = 0; i < t_; ++i) {
        if (coords[i] >= base_.order()) {
            throw Error(ErrorCode::IndexOutOfRange, "coordinate " + std::to_string(coords[i]) + " not below q");
        }
        x.set(i, coords[i]);
    }
    return x;
}

bool ExtField::contains(const ExtElem& x) const noexcept {
    if (x.degree() != t_) return false;
    return std::ranges::all_of(x.coords(), [&](std::uint16_t c) { return c < base_.order(); });
}

bool ExtField::is_zero(const ExtElem& x) const noexcept {
    return std::ranges::all_of(x.coords(), [](std::uint16_t c) { return c == 0; });
}

bool ExtField::in_base(const ExtElem& x) const noexcept {
    return std::ranges::all_of(x.coords().subspan(1), [](std::uint16_t c) { return c == 0; });
}

ExtElem ExtField::add(const ExtElem& a, const ExtElem& b) const noexcept {
    ExtElem out(t_);
    for (std::size_t i = 0; i < t_; ++i) out.set(i, base_.add({a[i]}, {b[i]}).value);
    return out;
}

ExtElem ExtField::sub(const ExtElem& a, const ExtElem& b) const noexcept {
    ExtElem out(t_);
    for (std::size_t i = 0; i < t_; ++i) out.set(i, base_.sub({a[i]}, {b[i]}).value);
    return out;
}

ExtElem ExtField::neg(const ExtElem& a) const noexcept {
    ExtElem out(t_);
    for (std::size_t i = 0; i < t_; ++i) out.set(i, base_.neg({a[i]}).value);
    return out;
}

ExtElem ExtField::scale(BaseElem c, const ExtElem& a) const noexcept {
    ExtElem out(t_);
    for (std::size_t i = 0; i < t_; ++i) out.set(i, base_.mul(c, {a[i]}).value);
    return out;
}

ExtElem ExtField::mul(const ExtElem& a, const ExtElem& b) const noexcept {
    const std::uint64_t q = base_.order();
    std::array<std::uint64_t, 2 * kMaxExtDegree> acc{};
    for (std::size_t i = 0; i < t_; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < t_; ++j) acc[i + j] += std::uint64_t{a[i]} * b[j];
    }
    for (std::size_t i = 0; i + 1 < 2 * t_; ++i) acc[i] %= q;
    // x^t = -sum_{i<t} modulus[i] x^i
    for (std::size_t d = 2 * t_ - 2; d >= t_; --d) {
        const std::uint64_t c = acc[d];
        if (c == 0) continue;
        for (std::size_t i = 0; i < t_; ++i) {
            if (modulus_[i] == 0) continue;
            acc[d - t_ + i] = (acc[d - t_ + i] + c * (q - modulus_[i])) % q;
        }
    }
    ExtElem out(t_);
    for (std::size_t i = 0; i < t_; ++i) out.set(i, static_cast<std::uint32_t>(acc[i]));
    return out;
}

ExtElem ExtField::inv(const ExtElem& a) const {
    if (is_zero(a)) throw Error(ErrorCode::DivisionByZero, "inverse of 0 in the extension field");
    // Extended Euclid on (modulus, a): track s with s * a == r (mod modulus).
    Poly r0(modulus_.begin(), modulus_.end());
    Poly r1(a.coords().begin(), a.coords().end());
    trim(r1);
    Poly s0{};
    Poly s1{1};
    while (r1.size() > 1) {
        // quotient of r0 / r1
        Poly rem = r0;
        Poly quot(r0.size() >= r1.size() ? r0.size() - r1.size() + 1 : 1, 0);
        const BaseElem lead_inv = base_.inv({r1.back()});
        while (rem.size() >= r1.size()) {
            const std::size_t shift = rem.size() - r1.size();
            const BaseElem c = base_.mul({rem.back()}, lead_inv);
            quot[shift] = c.value;
            for (std::size_t i = 0; i < r1.size(); ++i) {
                rem[shift + i] = base_.sub({rem[shift + i]}, base_.mul(c, {r1[i]})).value;
            }
            trim(rem);
        }
        trim(quot);
        // s2 = s0 - quot * s1
        Poly prod(quot.size() + s1.size(), 0);
        for (std::size_t i = 0; i < quot.size(); ++i) {
            for (std::size_t j = 0; j < s1.size(); ++j) {
                prod[i + j] = base_.add({prod[i + j]}, base_.mul({quot[i]}, {s1[j]})).value;
            }
        }
        Poly s2 = poly_sub(s0, prod, base_);
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    // r1 is a nonzero constant since the modulus is irreducible.
    const BaseElem scale_by = base_.inv({r1[0]});
    s1 = poly_mod(std::move(s1), modulus_, base_);
    ExtElem out(t_);
    for (std::size_t i = 0; i < s1.size(); ++i) out.set(i, base_.mul(scale_by, {s1[i]}).value);
    return out;
}

ExtElem ExtField::div(const ExtElem& a, const ExtElem& b) const {
    return mul(a, inv(b));
}

ExtElem ExtField::pow(const ExtElem& a, std::uint64_t e) const noexcept {
    ExtElem result = one();
    ExtElem b = a;
    for (; e != 0; e >>= 1) {
        if (e & 1u) result = mul(result, b);
        b = mul(b, b);
    }
    return result;
}

ExtElem ExtField::frobenius_power(const ExtElem& x, std::size_t i) const noexcept {
    ExtElem y = x;
    for (std::size_t step = 0; step < i; ++step) y = pow(y, base_.order());
    return y;
}

std::size_t rank_over_base(const ExtField& field, std::span<const ExtElem> points) {
    if (points.empty()) return 0;
    Matrix<BaseElem> m(points.size(), field.degree(), BaseElem{});
    for (std::size_t r = 0; r < points.size(); ++r) {
        for (std::size_t c = 0; c < field.degree(); ++c) m(r, c) = {points[r][c]};
    }
    return matrix_rank(field.base(), std::move(m));
}

}  // namespace udlrc
