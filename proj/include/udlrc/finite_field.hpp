#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "udlrc/error.hpp"

namespace udlrc {

/// Element of a prime field F_q, always reduced into [0, q).
struct BaseElem {
    std::uint32_t value = 0;

    friend bool operator==(BaseElem, BaseElem) = default;
};

/// The prime field F_q. Only primes below 2^16 are accepted so that products fit in 32 bits.
class PrimeField {
public:
    using Elem = BaseElem;

    explicit PrimeField(std::uint32_t q);

    [[nodiscard]] std::uint32_t order() const noexcept { return q_; }

    [[nodiscard]] Elem elem(std::int64_t v) const noexcept;
    [[nodiscard]] Elem zero() const noexcept { return {0}; }
    [[nodiscard]] Elem one() const noexcept { return {1}; }
    [[nodiscard]] bool is_zero(Elem a) const noexcept { return a.value == 0; }

    [[nodiscard]] Elem add(Elem a, Elem b) const noexcept;
    [[nodiscard]] Elem sub(Elem a, Elem b) const noexcept;
    [[nodiscard]] Elem neg(Elem a) const noexcept;
    [[nodiscard]] Elem mul(Elem a, Elem b) const noexcept;
    [[nodiscard]] Elem inv(Elem a) const;
    [[nodiscard]] Elem div(Elem a, Elem b) const;

    friend bool operator==(const PrimeField&, const PrimeField&) = default;

private:
    std::uint32_t q_;
};

[[nodiscard]] bool is_prime(std::uint32_t q) noexcept;

inline constexpr std::size_t kMaxExtDegree = 32;

/// Element of F_{q^t} in the polynomial basis {1, a, ..., a^{t-1}}; coordinate i multiplies a^i.
/// Storage is inline so that matrices of extension elements never allocate per entry.
class ExtElem {
public:
    ExtElem() = default;
    explicit ExtElem(std::size_t degree);

    [[nodiscard]] std::size_t degree() const noexcept { return degree_; }
    [[nodiscard]] std::span<const std::uint16_t> coords() const noexcept { return {coords_.data(), degree_}; }
    [[nodiscard]] std::uint16_t operator[](std::size_t i) const noexcept { return coords_[i]; }
    void set(std::size_t i, std::uint32_t value) noexcept { coords_[i] = static_cast<std::uint16_t>(value); }

    friend bool operator==(const ExtElem&, const ExtElem&) = default;

private:
    std::array<std::uint16_t, kMaxExtDegree> coords_{};
    std::uint8_t degree_ = 0;
};

/// The extension F_{q^t} = F_q[x]/(modulus). Immutable after construction.
class ExtField {
public:
    using Elem = ExtElem;

    /// Uses the lexicographically first monic irreducible polynomial of degree t.
    ExtField(PrimeField base, std::size_t t);
    /// modulus holds t+1 coefficients, constant term first, leading coefficient 1.
    ExtField(PrimeField base, std::vector<std::uint32_t> modulus);

    [[nodiscard]] const PrimeField& base() const noexcept { return base_; }
    [[nodiscard]] std::size_t degree() const noexcept { return t_; }
    [[nodiscard]] const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }

    [[nodiscard]] Elem zero() const { return Elem(t_); }
    [[nodiscard]] Elem one() const;
    [[nodiscard]] Elem embed(BaseElem c) const;
    /// a^i for 0 <= i < t.
    [[nodiscard]] Elem basis(std::size_t i) const;
    /// Validating constructor from a digit list (least-significant coordinate first).
    [[nodiscard]] Elem from_coords(std::span<const std::uint32_t> coords) const;
    [[nodiscard]] bool contains(const Elem& x) const noexcept;
    [[nodiscard]] bool is_zero(const Elem& x) const noexcept;
    /// True when x lies in the embedded copy of F_q.
    [[nodiscard]] bool in_base(const Elem& x) const noexcept;

    [[nodiscard]] Elem add(const Elem& a, const Elem& b) const noexcept;
    [[nodiscard]] Elem sub(const Elem& a, const Elem& b) const noexcept;
    [[nodiscard]] Elem neg(const Elem& a) const noexcept;
    [[nodiscard]] Elem mul(const Elem& a, const Elem& b) const noexcept;
    [[nodiscard]] Elem scale(BaseElem c, const Elem& a) const noexcept;
    [[nodiscard]] Elem inv(const Elem& a) const;
    [[nodiscard]] Elem div(const Elem& a, const Elem& b) const;
    [[nodiscard]] Elem pow(const Elem& a, std::uint64_t e) const noexcept;

    /// x^(q^i), applying x -> x^q i times.
    [[nodiscard]] Elem frobenius_power(const Elem& x, std::size_t i) const noexcept;

private:
    PrimeField base_;
    std::size_t t_;
    std::vector<std::uint32_t> modulus_;
};

/// Rank over F_q of the coordinate vectors of points (the |points| x t matrix).
[[nodiscard]] std::size_t rank_over_base(const ExtField& field, std::span<const ExtElem> points);

/// Irreducibility over F_q: no root, then gcd(x^{q^i} - x, f) = 1 for every i <= deg/2.
[[nodiscard]] bool is_irreducible(const PrimeField& field, std::span<const std::uint32_t> poly);

/// Lexicographically first monic irreducible of degree t: the lower coefficients are read as a
/// base-q integer with the constant term as least-significant digit, counted upward from 0.
[[nodiscard]] std::vector<std::uint32_t> find_irreducible(std::uint32_t q, std::size_t t);

}  // namespace udlrc
