#pragma once

#include <compare>
#include <cstdint>
#include <string_view>

#include "seqcm/errors.hpp"

namespace seqcm {

/// Canonical representative of an element of GF(p), always in [0, p).
struct FieldElement {
  std::uint32_t value = 0;

  constexpr bool is_zero() const { return value == 0; }
  friend constexpr auto operator<=>(FieldElement, FieldElement) = default;
};

bool is_prime(std::uint64_t n);

/// Arithmetic in GF(p). The modulus must be a prime below 2^31.
class PrimeField {
 public:
  explicit PrimeField(std::uint32_t p);

  std::uint32_t characteristic() const { return p_; }

  FieldElement element(std::int64_t value) const;
  /// Reduces an arbitrarily long decimal digit string modulo p.
  FieldElement from_decimal(std::string_view digits) const;

  FieldElement add(FieldElement a, FieldElement b) const {
    std::uint32_t s = a.value + b.value;
    return {s >= p_ ? s - p_ : s};
  }
  FieldElement sub(FieldElement a, FieldElement b) const {
    return {a.value >= b.value ? a.value - b.value : a.value + p_ - b.value};
  }
  FieldElement neg(FieldElement a) const { return {a.value == 0 ? 0 : p_ - a.value}; }
  FieldElement mul(FieldElement a, FieldElement b) const {
    return {static_cast<std::uint32_t>(
        (static_cast<std::uint64_t>(a.value) * b.value) % p_)};
  }
  FieldElement inv(FieldElement a) const;
  FieldElement div(FieldElement a, FieldElement b) const { return mul(a, inv(b)); }

  /// Symmetric representative in (-p/2, p/2], used for printing.
  std::int64_t symmetric(FieldElement a) const {
    return a.value > p_ / 2 ? static_cast<std::int64_t>(a.value) - p_ : a.value;
  }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint32_t p_;
};

/// Multiplicative inverse of `a` modulo the prime `p`.
FieldElement field_inv(FieldElement a, std::uint32_t p);

}  // namespace seqcm
