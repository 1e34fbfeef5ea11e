#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>

#include "seqcm/errors.hpp"

namespace seqcm {

/// Largest number of variables a ring may have (one slot is reserved for the
/// auxiliary variable used by elimination).
inline constexpr std::size_t kMaxVars = 16;

/// Dense exponent vector with cached total degree.
class Monomial {
 public:
  using Exponent = std::uint16_t;

  Monomial() = default;
  explicit Monomial(std::size_t num_vars);
  Monomial(std::size_t num_vars, std::initializer_list<int> exponents);
  Monomial(std::size_t num_vars, std::span<const int> exponents);

  static Monomial variable(std::size_t num_vars, std::size_t index, int power = 1);

  std::size_t num_vars() const { return num_vars_; }
  std::uint32_t degree() const { return degree_; }
  int operator[](std::size_t i) const { return exps_[i]; }
  void set(std::size_t i, int e);

  bool is_one() const { return degree_ == 0; }
  bool divides(const Monomial& other) const;
  /// Number of variables with non-zero exponent.
  std::size_t support_size() const;
  /// Bitmask of variables with non-zero exponent.
  std::uint32_t support_mask() const;
  bool is_pure_power() const { return support_size() <= 1; }

  Monomial operator*(const Monomial& o) const;
  /// Exact quotient; requires `o.divides(*this)`.
  Monomial operator/(const Monomial& o) const;

  friend Monomial lcm(const Monomial& a, const Monomial& b);
  friend Monomial gcd(const Monomial& a, const Monomial& b);
  friend bool coprime(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.num_vars_ == b.num_vars_ && a.exps_ == b.exps_;
  }

  /// Same monomial in a ring with `offset` extra leading variables.
  Monomial shifted(std::size_t offset, std::size_t new_num_vars) const;

 private:
  std::array<Exponent, kMaxVars> exps_{};
  std::uint32_t degree_ = 0;
  std::uint8_t num_vars_ = 0;
};

/// grevlex, lex, or a two-block elimination order where the first `split`
/// variables are eliminated (grevlex inside each block).
struct MonomialOrder {
  enum class Kind : std::uint8_t { grevlex, lex, block };

  Kind kind = Kind::grevlex;
  std::uint8_t split = 0;

  static constexpr MonomialOrder grevlex() { return {Kind::grevlex, 0}; }
  static constexpr MonomialOrder lex() { return {Kind::lex, 0}; }
  static constexpr MonomialOrder block(std::uint8_t split) { return {Kind::block, split}; }

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

  friend auto operator<=>(const MonomialOrder&, const MonomialOrder&) = default;
};

/// Checked comparison; throws InvalidArgument on a variable-count mismatch.
std::strong_ordering monomial_cmp(const Monomial& a, const Monomial& b,
                                  const MonomialOrder& ord);

}  // namespace seqcm
