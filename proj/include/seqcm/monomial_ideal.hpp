#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "seqcm/ideal.hpp"

namespace seqcm {

/// Subset of the ring's variables, as a bitmask over variable indices.
struct VariableSet {
  std::uint32_t bits = 0;

  bool contains(std::size_t i) const { return (bits >> i) & 1u; }
  std::size_t size() const { return static_cast<std::size_t>(__builtin_popcount(bits)); }
  bool is_subset_of(VariableSet o) const { return (bits & ~o.bits) == 0; }
  friend auto operator<=>(VariableSet, VariableSet) = default;
};

/// Monomial ideal held by its unique minimal generating set, sorted descending
/// in grevlex.
class MonomialIdeal {
 public:
  MonomialIdeal(RingPtr ring, std::vector<Monomial> generators);

  /// Throws InvalidArgument unless every generator of `ideal` is a monomial.
  static MonomialIdeal from_ideal(const Ideal& ideal);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Monomial>& generators() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_.front().is_one(); }
  bool contains(const Monomial& m) const;
  /// Every generator is a pure power of a single variable.
  bool is_irreducible() const;
  VariableSet support() const;

  Ideal to_ideal() const;

  friend MonomialIdeal operator+(const MonomialIdeal& a, const MonomialIdeal& b);
  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
    return a.gens_ == b.gens_;
  }

 private:
  RingPtr ring_;
  std::vector<Monomial> gens_;
};

/// Divisibility-minimal antichain generating the same ideal.
MonomialIdeal minimalize(const RingPtr& ring, std::span<const Monomial> gens);

/// Intersection of monomial ideals (pairwise lcms, minimalized).
MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b);

/// b ⊆ a
bool contains(const MonomialIdeal& a, const MonomialIdeal& b);

struct PrimaryComponent {
  MonomialIdeal component;
  /// Variables generating the associated prime.
  VariableSet support;
  /// dim R/p = v - |support|
  int dim;
};

/// Irredundant decomposition into ideals generated by pure powers, by
/// recursive splitting of mixed generators. Throws for the unit ideal.
std::vector<PrimaryComponent> irreducible_decomposition(const MonomialIdeal& ideal);

/// One primary component per associated prime, keyed by the prime's support.
std::map<VariableSet, PrimaryComponent> reduced_primary_decomposition(const MonomialIdeal& ideal);

/// Krull dimension of R/I: size of a largest variable set containing the
/// support of no generator. Throws for the unit ideal.
int mon_dim(const MonomialIdeal& ideal);

std::string to_string(const MonomialIdeal& ideal);

}  // namespace seqcm
