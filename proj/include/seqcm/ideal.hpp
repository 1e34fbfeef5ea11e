#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <vector>

#include "seqcm/groebner.hpp"
#include "seqcm/polynomial.hpp"

namespace seqcm {

/// Ideal given by generators, with reduced Groebner bases cached per monomial
/// order. Copies share the cache; the generators never change, so a cached
/// basis is valid for every copy.
class Ideal {
 public:
  Ideal(RingPtr ring, std::vector<Polynomial> generators);

  static Ideal zero(const RingPtr& ring) { return Ideal(ring, {}); }
  static Ideal unit(const RingPtr& ring);
  /// The irrelevant ideal (x_1, ..., x_v).
  static Ideal maximal(const RingPtr& ring);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return gens_; }

  /// Reduced Groebner basis, computed on first use and shared afterwards.
  const std::vector<Polynomial>& groebner_basis(
      const MonomialOrder& ord = MonomialOrder::grevlex()) const;

  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const;
  bool is_homogeneous() const;
  /// Every generator is a single term.
  bool is_monomial() const;

  /// Normal form against the grevlex basis.
  Polynomial normal_form(const Polynomial& f) const;
  bool contains(const Polynomial& f) const { return normal_form(f).is_zero(); }

  /// Leading monomials of the grevlex basis.
  std::vector<Monomial> leading_monomials() const;

  /// Installs a basis already known to be the reduced basis for `ord`.
  void seed_groebner_basis(const MonomialOrder& ord, std::vector<Polynomial> basis) const;

 private:
  struct Cache {
    std::mutex mutex;
    std::map<MonomialOrder, std::shared_ptr<const std::vector<Polynomial>>> bases;
  };

  RingPtr ring_;
  std::vector<Polynomial> gens_;
  std::shared_ptr<Cache> cache_;
};

Ideal operator+(const Ideal& a, const Ideal& b);
Ideal operator*(const Ideal& a, const Ideal& b);
inline Ideal ideal_sum(const Ideal& a, const Ideal& b) { return a + b; }
inline Ideal ideal_product(const Ideal& a, const Ideal& b) { return a * b; }
/// a + (f)
Ideal operator+(const Ideal& a, const Polynomial& f);
/// f * a
Ideal operator*(const Polynomial& f, const Ideal& a);

/// Q^n, generated by all n-fold products of generators. Q^0 is the unit ideal.
Ideal ideal_power(const Ideal& q, int n);

/// A ∩ B by eliminating t from t*A + (1-t)*B.
Ideal ideal_intersect(const Ideal& a, const Ideal& b);
Ideal ideal_intersect(std::span<const Ideal> ideals);

/// A : f = {g : g*f ∈ A}. Throws DivisionByZero for f = 0.
Ideal ideal_colon(const Ideal& a, const Polynomial& f);
/// A : B = ∩_{g ∈ gens B} (A : g).
Ideal ideal_colon(const Ideal& a, const Ideal& b);
inline Ideal ideal_colon_ideal(const Ideal& a, const Ideal& b) { return ideal_colon(a, b); }

inline constexpr int kSaturationIterationCap = 50;

/// A : B^∞ as the stable value of A ⊆ A:B ⊆ A:B^2 ⊆ ...
Ideal ideal_saturation(const Ideal& a, const Ideal& b);

/// A ∩ k[remaining variables], returned in the ring without the eliminated ones.
/// `eliminated` lists variable indices of a.ring().
Ideal eliminate(const Ideal& a, std::span<const std::size_t> eliminated);

bool ideal_equal(const Ideal& a, const Ideal& b);
/// b ⊆ a
bool ideal_contains(const Ideal& a, const Ideal& b);
bool ideal_membership(const Polynomial& f, const Ideal& a);

/// Reduced grevlex basis rendered as canonical strings.
std::vector<std::string> canonical_generators(const Ideal& a);

struct EqualityRecord {
  Ideal lhs;
  Ideal rhs;
  bool equal;
};

/// While alive, records every ideal_equal verdict taken on this thread.
class EqualityAudit {
 public:
  EqualityAudit();
  ~EqualityAudit();
  EqualityAudit(const EqualityAudit&) = delete;
  EqualityAudit& operator=(const EqualityAudit&) = delete;

  const std::vector<EqualityRecord>& records() const { return records_; }
  void record(const Ideal& a, const Ideal& b, bool equal) { records_.push_back({a, b, equal}); }

 private:
  std::vector<EqualityRecord> records_;
  EqualityAudit* previous_;
};

}  // namespace seqcm
