#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "seqcm/field.hpp"
#include "seqcm/monomial.hpp"
#include "seqcm/ring.hpp"

namespace seqcm {

struct Term {
  FieldElement coef;
  Monomial mono;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse polynomial over GF(p). Terms are kept strictly descending under the
/// polynomial's monomial order with non-zero coefficients; the empty term list
/// is the zero polynomial.
class Polynomial {
 public:
  explicit Polynomial(RingPtr ring, MonomialOrder ord = MonomialOrder::grevlex());

  static Polynomial constant(const RingPtr& ring, std::int64_t c);
  static Polynomial variable(const RingPtr& ring, std::size_t index);
  static Polynomial term(const RingPtr& ring, FieldElement c, const Monomial& m,
                         MonomialOrder ord = MonomialOrder::grevlex());
  /// Takes ownership of terms that are already strictly descending under `ord`
  /// with non-zero coefficients. No checks are made.
  static Polynomial from_sorted_terms(const RingPtr& ring, std::vector<Term> terms,
                                      MonomialOrder ord) {
    return Polynomial(ring, ord, std::move(terms));
  }
  /// Builds a polynomial from arbitrary terms: sorts, merges like terms, drops zeros.
  static Polynomial from_terms(const RingPtr& ring, std::vector<Term> terms,
                               MonomialOrder ord = MonomialOrder::grevlex());

  const RingPtr& ring() const { return ring_; }
  const PrimeField& field() const { return ring_->field(); }
  const MonomialOrder& order() const { return order_; }
  std::span<const Term> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || terms_.front().mono.is_one(); }
  bool is_monomial() const { return terms_.size() == 1; }

  const Term& leading_term() const { return terms_.front(); }
  const Monomial& leading_monomial() const { return terms_.front().mono; }
  FieldElement leading_coefficient() const { return terms_.front().coef; }

  /// Largest total degree of a term; -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;

  Polynomial with_order(const MonomialOrder& ord) const;
  Polynomial monic() const;
  Polynomial scaled(FieldElement c) const;
  Polynomial times_term(FieldElement c, const Monomial& m) const;
  Polynomial pow(unsigned n) const;
  /// Image in `target`, whose variables are this ring's shifted by `offset`.
  Polynomial embedded(const RingPtr& target, std::size_t offset, const MonomialOrder& ord) const;
  /// Image in `target` after dropping the first `offset` variables, which must not occur.
  Polynomial projected(const RingPtr& target, std::size_t offset) const;

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b);

  /// f - c * m * g, merged in a single pass (g is brought to f's order).
  friend Polynomial sub_multiple(const Polynomial& f, FieldElement c, const Monomial& m,
                                 const Polynomial& g);

 private:
  Polynomial(RingPtr ring, MonomialOrder ord, std::vector<Term> sorted_terms)
      : ring_(std::move(ring)), order_(ord), terms_(std::move(sorted_terms)) {}

  RingPtr ring_;
  MonomialOrder order_;
  std::vector<Term> terms_;
};

Polynomial poly_add(const Polynomial& a, const Polynomial& b);
Polynomial poly_mul(const Polynomial& a, const Polynomial& b);

/// Canonical text form, e.g. `x^2*y-3*z`. Coefficients use the symmetric range.
std::string to_string(const Polynomial& f);

/// Parses `x^2*y + 3*z` style text (with `^`, `*`, `+`, `-`, parentheses and
/// integer coefficients reduced mod p). Variables must belong to `ring`.
Polynomial parse_polynomial(std::string_view text, const RingPtr& ring,
                            MonomialOrder ord = MonomialOrder::grevlex());

}  // namespace seqcm
