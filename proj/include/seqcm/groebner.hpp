#pragma once

#include <span>
#include <vector>

#include "seqcm/polynomial.hpp"

namespace seqcm {

struct DivisionResult {
  std::vector<Polynomial> quotients;
  Polynomial remainder;
};

/// Multivariate division with remainder: f = sum q_i g_i + r, no term of r is
/// divisible by any leading term of the g_i.
DivisionResult divide(const Polynomial& f, std::span<const Polynomial> divisors,
                      const MonomialOrder& ord);

/// Fully reduced remainder of `f` modulo `basis` (all terms, not just the head).
/// `basis` must already be sorted under `ord`.
Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> basis,
                       const MonomialOrder& ord);

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);

/// Reduced Groebner basis of the ideal generated by `gens`: monic,
/// auto-reduced, sorted by increasing leading monomial. Pairs are processed
/// by the normal strategy with Gebauer-Moeller pruning.
std::vector<Polynomial> buchberger(std::span<const Polynomial> gens, const MonomialOrder& ord);

/// Buchberger's criterion: every S-polynomial reduces to zero.
bool is_groebner_basis(std::span<const Polynomial> basis, const MonomialOrder& ord);

}  // namespace seqcm
