#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <span>
#include <vector>

#include "seqcm/ideal.hpp"
#include "seqcm/monomial_ideal.hpp"

namespace seqcm {

using BigInt = boost::multiprecision::cpp_int;

/// numerator(t) / (1 - t)^denom_power
class HilbertSeries {
 public:
  HilbertSeries(std::vector<BigInt> numerator, int denom_power);

  const std::vector<BigInt>& numerator() const { return numerator_; }
  int denom_power() const { return denom_power_; }
  bool is_zero() const { return numerator_.empty(); }

  /// Cancels every common factor (1 - t).
  HilbertSeries reduced() const;
  /// Pole order at t = 1, i.e. the Krull dimension. Throws for the zero series.
  int dimension() const;
  /// Coefficient of t^degree in the power-series expansion.
  BigInt coefficient(unsigned degree) const;

  friend bool operator==(const HilbertSeries&, const HilbertSeries&) = default;

 private:
  std::vector<BigInt> numerator_;
  int denom_power_;
};

/// Numerator of the Hilbert series of k[x_1..x_v]/(monos) over (1-t)^v, by
/// pivot recursion N(I) = N(I + (x)) + t N(I : x).
std::vector<BigInt> hilbert_numerator(const MonomialIdeal& ideal);

/// Hilbert series of R/I through the leading-term ideal of I.
/// Throws NotHomogeneous for a non-homogeneous generator.
HilbertSeries hs_of_quotient(const Ideal& ideal);

/// dim R/I. Throws InvalidArgument for the unit ideal.
int krull_dim(const Ideal& ideal);

/// Dimension of R/I, or -1 when I is the unit ideal.
int dim_or_empty(const Ideal& ideal);

/// The subquotient J/K with K ⊆ J; the containment is checked on construction.
class SubquotientHandle {
 public:
  SubquotientHandle(Ideal numerator, Ideal denominator);

  const Ideal& upper() const { return upper_; }
  const Ideal& lower() const { return lower_; }

 private:
  Ideal upper_;
  Ideal lower_;
};

/// ℓ(J/K), exact. Throws NotFiniteLength when J/K has positive dimension.
std::uint64_t length_of_quotient(const SubquotientHandle& h);

/// ℓ(R/(I + q^{n+1})). Throws NotFiniteLength when I + q is not m-primary.
std::uint64_t hilbert_samuel(const Ideal& ideal, const Ideal& q, int n);

}  // namespace seqcm
