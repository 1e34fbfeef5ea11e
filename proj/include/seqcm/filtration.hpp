#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "seqcm/hilbert.hpp"
#include "seqcm/monomial_ideal.hpp"
#include "seqcm/report.hpp"

namespace seqcm {

struct FiltrationLevel {
  /// J_i, so that D_i = J_i / I
  Ideal ideal;
  /// d_i; 0 for an empty level 0
  int dim;
  /// Level 0 with H⁰ = 0: J_0 = I and no parameter block.
  bool empty = false;
};

/// N(p) per associated prime and N_i = ∩_{dim R/p ≤ d_i} N(p).
struct AuxiliaryIdealSet {
  std::map<VariableSet, Ideal> component;
  std::vector<Ideal> n;
};

/// I ⊆ J_0 ⊆ J_1 ⊆ ... ⊆ J_t = R with d_0 < d_1 < ... < d_t = dim R/I.
struct DimensionFiltration {
  MonomialIdeal monomial;
  Ideal ideal;
  std::vector<FiltrationLevel> levels;
  AuxiliaryIdealSet aux;

  std::size_t length() const { return levels.size() - 1; }
  int dim() const { return levels.back().dim; }
  const Ideal& J(std::size_t i) const { return levels[i].ideal; }
  int d(std::size_t i) const { return levels[i].dim; }
};

struct SOP {
  std::vector<Polynomial> elements;
  bool is_sop = false;
  bool is_good = false;
  std::vector<int> degrees;
};

/// Builds the filtration from the reduced primary decomposition and checks the
/// chain of containments and J_0 = sat_m(I). Throws for the unit ideal.
DimensionFiltration dimension_filtration(const MonomialIdeal& ideal);

/// Random good system of parameters. Elements x_j with d_i < j ≤ d_{i+1} are
/// random homogeneous elements of N_i, chosen from x_d down to x_1 so that each
/// one cuts the dimension. Throws SearchFailure once `attempts` draws for one
/// element all fail.
SOP find_good_sop(const DimensionFiltration& f, int attempts, std::uint64_t seed);

/// dim R/(I + (x_1..x_j)) = d - j for every j. Throws InvalidArgument when
/// |xs| ≠ dim R/I.
bool is_sop(const Ideal& ideal, const std::vector<Polynomial>& xs);

/// is_sop and J_i ∩ (I + (x_{d_i+1}, ..., x_d)) = I for i < t.
bool is_good_sop(const DimensionFiltration& f, const std::vector<Polynomial>& xs);

/// (I : x_j) = J_i for d_i < j ≤ d_{i+1}, and (I : x_1) ⊆ ... ⊆ (I : x_d).
CheckReport verify_parameter_annihilators(const DimensionFiltration& f, const std::vector<Polynomial>& xs);

/// Ideal generated by `gens`, in the ring of `ring`.
Ideal span(const RingPtr& ring, const std::vector<Polynomial>& gens);

std::string describe(const std::vector<Polynomial>& xs);

}  // namespace seqcm
