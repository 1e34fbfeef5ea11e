#pragma once

// Checks of the structural identities relating good systems of parameters,
// parametric decomposition, the dimension filtration and Hilbert-Samuel
// lengths. Module statements on M = R/I are translated to ideals once:
//   D_i ↦ J_i,  qM ↦ I + q,  q D_i ↦ I + q J_i,  (q_i M : x) ↦ (I + q_i) : x,
//   (0 :_M x) ↦ I : x.
// Every check reports Pass when the outcome agrees with the theory, Fail when
// it contradicts it, and Inconclusive when a finite bound was not enough to
// observe a predicted failure.

#include <cstdint>
#include <span>
#include <vector>

#include "seqcm/parametric.hpp"

namespace seqcm {

/// `count` good systems of parameters from seeds derived from `seed`.
std::vector<SOP> sample_good_sops(const DimensionFiltration& f, int count, std::uint64_t seed, int attempts = 64);

/// `count` systems of parameters made of random linear forms (not necessarily good).
std::vector<std::vector<Polynomial>> sample_linear_sops(const Ideal& ideal, int count, std::uint64_t seed,
                                                        int attempts = 64);

/// Good systems of parameters decompose for every n exactly when M is
/// sequentially CM. Fills `tables` with one decomposition table per sample.
CheckReport verify_good_sop_decomposition(const DimensionFiltration& f, std::span<const SOP> samples, int n_max,
                                          bool seq_cm, std::vector<DecompositionReport>* tables = nullptr);

/// (I + q^n) ∩ J_i = I + q^n J_i for all levels and n ≤ n_max (sequentially CM only).
CheckReport verify_power_intersection(const DimensionFiltration& f, std::span<const Polynomial> xs, int n_max,
                                      bool seq_cm);

struct HilbertSamuelRow {
  int n;
  std::uint64_t measured;   // ℓ(R/(I + q^{n+1}))
  std::uint64_t predicted;  // Σ_i C(n + d_i, d_i) ℓ(J_i / (J_{i-1} + q J_i))
  bool match;
};

/// ℓ(J_i / (J_{i-1} + q J_i)) per level, with J_{-1} = I.
std::vector<std::uint64_t> level_lengths(const DimensionFiltration& f, std::span<const Polynomial> xs);

std::vector<HilbertSamuelRow> hilbert_samuel_table(const DimensionFiltration& f, std::span<const Polynomial> xs,
                                                   int n_max);

/// The filtration formula for ℓ(M/q^{n+1}M) holds for every n exactly when M
/// is sequentially CM; measured ≤ predicted always.
CheckReport verify_hilbert_samuel_formula(std::span<const HilbertSamuelRow> table, bool seq_cm);

/// ℓ(M/q^{n+1}M) ≤ C(n+d, d) ℓ(M/qM), with equality for all n exactly when M is CM.
CheckReport verify_multiplicity_bound(const Ideal& ideal, std::span<const Polynomial> xs, int n_max);

/// Every system of parameters decomposes iff R/sat_m(I) is CM and m·sat_m(I) ⊆ I
/// (needs dim ≥ 2). The right side is decided exactly, the left by sampling.
CheckReport verify_all_sops_criterion(const DimensionFiltration& f, int samples, int n_max, std::uint64_t seed);

/// A regular sequence ys decomposes: (ys)^n = ∩_{Λ_{s,n}} (y^α), for every prefix.
CheckReport verify_regular_sequence_decomposition(const Ideal& ideal, std::span<const Polynomial> ys, int n_max);

/// Consequences of decomposition for xs, over k, m, n ≤ bound:
///   prefixes decompose;
///   (I + y_{i+1}^k) ∩ (I + q_i^m) ⊆ I + q_{i+1}^{k+m};
///   (I + y_{i+1}^k) ∩ (I + q_i^m) ⊆ I + y_{i+1}^k q_{i+1} + q_i^{m+1};
///   (I + q_i) : x_j^n = (I + q_i) + (I : x_j^k) for n ≥ k, some k.
/// Reports are NotApplicable when `decomposes` is false.
std::vector<CheckReport> verify_decomposition_consequences(const Ideal& ideal, std::span<const Polynomial> xs,
                                                           int bound, bool decomposes);

/// (I + q_i) ∩ J_s = I + q_i J_s whenever R/J_s is CM.
CheckReport verify_cm_quotient_intersection(const DimensionFiltration& f, std::span<const Polynomial> xs);

/// (I + q) ∩ J_i = I + q_{d_i} J_i for 0 < i < t (sequentially CM only).
CheckReport verify_parameter_intersection(const DimensionFiltration& f, std::span<const Polynomial> xs,
                                          bool seq_cm);

}  // namespace seqcm
