#pragma once

#include <optional>
#include <span>
#include <vector>

#include "seqcm/filtration.hpp"

namespace seqcm {

/// (α_1, ..., α_d) with α_i ≥ 1 and Σ α_i = d + n - 1.
struct LambdaIndex {
  std::vector<int> alpha;
  int n;
  friend bool operator==(const LambdaIndex&, const LambdaIndex&) = default;
};

/// All compositions of d + n - 1 into d positive parts, in ascending
/// lexicographic order; C(n+d-2, d-1) of them.
std::vector<LambdaIndex> lambda_set(int d, int n);

/// (x_1^{α_1}, ..., x_d^{α_d})
Ideal q_alpha(std::span<const Polynomial> xs, const LambdaIndex& alpha);

/// ∩_{α ∈ Λ_{s,n}} (I + (y_1^{α_1}, ..., y_s^{α_s})), s = |ys|.
Ideal parametric_intersection(const Ideal& ideal, std::span<const Polynomial> ys, int n);

struct DecompositionRow {
  int n;
  Ideal lhs;  // I + q^n
  Ideal rhs;  // ∩_α (I + q(α))
  bool contained;  // lhs ⊆ rhs
  bool equal;
  std::optional<Polynomial> witness;  // in rhs, not in lhs
};

struct DecompositionReport {
  std::vector<DecompositionRow> rows;
  int n_max = 0;

  bool all_equal() const;
  const DecompositionRow* first_failure() const;
};

/// Compares I + q^n with ∩_α (I + q(α)) for n = 1..n_max. With
/// `stop_at_failure`, rows end at the first inequality. The sequence need not
/// be a system of parameters.
DecompositionReport decomposition_table(const Ideal& ideal, std::span<const Polynomial> ys, int n_max,
                                        bool stop_at_failure = false);

/// decomposition_table for a system of parameters of R/I. Throws
/// InvalidArgument when xs is not one.
DecompositionReport check_parametric_decomposition(const Ideal& ideal, std::span<const Polynomial> xs,
                                                   int n_max);

/// Regular-sequence test of xs on the module upper/lower (lower ⊆ upper):
/// x_m is regular when ((K : x_m) ∩ upper) = K with K = lower + (x_1..x_{m-1})·upper.
/// One flag per tested element; stops after the first non-regular one.
std::vector<bool> regularity_trace(const Ideal& lower, const Ideal& upper, std::span<const Polynomial> xs);

/// R/I is Cohen-Macaulay, given a homogeneous system of parameters xs of R/I.
bool is_cohen_macaulay(const Ideal& ideal, std::span<const Polynomial> xs);

struct LevelTrace {
  std::size_t level;
  int dim;
  std::vector<bool> regular;  // x_1.. x_{d_i} on J_i / J_{i-1}
  bool cohen_macaulay() const;
};

struct SeqCMVerdict {
  bool is_seq_cm;
  std::vector<LevelTrace> levels;
};

/// Each J_i / J_{i-1} (i ≥ 1) is CM iff x_1..x_{d_i} is regular on it.
/// Throws InvalidArgument unless xs is a good system of parameters.
SeqCMVerdict is_sequentially_cm(const DimensionFiltration& f, std::span<const Polynomial> xs);

/// splitmix64 stream element `index` derived from `seed`.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

}  // namespace seqcm
