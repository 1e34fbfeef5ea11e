#include "seqcm/parametric.hpp"

#include <algorithm>

namespace seqcm {

namespace {

void compositions(int parts, int total, std::vector<int>& cur, std::vector<LambdaIndex>& out, int n) {
  if (parts == 1) {
    cur.push_back(total);
    out.push_back({cur, n});
    cur.pop_back();
    return;
  }
  for (int first = 1; first <= total - (parts - 1); ++first) {
    cur.push_back(first);
    compositions(parts - 1, total - first, cur, out, n);
    cur.pop_back();
  }
}

Ideal generated(const RingPtr& ring, std::span<const Polynomial> xs) {
  return Ideal(ring, std::vector<Polynomial>(xs.begin(), xs.end()));
}

}  // namespace

std::vector<LambdaIndex> lambda_set(int d, int n) {
  if (d < 1) throw InvalidArgument("lambda set needs d >= 1");
  if (n < 1) throw InvalidArgument("lambda set needs n >= 1");
  std::vector<LambdaIndex> out;
  std::vector<int> cur;
  compositions(d, d + n - 1, cur, out, n);
  return out;
}

Ideal q_alpha(std::span<const Polynomial> xs, const LambdaIndex& alpha) {
  if (xs.size() != alpha.alpha.size() || xs.empty())
    throw InvalidArgument("exponent vector and sequence lengths differ");
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < xs.size(); ++i) gens.push_back(xs[i].pow(static_cast<unsigned>(alpha.alpha[i])));
  return Ideal(xs.front().ring(), std::move(gens));
}

Ideal parametric_intersection(const Ideal& ideal, std::span<const Polynomial> ys, int n) {
  std::vector<Ideal> parts;
  for (const auto& a : lambda_set(static_cast<int>(ys.size()), n)) parts.push_back(ideal + q_alpha(ys, a));
  return ideal_intersect(parts);
}

bool DecompositionReport::all_equal() const {
  return std::all_of(rows.begin(), rows.end(), [](const DecompositionRow& r) { return r.equal; });
}

const DecompositionRow* DecompositionReport::first_failure() const {
  for (const auto& r : rows)
    if (!r.equal) return &r;
  return nullptr;
}

DecompositionReport decomposition_table(const Ideal& ideal, std::span<const Polynomial> ys, int n_max,
                                        bool stop_at_failure) {
  if (n_max < 1) throw InvalidArgument("n_max must be at least 1");
  if (ys.empty()) throw InvalidArgument("decomposition needs a nonempty sequence");
  DecompositionReport report;
  report.n_max = n_max;
  const Ideal q = generated(ideal.ring(), ys);
  for (int n = 1; n <= n_max; ++n) {
    Ideal lhs = ideal + ideal_power(q, n);
    Ideal rhs = parametric_intersection(ideal, ys, n);
    DecompositionRow row{n, lhs, rhs, ideal_contains(rhs, lhs), false, std::nullopt};
    row.equal = row.contained && ideal_equal(lhs, rhs);
    if (!row.equal) {
      for (const auto& g : rhs.groebner_basis()) {
        if (!lhs.normal_form(g).is_zero()) {
          row.witness = g;
          break;
        }
      }
    }
    report.rows.push_back(std::move(row));
    if (stop_at_failure && !report.rows.back().equal) break;
  }
  return report;
}

DecompositionReport check_parametric_decomposition(const Ideal& ideal, std::span<const Polynomial> xs,
                                                   int n_max) {
  if (!is_sop(ideal, std::vector<Polynomial>(xs.begin(), xs.end())))
    throw InvalidArgument("sequence is not a system of parameters");
  return decomposition_table(ideal, xs, n_max);
}

std::vector<bool> regularity_trace(const Ideal& lower, const Ideal& upper, std::span<const Polynomial> xs) {
  std::vector<bool> out;
  Ideal k = lower;
  for (const auto& x : xs) {
    Ideal colon = ideal_colon(k, x);
    if (!upper.is_unit()) colon = ideal_intersect(colon, upper);
    const bool regular = ideal_equal(colon, k);
    out.push_back(regular);
    if (!regular) break;
    k = k + (upper.is_unit() ? Ideal(k.ring(), {x}) : x * upper);
  }
  return out;
}

bool is_cohen_macaulay(const Ideal& ideal, std::span<const Polynomial> xs) {
  auto trace = regularity_trace(ideal, Ideal::unit(ideal.ring()), xs);
  return std::all_of(trace.begin(), trace.end(), [](bool b) { return b; }) && trace.size() == xs.size();
}

bool LevelTrace::cohen_macaulay() const {
  return regular.size() == static_cast<std::size_t>(dim) &&
         std::all_of(regular.begin(), regular.end(), [](bool b) { return b; });
}

SeqCMVerdict is_sequentially_cm(const DimensionFiltration& f, std::span<const Polynomial> xs) {
  std::vector<Polynomial> v(xs.begin(), xs.end());
  if (!is_good_sop(f, v)) throw InvalidArgument("sequence is not a good system of parameters");
  SeqCMVerdict verdict{true, {}};
  for (std::size_t i = 1; i < f.levels.size(); ++i) {
    LevelTrace trace{i, f.d(i), {}};
    trace.regular = regularity_trace(f.J(i - 1), f.J(i), xs.first(static_cast<std::size_t>(f.d(i))));
    verdict.is_seq_cm = verdict.is_seq_cm && trace.cohen_macaulay();
    verdict.levels.push_back(std::move(trace));
  }
  return verdict;
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + (index + 1) * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace seqcm
