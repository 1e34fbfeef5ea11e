#include "seqcm/verifiers.hpp"

#include <random>

namespace seqcm {

namespace {

std::string str(int v) { return std::to_string(v); }

Ideal generated(const RingPtr& ring, std::span<const Polynomial> xs) {
  return Ideal(ring, std::vector<Polynomial>(xs.begin(), xs.end()));
}

Ideal prefix(const RingPtr& ring, std::span<const Polynomial> xs, std::size_t i) {
  return generated(ring, xs.first(i));
}

// A ∩ B, skipping the elimination when one side is the unit ideal.
Ideal meet(const Ideal& a, const Ideal& b) {
  if (a.is_unit()) return b;
  if (b.is_unit()) return a;
  return ideal_intersect(a, b);
}

std::uint64_t binomial(int n, int k) {
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

std::string failure_detail(const DecompositionRow& row) {
  std::string s = "fails at n=" + str(row.n);
  if (row.witness) s += ", witness " + to_string(*row.witness);
  return s;
}

// Smallest index s with chain[s] = chain[s+1], where chain[n] = base : x^n.
std::vector<Ideal> colon_chain(const Ideal& base, const Polynomial& x) {
  std::vector<Ideal> chain{base};
  for (int n = 1; n <= kSaturationIterationCap; ++n) {
    Ideal next = ideal_colon(chain.back(), x);
    if (ideal_equal(next, chain.back())) return chain;
    chain.push_back(std::move(next));
  }
  throw IterationLimit("colon chain did not stabilize");
}

const Ideal& chain_at(const std::vector<Ideal>& chain, std::size_t n) {
  return chain[std::min(n, chain.size() - 1)];
}

}  // namespace

std::vector<SOP> sample_good_sops(const DimensionFiltration& f, int count, std::uint64_t seed, int attempts) {
  std::vector<SOP> out;
  for (int k = 0; k < count; ++k)
    out.push_back(find_good_sop(f, attempts, derive_seed(seed, static_cast<std::uint64_t>(k))));
  return out;
}

std::vector<std::vector<Polynomial>> sample_linear_sops(const Ideal& ideal, int count, std::uint64_t seed,
                                                        int attempts) {
  const RingPtr& ring = ideal.ring();
  const int d = krull_dim(ideal);
  const std::size_t v = ring->num_vars();
  const std::uint64_t p = ring->field().characteristic();
  std::vector<std::vector<Polynomial>> out;
  for (int k = 0; k < count; ++k) {
    std::mt19937_64 rng(derive_seed(seed ^ 0x5bd1e995ULL, static_cast<std::uint64_t>(k)));
    bool found = false;
    std::string last = "none";
    for (int a = 0; a < attempts && !found; ++a) {
      std::vector<Polynomial> xs;
      for (int j = 0; j < d; ++j) {
        std::vector<Term> terms;
        for (std::size_t i = 0; i < v; ++i)
          terms.push_back({FieldElement{static_cast<std::uint32_t>(rng() % p)}, Monomial::variable(v, i)});
        xs.push_back(Polynomial::from_terms(ring, std::move(terms)));
      }
      if (std::any_of(xs.begin(), xs.end(), [](const Polynomial& x) { return x.is_zero(); })) continue;
      if (is_sop(ideal, xs)) {
        out.push_back(std::move(xs));
        found = true;
      } else {
        last = describe(xs);
      }
    }
    if (!found) throw SearchFailure("no linear system of parameters found", last);
  }
  return out;
}

CheckReport verify_good_sop_decomposition(const DimensionFiltration& f, std::span<const SOP> samples, int n_max,
                                          bool seq_cm, std::vector<DecompositionReport>* tables) {
  CheckReport report{"good parameter systems decompose iff sequentially CM", {}};
  for (std::size_t k = 0; k < samples.size(); ++k) {
    const auto& xs = samples[k].elements;
    const std::string label = "sop " + std::to_string(k + 1) + " " + describe(xs);
    if (xs.empty()) {
      report.add(label, Status::NotApplicable, "dimension 0");
      continue;
    }
    DecompositionReport table = decomposition_table(f.ideal, xs, n_max, !seq_cm);
    for (const auto& row : table.rows)
      if (!row.contained) report.add(label + " n=" + str(row.n) + " containment", false, "I + q^n not in intersection");
    const DecompositionRow* bad = table.first_failure();
    if (seq_cm)
      report.add(label, bad == nullptr, bad ? failure_detail(*bad) : "equal for n <= " + str(n_max));
    else if (bad)
      report.add(label, Status::Pass, failure_detail(*bad));
    else
      report.add(label, Status::Inconclusive, "no failure up to n=" + str(n_max));
    if (tables) tables->push_back(std::move(table));
  }
  return report;
}

CheckReport verify_power_intersection(const DimensionFiltration& f, std::span<const Polynomial> xs, int n_max,
                                      bool seq_cm) {
  CheckReport report{"q^n M meets D_i in q^n D_i", {}};
  if (!seq_cm || xs.empty()) {
    report.add("hypothesis", Status::NotApplicable, seq_cm ? "dimension 0" : "module is not sequentially CM");
    return report;
  }
  const RingPtr& ring = f.ideal.ring();
  const Ideal q = generated(ring, xs);
  for (int n = 1; n <= n_max; ++n) {
    const Ideal qn = ideal_power(q, n);
    const Ideal lhs_base = f.ideal + qn;
    for (std::size_t i = 0; i < f.levels.size(); ++i) {
      Ideal lhs = meet(lhs_base, f.J(i));
      Ideal rhs = f.ideal + qn * f.J(i);
      report.add("level " + std::to_string(i) + " n=" + str(n), ideal_equal(lhs, rhs));
    }
  }
  return report;
}

std::vector<std::uint64_t> level_lengths(const DimensionFiltration& f, std::span<const Polynomial> xs) {
  const Ideal q = generated(f.ideal.ring(), xs);
  std::vector<std::uint64_t> out;
  for (std::size_t i = 0; i < f.levels.size(); ++i) {
    const Ideal& below = i == 0 ? f.ideal : f.J(i - 1);
    out.push_back(length_of_quotient(SubquotientHandle(f.J(i), below + q * f.J(i))));
  }
  return out;
}

std::vector<HilbertSamuelRow> hilbert_samuel_table(const DimensionFiltration& f, std::span<const Polynomial> xs,
                                                   int n_max) {
  const Ideal q = generated(f.ideal.ring(), xs);
  const auto lengths = level_lengths(f, xs);
  std::vector<HilbertSamuelRow> rows;
  for (int n = 0; n <= n_max; ++n) {
    std::uint64_t predicted = 0;
    for (std::size_t i = 0; i < f.levels.size(); ++i) predicted += binomial(n + f.d(i), f.d(i)) * lengths[i];
    const std::uint64_t measured = hilbert_samuel(f.ideal, q, n);
    rows.push_back({n, measured, predicted, measured == predicted});
  }
  return rows;
}

CheckReport verify_hilbert_samuel_formula(std::span<const HilbertSamuelRow> table, bool seq_cm) {
  CheckReport report{"Hilbert-Samuel function from the dimension filtration", {}};
  bool mismatch = false;
  for (const auto& row : table) {
    const std::string detail = "measured " + std::to_string(row.measured) + ", predicted " + std::to_string(row.predicted);
    report.add("n=" + str(row.n) + " bound", row.measured <= row.predicted, detail);
    if (seq_cm) report.add("n=" + str(row.n) + " equality", row.match, detail);
    mismatch = mismatch || !row.match;
  }
  if (!seq_cm)
    report.add("formula fails somewhere", mismatch ? Status::Pass : Status::Inconclusive,
               mismatch ? "mismatch witnessed" : "formula held for every n checked");
  return report;
}

CheckReport verify_multiplicity_bound(const Ideal& ideal, std::span<const Polynomial> xs, int n_max) {
  CheckReport report{"length bound by the multiplicity of the parameter ideal", {}};
  if (xs.empty()) {
    report.add("hypothesis", Status::NotApplicable, "dimension 0");
    return report;
  }
  const Ideal q = generated(ideal.ring(), xs);
  const int d = static_cast<int>(xs.size());
  const bool cm = is_cohen_macaulay(ideal, xs);
  const std::uint64_t base = hilbert_samuel(ideal, q, 0);
  bool strict = false;
  for (int n = 0; n <= n_max; ++n) {
    const std::uint64_t h = hilbert_samuel(ideal, q, n);
    const std::uint64_t bound = binomial(n + d, d) * base;
    const std::string detail = "length " + std::to_string(h) + ", bound " + std::to_string(bound);
    report.add("n=" + str(n) + " bound", h <= bound, detail);
    if (cm) report.add("n=" + str(n) + " equality (CM)", h == bound, detail);
    strict = strict || h < bound;
  }
  if (!cm)
    report.add("strict somewhere (not CM)", strict ? Status::Pass : Status::Inconclusive,
               strict ? "strict inequality witnessed" : "equality for every n checked");
  return report;
}

CheckReport verify_all_sops_criterion(const DimensionFiltration& f, int samples, int n_max, std::uint64_t seed) {
  CheckReport report{"every parameter system decomposes iff M/H0 is CM and m kills H0", {}};
  if (f.dim() < 2) {
    report.add("hypothesis", Status::NotApplicable, "dimension below 2");
    return report;
  }
  const RingPtr& ring = f.ideal.ring();
  const Ideal& sat = f.J(0);
  const auto sops = sample_linear_sops(f.ideal, samples, seed);
  const bool sat_cm = is_cohen_macaulay(sat, sops.front());
  const bool killed = ideal_contains(f.ideal, Ideal::maximal(ring) * sat);
  const bool condition = sat_cm && killed;
  report.add("condition", Status::Pass,
             std::string("quotient by H0 ") + (sat_cm ? "is" : "is not") + " CM, m·H0 " + (killed ? "=" : "!=") + " 0");

  bool witnessed = false;
  for (std::size_t k = 0; k < sops.size(); ++k) {
    DecompositionReport table = decomposition_table(f.ideal, sops[k], n_max, true);
    const DecompositionRow* bad = table.first_failure();
    const std::string label = "sample " + std::to_string(k + 1) + " " + describe(sops[k]);
    if (condition)
      report.add(label, bad == nullptr, bad ? failure_detail(*bad) : "equal for n <= " + str(n_max));
    else
      report.add(label, Status::Pass, bad ? failure_detail(*bad) : "equal for n <= " + str(n_max));
    witnessed = witnessed || bad != nullptr;
  }
  if (!condition)
    report.add("some parameter system fails", witnessed ? Status::Pass : Status::Inconclusive,
               witnessed ? "failure witnessed" : "no sampled system failed");
  return report;
}

CheckReport verify_regular_sequence_decomposition(const Ideal& ideal, std::span<const Polynomial> ys, int n_max) {
  CheckReport report{"regular sequences decompose", {}};
  const auto trace = regularity_trace(ideal, Ideal::unit(ideal.ring()), ys);
  if (trace.size() != ys.size() || !std::all_of(trace.begin(), trace.end(), [](bool b) { return b; })) {
    report.add("hypothesis", Status::NotApplicable, "sequence is not regular");
    return report;
  }
  for (std::size_t s = 1; s <= ys.size(); ++s) {
    const auto table = decomposition_table(ideal, ys.first(s), n_max);
    for (const auto& row : table.rows)
      report.add("s=" + std::to_string(s) + " n=" + str(row.n), row.equal,
                 row.equal ? "" : failure_detail(row));
  }
  return report;
}

std::vector<CheckReport> verify_decomposition_consequences(const Ideal& ideal, std::span<const Polynomial> xs,
                                                           int bound, bool decomposes) {
  CheckReport prefixes{"prefixes of a decomposing sequence decompose", {}};
  CheckReport powers{"power intersections lie in a higher power", {}};
  CheckReport mixed{"power intersections lie in the mixed ideal", {}};
  CheckReport colons{"colon ideals stabilize to q_i + (0 : x_j^k)", {}};
  if (!decomposes || xs.empty()) {
    for (CheckReport* r : {&prefixes, &powers, &mixed, &colons})
      r->add("hypothesis", Status::NotApplicable, xs.empty() ? "dimension 0" : "sequence does not decompose");
    return {prefixes, powers, mixed, colons};
  }
  const RingPtr& ring = ideal.ring();
  const std::size_t s = xs.size();

  for (std::size_t i = 1; i < s; ++i) {
    const auto table = decomposition_table(ideal, xs.first(i), bound);
    for (const auto& row : table.rows)
      prefixes.add("i=" + std::to_string(i) + " n=" + str(row.n), row.equal, row.equal ? "" : failure_detail(row));
  }

  for (std::size_t i = 1; i < s; ++i) {
    const Ideal qi = prefix(ring, xs, i);
    const Ideal qi1 = prefix(ring, xs, i + 1);
    const Polynomial& y = xs[i];
    for (int k = 1; k <= bound; ++k) {
      const Polynomial yk = y.pow(static_cast<unsigned>(k));
      for (int m = 1; m <= bound; ++m) {
        const Ideal lhs = ideal_intersect(ideal + yk, ideal + ideal_power(qi, m));
        const std::string label = "i=" + std::to_string(i) + " k=" + str(k) + " m=" + str(m);
        powers.add(label, ideal_contains(ideal + ideal_power(qi1, k + m), lhs));
        mixed.add(label, ideal_contains(ideal + yk * qi1 + ideal_power(qi, m + 1), lhs));
      }
    }
  }

  for (std::size_t i = 1; i < s; ++i) {
    const Ideal base = ideal + prefix(ring, xs, i);
    for (std::size_t j = i + 1; j <= s; ++j) {
      const Polynomial& x = xs[j - 1];
      const auto upper = colon_chain(base, x);
      const auto zero = colon_chain(ideal, x);
      const std::size_t stable = std::max<std::size_t>({upper.size() - 1, zero.size() - 1, 1});
      // smallest k with (I + q_i) : x^n = (I + q_i) + (I : x^k) for k ≤ n ≤ stable
      std::size_t found = 0;
      for (std::size_t k = 1; k <= stable && found == 0; ++k) {
        const Ideal rhs = base + chain_at(zero, k);
        bool all = true;
        for (std::size_t n = k; n <= stable && all; ++n) all = ideal_equal(chain_at(upper, n), rhs);
        if (all) found = k;
      }
      colons.add("i=" + std::to_string(i) + " j=" + std::to_string(j), found != 0,
                 found ? "k=" + std::to_string(found) + ", chains stable from n=" + std::to_string(stable)
                       : "no k up to " + std::to_string(stable));
    }
  }
  if (s < 2) {
    for (CheckReport* r : {&prefixes, &powers, &mixed, &colons})
      r->add("range", Status::NotApplicable, "needs at least two parameters");
  }
  return {prefixes, powers, mixed, colons};
}

CheckReport verify_cm_quotient_intersection(const DimensionFiltration& f, std::span<const Polynomial> xs) {
  CheckReport report{"parameter ideals meet N in q N when M/N is CM", {}};
  const RingPtr& ring = f.ideal.ring();
  for (std::size_t lvl = 0; lvl + 1 < f.levels.size(); ++lvl) {
    const Ideal& n = f.J(lvl);
    if (!is_cohen_macaulay(n, xs)) {
      report.add("level " + std::to_string(lvl), Status::NotApplicable, "M/D is not CM");
      continue;
    }
    for (std::size_t i = 1; i <= xs.size(); ++i) {
      const Ideal qi = prefix(ring, xs, i);
      report.add("level " + std::to_string(lvl) + " i=" + std::to_string(i),
                 ideal_equal(ideal_intersect(f.ideal + qi, n), f.ideal + qi * n));
    }
  }
  if (report.entries.empty()) report.add("levels", Status::NotApplicable, "filtration has a single level");
  return report;
}

CheckReport verify_parameter_intersection(const DimensionFiltration& f, std::span<const Polynomial> xs,
                                          bool seq_cm) {
  CheckReport report{"qM meets D_i in the first d_i parameters times D_i", {}};
  if (!seq_cm) {
    report.add("hypothesis", Status::NotApplicable, "module is not sequentially CM");
    return report;
  }
  const RingPtr& ring = f.ideal.ring();
  const Ideal q = generated(ring, xs);
  for (std::size_t i = 1; i + 1 < f.levels.size(); ++i) {
    const Ideal qd = prefix(ring, xs, static_cast<std::size_t>(f.d(i)));
    report.add("level " + std::to_string(i), ideal_equal(ideal_intersect(f.ideal + q, f.J(i)), f.ideal + qd * f.J(i)));
  }
  if (report.entries.empty()) report.add("levels", Status::NotApplicable, "no intermediate levels");
  return report;
}

}  // namespace seqcm
