// Runs the acceptance criteria over the bundled corpus and prints one
// PASS/FAIL line per criterion. Exit status is nonzero when any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>

#include "linear_oracle.hpp"
#include "seqcm/errors.hpp"
#include "seqcm/runner.hpp"
#include "seqcm/verifiers.hpp"

using namespace seqcm;

namespace {

constexpr int kNMax = 4;
constexpr int kSamples = 3;
constexpr std::uint64_t kSeed = 1;

struct Entry {
  ProblemSpec spec;
  Problem problem;
  DimensionFiltration f;
  std::vector<Polynomial> xs;  // a good system of parameters
};

std::vector<Entry> load_corpus() {
  std::vector<std::filesystem::path> paths;
  for (const auto& e : std::filesystem::directory_iterator(SEQCM_CORPUS_DIR))
    if (e.path().extension() == ".json") paths.push_back(e.path());
  std::sort(paths.begin(), paths.end());
  std::vector<Entry> out;
  for (const auto& p : paths) {
    std::ifstream in(p);
    std::stringstream buf;
    buf << in.rdbuf();
    ProblemSpec spec = parse_problem(buf.str());
    Problem problem = build_problem(spec);
    DimensionFiltration f = dimension_filtration(problem.ideal);
    std::vector<Polynomial> xs;
    if (problem.sop && is_good_sop(f, *problem.sop))
      xs = *problem.sop;
    else
      xs = find_good_sop(f, 64, spec.rng_seed).elements;
    out.push_back({std::move(spec), std::move(problem), std::move(f), std::move(xs)});
  }
  return out;
}

Polynomial P(const std::string& s, const RingPtr& r) { return parse_polynomial(s, r); }

bool clean(const CheckReport& r) { return r.overall() == Status::Pass || r.overall() == Status::NotApplicable; }

std::string first_problem(const CheckReport& r) {
  for (const auto& e : r.entries)
    if (e.status == Status::Fail || e.status == Status::Inconclusive)
      return r.name + ": " + e.label + " [" + status_name(e.status) + "] " + e.detail;
  return "";
}

struct Outcome {
  bool pass = true;
  std::string detail;
  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

// Good systems decompose for every n <= 4 on the sequentially CM entries.
Outcome good_sops_decompose(const std::vector<Entry>& corpus) {
  Outcome o;
  int systems = 0, entries = 0;
  for (const auto& e : corpus) {
    if (!e.spec.expected.seq_cm.value_or(false)) continue;
    ++entries;
    for (const auto& sop : sample_good_sops(e.f, kSamples, e.spec.rng_seed)) {
      ++systems;
      if (sop.elements.empty()) continue;
      const auto table = check_parametric_decomposition(e.f.ideal, sop.elements, kNMax);
      if (table.rows.size() != kNMax) o.fail(e.spec.name + ": table is short");
      if (!table.all_equal()) o.fail(e.spec.name + ": " + describe(sop.elements) + " does not decompose");
    }
  }
  if (entries < 4) o.fail("fewer than 4 sequentially CM entries");
  if (o.pass) o.detail = std::to_string(entries) + " entries, " + std::to_string(systems) + " systems, n <= 4";
  return o;
}

// Two planes meeting in a point: the good system (x1+x3, x2+x4) fails with a witness.
Outcome two_planes_witness() {
  Outcome o;
  RingPtr r = make_ring({"x1", "x2", "x3", "x4"}, 32003);
  std::vector<Polynomial> gens{P("x1*x3", r), P("x1*x4", r), P("x2*x3", r), P("x2*x4", r)};
  Ideal ideal(r, gens);
  const auto f = dimension_filtration(MonomialIdeal::from_ideal(ideal));
  const std::vector<Polynomial> xs{P("x1+x3", r), P("x2+x4", r)};
  if (!is_good_sop(f, xs)) o.fail("(x1+x3, x2+x4) is not good");
  const auto table = check_parametric_decomposition(ideal, xs, kNMax);
  const DecompositionRow* bad = table.first_failure();
  if (!bad) {
    o.fail("no failure up to n=4");
    return o;
  }
  if (!bad->witness) {
    o.fail("failure without witness");
    return o;
  }
  const Polynomial& w = *bad->witness;
  if (bad->lhs.normal_form(w).is_zero()) o.fail("witness reduces to zero modulo I + q^n");
  if (oracle::member(w, bad->lhs.generators())) o.fail("oracle puts the witness in I + q^n");
  for (const auto& alpha : lambda_set(2, bad->n)) {
    Ideal qa = ideal + q_alpha(xs, alpha);
    if (!qa.contains(w)) o.fail("witness outside I + q(alpha)");
    if (!oracle::member(w, qa.generators())) o.fail("oracle puts the witness outside I + q(alpha)");
  }
  if (o.pass) o.detail = "n=" + std::to_string(bad->n) + ", witness " + to_string(w);
  return o;
}

// Lengths of M/q^{n+1}M for (xz, yz) and q = (x+z, y).
Outcome xz_yz_lengths() {
  Outcome o;
  RingPtr r = make_ring({"x", "y", "z"}, 32003);
  Ideal ideal(r, {P("x*z", r), P("y*z", r)});
  const auto f = dimension_filtration(MonomialIdeal::from_ideal(ideal));
  const std::vector<Polynomial> xs{P("x+z", r), P("y", r)};
  const auto lengths = level_lengths(f, xs);
  if (lengths.size() != 3 || lengths[1] != 1 || lengths[2] != 1) o.fail("level lengths are not (0, 1, 1)");
  const std::vector<std::uint64_t> expected{2, 5, 9, 14, 20, 27};
  const auto table = hilbert_samuel_table(f, xs, 5);
  const Ideal q(r, xs);
  std::string got;
  for (const auto& row : table) {
    const std::uint64_t n = static_cast<std::uint64_t>(row.n);
    const std::uint64_t formula = (n + 1) + (n + 2) * (n + 1) / 2;
    got += (got.empty() ? "" : ",") + std::to_string(row.measured);
    if (row.measured != expected[n] || row.predicted != formula || !row.match)
      o.fail("n=" + std::to_string(n) + ": measured " + std::to_string(row.measured) + ", predicted " +
             std::to_string(row.predicted));
    const auto oracle_len = oracle::length((ideal + ideal_power(q, row.n + 1)).generators(), 40);
    if (!oracle_len || *oracle_len != row.measured) o.fail("oracle length differs at n=" + std::to_string(n));
  }
  if (o.pass) o.detail = "lengths " + got;
  return o;
}

// (I + q^n) ∩ J_i = I + q^n J_i on the sequentially CM entries.
Outcome power_intersections(const std::vector<Entry>& corpus) {
  Outcome o;
  int checks = 0;
  for (const auto& e : corpus) {
    if (!e.spec.expected.seq_cm.value_or(false) || e.xs.empty()) continue;
    const auto r = verify_power_intersection(e.f, e.xs, kNMax, true);
    checks += static_cast<int>(r.entries.size());
    if (r.overall() != Status::Pass) o.fail(e.spec.name + ": " + first_problem(r));
  }
  if (o.pass) o.detail = std::to_string(checks) + " equalities";
  return o;
}

// Length bound by C(n+d, d) ℓ(M/qM), sharp exactly on the CM entries.
Outcome multiplicity_bound(const std::vector<Entry>& corpus) {
  Outcome o;
  int cm = 0;
  for (const auto& e : corpus) {
    if (e.xs.empty()) continue;
    const bool is_cm = is_cohen_macaulay(e.f.ideal, e.xs);
    if (e.spec.expected.cohen_macaulay && *e.spec.expected.cohen_macaulay != is_cm)
      o.fail(e.spec.name + ": CM verdict disagrees with the corpus");
    cm += is_cm;
    const auto r = verify_multiplicity_bound(e.f.ideal, e.xs, 5);
    if (r.overall() != Status::Pass) o.fail(e.spec.name + ": " + first_problem(r));
  }
  if (o.pass) o.detail = std::to_string(corpus.size()) + " entries, " + std::to_string(cm) + " CM, n <= 5";
  return o;
}

// (y1..ys)^n = ∩ (y1^a1, ..., ys^as) in k[x,y,z] for s <= 3, n <= 4.
Outcome regular_sequence_decomposition() {
  Outcome o;
  RingPtr r = make_ring({"x", "y", "z"}, 32003);
  const std::vector<Polynomial> ys{P("x", r), P("y", r), P("z", r)};
  const auto rep = verify_regular_sequence_decomposition(Ideal::zero(r), ys, kNMax);
  if (rep.overall() != Status::Pass || rep.entries.size() != 12) o.fail(first_problem(rep));
  if (o.pass) o.detail = "12 equalities";
  return o;
}

// Parameter annihilators, intersections with the filtration and the
// consequences of decomposition over k, m, n <= 3.
Outcome oracle_suites(const std::vector<Entry>& corpus) {
  Outcome o;
  int applied = 0, checks = 0;
  for (const auto& e : corpus) {
    if (e.xs.empty()) continue;
    const bool seq = is_sequentially_cm(e.f, e.xs).is_seq_cm;
    const bool decomposes = decomposition_table(e.f.ideal, e.xs, kNMax, true).all_equal();
    std::vector<CheckReport> reports{verify_parameter_annihilators(e.f, e.xs),
                                     verify_cm_quotient_intersection(e.f, e.xs),
                                     verify_parameter_intersection(e.f, e.xs, seq)};
    for (auto& r : verify_decomposition_consequences(e.f.ideal, e.xs, 3, decomposes)) reports.push_back(std::move(r));
    for (const auto& r : reports) {
      if (r.overall() == Status::NotApplicable) continue;
      ++applied;
      checks += static_cast<int>(r.entries.size());
      if (!clean(r)) o.fail(e.spec.name + ": " + first_problem(r));
    }
  }
  if (applied == 0) o.fail("nothing applied");
  if (o.pass) o.detail = std::to_string(applied) + " suites, " + std::to_string(checks) + " checks";
  return o;
}

// Same seed, same bytes.
Outcome determinism(const std::vector<Entry>& corpus) {
  Outcome o;
  for (const auto& e : corpus) {
    const std::string a = report_to_string(run(e.spec, "verify-all"));
    const std::string b = report_to_string(run(e.spec, "verify-all"));
    if (a != b) o.fail(e.spec.name + ": reports differ");
    const RunReport r = report_from_json(nlohmann::ordered_json::parse(a));
    if (r.exit_code != e.spec.expected.exit_code.value_or(0))
      o.fail(e.spec.name + ": exit code " + std::to_string(r.exit_code));
  }
  if (o.pass) o.detail = std::to_string(corpus.size()) + " entries, two runs each";
  return o;
}

// Re-decides a deterministic 10% sample of the recorded equalities by linear algebra.
Outcome audit_equalities(const EqualityAudit& audit) {
  Outcome o;
  const auto& records = audit.records();
  std::vector<std::size_t> idx(records.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::mt19937_64 rng(kSeed);
  std::shuffle(idx.begin(), idx.end(), rng);
  const std::size_t sample = (records.size() + 9) / 10;
  std::size_t agreed = 0;
  for (std::size_t k = 0; k < sample; ++k) {
    const auto& rec = records[idx[k]];
    const auto verdict = oracle::equal(rec.lhs.generators(), rec.rhs.generators());
    if (!verdict) {
      o.fail("sampled equality on non-homogeneous ideals");
    } else if (*verdict != rec.equal) {
      o.fail("oracle disagrees on record " + std::to_string(idx[k]));
    } else {
      ++agreed;
    }
  }
  if (records.empty()) o.fail("no equalities recorded");
  if (o.pass) o.detail = std::to_string(agreed) + "/" + std::to_string(sample) + " sampled of " +
                         std::to_string(records.size()) + " equalities";
  return o;
}

}  // namespace

int main() {
  const auto start = std::chrono::steady_clock::now();
  std::vector<std::pair<std::string, Outcome>> results;
  auto guarded = [&](const std::string& title, const std::function<Outcome()>& body) {
    Outcome o;
    try {
      o = body();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    results.emplace_back(title, o);
  };

  {
    EqualityAudit audit;
    std::vector<Entry> corpus;
    try {
      corpus = load_corpus();
    } catch (const std::exception& e) {
      std::printf("cannot load corpus: %s\n", e.what());
      return 1;
    }
    guarded("good systems decompose on sequentially CM entries", [&] { return good_sops_decompose(corpus); });
    guarded("two planes: decomposition fails with a witness", two_planes_witness);
    guarded("(xz, yz): lengths 2, 5, 9, 14, 20, 27 match the filtration formula", xz_yz_lengths);
    guarded("power of q meets each J_i in q^n J_i", [&] { return power_intersections(corpus); });
    guarded("multiplicity bound, sharp exactly on CM entries", [&] { return multiplicity_bound(corpus); });
    guarded("regular sequences decompose", regular_sequence_decomposition);
    guarded("annihilator, intersection and decomposition consequence suites", [&] { return oracle_suites(corpus); });
    // Determinism runs inside the audit too, so its equalities feed the sample.
    Outcome det;
    try {
      det = determinism(corpus);
    } catch (const std::exception& e) {
      det.fail(std::string("exception: ") + e.what());
    }
    guarded("Groebner equality verdicts agree with the linear-algebra oracle", [&] { return audit_equalities(audit); });
    results.emplace_back("verify-all reports are byte-identical for a fixed seed", det);
  }

  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  Outcome timing;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f s", seconds);
  timing.detail = buf;
  if (seconds >= 60.0) timing.fail(std::string(buf) + " exceeds 60 s");
  results.emplace_back("whole suite under 60 seconds", timing);

  bool all = true;
  for (std::size_t i = 0; i < results.size(); ++i) {
    const auto& [title, o] = results[i];
    all = all && o.pass;
    std::printf("criterion %2zu: %s  %s (%s)\n", i + 1, o.pass ? "PASS" : "FAIL", title.c_str(), o.detail.c_str());
  }
  return all ? 0 : 1;
}
