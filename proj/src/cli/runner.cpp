#include "seqcm/runner.hpp"

#include <algorithm>

#include "seqcm/errors.hpp"
#include "seqcm/verifiers.hpp"

namespace seqcm {

using nlohmann::ordered_json;

namespace {

constexpr int kSearchAttempts = 64;
constexpr int kConsequenceBound = 3;

ordered_json poly_list(std::span<const Polynomial> xs) {
  ordered_json out = ordered_json::array();
  for (const auto& x : xs) out.push_back(to_string(x));
  return out;
}

ordered_json filtration_json(const DimensionFiltration& f) {
  ordered_json levels = ordered_json::array();
  for (std::size_t i = 0; i < f.levels.size(); ++i)
    levels.push_back({{"index", i},
                      {"dim", f.d(i)},
                      {"empty", f.levels[i].empty},
                      {"generators", canonical_generators(f.J(i))}});
  return {{"ideal", to_string(f.monomial)}, {"dim", f.dim()}, {"length", f.length()}, {"levels", levels}};
}

ordered_json table_json(const DecompositionReport& table) {
  ordered_json rows = ordered_json::array();
  for (const auto& row : table.rows) {
    ordered_json r{{"n", row.n},
                   {"lhs", canonical_generators(row.lhs)},
                   {"rhs", canonical_generators(row.rhs)},
                   {"contained", row.contained},
                   {"equal", row.equal}};
    r["witness"] = row.witness ? ordered_json(to_string(*row.witness)) : ordered_json(nullptr);
    rows.push_back(std::move(r));
  }
  return {{"n_max", table.n_max}, {"all_equal", table.all_equal()}, {"rows", rows}};
}

/// Everything one run may need, computed on demand.
class Session {
 public:
  explicit Session(const ProblemSpec& spec)
      : spec_(spec), problem_(build_problem(spec)), f_(dimension_filtration(problem_.ideal)) {}

  const ProblemSpec& spec() const { return spec_; }
  const DimensionFiltration& f() const { return f_; }
  const Ideal& ideal() const { return f_.ideal; }

  /// The input sop if it is one, else a searched good one. With
  /// `require_good`, an input sop that is not good is an input error.
  const SOP& sop(bool require_good) {
    if (!sop_) {
      if (problem_.sop) {
        const auto& xs = *problem_.sop;
        if (static_cast<int>(xs.size()) != f_.dim())
          throw InvalidArgument("sop has " + std::to_string(xs.size()) + " elements, dimension is " +
                                std::to_string(f_.dim()));
        SOP s{xs, is_sop(f_.ideal, xs), false, {}};
        if (!s.is_sop) throw InvalidArgument("sop is not a system of parameters of R/I");
        s.is_good = is_good_sop(f_, xs);
        for (const auto& x : xs) s.degrees.push_back(x.degree());
        sop_ = std::move(s);
        from_input_ = true;
      } else {
        sop_ = find_good_sop(f_, kSearchAttempts, spec_.rng_seed);
      }
    }
    if (require_good && !sop_->is_good) throw InvalidArgument("sop is not a good system of parameters");
    return *sop_;
  }

  /// A good system of parameters: the input one when good, else searched.
  const SOP& good_sop() {
    const SOP& s = sop(false);
    if (s.is_good) return s;
    if (!searched_) searched_ = find_good_sop(f_, kSearchAttempts, spec_.rng_seed);
    return *searched_;
  }

  const SeqCMVerdict& verdict() {
    if (!verdict_) verdict_ = is_sequentially_cm(f_, good_sop().elements);
    return *verdict_;
  }

  bool cohen_macaulay() {
    if (!cm_) cm_ = is_cohen_macaulay(f_.ideal, good_sop().elements);
    return *cm_;
  }

  ordered_json sop_json(const SOP& s) {
    const auto& xs = s.elements;
    ordered_json dims = ordered_json::array();
    Ideal acc = f_.ideal;
    for (const auto& x : xs) {
      acc = acc + x;
      dims.push_back(dim_or_empty(acc));
    }
    ordered_json good = ordered_json::array();
    for (std::size_t i = 0; i + 1 < f_.levels.size(); ++i) {
      Ideal tail = f_.ideal;
      for (std::size_t j = static_cast<std::size_t>(f_.d(i)); j < xs.size(); ++j) tail = tail + xs[j];
      good.push_back({{"level", i}, {"meets_tail_in_I", ideal_equal(ideal_intersect(f_.J(i), tail), f_.ideal)}});
    }
    return {{"source", from_input_ && &s == &*sop_ ? "input" : "search"},
            {"elements", poly_list(xs)},
            {"degrees", s.degrees},
            {"is_sop", s.is_sop},
            {"is_good", s.is_good},
            {"dims_after_prefix", dims},
            {"goodness", good}};
  }

  ordered_json verdict_json() {
    const auto& v = verdict();
    ordered_json levels = ordered_json::array();
    for (const auto& t : v.levels) {
      ordered_json failed = nullptr;
      for (std::size_t m = 0; m < t.regular.size(); ++m)
        if (!t.regular[m]) failed = m + 1;
      levels.push_back({{"level", t.level},
                        {"dim", t.dim},
                        {"regular", t.regular},
                        {"failed_at", failed},
                        {"cohen_macaulay", t.cohen_macaulay()}});
    }
    return {{"sop", poly_list(good_sop().elements)},
            {"is_seq_cm", v.is_seq_cm},
            {"cohen_macaulay", cohen_macaulay()},
            {"levels", levels}};
  }

 private:
  ProblemSpec spec_;
  Problem problem_;
  DimensionFiltration f_;
  std::optional<SOP> sop_;
  std::optional<SOP> searched_;
  bool from_input_ = false;
  std::optional<SeqCMVerdict> verdict_;
  std::optional<bool> cm_;
};

CheckReport filtration_checks(const DimensionFiltration& f) {
  CheckReport r{"dimension filtration", {}};
  r.add("I in J_0", ideal_contains(f.J(0), f.ideal));
  for (std::size_t i = 1; i < f.levels.size(); ++i)
    r.add("J_" + std::to_string(i - 1) + " in J_" + std::to_string(i), ideal_contains(f.J(i), f.J(i - 1)));
  r.add("J_t = R", f.J(f.length()).is_unit());
  r.add("J_0 = sat_m(I)", ideal_equal(f.J(0), ideal_saturation(f.ideal, Ideal::maximal(f.ideal.ring()))));
  r.add("d_t = dim R/I", f.dim() == krull_dim(f.ideal));
  for (std::size_t i = 0; i < f.levels.size(); ++i) {
    if (f.levels[i].empty) continue;
    // dim of J_i / J_{i-1} read off its annihilator
    const Ideal& below = i == 0 ? f.ideal : f.J(i - 1);
    const int dim = dim_or_empty(ideal_colon(below, f.J(i)));
    r.add("dim D_" + std::to_string(i) + " = d_" + std::to_string(i), dim == f.d(i), "dim " + std::to_string(dim));
  }
  return r;
}

CheckReport sop_checks(const SOP& s) {
  CheckReport r{"system of parameters certificates", {}};
  r.add("system of parameters", s.is_sop, describe(s.elements));
  r.add("good", s.is_good);
  return r;
}

CheckReport verdict_checks(Session& s) {
  CheckReport r{"sequentially Cohen-Macaulay verdict", {}};
  const auto& v = s.verdict();
  const bool all_levels = std::all_of(v.levels.begin(), v.levels.end(), [](const LevelTrace& t) {
    return t.cohen_macaulay();
  });
  r.add("verdict agrees with level traces", v.is_seq_cm == all_levels);
  if (s.cohen_macaulay()) r.add("CM implies sequentially CM", v.is_seq_cm);
  if (s.f().dim() <= 1) r.add("dimension at most 1 implies sequentially CM", v.is_seq_cm);
  return r;
}

CheckReport expected_checks(Session& s, bool with_exit_code, int exit_code) {
  CheckReport r{"expected verdicts", {}};
  const auto& ex = s.spec().expected;
  auto yes_no = [](bool b) { return std::string(b ? "true" : "false"); };
  if (ex.seq_cm) {
    const bool got = s.verdict().is_seq_cm;
    r.add("sequentially CM", got == *ex.seq_cm, "expected " + yes_no(*ex.seq_cm) + ", got " + yes_no(got));
  }
  if (ex.cohen_macaulay) {
    const bool got = s.cohen_macaulay();
    r.add("Cohen-Macaulay", got == *ex.cohen_macaulay,
          "expected " + yes_no(*ex.cohen_macaulay) + ", got " + yes_no(got));
  }
  if (with_exit_code && ex.exit_code)
    r.add("exit code", exit_code == *ex.exit_code,
          "expected " + std::to_string(*ex.exit_code) + ", got " + std::to_string(exit_code));
  return r;
}

void run_filtration(Session& s, RunReport& out) {
  out.sections["filtration"] = filtration_json(s.f());
  out.checks.push_back(filtration_checks(s.f()));
}

void run_goodsop(Session& s, RunReport& out) {
  const SOP& sop = s.sop(true);
  out.sections["filtration"] = filtration_json(s.f());
  out.sections["sop"] = s.sop_json(sop);
  out.checks.push_back(sop_checks(sop));
  out.checks.push_back(verify_parameter_annihilators(s.f(), sop.elements));
}

void run_paramdecomp(Session& s, RunReport& out) {
  const SOP& sop = s.sop(false);
  const int n_max = s.spec().n_max;
  out.sections["sop"] = s.sop_json(sop);
  if (sop.elements.empty()) {
    CheckReport r{"parametric decomposition", {}};
    r.add("decomposition", Status::NotApplicable, "dimension 0");
    out.checks.push_back(std::move(r));
    return;
  }
  if (sop.is_good) {
    std::vector<DecompositionReport> tables;
    const SOP samples[] = {sop};
    out.checks.push_back(verify_good_sop_decomposition(s.f(), samples, n_max, s.verdict().is_seq_cm, &tables));
    out.sections["decomposition"] = table_json(tables.front());
  } else {
    const DecompositionReport table = check_parametric_decomposition(s.ideal(), sop.elements, n_max);
    CheckReport r{"parametric decomposition of a system that is not good", {}};
    for (const auto& row : table.rows)
      r.add("n=" + std::to_string(row.n) + " containment", row.contained, "I + q^n in the intersection");
    out.checks.push_back(std::move(r));
    out.sections["decomposition"] = table_json(table);
  }
  out.sections["seqcm"] = s.verdict_json();
}

void run_seqcm(Session& s, RunReport& out) {
  s.sop(true);
  out.sections["seqcm"] = s.verdict_json();
  out.checks.push_back(verdict_checks(s));
  out.checks.push_back(expected_checks(s, false, 0));
}

void run_hilbert_samuel(Session& s, RunReport& out) {
  const auto& xs = s.sop(true).elements;
  const auto lengths = level_lengths(s.f(), xs);
  const auto table = hilbert_samuel_table(s.f(), xs, s.spec().n_max);
  ordered_json rows = ordered_json::array();
  for (const auto& row : table)
    rows.push_back({{"n", row.n}, {"measured", row.measured}, {"predicted", row.predicted}, {"match", row.match}});
  out.sections["hilbert_samuel"] = {{"sop", poly_list(xs)}, {"level_lengths", lengths}, {"rows", rows}};
  out.checks.push_back(verify_hilbert_samuel_formula(table, s.verdict().is_seq_cm));
  out.checks.push_back(verify_multiplicity_bound(s.ideal(), xs, s.spec().n_max));
}

void run_verify_all(Session& s, RunReport& out) {
  const int n_max = s.spec().n_max;
  run_filtration(s, out);
  run_goodsop(s, out);
  const auto& xs = s.sop(true).elements;
  const bool seq = s.verdict().is_seq_cm;
  out.checks.push_back(verdict_checks(s));
  run_paramdecomp(s, out);

  const auto samples = sample_good_sops(s.f(), s.spec().sop_samples, s.spec().rng_seed);
  std::vector<DecompositionReport> tables;
  out.checks.push_back(verify_good_sop_decomposition(s.f(), samples, n_max, seq, &tables));
  ordered_json decomp = ordered_json::array();
  for (std::size_t k = 0; k < samples.size(); ++k) {
    ordered_json entry{{"sop", s.sop_json(samples[k])}};
    entry["table"] = k < tables.size() ? table_json(tables[k]) : ordered_json(nullptr);
    decomp.push_back(std::move(entry));
  }
  out.sections["good_sop_samples"] = decomp;

  run_hilbert_samuel(s, out);
  out.checks.push_back(verify_power_intersection(s.f(), xs, n_max, seq));
  out.checks.push_back(verify_parameter_intersection(s.f(), xs, seq));
  out.checks.push_back(verify_cm_quotient_intersection(s.f(), xs));
  out.checks.push_back(verify_all_sops_criterion(s.f(), s.spec().sop_samples, n_max, s.spec().rng_seed));
  if (!xs.empty()) {
    out.checks.push_back(verify_regular_sequence_decomposition(s.ideal(), xs, n_max));
    const bool decomposes = decomposition_table(s.ideal(), xs, n_max, true).all_equal();
    for (auto& r : verify_decomposition_consequences(s.ideal(), xs, kConsequenceBound, decomposes))
      out.checks.push_back(std::move(r));
  }

  // The exit code the file expects is compared against what the run would
  // give without this comparison.
  out.finalize();
  out.checks.push_back(expected_checks(s, true, out.exit_code));
}

}  // namespace

RunReport run(const ProblemSpec& spec, const std::string& command) {
  RunReport out;
  out.command = command;
  out.problem = spec;
  try {
    if (std::find(known_commands().begin(), known_commands().end(), command) == known_commands().end())
      throw InvalidArgument("unknown command \"" + command + "\"");
    Session s(spec);
    if (command == "filtration") run_filtration(s, out);
    else if (command == "goodsop") run_goodsop(s, out);
    else if (command == "paramdecomp") run_paramdecomp(s, out);
    else if (command == "seqcm") run_seqcm(s, out);
    else if (command == "hilbert-samuel") run_hilbert_samuel(s, out);
    else run_verify_all(s, out);
  } catch (const SearchFailure& e) {
    out.error = std::string("search failed: ") + e.what() + "; last candidate " + e.last_counterexample();
    out.exit_code = kInconclusive;
  } catch (const IterationLimit& e) {
    out.error = std::string("iteration limit: ") + e.what();
    out.exit_code = kInconclusive;
  } catch (const InvalidArgument& e) {
    out.error = e.what();
    out.exit_code = kInputError;
  } catch (const ParseError& e) {
    out.error = e.what();
    out.exit_code = kInputError;
  } catch (const NotHomogeneous& e) {
    out.error = e.what();
    out.exit_code = kInputError;
  } catch (const Error& e) {
    out.error = std::string("internal error: ") + e.what();
    out.exit_code = kCheckFailed;
  }
  out.finalize();
  return out;
}

}  // namespace seqcm
