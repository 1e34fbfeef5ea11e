#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "seqcm/errors.hpp"
#include "seqcm/runner.hpp"

namespace {

int input_error(const std::string& msg) {
  std::cerr << "seqcm-lab: " << msg << '\n';
  return seqcm::kInputError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dimension filtrations, good parameter systems and parametric decomposition of monomial ideals"};
  std::string command, input, json_out;
  std::optional<int> n_max, samples;
  std::optional<std::uint64_t> seed;
  app.add_option("subcommand", command, "filtration | goodsop | paramdecomp | seqcm | hilbert-samuel | verify-all")
      ->required()
      ->check(CLI::IsMember(seqcm::known_commands()));
  app.add_option("--input", input, "problem file (JSON)")->required();
  app.add_option("--n-max", n_max, "largest n for decomposition and length tables");
  app.add_option("--samples", samples, "number of sampled systems of parameters");
  app.add_option("--seed", seed, "random seed");
  app.add_option("--json", json_out, "write the JSON report here");
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return seqcm::kInputError;
  }

  std::ifstream in(input);
  if (!in) return input_error("cannot read " + input);
  std::stringstream buf;
  buf << in.rdbuf();

  seqcm::ProblemSpec spec;
  try {
    spec = seqcm::parse_problem(buf.str());
    if (n_max) spec.n_max = *n_max;
    if (samples) spec.sop_samples = *samples;
    if (seed) spec.rng_seed = *seed;
    if (spec.n_max < 1) throw seqcm::InvalidArgument("n_max must be at least 1");
    if (spec.sop_samples < 1) throw seqcm::InvalidArgument("sop_samples must be at least 1");
  } catch (const seqcm::Error& e) {
    return input_error(input + ": " + e.what());
  }

  const seqcm::RunReport report = seqcm::run(spec, command);
  std::cout << seqcm::render_text(report);
  if (!json_out.empty()) {
    std::ofstream out(json_out, std::ios::binary);
    if (!out) return input_error("cannot write " + json_out);
    out << seqcm::report_to_string(report);
  }
  return report.exit_code;
}
