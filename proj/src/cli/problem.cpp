#include "seqcm/problem.hpp"

#include <algorithm>
#include <json.hpp>
#include <set>

namespace seqcm {

namespace {

using nlohmann::json;

void reject_unknown(const json& obj, const std::set<std::string>& allowed, const std::string& where) {
  if (!obj.is_object()) throw InvalidArgument(where + " must be an object");
  for (const auto& [key, value] : obj.items())
    if (!allowed.count(key)) throw InvalidArgument("unknown field \"" + key + "\" in " + where);
}

template <class T>
T get_as(const json& j, const std::string& field) {
  try {
    return j.get<T>();
  } catch (const json::exception&) {
    throw InvalidArgument("field \"" + field + "\" has the wrong type");
  }
}

std::vector<std::string> string_list(const json& j, const std::string& field) {
  if (!j.is_array()) throw InvalidArgument("field \"" + field + "\" must be an array of strings");
  std::vector<std::string> out;
  for (const auto& e : j) {
    if (!e.is_string()) throw InvalidArgument("field \"" + field + "\" must be an array of strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

std::pair<std::size_t, std::size_t> line_column(const std::string& text, std::size_t byte) {
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i < std::min(byte, text.size()); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

}  // namespace

ProblemSpec parse_problem(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    const std::size_t byte = e.byte > 0 ? e.byte - 1 : 0;
    auto [line, column] = line_column(text, byte);
    throw ParseError("invalid JSON at line " + std::to_string(line) + ", column " + std::to_string(column), byte);
  }
  reject_unknown(root, {"name", "ring", "ideal", "sop", "n_max", "sop_samples", "rng_seed", "commands", "expected"},
                 "problem");

  ProblemSpec spec;
  if (root.contains("name")) spec.name = get_as<std::string>(root["name"], "name");
  if (!root.contains("ring")) throw InvalidArgument("missing field \"ring\"");
  const json& ring = root["ring"];
  reject_unknown(ring, {"vars", "char"}, "ring");
  if (!ring.contains("vars")) throw InvalidArgument("missing field \"ring.vars\"");
  spec.vars = string_list(ring["vars"], "ring.vars");
  if (ring.contains("char")) {
    const auto c = get_as<std::int64_t>(ring["char"], "ring.char");
    if (c < 2 || c > 0xFFFFFFFFLL) throw InvalidArgument("characteristic must be prime");
    spec.characteristic = static_cast<std::uint32_t>(c);
  }
  if (!root.contains("ideal")) throw InvalidArgument("missing field \"ideal\"");
  spec.ideal = string_list(root["ideal"], "ideal");
  if (root.contains("sop")) spec.sop = string_list(root["sop"], "sop");
  if (root.contains("n_max")) spec.n_max = get_as<int>(root["n_max"], "n_max");
  if (root.contains("sop_samples")) spec.sop_samples = get_as<int>(root["sop_samples"], "sop_samples");
  if (root.contains("rng_seed")) spec.rng_seed = get_as<std::uint64_t>(root["rng_seed"], "rng_seed");
  if (root.contains("commands")) {
    spec.commands = string_list(root["commands"], "commands");
    for (const auto& c : spec.commands)
      if (std::find(known_commands().begin(), known_commands().end(), c) == known_commands().end())
        throw InvalidArgument("unknown command \"" + c + "\"");
  }
  if (root.contains("expected")) {
    const json& ex = root["expected"];
    reject_unknown(ex, {"seq_cm", "cohen_macaulay", "exit_code"}, "expected");
    if (ex.contains("seq_cm")) spec.expected.seq_cm = get_as<bool>(ex["seq_cm"], "expected.seq_cm");
    if (ex.contains("cohen_macaulay"))
      spec.expected.cohen_macaulay = get_as<bool>(ex["cohen_macaulay"], "expected.cohen_macaulay");
    if (ex.contains("exit_code")) spec.expected.exit_code = get_as<int>(ex["exit_code"], "expected.exit_code");
  }
  if (spec.n_max < 1) throw InvalidArgument("n_max must be at least 1");
  if (spec.sop_samples < 1) throw InvalidArgument("sop_samples must be at least 1");
  if (!is_prime(spec.characteristic)) throw InvalidArgument("characteristic must be prime");
  return spec;
}

std::string problem_to_json(const ProblemSpec& spec) {
  nlohmann::ordered_json j;
  j["name"] = spec.name;
  j["ring"] = {{"vars", spec.vars}, {"char", spec.characteristic}};
  j["ideal"] = spec.ideal;
  if (spec.sop) j["sop"] = *spec.sop;
  j["n_max"] = spec.n_max;
  j["sop_samples"] = spec.sop_samples;
  j["rng_seed"] = spec.rng_seed;
  if (!spec.commands.empty()) j["commands"] = spec.commands;
  nlohmann::ordered_json ex = nlohmann::ordered_json::object();
  if (spec.expected.seq_cm) ex["seq_cm"] = *spec.expected.seq_cm;
  if (spec.expected.cohen_macaulay) ex["cohen_macaulay"] = *spec.expected.cohen_macaulay;
  if (spec.expected.exit_code) ex["exit_code"] = *spec.expected.exit_code;
  if (!ex.empty()) j["expected"] = ex;
  return j.dump(2);
}

Problem build_problem(const ProblemSpec& spec) {
  RingPtr ring = make_ring(spec.vars, spec.characteristic);
  std::vector<Polynomial> gens;
  for (const auto& g : spec.ideal) gens.push_back(parse_polynomial(g, ring));
  Ideal ideal(ring, gens);
  MonomialIdeal mono = MonomialIdeal::from_ideal(ideal);
  if (mono.is_unit()) throw InvalidArgument("ideal must be proper");
  Problem p{spec, ring, mono, std::nullopt};
  if (spec.sop) {
    std::vector<Polynomial> xs;
    for (const auto& s : *spec.sop) {
      Polynomial x = parse_polynomial(s, ring);
      if (x.is_zero() || !x.is_homogeneous() || x.degree() < 1)
        throw InvalidArgument("sop elements must be homogeneous of positive degree");
      xs.push_back(std::move(x));
    }
    p.sop = std::move(xs);
  }
  return p;
}

}  // namespace seqcm
