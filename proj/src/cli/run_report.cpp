#include "seqcm/run_report.hpp"

#include <sstream>

#include "seqcm/errors.hpp"

namespace seqcm {

using nlohmann::ordered_json;

namespace {

Status status_from_name(const std::string& s) {
  for (Status st : {Status::Pass, Status::Fail, Status::Inconclusive, Status::NotApplicable})
    if (s == status_name(st)) return st;
  throw InvalidArgument("unknown status \"" + s + "\"");
}

bool scalar_array(const ordered_json& j) {
  for (const auto& e : j)
    if (e.is_structured()) return false;
  return true;
}

std::string scalar_text(const ordered_json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

void render_value(std::ostringstream& out, const ordered_json& j, int indent);

void render_member(std::ostringstream& out, const std::string& key, const ordered_json& v, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (!v.is_structured()) {
    out << pad << key << ": " << scalar_text(v) << '\n';
  } else if (v.is_array() && scalar_array(v)) {
    out << pad << key << ": [";
    for (std::size_t i = 0; i < v.size(); ++i) out << (i ? ", " : "") << scalar_text(v[i]);
    out << "]\n";
  } else {
    out << pad << key << ":\n";
    render_value(out, v, indent + 2);
  }
}

void render_value(std::ostringstream& out, const ordered_json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) render_member(out, k, v, indent);
  } else if (j.is_array()) {
    for (const auto& e : j) {
      if (e.is_object()) {
        out << pad << "-\n";
        render_value(out, e, indent + 2);
      } else {
        render_member(out, "-", e, indent);
      }
    }
  } else {
    out << pad << scalar_text(j) << '\n';
  }
}

}  // namespace

int exit_code_for(Status overall) {
  switch (overall) {
    case Status::Fail: return kCheckFailed;
    case Status::Inconclusive: return kInconclusive;
    default: return kConsistent;
  }
}

void RunReport::finalize() {
  CheckReport all;
  for (const auto& c : checks) all.add(c.name, c.overall());
  status = all.overall();
  if (!error) exit_code = exit_code_for(status);
}

ordered_json report_to_json(const RunReport& r) {
  ordered_json j;
  j["engine"] = r.engine;
  j["command"] = r.command;
  j["rng_seed"] = r.problem.rng_seed;
  j["problem"] = ordered_json::parse(problem_to_json(r.problem));
  j["sections"] = r.sections;
  ordered_json checks = ordered_json::array();
  for (const auto& c : r.checks) {
    ordered_json entries = ordered_json::array();
    for (const auto& e : c.entries)
      entries.push_back({{"label", e.label}, {"status", status_name(e.status)}, {"detail", e.detail}});
    checks.push_back({{"name", c.name}, {"status", status_name(c.overall())}, {"entries", entries}});
  }
  j["checks"] = checks;
  if (r.error) j["error"] = *r.error;
  j["status"] = status_name(r.status);
  j["exit_code"] = r.exit_code;
  return j;
}

RunReport report_from_json(const ordered_json& j) {
  RunReport r;
  try {
    r.engine = j.at("engine").get<std::string>();
    r.command = j.at("command").get<std::string>();
    r.problem = parse_problem(j.at("problem").dump());
    r.sections = j.at("sections");
    for (const auto& c : j.at("checks")) {
      CheckReport cr{c.at("name").get<std::string>(), {}};
      for (const auto& e : c.at("entries"))
        cr.add(e.at("label").get<std::string>(), status_from_name(e.at("status").get<std::string>()),
               e.at("detail").get<std::string>());
      r.checks.push_back(std::move(cr));
    }
    if (j.contains("error")) r.error = j.at("error").get<std::string>();
    r.status = status_from_name(j.at("status").get<std::string>());
    r.exit_code = j.at("exit_code").get<int>();
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("malformed report: ") + e.what());
  }
  return r;
}

std::string report_to_string(const RunReport& report) { return report_to_json(report).dump(2) + "\n"; }

std::string render_text(const RunReport& r) {
  std::ostringstream out;
  out << r.engine << "  " << r.command << "  " << (r.problem.name.empty() ? "(unnamed)" : r.problem.name)
      << "  seed " << r.problem.rng_seed << "  n_max " << r.problem.n_max << '\n';
  if (r.error) out << "error: " << *r.error << '\n';
  for (const auto& [name, section] : r.sections.items()) {
    out << "\n== " << name << " ==\n";
    render_value(out, section, 0);
  }
  if (!r.checks.empty()) out << "\n== checks ==\n";
  for (const auto& c : r.checks) {
    out << '[' << status_name(c.overall()) << "] " << c.name << '\n';
    for (const auto& e : c.entries) {
      out << "    [" << status_name(e.status) << "] " << e.label;
      if (!e.detail.empty()) out << "  (" << e.detail << ')';
      out << '\n';
    }
  }
  out << "\nstatus: " << status_name(r.status) << ", exit code " << r.exit_code << '\n';
  return out.str();
}

}  // namespace seqcm
