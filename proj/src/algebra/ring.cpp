#include "seqcm/ring.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "seqcm/monomial.hpp"

namespace seqcm {

namespace {

bool valid_identifier(const std::string& s) {
  if (s.empty()) return false;
  auto head = static_cast<unsigned char>(s.front());
  if (!(std::isalpha(head) || s.front() == '_' || s.front() == '@')) return false;
  return std::all_of(s.begin() + 1, s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

}  // namespace

RingContext::RingContext(std::vector<std::string> variable_names, std::uint32_t characteristic)
    : names_(std::move(variable_names)), field_(characteristic) {
  if (names_.empty()) throw InvalidArgument("ring needs at least one variable");
  if (names_.size() > kMaxVars)
    throw InvalidArgument("too many variables (max " + std::to_string(kMaxVars) + ")");
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (!valid_identifier(n)) throw InvalidArgument("invalid variable name '" + n + "'");
    if (!seen.insert(n).second) throw InvalidArgument("duplicate variable name '" + n + "'");
  }
}

std::optional<std::size_t> RingContext::index_of(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

RingPtr make_ring(std::vector<std::string> variable_names, std::uint32_t characteristic) {
  // one slot stays free for the elimination variable
  if (variable_names.size() >= kMaxVars)
    throw InvalidArgument("too many variables (max " + std::to_string(kMaxVars - 1) + ")");
  return std::make_shared<const RingContext>(std::move(variable_names), characteristic);
}

}  // namespace seqcm
