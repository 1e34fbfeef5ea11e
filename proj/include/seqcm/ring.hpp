#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "seqcm/field.hpp"

namespace seqcm {

inline constexpr std::uint32_t kDefaultCharacteristic = 32003;

/// Polynomial ring k[x_1, ..., x_v] over a prime field. Variables are ordered
/// as given: the first name is the largest variable.
class RingContext {
 public:
  RingContext(std::vector<std::string> variable_names,
              std::uint32_t characteristic = kDefaultCharacteristic);

  std::size_t num_vars() const { return names_.size(); }
  const std::vector<std::string>& variable_names() const { return names_; }
  const PrimeField& field() const { return field_; }
  std::uint32_t characteristic() const { return field_.characteristic(); }

  std::optional<std::size_t> index_of(const std::string& name) const;

  friend bool operator==(const RingContext& a, const RingContext& b) {
    return a.field_ == b.field_ && a.names_ == b.names_;
  }

 private:
  std::vector<std::string> names_;
  PrimeField field_;
};

using RingPtr = std::shared_ptr<const RingContext>;

RingPtr make_ring(std::vector<std::string> variable_names,
                  std::uint32_t characteristic = kDefaultCharacteristic);

inline bool same_ring(const RingPtr& a, const RingPtr& b) {
  return a == b || (a && b && *a == *b);
}

}  // namespace seqcm
