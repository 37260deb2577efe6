#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "mcpauli/circuit.hpp"
#include "mcpauli/target.hpp"

namespace mcpauli {

// Published resource figures for a construction; unset fields carry no claim.
struct ExpectedResources {
  std::optional<int> t_count;
  std::optional<int> cnot_min;
  std::optional<int> cnot_max;
  std::optional<int> t_depth;
  std::optional<int> ancillas;
  std::optional<int> feedback;
};

struct CatalogEntry {
  std::string_view key;
  std::string_view description;
  std::string_view reference;
  Circuit (*build)();
  TargetSpec (*target)();
  ExpectedResources expected;
};

std::span<const CatalogEntry> catalog();
const CatalogEntry* find_entry(std::string_view key);
// throws std::out_of_range for unknown keys
const CatalogEntry& entry(std::string_view key);
Circuit build_named(std::string_view key);

}  // namespace mcpauli
