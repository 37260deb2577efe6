#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>

namespace mcpauli {

struct IdentityInfo {
  std::string_view key;
  std::string_view statement;
  bool randomized;  // draws random angles, unitaries or register sizes per sample
};

std::span<const IdentityInfo> identities();

struct IdentityVerdict {
  std::string key;
  bool holds = false;
  bool exact_phase = false;  // also equal with phase exactly 1
  int samples = 0;
  int comparisons = 0;
  double max_deviation = 0;
};

// Checks both sides as channels over `samples` random draws. Throws std::out_of_range for
// unknown keys.
IdentityVerdict verify_identity(std::string_view key, std::uint64_t seed = 1, int samples = 100,
                                double tol = 1e-9);

}  // namespace mcpauli
