#pragma once

#include <optional>
#include <string_view>

#include "dst/mass.hpp"

namespace dst {

enum class GeneratedStructure {
  random_family,
  consonant,
  quasi_bayesian,
  dual_quasi_bayesian,
};

const char* generated_structure_name(GeneratedStructure s);
std::optional<GeneratedStructure> parse_generated_structure(std::string_view name);

/// All draws come from a single mt19937_64 stream seeded with `seed`;
/// distributions are derived in-library (no stdlib distribution objects), so
/// a spec reproduces byte-identically across platforms.
inline constexpr const char* kGeneratorAlgorithm = "mt19937_64";

struct GeneratorSpec {
  GeneratedStructure structure = GeneratedStructure::random_family;
  std::uint32_t n = 0;
  std::size_t focal_count = 0;
  std::uint64_t seed = 0;
  /// random_family only: force the empty set into the family instead of the
  /// universe, producing a subnormal draw.
  bool subnormal = false;
};

/// Deterministic seeded mass generation on the frame {e0, e1, ...}:
/// consonant draws a chain ending at the universe, quasi-Bayesian draws
/// disjoint non-universe sets plus the universe, dual quasi-Bayesian
/// complements a quasi-Bayesian draw, random draws distinct subsets with the
/// universe (or empty set) forced in. Masses are normalized exponential
/// variates.
MassFunction generate_mass(const GeneratorSpec& spec);

}  // namespace dst
