#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "dst/generate.hpp"
#include "dst/mass.hpp"
#include "dst/subset.hpp"

namespace testutil {

inline bool near(double a, double b, double tol) { return std::abs(a - b) <= tol; }

inline bool rel_near(double a, double b, double tol) {
  double scale = std::max({std::abs(a), std::abs(b), 1.0});
  return std::abs(a - b) <= tol * scale;
}

inline dst::Subset random_subset(std::uint32_t n, std::mt19937_64& rng) {
  dst::Subset s = dst::Subset::empty(n);
  for (std::uint32_t i = 0; i < n; ++i)
    if (rng() & 1) s.set(i);
  return s;
}

// Seeded random mass via the generator module; spans all four structures
// when `structure` is left unset.
inline dst::MassFunction random_mass(std::uint64_t seed, std::uint32_t n,
                                     std::size_t max_focal, bool subnormal = false) {
  std::mt19937_64 pick(seed ^ 0x9e3779b97f4a7c15ULL);
  std::size_t cap = std::min<std::size_t>(max_focal, std::size_t{1} << n);
  std::size_t focal = 1 + pick() % cap;
  dst::GeneratorSpec spec;
  spec.structure = dst::GeneratedStructure::random_family;
  spec.n = n;
  spec.focal_count = focal;
  spec.seed = seed;
  spec.subnormal = subnormal;
  return dst::generate_mass(spec);
}

// Every subset of a small frame, rank order.
inline std::vector<dst::Subset> all_subsets(std::uint32_t n) {
  std::vector<dst::Subset> out;
  out.reserve(std::size_t{1} << n);
  for (std::uint64_t r = 0; r < (std::uint64_t{1} << n); ++r)
    out.push_back(dst::Subset::from_rank(n, r));
  return out;
}

}  // namespace testutil
