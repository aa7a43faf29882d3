#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "dst/focal_points.hpp"
#include "dst/mass.hpp"

// Full-lattice reference implementations. Everything in here walks all of
// 2^Omega and exists to cross-check the sparse production paths (and to back
// the few operations, like the cautious rule, whose general inverse needs
// it). Production code never routes through this namespace implicitly.
namespace dst::oracle {

/// 2^kFmtCap doubles is the largest dense table we are willing to allocate.
inline constexpr std::uint32_t kFmtCap = 25;
/// Sign-alternating product enumeration is cubic-ish; keep it small.
inline constexpr std::uint32_t kWeightBruteForceCap = 14;
/// Selection enumeration visits 2^|family| - 1 subsets of the family.
inline constexpr std::size_t kSelectionCap = 20;

/// Dense table over the full lattice, indexed by subset bit pattern.
struct FullLatticeVector {
  std::uint32_t n = 0;
  std::vector<double> values;

  double at(const Subset& s) const { return values[s.rank()]; }
  bool operator==(const FullLatticeVector&) const = default;
};

FullLatticeVector make_dense(std::uint32_t n, std::uint32_t cap = kFmtCap);
FullLatticeVector dense_from_mass(const MassFunction& m, std::uint32_t cap = kFmtCap);

/// Superset-direction zeta transform: dense m -> dense q.
FullLatticeVector fmt_superset_zeta(FullLatticeVector vec);
/// Inverse of the above (dense q -> dense m).
FullLatticeVector fmt_superset_mobius(FullLatticeVector vec);
/// Subset-direction zeta transform: dense m -> dense b.
FullLatticeVector fmt_subset_zeta(FullLatticeVector vec);
FullLatticeVector fmt_subset_mobius(FullLatticeVector vec);

/// Conjunctive weight at every subset by the sign-alternating product of
/// commonalities over all supersets, accumulated in log space. Ground truth
/// for the focal-point decomposition.
FullLatticeVector brute_force_conjunctive_weights(
    const MassFunction& m, std::uint32_t cap = kWeightBruteForceCap);

/// Dual: disjunctive weight from implicabilities over all subsets.
FullLatticeVector brute_force_disjunctive_weights(
    const MassFunction& m, std::uint32_t cap = kWeightBruteForceCap);

/// Enumerates every non-empty selection of the family and collects the
/// intersections (or unions). Ground truth for the closure module.
std::vector<Subset> brute_force_focal_points(std::span<const Subset> family,
                                             ClosureMode mode,
                                             std::size_t cap = kSelectionCap);

}  // namespace dst::oracle
