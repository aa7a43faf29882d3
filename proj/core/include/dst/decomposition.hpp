#pragma once

#include <utility>
#include <vector>

#include "dst/focal_points.hpp"
#include "dst/mass.hpp"

namespace dst {

struct DecompositionStats {
  std::size_t focal_count = 0;
  std::size_t focal_point_count = 0;
  std::size_t closure_operations = 0;
  std::size_t products = 0;  // multiplications/divisions spent on weights
};

/// Sparse weight assignment keyed on focal points (conjunctive mode) or dual
/// focal points (disjunctive mode); every unlisted subset has weight 1.
/// Weights are strictly positive and may exceed 1.
class WeightFunction {
 public:
  WeightFunction(Frame frame, ClosureMode mode,
                 std::vector<std::pair<Subset, double>> entries,
                 DecompositionStats stats = {});

  const Frame& frame() const { return frame_; }
  ClosureMode mode() const { return mode_; }
  const std::vector<std::pair<Subset, double>>& entries() const { return entries_; }
  bool stores(const Subset& a) const;
  double at(const Subset& a) const;  // 1 when unlisted
  const DecompositionStats& stats() const { return stats_; }

 private:
  Frame frame_;
  ClosureMode mode_;
  std::vector<std::pair<Subset, double>> entries_;  // canonical order
  DecompositionStats stats_;
};

/// Integer exponents e(F) attached to the focal points strictly above one
/// anchor set, from the recursion e(F) = 1 - sum of e(B) over focal points
/// B with anchor < B < F.
struct ExponentTable {
  Subset anchor;
  std::vector<std::pair<Subset, int>> entries;  // canonical order
  int exponent_of(const Subset& point) const;   // 0 when unlisted
};

/// Conjunctive decomposition via the recursive focal-point formula: builds
/// the intersection closure, evaluates q on it, then processes points in
/// decreasing cardinality with w(A) = q(A)^-1 * product of w(F)^-1 over
/// focal points F strictly above A. Requires a non-dogmatic input.
WeightFunction conjunctive_weights(const MassFunction& m,
                                   std::size_t closure_cap = kClosureCapDefault);

/// Same result through the non-recursive form: w(A) = q(A)^-1 * product of
/// q(F)^e(F) with the exponent table per anchor.
WeightFunction conjunctive_weights_direct(const MassFunction& m,
                                          std::size_t closure_cap = kClosureCapDefault);

/// Exponents for one anchor against a conjunctive closure.
ExponentTable exponent_table(const Subset& anchor, const FocalPointSet& closure);

/// Shortcut when the focal points strictly above A have a unique minimum P:
/// w(A) = q(A)^-1 * q(P). Fails with no-unique-minimum otherwise.
double proxy_weight(const MassFunction& m, const Subset& a);

/// Closed form for consonant (chain) inputs, linear in the number of focal
/// sets: w(F_i) = q(F_i)^-1 * q(F_i+1), w(universe) = q(universe)^-1.
WeightFunction consonant_weights(const MassFunction& m);

/// Closed form for quasi-Bayesian inputs (universe focal, other focal sets
/// pairwise disjoint).
WeightFunction quasi_bayesian_weights(const MassFunction& m);

/// Disjunctive decomposition via the union closure, processing points in
/// increasing cardinality with v(A) = b(A)^-1 * product of v(F)^-1 over dual
/// focal points strictly below A. Requires a subnormal input.
WeightFunction disjunctive_weights(const MassFunction& m,
                                   std::size_t closure_cap = kClosureCapDefault);

WeightFunction disjunctive_weights_direct(const MassFunction& m,
                                          std::size_t closure_cap = kClosureCapDefault);

/// Closed form for dual quasi-Bayesian inputs (empty set focal, other focal
/// pairs union to the universe).
WeightFunction dual_quasi_bayesian_weights(const MassFunction& m);

/// q(A) rebuilt from conjunctive weights: product of stored weights whose
/// key does not contain A.
double commonality_from_weights(const WeightFunction& w, const Subset& a);

/// b(A) rebuilt from disjunctive weights: product of stored weights whose
/// key is not contained in A.
double implicability_from_weights(const WeightFunction& v, const Subset& a);

}  // namespace dst
