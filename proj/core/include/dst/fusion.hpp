#pragma once

#include "dst/mass.hpp"
#include "dst/oracle.hpp"

namespace dst {

/// Unnormalized conjunctive rule: mass flows to pairwise intersections of
/// focal sets, conflict stays on the empty set. The result's commonality is
/// the pointwise product of the operands' commonalities.
MassFunction conjunctive_combine(const MassFunction& m1, const MassFunction& m2);

/// Unnormalized disjunctive rule: mass flows to pairwise unions; the
/// result's implicability is the pointwise product.
MassFunction disjunctive_combine(const MassFunction& m1, const MassFunction& m2);

/// Conjunctive rule with the conflict removed and the rest rescaled to 1.
/// Fails with total-conflict when (almost) all mass lands on the empty set.
MassFunction dempster_combine(const MassFunction& m1, const MassFunction& m2);

/// Idempotent rule for non-independent sources: pointwise minimum of the
/// conjunctive weight functions, then mass recovered through the dense
/// lattice (the general sparse inverse is not available), hence the frame
/// cap.
MassFunction cautious_combine(const MassFunction& m1, const MassFunction& m2,
                              std::uint32_t fmt_cap = oracle::kFmtCap);

/// Dual of the cautious rule on disjunctive weights; needs subnormal inputs.
MassFunction bold_combine(const MassFunction& m1, const MassFunction& m2,
                          std::uint32_t fmt_cap = oracle::kFmtCap);

}  // namespace dst
