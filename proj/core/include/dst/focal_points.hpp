#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "dst/subset.hpp"

namespace dst {

enum class ClosureMode { conjunctive, disjunctive };
const char* closure_mode_name(ClosureMode mode);

/// Abort threshold for closure construction. The closure can approach 2^n on
/// adversarial families; failing predictably beats exhausting memory.
inline constexpr std::size_t kClosureCapDefault = std::size_t{1} << 22;

/// The intersection closure (conjunctive mode) or union closure (disjunctive
/// mode) of a focal-set family, together with the number of pairwise
/// operations the construction performed. Immutable once built.
class FocalPointSet {
 public:
  ClosureMode mode() const { return mode_; }
  std::uint32_t universe_size() const { return universe_size_; }

  const std::vector<Subset>& points() const { return points_; }  // canonical order
  std::size_t size() const { return points_.size(); }
  bool contains(const Subset& a) const;

  /// Pairwise intersections (resp. unions) performed; bounded by
  /// size() * |family|.
  std::size_t operations() const { return operations_; }

 private:
  friend FocalPointSet close_family(std::span<const Subset>, ClosureMode, std::size_t);

  FocalPointSet(ClosureMode mode, std::uint32_t universe_size,
                std::vector<Subset> points, std::size_t operations);

  ClosureMode mode_;
  std::uint32_t universe_size_;
  std::vector<Subset> points_;
  std::size_t operations_;
};

/// Worklist fixpoint: seeds the point set with the family and keeps adding
/// pairwise intersections until nothing new appears. Throws size-exceeded
/// when more than `cap` points accumulate.
FocalPointSet conjunctive_closure(std::span<const Subset> family,
                                  std::size_t cap = kClosureCapDefault);

/// Dual worklist with unions.
FocalPointSet disjunctive_closure(std::span<const Subset> family,
                                  std::size_t cap = kClosureCapDefault);

/// Membership test straight from the definition: in conjunctive mode, A is a
/// focal point iff the focal supersets of A are non-empty and intersect
/// exactly to A; dually with subsets and union.
bool is_focal_point(const Subset& a, std::span<const Subset> family, ClosureMode mode);

}  // namespace dst
