#pragma once

#include <utility>
#include <vector>

#include "dst/frame.hpp"
#include "dst/subset.hpp"

namespace dst {

/// Entries below this value are treated as zero and never stored.
inline constexpr double kMassFloor = 1e-12;
/// |sum of stored masses - 1| must stay within this bound.
inline constexpr double kMassSumTolerance = 1e-9;

/// A sparse belief assignment: focal set -> mass in (0, 1], entries kept in
/// canonical subset order. Immutable after construction.
class MassFunction {
 public:
  /// Validates raw entries: drops sub-floor values, rejects negative masses
  /// and duplicate keys, and requires the total to be 1 within tolerance.
  static MassFunction make(Frame frame,
                           std::vector<std::pair<Subset, double>> entries);

  const Frame& frame() const { return frame_; }
  std::uint32_t universe_size() const { return frame_.size(); }

  /// Focal sets with their masses, canonical order.
  const std::vector<std::pair<Subset, double>>& entries() const { return entries_; }
  std::vector<Subset> focal_sets() const;
  std::size_t focal_count() const { return entries_.size(); }

  double mass(const Subset& set) const;  // 0 for non-focal sets
  bool is_focal(const Subset& set) const;
  bool non_dogmatic() const;  // the universe is focal
  bool subnormal() const;     // the empty set is focal

  bool operator==(const MassFunction& other) const {
    return frame_ == other.frame_ && entries_ == other.entries_;
  }

 private:
  MassFunction(Frame frame, std::vector<std::pair<Subset, double>> sorted)
      : frame_(std::move(frame)), entries_(std::move(sorted)) {}

  Frame frame_;
  std::vector<std::pair<Subset, double>> entries_;
};

enum class StructureKind {
  vacuous,
  consonant,
  quasi_bayesian,
  dual_quasi_bayesian,
  general,
};

const char* structure_name(StructureKind kind);

struct StructureClass {
  StructureKind kind;
  bool non_dogmatic;  // the universe is focal
  bool subnormal;     // the empty set is focal
};

// Structure predicates, pure functions of the focal-set family. The
// classifier below picks the most specific kind; these can overlap (a chain
// through the empty set also satisfies the dual quasi-Bayesian test), and
// the closed-form decompositions accept anything matching their predicate.
bool consonant_family(const MassFunction& m);
bool quasi_bayesian_family(const MassFunction& m);
bool dual_quasi_bayesian_family(const MassFunction& m);

StructureClass classify_structure(const MassFunction& m);

/// New mass function with every focal set complemented.
MassFunction complement_mass(const MassFunction& m);

/// (1 - epsilon) * m plus epsilon on `onto` (typically the universe, to make
/// a dogmatic input non-dogmatic, or the empty set for the disjunctive side).
MassFunction discount(const MassFunction& m, double epsilon, const Subset& onto);

}  // namespace dst
