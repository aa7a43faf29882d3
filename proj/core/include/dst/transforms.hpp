#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "dst/mass.hpp"

namespace dst {

/// Rounding slack for the inverse transforms: recovered masses in
/// [-kInversionSlack, 0) are treated as zero; anything lower signals an
/// inconsistent table (or the wrong focal-set family) and is an error.
inline constexpr double kInversionSlack = 1e-9;

/// q(A): total mass on focal supersets of A. One pass over the focal sets.
double commonality(const MassFunction& m, const Subset& a);

/// b(A): total mass on focal subsets of A.
double implicability(const MassFunction& m, const Subset& a);

/// Sparse table of commonality values on a chosen support. Off-support
/// queries recompute from the originating mass when one is attached (tables
/// built by `over`); tables parsed from documents have no mass and reject
/// them.
class CommonalityTable {
 public:
  static CommonalityTable over(const MassFunction& m, std::span<const Subset> support);
  static CommonalityTable from_values(Frame frame,
                                      std::vector<std::pair<Subset, double>> values);

  const Frame& frame() const { return frame_; }
  const std::vector<std::pair<Subset, double>>& entries() const { return entries_; }
  bool stores(const Subset& a) const;
  double at(const Subset& a) const;

 private:
  CommonalityTable(Frame frame, std::vector<std::pair<Subset, double>> entries,
                   std::optional<MassFunction> source);

  Frame frame_;
  std::vector<std::pair<Subset, double>> entries_;  // canonical order
  std::optional<MassFunction> source_;
};

class ImplicabilityTable {
 public:
  static ImplicabilityTable over(const MassFunction& m, std::span<const Subset> support);
  static ImplicabilityTable from_values(Frame frame,
                                        std::vector<std::pair<Subset, double>> values);

  const Frame& frame() const { return frame_; }
  const std::vector<std::pair<Subset, double>>& entries() const { return entries_; }
  bool stores(const Subset& a) const;
  double at(const Subset& a) const;

 private:
  ImplicabilityTable(Frame frame, std::vector<std::pair<Subset, double>> entries,
                     std::optional<MassFunction> source);

  Frame frame_;
  std::vector<std::pair<Subset, double>> entries_;
  std::optional<MassFunction> source_;
};

/// Recovers m from q restricted to a known focal-set family: processes the
/// family in decreasing cardinality, m(A) = q(A) - sum of m(B) over focal
/// B strictly above A.
MassFunction mass_from_commonality(const CommonalityTable& q,
                                   std::span<const Subset> focal_sets);

/// Dual recovery from b, processing in increasing cardinality.
MassFunction mass_from_implicability(const ImplicabilityTable& b,
                                     std::span<const Subset> focal_sets);

}  // namespace dst
