#include "dst/mass.hpp"

#include <algorithm>
#include <cmath>

#include "dst/error.hpp"

namespace dst {

MassFunction MassFunction::make(Frame frame,
                                std::vector<std::pair<Subset, double>> entries) {
  std::vector<std::pair<Subset, double>> kept;
  kept.reserve(entries.size());
  for (auto& [set, value] : entries) {
    if (set.universe_size() != frame.size())
      fail(Errc::frame_mismatch, "mass entry subset does not fit the frame");
    if (value < 0.0)
      fail(Errc::negative_mass, "mass " + std::to_string(value) + " on " +
                                    frame.format_subset(set));
    if (value < kMassFloor) continue;  // treated as zero
    kept.emplace_back(std::move(set), value);
  }
  std::sort(kept.begin(), kept.end(), [](const auto& a, const auto& b) {
    return CanonicalLess{}(a.first, b.first);
  });
  for (std::size_t i = 1; i < kept.size(); ++i)
    if (kept[i].first == kept[i - 1].first)
      fail(Errc::duplicate_subset,
           "subset " + frame.format_subset(kept[i].first) + " appears twice");
  double sum = 0.0;
  for (const auto& [set, value] : kept) sum += value;
  if (std::abs(sum - 1.0) > kMassSumTolerance)
    fail(Errc::sum_out_of_tolerance,
         "masses sum to " + std::to_string(sum) + ", expected 1");
  return MassFunction(std::move(frame), std::move(kept));
}

std::vector<Subset> MassFunction::focal_sets() const {
  std::vector<Subset> out;
  out.reserve(entries_.size());
  for (const auto& [set, value] : entries_) out.push_back(set);
  return out;
}

double MassFunction::mass(const Subset& set) const {
  auto it = std::lower_bound(
      entries_.begin(), entries_.end(), set,
      [](const auto& entry, const Subset& s) { return CanonicalLess{}(entry.first, s); });
  if (it != entries_.end() && it->first == set) return it->second;
  return 0.0;
}

bool MassFunction::is_focal(const Subset& set) const { return mass(set) != 0.0; }

bool MassFunction::non_dogmatic() const { return is_focal(frame_.full_set()); }

bool MassFunction::subnormal() const { return is_focal(frame_.empty_set()); }

const char* structure_name(StructureKind kind) {
  switch (kind) {
    case StructureKind::vacuous: return "vacuous";
    case StructureKind::consonant: return "consonant";
    case StructureKind::quasi_bayesian: return "quasi-bayesian";
    case StructureKind::dual_quasi_bayesian: return "dual-quasi-bayesian";
    case StructureKind::general: return "general";
  }
  return "unknown";
}

bool consonant_family(const MassFunction& m) {
  // Entries are sorted by cardinality, so a chain must be nested in order.
  const auto& entries = m.entries();
  for (std::size_t i = 1; i < entries.size(); ++i)
    if (!entries[i - 1].first.strict_subset_of(entries[i].first)) return false;
  return true;
}

bool quasi_bayesian_family(const MassFunction& m) {
  if (!m.non_dogmatic()) return false;
  std::vector<Subset> rest;
  for (const auto& [set, value] : m.entries())
    if (!set.is_universe()) rest.push_back(set);
  for (std::size_t i = 0; i < rest.size(); ++i)
    for (std::size_t j = i + 1; j < rest.size(); ++j)
      if (rest[i].intersects(rest[j])) return false;
  return true;
}

bool dual_quasi_bayesian_family(const MassFunction& m) {
  if (!m.subnormal()) return false;
  std::vector<Subset> rest;
  for (const auto& [set, value] : m.entries())
    if (!set.is_empty()) rest.push_back(set);
  for (std::size_t i = 0; i < rest.size(); ++i)
    for (std::size_t j = i + 1; j < rest.size(); ++j)
      if (!rest[i].unite(rest[j]).is_universe()) return false;
  return true;
}

StructureClass classify_structure(const MassFunction& m) {
  StructureClass c{StructureKind::general, m.non_dogmatic(), m.subnormal()};
  if (m.focal_count() == 1 && c.non_dogmatic) {
    c.kind = StructureKind::vacuous;
  } else if (consonant_family(m)) {
    c.kind = StructureKind::consonant;
  } else if (quasi_bayesian_family(m)) {
    c.kind = StructureKind::quasi_bayesian;
  } else if (dual_quasi_bayesian_family(m)) {
    c.kind = StructureKind::dual_quasi_bayesian;
  }
  return c;
}

MassFunction complement_mass(const MassFunction& m) {
  std::vector<std::pair<Subset, double>> flipped;
  flipped.reserve(m.focal_count());
  for (const auto& [set, value] : m.entries())
    flipped.emplace_back(set.complement(), value);
  return MassFunction::make(m.frame(), std::move(flipped));
}

MassFunction discount(const MassFunction& m, double epsilon, const Subset& onto) {
  if (epsilon < 0.0 || epsilon >= 1.0)
    fail(Errc::infeasible_spec, "discount must lie in [0, 1)");
  if (onto.universe_size() != m.universe_size())
    fail(Errc::frame_mismatch, "discount target does not fit the frame");
  std::vector<std::pair<Subset, double>> scaled;
  scaled.reserve(m.focal_count() + 1);
  double onto_mass = epsilon;
  for (const auto& [set, value] : m.entries()) {
    if (set == onto) {
      onto_mass += (1.0 - epsilon) * value;
    } else {
      scaled.emplace_back(set, (1.0 - epsilon) * value);
    }
  }
  scaled.emplace_back(onto, onto_mass);
  return MassFunction::make(m.frame(), std::move(scaled));
}

}  // namespace dst
