#include "dst/transforms.hpp"

#include <algorithm>

#include "dst/error.hpp"

namespace dst {

namespace {

void check_frame(const MassFunction& m, const Subset& a) {
  if (a.universe_size() != m.universe_size())
    fail(Errc::frame_mismatch, "query subset does not fit the mass function's frame");
}

std::vector<std::pair<Subset, double>> sort_entries(
    std::vector<std::pair<Subset, double>> entries) {
  std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) {
    return CanonicalLess{}(a.first, b.first);
  });
  return entries;
}

const double* lookup(const std::vector<std::pair<Subset, double>>& entries,
                     const Subset& a) {
  auto it = std::lower_bound(
      entries.begin(), entries.end(), a,
      [](const auto& entry, const Subset& s) { return CanonicalLess{}(entry.first, s); });
  if (it != entries.end() && it->first == a) return &it->second;
  return nullptr;
}

}  // namespace

double commonality(const MassFunction& m, const Subset& a) {
  check_frame(m, a);
  double total = 0.0;
  for (const auto& [set, value] : m.entries())
    if (a.subset_of(set)) total += value;
  return total;
}

double implicability(const MassFunction& m, const Subset& a) {
  check_frame(m, a);
  double total = 0.0;
  for (const auto& [set, value] : m.entries())
    if (set.subset_of(a)) total += value;
  return total;
}

CommonalityTable::CommonalityTable(Frame frame,
                                   std::vector<std::pair<Subset, double>> entries,
                                   std::optional<MassFunction> source)
    : frame_(std::move(frame)),
      entries_(sort_entries(std::move(entries))),
      source_(std::move(source)) {}

CommonalityTable CommonalityTable::over(const MassFunction& m,
                                        std::span<const Subset> support) {
  std::vector<std::pair<Subset, double>> entries;
  entries.reserve(support.size());
  for (const auto& a : support) entries.emplace_back(a, commonality(m, a));
  return CommonalityTable(m.frame(), std::move(entries), m);
}

CommonalityTable CommonalityTable::from_values(
    Frame frame, std::vector<std::pair<Subset, double>> values) {
  return CommonalityTable(std::move(frame), std::move(values), std::nullopt);
}

bool CommonalityTable::stores(const Subset& a) const {
  return lookup(entries_, a) != nullptr;
}

double CommonalityTable::at(const Subset& a) const {
  if (const double* v = lookup(entries_, a)) return *v;
  if (source_) return commonality(*source_, a);
  fail(Errc::off_support_query,
       "commonality at " + frame_.format_subset(a) +
           " is not stored and the table carries no mass function");
}

ImplicabilityTable::ImplicabilityTable(Frame frame,
                                       std::vector<std::pair<Subset, double>> entries,
                                       std::optional<MassFunction> source)
    : frame_(std::move(frame)),
      entries_(sort_entries(std::move(entries))),
      source_(std::move(source)) {}

ImplicabilityTable ImplicabilityTable::over(const MassFunction& m,
                                            std::span<const Subset> support) {
  std::vector<std::pair<Subset, double>> entries;
  entries.reserve(support.size());
  for (const auto& a : support) entries.emplace_back(a, implicability(m, a));
  return ImplicabilityTable(m.frame(), std::move(entries), m);
}

ImplicabilityTable ImplicabilityTable::from_values(
    Frame frame, std::vector<std::pair<Subset, double>> values) {
  return ImplicabilityTable(std::move(frame), std::move(values), std::nullopt);
}

bool ImplicabilityTable::stores(const Subset& a) const {
  return lookup(entries_, a) != nullptr;
}

double ImplicabilityTable::at(const Subset& a) const {
  if (const double* v = lookup(entries_, a)) return *v;
  if (source_) return implicability(*source_, a);
  fail(Errc::off_support_query,
       "implicability at " + frame_.format_subset(a) +
           " is not stored and the table carries no mass function");
}

namespace {

// Shared inversion skeleton: `descending` picks the processing direction,
// `above` decides whether an already-recovered entry feeds the current one.
template <typename Table, typename Above>
MassFunction invert(const Table& table, std::span<const Subset> focal_sets,
                    bool descending, Above above) {
  std::vector<Subset> order(focal_sets.begin(), focal_sets.end());
  std::sort(order.begin(), order.end(), CanonicalLess{});
  if (descending) std::reverse(order.begin(), order.end());

  std::vector<std::pair<Subset, double>> recovered;
  recovered.reserve(order.size());
  for (const auto& a : order) {
    double value = table.at(a);
    for (const auto& [b, mb] : recovered)
      if (above(a, b)) value -= mb;
    if (value < 0.0) {
      if (value < -kInversionSlack)
        fail(Errc::negative_mass,
             "recovered mass " + std::to_string(value) + " at " +
                 table.frame().format_subset(a) +
                 "; the table is inconsistent with the given focal sets");
      value = 0.0;
    }
    recovered.emplace_back(a, value);
  }
  return MassFunction::make(table.frame(), std::move(recovered));
}

}  // namespace

MassFunction mass_from_commonality(const CommonalityTable& q,
                                   std::span<const Subset> focal_sets) {
  return invert(q, focal_sets, /*descending=*/true,
                [](const Subset& a, const Subset& b) { return a.strict_subset_of(b); });
}

MassFunction mass_from_implicability(const ImplicabilityTable& b,
                                     std::span<const Subset> focal_sets) {
  return invert(b, focal_sets, /*descending=*/false,
                [](const Subset& a, const Subset& s) { return s.strict_subset_of(a); });
}

}  // namespace dst
