#include "dst/fusion.hpp"

#include <cmath>
#include <map>
#include <numeric>

#include "dst/decomposition.hpp"
#include "dst/error.hpp"
#include "dst/transforms.hpp"

namespace dst {

namespace {

void check_frames(const MassFunction& m1, const MassFunction& m2) {
  if (!(m1.frame() == m2.frame()))
    fail(Errc::frame_mismatch, "operands live on different frames");
}

template <typename Combine>
MassFunction pairwise_combine(const MassFunction& m1, const MassFunction& m2,
                              Combine combine) {
  check_frames(m1, m2);
  std::map<Subset, double, CanonicalLess> cells;
  for (const auto& [a, ma] : m1.entries())
    for (const auto& [b, mb] : m2.entries()) cells[combine(a, b)] += ma * mb;
  std::vector<std::pair<Subset, double>> entries(cells.begin(), cells.end());
  return MassFunction::make(m1.frame(), std::move(entries));
}

}  // namespace

MassFunction conjunctive_combine(const MassFunction& m1, const MassFunction& m2) {
  return pairwise_combine(
      m1, m2, [](const Subset& a, const Subset& b) { return a.intersect(b); });
}

MassFunction disjunctive_combine(const MassFunction& m1, const MassFunction& m2) {
  return pairwise_combine(
      m1, m2, [](const Subset& a, const Subset& b) { return a.unite(b); });
}

MassFunction dempster_combine(const MassFunction& m1, const MassFunction& m2) {
  MassFunction joint = conjunctive_combine(m1, m2);
  const Subset none = joint.frame().empty_set();
  const double conflict = joint.mass(none);
  const double remaining = 1.0 - conflict;
  if (remaining <= kMassSumTolerance)
    fail(Errc::total_conflict, "all mass fell on the empty set");
  std::vector<std::pair<Subset, double>> rescaled;
  rescaled.reserve(joint.focal_count());
  for (const auto& [set, value] : joint.entries())
    if (!set.is_empty()) rescaled.emplace_back(set, value / remaining);
  return MassFunction::make(joint.frame(), std::move(rescaled));
}

namespace {

// Pointwise minimum over the union of stored keys; both operands carry
// implicit weight 1 everywhere else, so unioning the keys loses nothing.
std::map<Subset, double, CanonicalLess> min_weights(const WeightFunction& w1,
                                                    const WeightFunction& w2) {
  std::map<Subset, double, CanonicalLess> mins;
  for (const auto& [set, weight] : w1.entries())
    mins.emplace(set, std::min(weight, w2.at(set)));
  for (const auto& [set, weight] : w2.entries())
    mins.emplace(set, std::min(weight, w1.at(set)));
  return mins;
}

MassFunction mass_from_dense(const Frame& frame, const oracle::FullLatticeVector& dense) {
  std::vector<std::pair<Subset, double>> entries;
  for (std::uint64_t r = 0; r < dense.values.size(); ++r) {
    double v = dense.values[r];
    if (v > kMassFloor) {
      entries.emplace_back(Subset::from_rank(dense.n, r), v);
    } else if (v < -kInversionSlack) {
      fail(Errc::negative_mass,
           "weight combination does not reconstruct to a valid mass function");
    }
  }
  return MassFunction::make(frame, std::move(entries));
}

}  // namespace

MassFunction cautious_combine(const MassFunction& m1, const MassFunction& m2,
                              std::uint32_t fmt_cap) {
  check_frames(m1, m2);
  if (!m1.non_dogmatic() || !m2.non_dogmatic())
    fail(Errc::dogmatic_input, "the cautious rule needs non-dogmatic operands");
  const std::uint32_t n = m1.universe_size();
  if (n > fmt_cap)
    fail(Errc::cap_exceeded,
         "cautious reconstruction walks the dense lattice and is capped at " +
             std::to_string(fmt_cap) + " elements");

  auto mins = min_weights(conjunctive_weights(m1), conjunctive_weights(m2));

  // q(B) = product of w(A) over A not containing B; in log space that is
  // total - (superset zeta of log w)(B). Mass comes back via the Mobius pass.
  oracle::FullLatticeVector logs = oracle::make_dense(n, fmt_cap);
  double total = 0.0;
  for (const auto& [set, weight] : mins) {
    const double lw = std::log(weight);
    logs.values[set.rank()] = lw;
    total += lw;
  }
  logs = oracle::fmt_superset_zeta(std::move(logs));
  for (auto& v : logs.values) v = std::exp(total - v);
  return mass_from_dense(m1.frame(), oracle::fmt_superset_mobius(std::move(logs)));
}

MassFunction bold_combine(const MassFunction& m1, const MassFunction& m2,
                          std::uint32_t fmt_cap) {
  check_frames(m1, m2);
  if (!m1.subnormal() || !m2.subnormal())
    fail(Errc::not_subnormal, "the bold rule needs subnormal operands");
  const std::uint32_t n = m1.universe_size();
  if (n > fmt_cap)
    fail(Errc::cap_exceeded,
         "bold reconstruction walks the dense lattice and is capped at " +
             std::to_string(fmt_cap) + " elements");

  auto mins = min_weights(disjunctive_weights(m1), disjunctive_weights(m2));

  oracle::FullLatticeVector logs = oracle::make_dense(n, fmt_cap);
  double total = 0.0;
  for (const auto& [set, weight] : mins) {
    const double lv = std::log(weight);
    logs.values[set.rank()] = lv;
    total += lv;
  }
  logs = oracle::fmt_subset_zeta(std::move(logs));
  for (auto& v : logs.values) v = std::exp(total - v);
  return mass_from_dense(m1.frame(), oracle::fmt_subset_mobius(std::move(logs)));
}

}  // namespace dst
