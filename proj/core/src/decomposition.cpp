#include "dst/decomposition.hpp"

#include <algorithm>
#include <cmath>

#include "dst/error.hpp"
#include "dst/transforms.hpp"

namespace dst {

namespace {

std::vector<std::pair<Subset, double>> sort_entries(
    std::vector<std::pair<Subset, double>> entries) {
  std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) {
    return CanonicalLess{}(a.first, b.first);
  });
  return entries;
}

}  // namespace

WeightFunction::WeightFunction(Frame frame, ClosureMode mode,
                               std::vector<std::pair<Subset, double>> entries,
                               DecompositionStats stats)
    : frame_(std::move(frame)),
      mode_(mode),
      entries_(sort_entries(std::move(entries))),
      stats_(stats) {}

bool WeightFunction::stores(const Subset& a) const {
  auto it = std::lower_bound(
      entries_.begin(), entries_.end(), a,
      [](const auto& entry, const Subset& s) { return CanonicalLess{}(entry.first, s); });
  return it != entries_.end() && it->first == a;
}

double WeightFunction::at(const Subset& a) const {
  auto it = std::lower_bound(
      entries_.begin(), entries_.end(), a,
      [](const auto& entry, const Subset& s) { return CanonicalLess{}(entry.first, s); });
  if (it != entries_.end() && it->first == a) return it->second;
  return 1.0;
}

int ExponentTable::exponent_of(const Subset& point) const {
  for (const auto& [set, e] : entries)
    if (set == point) return e;
  return 0;
}

WeightFunction conjunctive_weights(const MassFunction& m, std::size_t closure_cap) {
  if (!m.non_dogmatic())
    fail(Errc::dogmatic_input,
         "conjunctive decomposition needs the universe to be focal");
  auto family = m.focal_sets();
  FocalPointSet closure = conjunctive_closure(family, closure_cap);
  const auto& pts = closure.points();

  std::vector<double> q(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) q[i] = commonality(m, pts[i]);

  // Canonical order sorts by cardinality, so every strict superset of pts[i]
  // sits at an index above i; walking downward keeps the recursion's
  // dependencies already solved.
  std::vector<double> w(pts.size());
  std::size_t products = 0;
  for (std::size_t i = pts.size(); i-- > 0;) {
    double denom = q[i];
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      if (pts[i].strict_subset_of(pts[j])) {
        denom *= w[j];
        ++products;
      }
    }
    w[i] = 1.0 / denom;
    ++products;
  }

  std::vector<std::pair<Subset, double>> entries;
  entries.reserve(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) entries.emplace_back(pts[i], w[i]);
  DecompositionStats stats{family.size(), pts.size(), closure.operations(), products};
  return WeightFunction(m.frame(), ClosureMode::conjunctive, std::move(entries), stats);
}

WeightFunction disjunctive_weights(const MassFunction& m, std::size_t closure_cap) {
  if (!m.subnormal())
    fail(Errc::not_subnormal,
         "disjunctive decomposition needs the empty set to be focal");
  auto family = m.focal_sets();
  FocalPointSet closure = disjunctive_closure(family, closure_cap);
  const auto& pts = closure.points();

  std::vector<double> b(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) b[i] = implicability(m, pts[i]);

  std::vector<double> v(pts.size());
  std::size_t products = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    double denom = b[i];
    for (std::size_t j = 0; j < i; ++j) {
      if (pts[j].strict_subset_of(pts[i])) {
        denom *= v[j];
        ++products;
      }
    }
    v[i] = 1.0 / denom;
    ++products;
  }

  std::vector<std::pair<Subset, double>> entries;
  entries.reserve(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) entries.emplace_back(pts[i], v[i]);
  DecompositionStats stats{family.size(), pts.size(), closure.operations(), products};
  return WeightFunction(m.frame(), ClosureMode::disjunctive, std::move(entries), stats);
}

namespace {

// e(F) = 1 - sum of e(B) over points strictly between the anchor and F.
// `points` must be sorted so that containment only points backwards.
std::vector<int> solve_exponents(const std::vector<Subset>& points, bool conjunctive) {
  std::vector<int> e(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    int value = 1;
    for (std::size_t j = 0; j < i; ++j) {
      bool between = conjunctive ? points[j].strict_subset_of(points[i])
                                 : points[i].strict_subset_of(points[j]);
      if (between) value -= e[j];
    }
    e[i] = value;
  }
  return e;
}

}  // namespace

ExponentTable exponent_table(const Subset& anchor, const FocalPointSet& closure) {
  if (closure.mode() != ClosureMode::conjunctive)
    fail(Errc::mode_mismatch, "exponent tables are defined against a conjunctive closure");
  if (anchor.universe_size() != closure.universe_size())
    fail(Errc::frame_mismatch, "anchor does not fit the closure's frame");

  std::vector<Subset> above;
  for (const auto& p : closure.points())
    if (anchor.strict_subset_of(p)) above.push_back(p);
  // canonical order = increasing cardinality, which the recursion needs
  std::vector<int> e = solve_exponents(above, /*conjunctive=*/true);

  ExponentTable table{anchor, {}};
  table.entries.reserve(above.size());
  for (std::size_t i = 0; i < above.size(); ++i)
    table.entries.emplace_back(above[i], e[i]);
  return table;
}

WeightFunction conjunctive_weights_direct(const MassFunction& m,
                                          std::size_t closure_cap) {
  if (!m.non_dogmatic())
    fail(Errc::dogmatic_input,
         "conjunctive decomposition needs the universe to be focal");
  auto family = m.focal_sets();
  FocalPointSet closure = conjunctive_closure(family, closure_cap);
  const auto& pts = closure.points();

  std::vector<double> q(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) q[i] = commonality(m, pts[i]);

  std::size_t products = 0;
  std::vector<std::pair<Subset, double>> entries;
  entries.reserve(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    std::vector<Subset> above;
    std::vector<std::size_t> above_idx;
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      if (pts[i].strict_subset_of(pts[j])) {
        above.push_back(pts[j]);
        above_idx.push_back(j);
      }
    }
    std::vector<int> e = solve_exponents(above, /*conjunctive=*/true);
    double w = 1.0 / q[i];
    ++products;
    for (std::size_t k = 0; k < above.size(); ++k) {
      if (e[k] == 0) continue;
      w *= std::pow(q[above_idx[k]], e[k]);
      ++products;
    }
    entries.emplace_back(pts[i], w);
  }
  DecompositionStats stats{family.size(), pts.size(), closure.operations(), products};
  return WeightFunction(m.frame(), ClosureMode::conjunctive, std::move(entries), stats);
}

WeightFunction disjunctive_weights_direct(const MassFunction& m,
                                          std::size_t closure_cap) {
  if (!m.subnormal())
    fail(Errc::not_subnormal,
         "disjunctive decomposition needs the empty set to be focal");
  auto family = m.focal_sets();
  FocalPointSet closure = disjunctive_closure(family, closure_cap);
  const auto& pts = closure.points();

  std::vector<double> b(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) b[i] = implicability(m, pts[i]);

  std::size_t products = 0;
  std::vector<std::pair<Subset, double>> entries;
  entries.reserve(pts.size());
  for (std::size_t i = pts.size(); i-- > 0;) {
    // Dual recursion runs over points strictly below, decreasing cardinality.
    std::vector<Subset> below;
    std::vector<std::size_t> below_idx;
    for (std::size_t j = i; j-- > 0;) {
      if (pts[j].strict_subset_of(pts[i])) {
        below.push_back(pts[j]);
        below_idx.push_back(j);
      }
    }
    std::vector<int> e = solve_exponents(below, /*conjunctive=*/false);
    double v = 1.0 / b[i];
    ++products;
    for (std::size_t k = 0; k < below.size(); ++k) {
      if (e[k] == 0) continue;
      v *= std::pow(b[below_idx[k]], e[k]);
      ++products;
    }
    entries.emplace_back(pts[i], v);
  }
  DecompositionStats stats{family.size(), pts.size(), closure.operations(), products};
  return WeightFunction(m.frame(), ClosureMode::disjunctive, std::move(entries), stats);
}

double proxy_weight(const MassFunction& m, const Subset& a) {
  if (a.universe_size() != m.universe_size())
    fail(Errc::frame_mismatch, "query subset does not fit the mass function's frame");
  FocalPointSet closure = conjunctive_closure(m.focal_sets());

  bool any = false;
  Subset meet;
  for (const auto& p : closure.points()) {
    if (!a.strict_subset_of(p)) continue;
    if (!any) {
      meet = p;
      any = true;
    } else {
      meet = meet.intersect(p);
    }
  }
  if (!any)
    fail(Errc::no_unique_minimum,
         "no focal point strictly above " + m.frame().format_subset(a));
  // The meet of the points above `a` is itself a focal point; it is the
  // unique minimum exactly when it still sits strictly above `a`.
  if (!a.strict_subset_of(meet))
    fail(Errc::no_unique_minimum,
         "the focal points above " + m.frame().format_subset(a) +
             " have no unique minimum");
  return commonality(m, meet) / commonality(m, a);
}

WeightFunction consonant_weights(const MassFunction& m) {
  if (!consonant_family(m))
    fail(Errc::not_consonant, "focal sets do not form a chain");
  if (!m.non_dogmatic())
    fail(Errc::dogmatic_input,
         "conjunctive decomposition needs the universe to be focal");

  const auto& chain = m.entries();  // canonical order = chain order
  const std::size_t k = chain.size();
  // Suffix sums give q along the chain in one pass.
  std::vector<double> q(k);
  double acc = 0.0;
  for (std::size_t i = k; i-- > 0;) {
    acc += chain[i].second;
    q[i] = acc;
  }

  std::vector<std::pair<Subset, double>> entries;
  entries.reserve(k);
  for (std::size_t i = 0; i + 1 < k; ++i)
    entries.emplace_back(chain[i].first, q[i + 1] / q[i]);
  entries.emplace_back(chain[k - 1].first, 1.0 / q[k - 1]);

  DecompositionStats stats{k, k, 0, k};
  return WeightFunction(m.frame(), ClosureMode::conjunctive, std::move(entries), stats);
}

WeightFunction quasi_bayesian_weights(const MassFunction& m) {
  if (!quasi_bayesian_family(m))
    fail(Errc::not_quasi_bayesian,
         "needs the universe focal and all other focal sets pairwise disjoint");

  const Subset omega = m.frame().full_set();
  const Subset none = m.frame().empty_set();
  const double q_omega = m.mass(omega);
  double q_empty = 0.0;  // total mass; kept literal instead of assuming 1
  for (const auto& [set, value] : m.entries()) q_empty += value;

  // Non-universe, non-empty focal sets. Their pairwise intersections are all
  // empty, so q(A) = m(A) + m(universe) and the closure is F plus the empty
  // set (which only materialises once two such sets exist).
  std::vector<std::pair<Subset, double>> disjoint;
  for (const auto& [set, value] : m.entries())
    if (!set.is_universe() && !set.is_empty()) disjoint.emplace_back(set, value);

  std::size_t products = 0;
  std::vector<std::pair<Subset, double>> entries;
  entries.reserve(disjoint.size() + 2);
  entries.emplace_back(omega, 1.0 / q_omega);
  ++products;

  double empty_weight = 1.0 / q_empty;
  double omega_exponent_base = 1.0;
  for (const auto& [set, value] : disjoint) {
    double q_a = value + q_omega;
    entries.emplace_back(set, q_omega / q_a);
    empty_weight *= q_a;
    omega_exponent_base *= q_omega;
    products += 3;
  }
  // q(omega)^(1 - |G|), folded in as one division by q_omega^(|G| - 1).
  empty_weight *= q_omega / omega_exponent_base;
  ++products;

  const bool empty_is_point = disjoint.size() >= 2 || m.subnormal();
  if (empty_is_point) entries.emplace_back(none, empty_weight);

  DecompositionStats stats{m.focal_count(), entries.size(), 0, products};
  return WeightFunction(m.frame(), ClosureMode::conjunctive, std::move(entries), stats);
}

WeightFunction dual_quasi_bayesian_weights(const MassFunction& m) {
  if (!dual_quasi_bayesian_family(m))
    fail(Errc::not_dual_quasi_bayesian,
         "needs the empty set focal and all other focal pairs to union to the universe");

  const Subset omega = m.frame().full_set();
  const Subset none = m.frame().empty_set();
  const double b_empty = m.mass(none);
  double b_omega = 0.0;
  for (const auto& [set, value] : m.entries()) b_omega += value;

  std::vector<std::pair<Subset, double>> covering;
  for (const auto& [set, value] : m.entries())
    if (!set.is_universe() && !set.is_empty()) covering.emplace_back(set, value);

  std::size_t products = 0;
  std::vector<std::pair<Subset, double>> entries;
  entries.reserve(covering.size() + 2);
  entries.emplace_back(none, 1.0 / b_empty);
  ++products;

  double omega_weight = 1.0 / b_omega;
  double empty_exponent_base = 1.0;
  for (const auto& [set, value] : covering) {
    double b_a = value + b_empty;
    entries.emplace_back(set, b_empty / b_a);
    omega_weight *= b_a;
    empty_exponent_base *= b_empty;
    products += 3;
  }
  omega_weight *= b_empty / empty_exponent_base;
  ++products;

  const bool omega_is_point = covering.size() >= 2 || m.non_dogmatic();
  if (omega_is_point) entries.emplace_back(omega, omega_weight);

  DecompositionStats stats{m.focal_count(), entries.size(), 0, products};
  return WeightFunction(m.frame(), ClosureMode::disjunctive, std::move(entries), stats);
}

double commonality_from_weights(const WeightFunction& w, const Subset& a) {
  if (w.mode() != ClosureMode::conjunctive)
    fail(Errc::mode_mismatch, "commonality reconstruction needs conjunctive weights");
  if (a.universe_size() != w.frame().size())
    fail(Errc::frame_mismatch, "query subset does not fit the weight function's frame");
  double product = 1.0;
  for (const auto& [set, weight] : w.entries())
    if (!a.subset_of(set)) product *= weight;
  return product;
}

double implicability_from_weights(const WeightFunction& v, const Subset& a) {
  if (v.mode() != ClosureMode::disjunctive)
    fail(Errc::mode_mismatch, "implicability reconstruction needs disjunctive weights");
  if (a.universe_size() != v.frame().size())
    fail(Errc::frame_mismatch, "query subset does not fit the weight function's frame");
  double product = 1.0;
  for (const auto& [set, weight] : v.entries())
    if (!set.subset_of(a)) product *= weight;
  return product;
}

}  // namespace dst
