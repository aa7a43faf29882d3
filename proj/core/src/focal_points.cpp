#include "dst/focal_points.hpp"

#include <algorithm>
#include <unordered_set>

#include "dst/error.hpp"

namespace dst {

const char* closure_mode_name(ClosureMode mode) {
  return mode == ClosureMode::conjunctive ? "conjunctive" : "disjunctive";
}

FocalPointSet::FocalPointSet(ClosureMode mode, std::uint32_t universe_size,
                             std::vector<Subset> points, std::size_t operations)
    : mode_(mode),
      universe_size_(universe_size),
      points_(std::move(points)),
      operations_(operations) {}

bool FocalPointSet::contains(const Subset& a) const {
  auto it = std::lower_bound(points_.begin(), points_.end(), a, CanonicalLess{});
  return it != points_.end() && *it == a;
}

FocalPointSet close_family(std::span<const Subset> family, ClosureMode mode,
                           std::size_t cap) {
  std::uint32_t n = family.empty() ? 0 : family.front().universe_size();
  for (const auto& f : family)
    if (f.universe_size() != n)
      fail(Errc::frame_mismatch, "family mixes subsets of different frames");

  // Seed in canonical order so the FIFO worklist (and therefore the
  // operation counter) is reproducible.
  std::vector<Subset> seeds(family.begin(), family.end());
  std::sort(seeds.begin(), seeds.end(), CanonicalLess{});
  seeds.erase(std::unique(seeds.begin(), seeds.end()), seeds.end());

  std::unordered_set<Subset, SubsetHash> known(seeds.begin(), seeds.end());
  std::vector<Subset> points = seeds;  // doubles as the FIFO worklist
  std::size_t operations = 0;

  for (std::size_t cursor = 0; cursor < points.size(); ++cursor) {
    // points may reallocate while we append; take a copy of the current one.
    const Subset current = points[cursor];
    for (const auto& f : seeds) {
      ++operations;
      Subset next = mode == ClosureMode::conjunctive ? current.intersect(f)
                                                     : current.unite(f);
      if (known.insert(next).second) {
        points.push_back(std::move(next));
        if (points.size() > cap)
          fail(Errc::size_exceeded,
               "closure exceeded the cap of " + std::to_string(cap) + " points");
      }
    }
  }

  std::sort(points.begin(), points.end(), CanonicalLess{});
  return FocalPointSet(mode, n, std::move(points), operations);
}

FocalPointSet conjunctive_closure(std::span<const Subset> family, std::size_t cap) {
  return close_family(family, ClosureMode::conjunctive, cap);
}

FocalPointSet disjunctive_closure(std::span<const Subset> family, std::size_t cap) {
  return close_family(family, ClosureMode::disjunctive, cap);
}

bool is_focal_point(const Subset& a, std::span<const Subset> family,
                    ClosureMode mode) {
  bool any = false;
  Subset fold;
  for (const auto& f : family) {
    bool related = mode == ClosureMode::conjunctive ? a.subset_of(f) : f.subset_of(a);
    if (!related) continue;
    if (!any) {
      fold = f;
      any = true;
    } else {
      fold = mode == ClosureMode::conjunctive ? fold.intersect(f) : fold.unite(f);
    }
  }
  return any && fold == a;
}

}  // namespace dst
