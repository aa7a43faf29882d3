#include "dst/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <unordered_set>

#include "dst/error.hpp"

namespace dst::oracle {

namespace {

void check_cap(std::uint32_t n, std::uint32_t cap, const char* what) {
  if (n > cap)
    fail(Errc::cap_exceeded, std::string(what) + " is capped at " +
                                 std::to_string(cap) + " elements, got " +
                                 std::to_string(n));
}

}  // namespace

FullLatticeVector make_dense(std::uint32_t n, std::uint32_t cap) {
  check_cap(n, cap, "dense lattice allocation");
  return FullLatticeVector{n, std::vector<double>(std::size_t{1} << n, 0.0)};
}

FullLatticeVector dense_from_mass(const MassFunction& m, std::uint32_t cap) {
  FullLatticeVector vec = make_dense(m.universe_size(), cap);
  for (const auto& [set, value] : m.entries()) vec.values[set.rank()] += value;
  return vec;
}

FullLatticeVector fmt_superset_zeta(FullLatticeVector vec) {
  const std::size_t size = vec.values.size();
  for (std::uint32_t i = 0; i < vec.n; ++i) {
    const std::uint64_t bit = std::uint64_t{1} << i;
    for (std::uint64_t a = 0; a < size; ++a)
      if (!(a & bit)) vec.values[a] += vec.values[a | bit];
  }
  return vec;
}

FullLatticeVector fmt_superset_mobius(FullLatticeVector vec) {
  const std::size_t size = vec.values.size();
  for (std::uint32_t i = 0; i < vec.n; ++i) {
    const std::uint64_t bit = std::uint64_t{1} << i;
    for (std::uint64_t a = 0; a < size; ++a)
      if (!(a & bit)) vec.values[a] -= vec.values[a | bit];
  }
  return vec;
}

FullLatticeVector fmt_subset_zeta(FullLatticeVector vec) {
  const std::size_t size = vec.values.size();
  for (std::uint32_t i = 0; i < vec.n; ++i) {
    const std::uint64_t bit = std::uint64_t{1} << i;
    for (std::uint64_t a = 0; a < size; ++a)
      if (a & bit) vec.values[a] += vec.values[a ^ bit];
  }
  return vec;
}

FullLatticeVector fmt_subset_mobius(FullLatticeVector vec) {
  const std::size_t size = vec.values.size();
  for (std::uint32_t i = 0; i < vec.n; ++i) {
    const std::uint64_t bit = std::uint64_t{1} << i;
    for (std::uint64_t a = 0; a < size; ++a)
      if (a & bit) vec.values[a] -= vec.values[a ^ bit];
  }
  return vec;
}

FullLatticeVector brute_force_conjunctive_weights(const MassFunction& m,
                                                  std::uint32_t cap) {
  if (!m.non_dogmatic())
    fail(Errc::dogmatic_input,
         "the conjunctive weight product needs the universe to be focal");
  const std::uint32_t n = m.universe_size();
  check_cap(n, cap, "brute-force weight enumeration");

  FullLatticeVector q = fmt_superset_zeta(dense_from_mass(m, cap));
  std::vector<double> log_q(q.values.size());
  for (std::size_t a = 0; a < q.values.size(); ++a) log_q[a] = std::log(q.values[a]);

  const std::uint64_t full = (n == 64) ? ~std::uint64_t{0}
                                       : (std::uint64_t{1} << n) - 1;
  FullLatticeVector w = make_dense(n, cap);
  for (std::uint64_t b = 0; b <= full; ++b) {
    double acc = 0.0;
    const std::uint64_t comp = full ^ b;
    // Walk every superset a = b | extra; the sign flips with |a \ b|.
    for (std::uint64_t extra = comp;; extra = (extra - 1) & comp) {
      acc += (std::popcount(extra) & 1) ? log_q[b | extra] : -log_q[b | extra];
      if (extra == 0) break;
    }
    w.values[b] = std::exp(acc);
  }
  return w;
}

FullLatticeVector brute_force_disjunctive_weights(const MassFunction& m,
                                                  std::uint32_t cap) {
  if (!m.subnormal())
    fail(Errc::not_subnormal,
         "the disjunctive weight product needs the empty set to be focal");
  const std::uint32_t n = m.universe_size();
  check_cap(n, cap, "brute-force weight enumeration");

  FullLatticeVector bv = fmt_subset_zeta(dense_from_mass(m, cap));
  std::vector<double> log_b(bv.values.size());
  for (std::size_t a = 0; a < bv.values.size(); ++a) log_b[a] = std::log(bv.values[a]);

  const std::uint64_t full = (n == 64) ? ~std::uint64_t{0}
                                       : (std::uint64_t{1} << n) - 1;
  FullLatticeVector v = make_dense(n, cap);
  for (std::uint64_t b = 0; b <= full; ++b) {
    double acc = 0.0;
    const std::uint32_t card_b = static_cast<std::uint32_t>(std::popcount(b));
    for (std::uint64_t sub = b;; sub = (sub - 1) & b) {
      acc += ((card_b - std::popcount(sub)) & 1) ? log_b[sub] : -log_b[sub];
      if (sub == 0) break;
    }
    v.values[b] = std::exp(acc);
  }
  return v;
}

std::vector<Subset> brute_force_focal_points(std::span<const Subset> family,
                                             ClosureMode mode, std::size_t cap) {
  if (family.size() > cap)
    fail(Errc::cap_exceeded, "selection enumeration is capped at " +
                                 std::to_string(cap) + " focal sets, got " +
                                 std::to_string(family.size()));
  if (family.empty()) return {};
  const std::uint32_t n = family.front().universe_size();
  for (const auto& f : family)
    if (f.universe_size() != n)
      fail(Errc::frame_mismatch, "family mixes subsets of different frames");

  const std::size_t count = std::size_t{1} << family.size();
  // fold[mask] = combination of the selection encoded by mask; fold[0] is the
  // neutral element of the mode.
  std::vector<Subset> fold(count);
  fold[0] = mode == ClosureMode::conjunctive ? Subset::universe(n) : Subset::empty(n);
  std::unordered_set<Subset, SubsetHash> distinct;
  for (std::size_t mask = 1; mask < count; ++mask) {
    const auto lowest = static_cast<std::size_t>(std::countr_zero(mask));
    const Subset& prev = fold[mask & (mask - 1)];
    fold[mask] = mode == ClosureMode::conjunctive
                     ? prev.intersect(family[lowest])
                     : prev.unite(family[lowest]);
    distinct.insert(fold[mask]);
  }

  std::vector<Subset> out(distinct.begin(), distinct.end());
  std::sort(out.begin(), out.end(), CanonicalLess{});
  return out;
}

}  // namespace dst::oracle
