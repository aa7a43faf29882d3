#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "dst/mass.hpp"

namespace fixtures {

inline dst::Subset set_of(const dst::Frame& frame,
                          std::initializer_list<const char*> labels) {
  std::vector<std::string> names;
  for (const char* l : labels) names.emplace_back(l);
  return frame.subset_of_labels(names);
}

inline dst::MassFunction mass_of(
    const dst::Frame& frame,
    std::initializer_list<std::pair<dst::Subset, double>> entries) {
  return dst::MassFunction::make(frame, std::vector(entries.begin(), entries.end()));
}

// Canonical test masses shared across suites (also shipped as documents in
// tests/data/).

inline dst::Frame frame_abc() { return dst::Frame({"a", "b", "c"}); }
inline dst::Frame frame_abcd() { return dst::Frame({"a", "b", "c", "d"}); }
inline dst::Frame frame_ab() { return dst::Frame({"a", "b"}); }

// Consonant chain {a} < {a,b} < universe.
inline dst::MassFunction m_cons() {
  dst::Frame f = frame_abc();
  return mass_of(f, {{set_of(f, {"a"}), 0.5},
                     {set_of(f, {"a", "b"}), 0.3},
                     {f.full_set(), 0.2}});
}

// Quasi-Bayesian: two disjoint sets plus the universe.
inline dst::MassFunction m_qb() {
  dst::Frame f = frame_abc();
  return mass_of(f, {{set_of(f, {"a"}), 0.4},
                     {set_of(f, {"b"}), 0.3},
                     {f.full_set(), 0.3}});
}

// General structure whose closure picks up {b} = {a,b} & {b,c}.
inline dst::MassFunction m_fp() {
  dst::Frame f = frame_abcd();
  return mass_of(f, {{set_of(f, {"a", "b"}), 0.3},
                     {set_of(f, {"b", "c"}), 0.3},
                     {f.full_set(), 0.4}});
}

// Subnormal chain on a two-element frame.
inline dst::MassFunction m_sub() {
  dst::Frame f = frame_ab();
  return mass_of(f, {{f.empty_set(), 0.2},
                     {set_of(f, {"a"}), 0.5},
                     {f.full_set(), 0.3}});
}

inline bool same_entries(const dst::MassFunction& a, const dst::MassFunction& b,
                         double tol) {
  if (!(a.frame() == b.frame()) || a.focal_count() != b.focal_count()) return false;
  for (std::size_t i = 0; i < a.entries().size(); ++i) {
    if (!(a.entries()[i].first == b.entries()[i].first)) return false;
    double da = a.entries()[i].second, db = b.entries()[i].second;
    if (da > db + tol || db > da + tol) return false;
  }
  return true;
}

}  // namespace fixtures
