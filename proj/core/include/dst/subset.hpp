#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace dst {

/// A set of frame elements, one bit per element. Frames with up to 64
/// elements live entirely in the inline word and never touch the heap;
/// larger frames spill the remaining words to a vector. Only the low
/// universe_size() bits may ever be set.
class Subset {
 public:
  Subset() = default;

  static Subset empty(std::uint32_t universe_size);
  static Subset universe(std::uint32_t universe_size);
  static Subset single(std::uint32_t universe_size, std::uint32_t element);
  static Subset of(std::uint32_t universe_size,
                   std::initializer_list<std::uint32_t> elements);
  // Interprets `rank` as the bit pattern of the set (dense lattice
  // indexing). Requires universe_size <= 64.
  static Subset from_rank(std::uint32_t universe_size, std::uint64_t rank);

  std::uint32_t universe_size() const { return n_; }
  std::size_t word_count() const { return tail_.size() + 1; }
  std::uint64_t word(std::size_t i) const { return i == 0 ? head_ : tail_[i - 1]; }

  bool test(std::uint32_t element) const;
  Subset& set(std::uint32_t element);

  std::uint32_t cardinality() const;
  bool is_empty() const;
  bool is_universe() const;
  std::vector<std::uint32_t> elements() const;

  Subset intersect(const Subset& other) const;
  Subset unite(const Subset& other) const;
  Subset complement() const;

  bool subset_of(const Subset& other) const;
  bool superset_of(const Subset& other) const { return other.subset_of(*this); }
  bool strict_subset_of(const Subset& other) const;
  bool strict_superset_of(const Subset& other) const {
    return other.strict_subset_of(*this);
  }
  bool intersects(const Subset& other) const;

  // Bit-pattern value of the set; requires universe_size() <= 64.
  std::uint64_t rank() const;

  bool operator==(const Subset& other) const = default;

 private:
  explicit Subset(std::uint32_t n);
  void check_same_universe(const Subset& other) const;
  std::uint64_t top_mask() const;

  std::uint32_t n_ = 0;
  std::uint64_t head_ = 0;
  std::vector<std::uint64_t> tail_;  // words 1.. for frames beyond 64 elements
};

/// Deterministic iteration order used throughout the library: cardinality
/// ascending, ties broken by bit-pattern value ascending.
struct CanonicalLess {
  bool operator()(const Subset& a, const Subset& b) const;
};

struct SubsetHash {
  std::size_t operator()(const Subset& s) const;
};

}  // namespace dst
