#include "dst/subset.hpp"

#include <bit>

#include "dst/error.hpp"

namespace dst {

namespace {
constexpr std::size_t words_for(std::uint32_t n) {
  return n <= 64 ? 1 : (static_cast<std::size_t>(n) + 63) / 64;
}
}  // namespace

Subset::Subset(std::uint32_t n) : n_(n), head_(0), tail_(words_for(n) - 1, 0) {}

Subset Subset::empty(std::uint32_t universe_size) { return Subset(universe_size); }

Subset Subset::universe(std::uint32_t universe_size) {
  Subset s(universe_size);
  s.head_ = ~std::uint64_t{0};
  for (auto& w : s.tail_) w = ~std::uint64_t{0};
  if (s.tail_.empty()) {
    s.head_ &= s.top_mask();
  } else {
    s.tail_.back() &= s.top_mask();
  }
  return s;
}

Subset Subset::single(std::uint32_t universe_size, std::uint32_t element) {
  Subset s(universe_size);
  s.set(element);
  return s;
}

Subset Subset::of(std::uint32_t universe_size,
                  std::initializer_list<std::uint32_t> elements) {
  Subset s(universe_size);
  for (auto e : elements) s.set(e);
  return s;
}

Subset Subset::from_rank(std::uint32_t universe_size, std::uint64_t rank) {
  if (universe_size > 64)
    fail(Errc::cap_exceeded, "rank addressing requires at most 64 elements");
  Subset s(universe_size);
  s.head_ = rank & s.top_mask();
  return s;
}

std::uint64_t Subset::top_mask() const {
  std::uint32_t r = n_ % 64;
  return r == 0 ? ~std::uint64_t{0} : (std::uint64_t{1} << r) - 1;
}

void Subset::check_same_universe(const Subset& other) const {
  if (n_ != other.n_)
    fail(Errc::frame_mismatch, "subsets belong to frames of different size");
}

bool Subset::test(std::uint32_t element) const {
  if (element >= n_) fail(Errc::frame_mismatch, "element index out of frame range");
  return (word(element / 64) >> (element % 64)) & 1;
}

Subset& Subset::set(std::uint32_t element) {
  if (element >= n_) fail(Errc::frame_mismatch, "element index out of frame range");
  std::uint64_t bit = std::uint64_t{1} << (element % 64);
  if (element < 64) {
    head_ |= bit;
  } else {
    tail_[element / 64 - 1] |= bit;
  }
  return *this;
}

std::uint32_t Subset::cardinality() const {
  auto c = static_cast<std::uint32_t>(std::popcount(head_));
  for (auto w : tail_) c += static_cast<std::uint32_t>(std::popcount(w));
  return c;
}

bool Subset::is_empty() const {
  if (head_ != 0) return false;
  for (auto w : tail_)
    if (w != 0) return false;
  return true;
}

bool Subset::is_universe() const { return cardinality() == n_; }

std::vector<std::uint32_t> Subset::elements() const {
  std::vector<std::uint32_t> out;
  out.reserve(cardinality());
  for (std::size_t i = 0; i < word_count(); ++i) {
    std::uint64_t w = word(i);
    while (w != 0) {
      auto bit = static_cast<std::uint32_t>(std::countr_zero(w));
      out.push_back(static_cast<std::uint32_t>(i) * 64 + bit);
      w &= w - 1;
    }
  }
  return out;
}

Subset Subset::intersect(const Subset& other) const {
  check_same_universe(other);
  Subset r = *this;
  r.head_ &= other.head_;
  for (std::size_t i = 0; i < r.tail_.size(); ++i) r.tail_[i] &= other.tail_[i];
  return r;
}

Subset Subset::unite(const Subset& other) const {
  check_same_universe(other);
  Subset r = *this;
  r.head_ |= other.head_;
  for (std::size_t i = 0; i < r.tail_.size(); ++i) r.tail_[i] |= other.tail_[i];
  return r;
}

Subset Subset::complement() const {
  Subset r = *this;
  r.head_ = ~r.head_;
  for (auto& w : r.tail_) w = ~w;
  if (r.tail_.empty()) {
    r.head_ &= r.top_mask();
  } else {
    r.tail_.back() &= r.top_mask();
  }
  return r;
}

bool Subset::subset_of(const Subset& other) const {
  check_same_universe(other);
  if ((head_ & ~other.head_) != 0) return false;
  for (std::size_t i = 0; i < tail_.size(); ++i)
    if ((tail_[i] & ~other.tail_[i]) != 0) return false;
  return true;
}

bool Subset::strict_subset_of(const Subset& other) const {
  return subset_of(other) && !(*this == other);
}

bool Subset::intersects(const Subset& other) const {
  check_same_universe(other);
  if ((head_ & other.head_) != 0) return true;
  for (std::size_t i = 0; i < tail_.size(); ++i)
    if ((tail_[i] & other.tail_[i]) != 0) return true;
  return false;
}

std::uint64_t Subset::rank() const {
  if (n_ > 64) fail(Errc::cap_exceeded, "rank addressing requires at most 64 elements");
  return head_;
}

bool CanonicalLess::operator()(const Subset& a, const Subset& b) const {
  if (a.universe_size() != b.universe_size())
    return a.universe_size() < b.universe_size();
  auto ca = a.cardinality();
  auto cb = b.cardinality();
  if (ca != cb) return ca < cb;
  for (std::size_t i = a.word_count(); i-- > 0;)
    if (a.word(i) != b.word(i)) return a.word(i) < b.word(i);
  return false;
}

std::size_t SubsetHash::operator()(const Subset& s) const {
  // FNV-1a over the words.
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&h](std::uint64_t v) {
    for (int i = 0; i < 8; ++i) {
      h ^= (v >> (i * 8)) & 0xff;
      h *= 1099511628211ULL;
    }
  };
  mix(s.universe_size());
  for (std::size_t i = 0; i < s.word_count(); ++i) mix(s.word(i));
  return static_cast<std::size_t>(h);
}

}  // namespace dst
