#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "dst/subset.hpp"

namespace dst {

/// The ordered universe of outcome labels. The element index is the position
/// in the label sequence and is stable for the frame's lifetime; all subset
/// encodings are relative to that order.
class Frame {
 public:
  explicit Frame(std::vector<std::string> labels);

  std::uint32_t size() const { return static_cast<std::uint32_t>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::uint32_t index) const { return labels_.at(index); }
  std::optional<std::uint32_t> index_of(std::string_view label) const;

  Subset empty_set() const { return Subset::empty(size()); }
  Subset full_set() const { return Subset::universe(size()); }
  Subset subset_of_labels(std::span<const std::string> labels) const;
  std::vector<std::string> labels_of(const Subset& set) const;
  std::string format_subset(const Subset& set) const;  // "{a,b}"

  bool operator==(const Frame& other) const { return labels_ == other.labels_; }

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, std::uint32_t> index_;
};

}  // namespace dst
