#include "dst/frame.hpp"

#include "dst/error.hpp"

namespace dst {

Frame::Frame(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.empty()) fail(Errc::empty_frame, "a frame needs at least one label");
  index_.reserve(labels_.size());
  for (std::uint32_t i = 0; i < labels_.size(); ++i) {
    auto [it, inserted] = index_.emplace(labels_[i], i);
    if (!inserted) fail(Errc::duplicate_label, "label '" + labels_[i] + "' repeats");
  }
}

std::optional<std::uint32_t> Frame::index_of(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Subset Frame::subset_of_labels(std::span<const std::string> labels) const {
  Subset s = empty_set();
  for (const auto& l : labels) {
    auto idx = index_of(l);
    if (!idx) fail(Errc::unknown_label, "label '" + l + "' is not in the frame");
    s.set(*idx);
  }
  return s;
}

std::vector<std::string> Frame::labels_of(const Subset& set) const {
  if (set.universe_size() != size())
    fail(Errc::frame_mismatch, "subset does not belong to this frame");
  std::vector<std::string> out;
  for (auto e : set.elements()) out.push_back(labels_[e]);
  return out;
}

std::string Frame::format_subset(const Subset& set) const {
  std::string out = "{";
  bool first = true;
  for (const auto& l : labels_of(set)) {
    if (!first) out += ",";
    out += l;
    first = false;
  }
  out += "}";
  return out;
}

}  // namespace dst
