#include "dst/document.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "dst/error.hpp"

namespace dst {

namespace {

using json = nlohmann::ordered_json;

json parse_json(const std::string& text) {
  json j = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded()) fail(Errc::malformed_document, "input is not valid JSON");
  if (!j.is_object()) fail(Errc::malformed_document, "document root must be an object");
  return j;
}

Frame parse_frame(const json& j) {
  if (!j.contains("frame") || !j["frame"].is_array())
    fail(Errc::malformed_document, "missing \"frame\" array");
  std::vector<std::string> labels;
  for (const auto& item : j["frame"]) {
    if (!item.is_string())
      fail(Errc::malformed_document, "frame labels must be strings");
    labels.push_back(item.get<std::string>());
  }
  return Frame(std::move(labels));
}

Subset parse_set(const Frame& frame, const json& j) {
  if (!j.is_array()) fail(Errc::malformed_document, "\"set\" must be a label array");
  std::vector<std::string> labels;
  for (const auto& item : j) {
    if (!item.is_string())
      fail(Errc::malformed_document, "set elements must be label strings");
    labels.push_back(item.get<std::string>());
  }
  return frame.subset_of_labels(labels);
}

std::vector<std::pair<Subset, double>> parse_entries(const Frame& frame,
                                                     const json& j,
                                                     const char* array_field,
                                                     const char* value_field) {
  if (!j.contains(array_field) || !j[array_field].is_array())
    fail(Errc::malformed_document,
         std::string("missing \"") + array_field + "\" array");
  std::vector<std::pair<Subset, double>> entries;
  for (const auto& item : j[array_field]) {
    if (!item.is_object() || !item.contains("set") || !item.contains(value_field) ||
        !item[value_field].is_number())
      fail(Errc::malformed_document,
           std::string("entries need a \"set\" and a numeric \"") + value_field + '"');
    entries.emplace_back(parse_set(frame, item["set"]),
                         item[value_field].get<double>());
  }
  return entries;
}

json set_to_json(const Frame& frame, const Subset& s) {
  json arr = json::array();
  for (const auto& label : frame.labels_of(s)) arr.push_back(label);
  return arr;
}

json entries_to_json(const Frame& frame,
                     const std::vector<std::pair<Subset, double>>& entries,
                     const char* value_field, bool skip_unit) {
  json arr = json::array();
  for (const auto& [set, value] : entries) {
    if (skip_unit && value == 1.0) continue;
    json item;
    item["set"] = set_to_json(frame, set);
    item[value_field] = value;
    arr.push_back(std::move(item));
  }
  return arr;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

MassFunction parse_mass_document(const std::string& text) {
  json j = parse_json(text);
  Frame frame = parse_frame(j);
  auto entries = parse_entries(frame, j, "masses", "mass");
  return MassFunction::make(std::move(frame), std::move(entries));
}

std::string write_mass_document(const MassFunction& m) {
  json j;
  j["frame"] = m.frame().labels();
  j["masses"] = entries_to_json(m.frame(), m.entries(), "mass", /*skip_unit=*/false);
  return dump(j);
}

std::string write_mass_document(const MassFunction& m, const GeneratorSpec& origin) {
  json j;
  j["frame"] = m.frame().labels();
  j["masses"] = entries_to_json(m.frame(), m.entries(), "mass", /*skip_unit=*/false);
  j["meta"] = {{"generator", kGeneratorAlgorithm},
               {"structure", generated_structure_name(origin.structure)},
               {"seed", origin.seed},
               {"n", origin.n},
               {"focal_count", origin.focal_count},
               {"subnormal", origin.subnormal}};
  return dump(j);
}

WeightFunction parse_weight_document(const std::string& text) {
  json j = parse_json(text);
  Frame frame = parse_frame(j);
  ClosureMode mode = ClosureMode::conjunctive;
  if (j.contains("mode")) {
    const std::string name = j["mode"].get<std::string>();
    if (name == "disjunctive") {
      mode = ClosureMode::disjunctive;
    } else if (name != "conjunctive") {
      fail(Errc::malformed_document, "mode must be conjunctive or disjunctive");
    }
  }
  auto entries = parse_entries(frame, j, "weights", "weight");
  for (const auto& [set, value] : entries)
    if (value <= 0.0)
      fail(Errc::malformed_document, "weights must be strictly positive");
  return WeightFunction(std::move(frame), mode, std::move(entries));
}

std::string write_weight_document(const WeightFunction& w, bool with_counters) {
  json j;
  j["frame"] = w.frame().labels();
  j["mode"] = closure_mode_name(w.mode());
  j["weights"] = entries_to_json(w.frame(), w.entries(), "weight", /*skip_unit=*/true);
  if (with_counters) {
    const auto& s = w.stats();
    j["counters"] = {{"focal_count", s.focal_count},
                     {"focal_point_count", s.focal_point_count},
                     {"closure_ops", s.closure_operations},
                     {"products", s.products}};
  }
  return dump(j);
}

CommonalityTable parse_commonality_document(const std::string& text) {
  json j = parse_json(text);
  Frame frame = parse_frame(j);
  auto entries = parse_entries(frame, j, "q", "q");
  return CommonalityTable::from_values(std::move(frame), std::move(entries));
}

std::string write_commonality_document(const CommonalityTable& table) {
  json j;
  j["frame"] = table.frame().labels();
  j["q"] = entries_to_json(table.frame(), table.entries(), "q", /*skip_unit=*/false);
  return dump(j);
}

ImplicabilityTable parse_implicability_document(const std::string& text) {
  json j = parse_json(text);
  Frame frame = parse_frame(j);
  auto entries = parse_entries(frame, j, "b", "b");
  return ImplicabilityTable::from_values(std::move(frame), std::move(entries));
}

std::string write_implicability_document(const ImplicabilityTable& table) {
  json j;
  j["frame"] = table.frame().labels();
  j["b"] = entries_to_json(table.frame(), table.entries(), "b", /*skip_unit=*/false);
  return dump(j);
}

std::string write_focal_points_document(const Frame& frame,
                                        const FocalPointSet& closure) {
  if (frame.size() != closure.universe_size())
    fail(Errc::frame_mismatch, "closure does not fit the frame");
  json j;
  j["frame"] = frame.labels();
  j["mode"] = closure_mode_name(closure.mode());
  json pts = json::array();
  for (const auto& p : closure.points()) {
    json item;
    item["set"] = set_to_json(frame, p);
    pts.push_back(std::move(item));
  }
  j["points"] = std::move(pts);
  j["counters"] = {{"points", closure.size()}, {"operations", closure.operations()}};
  return dump(j);
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::io_error, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(Errc::io_error, "cannot open " + path + " for writing");
  out << text;
  if (!out) fail(Errc::io_error, "failed writing " + path);
}

}  // namespace dst
