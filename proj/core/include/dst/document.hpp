#pragma once

#include <string>

#include "dst/decomposition.hpp"
#include "dst/focal_points.hpp"
#include "dst/generate.hpp"
#include "dst/mass.hpp"
#include "dst/transforms.hpp"

namespace dst {

// JSON document formats shared by the CLI and the test suite. A mass
// document is {"frame": [labels], "masses": [{"set": [labels], "mass": x}]};
// weight documents replace "masses" with "weights" ({"set", "weight"}) and
// list only sets whose weight differs from 1; commonality/implicability
// tables use the same shape under the field name "q" or "b". Emission is
// deterministic: canonical subset order, shortest round-trip numerals.

MassFunction parse_mass_document(const std::string& text);
std::string write_mass_document(const MassFunction& m);
/// Adds a "meta" block recording the generator draw that produced `m`.
std::string write_mass_document(const MassFunction& m, const GeneratorSpec& origin);

WeightFunction parse_weight_document(const std::string& text);
std::string write_weight_document(const WeightFunction& w, bool with_counters = true);

CommonalityTable parse_commonality_document(const std::string& text);
std::string write_commonality_document(const CommonalityTable& table);

ImplicabilityTable parse_implicability_document(const std::string& text);
std::string write_implicability_document(const ImplicabilityTable& table);

std::string write_focal_points_document(const Frame& frame,
                                        const FocalPointSet& closure);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace dst
