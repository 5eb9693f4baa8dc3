#pragma once

#include "binomid/classify.hpp"
#include "binomid/core.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace binomid::cli {

// Row index on the left, k across the top, left-aligned columns with
// two-space gutters, no trailing whitespace.
std::string triangle_text(const Triangle &t);
// One line per row, entries separated by commas.
std::string triangle_csv(const Triangle &t);

nlohmann::json rational_json(const ExactRational &r);
ExactRational rational_from_json(const nlohmann::json &j);

nlohmann::json triangle_json(const Triangle &t);
nlohmann::json pyramid_json(const Pyramid &p);
// Rows of a triangle document back as exact values.
std::vector<std::vector<ExactRational>> triangle_rows_from_json(const nlohmann::json &j);

std::string pyramid_text(const Pyramid &p);
std::string pyramid_csv(const Pyramid &p);

nlohmann::json report_json(const ClassificationReport &r);
// "<label>  <verdict>  bound <B>[  witness: ...]"
std::string report_line(const ClassificationReport &r);

} // namespace binomid::cli
