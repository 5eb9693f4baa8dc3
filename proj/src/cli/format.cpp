#include "binomid/format.hpp"

#include <algorithm>
#include <sstream>

namespace binomid::cli {

namespace {

void rtrim(std::string &s) {
  while (!s.empty() && s.back() == ' ')
    s.pop_back();
}

} // namespace

std::string triangle_text(const Triangle &t) {
  const auto depth = static_cast<std::size_t>(t.depth());
  const std::string corner = "n\\k";
  std::size_t label_width = corner.size();
  label_width = std::max(label_width, std::to_string(depth).size());

  std::vector<std::vector<std::string>> cells(depth + 1);
  std::vector<std::size_t> width(depth + 1, 0);
  for (std::size_t k = 0; k <= depth; ++k)
    width[k] = std::to_string(k).size();
  for (std::size_t n = 0; n <= depth; ++n)
    for (const auto &e : t.row(static_cast<std::int64_t>(n))) {
      const std::size_t k = cells[n].size();
      cells[n].push_back(e.to_string());
      width[k] = std::max(width[k], cells[n].back().size());
    }

  auto pad = [](std::string s, std::size_t w) {
    s.resize(std::max(w, s.size()), ' ');
    return s;
  };
  std::ostringstream out;
  std::string line = pad(corner, label_width);
  for (std::size_t k = 0; k <= depth; ++k)
    line += "  " + pad(std::to_string(k), width[k]);
  rtrim(line);
  out << line << '\n';
  for (std::size_t n = 0; n <= depth; ++n) {
    line = pad(std::to_string(n), label_width);
    for (std::size_t k = 0; k < cells[n].size(); ++k)
      line += "  " + pad(cells[n][k], width[k]);
    rtrim(line);
    out << line << '\n';
  }
  return out.str();
}

std::string triangle_csv(const Triangle &t) {
  std::ostringstream out;
  for (const auto &row : t.rows()) {
    for (std::size_t k = 0; k < row.size(); ++k)
      out << (k ? "," : "") << row[k].to_string();
    out << '\n';
  }
  return out.str();
}

nlohmann::json rational_json(const ExactRational &r) {
  return {{"num", r.numerator().get_str()}, {"den", r.denominator().get_str()}};
}

ExactRational rational_from_json(const nlohmann::json &j) {
  return ExactRational(BigInt(j.at("num").get<std::string>()),
                       BigInt(j.at("den").get<std::string>()));
}

nlohmann::json triangle_json(const Triangle &t) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto &row : t.rows()) {
    nlohmann::json r = nlohmann::json::array();
    for (const auto &e : row)
      r.push_back(rational_json(e));
    rows.push_back(std::move(r));
  }
  return {{"source", t.source().name()}, {"depth", t.depth()}, {"rows", std::move(rows)}};
}

nlohmann::json pyramid_json(const Pyramid &p) {
  nlohmann::json slices = nlohmann::json::array();
  for (const auto &s : p.slices())
    slices.push_back(triangle_json(s));
  return {{"source", p.source().name()}, {"depth", p.depth()}, {"slices", std::move(slices)}};
}

std::vector<std::vector<ExactRational>> triangle_rows_from_json(const nlohmann::json &j) {
  std::vector<std::vector<ExactRational>> rows;
  for (const auto &row : j.at("rows")) {
    auto &out = rows.emplace_back();
    for (const auto &e : row)
      out.push_back(rational_from_json(e));
  }
  return rows;
}

std::string pyramid_text(const Pyramid &p) {
  std::ostringstream out;
  for (std::int64_t m = 0; m <= p.depth(); ++m)
    out << (m ? "\n" : "") << "slice " << m << ": " << p.slice(m).source().name() << '\n'
        << triangle_text(p.slice(m));
  return out.str();
}

std::string pyramid_csv(const Pyramid &p) {
  std::ostringstream out;
  for (std::int64_t m = 0; m <= p.depth(); ++m)
    out << "# slice " << m << '\n' << triangle_csv(p.slice(m));
  return out.str();
}

nlohmann::json report_json(const ClassificationReport &r) {
  nlohmann::json j = {{"property", to_string(r.property)},
                      {"bound", r.bound},
                      {"verdict", to_string(r.verdict)},
                      {"witness", nullptr}};
  if (r.level)
    j["level"] = *r.level;
  if (r.requested_bound != r.bound)
    j["requested_bound"] = r.requested_bound;
  if (r.witness) {
    nlohmann::json w = nlohmann::json::object();
    for (const auto &[name, value] : r.witness->indices)
      w[name] = value;
    if (r.witness->value)
      w["value"] = rational_json(*r.witness->value);
    w["description"] = r.witness->description;
    j["witness"] = std::move(w);
  }
  if (!r.notes.empty())
    j["notes"] = r.notes;
  return j;
}

std::string report_line(const ClassificationReport &r) {
  std::string line = r.label() + "  " + to_string(r.verdict) + "  bound " +
                     std::to_string(r.bound);
  if (r.witness)
    line += "  witness: " + r.witness->description;
  return line;
}

} // namespace binomid::cli
