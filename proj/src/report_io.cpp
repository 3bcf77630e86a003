#include "superhom/report_io.hpp"

#include <algorithm>
#include <sstream>

namespace superhom {

nlohmann::ordered_json to_json(const RankMode& mode) {
  nlohmann::ordered_json j;
  j["variant"] = mode_name(mode);
  if (const auto* r = std::get_if<Randomized>(&mode)) {
    j["seed"] = r->seed;
    j["trials"] = r->trials;
    j["range"] = r->range;
  }
  return j;
}

nlohmann::ordered_json to_json(const BettiReport& report) {
  nlohmann::ordered_json j;
  j["kind"] = kind_name(report.kind);
  nlohmann::ordered_json alg;
  alg["source"] = report.algebra.source;
  alg["id"] = report.algebra.id;
  if (!report.algebra.params.empty()) alg["params"] = report.algebra.params;
  j["algebra"] = alg;
  j["weight"] = report.weight;
  j["mode"] = to_json(report.mode);
  if (report.specialization) {
    nlohmann::ordered_json s = nlohmann::ordered_json::object();
    for (const auto& [k, v] : *report.specialization) s[k] = v.get_str();
    j["specialization"] = s;
  }
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& r : report.rows) rows.push_back({{"m", r.m}, {"dim", r.dim}, {"ker", r.ker}, {"betti", r.betti}});
  j["rows"] = rows;
  j["euler"] = report.euler;
  return j;
}

std::string to_csv(const BettiReport& report) {
  std::ostringstream out;
  out << "m,dim,ker,betti\n";
  for (const auto& r : report.rows) out << r.m << ',' << r.dim << ',' << r.ker << ',' << r.betti << '\n';
  return out.str();
}

std::string describe_algebra(const AlgebraOrigin& origin) {
  std::string out;
  if (origin.source == "family") {
    out = "family " + std::to_string(origin.id);
  } else if (origin.source == "classType") {
    out = "Type[" + std::to_string(origin.id) + "]";
  } else {
    out = origin.source;
  }
  if (!origin.params.empty()) {
    std::string ps;
    for (const auto& [k, v] : origin.params) ps += (ps.empty() ? "" : ", ") + k + "=" + v;
    out += " (" + ps + ")";
  }
  return out;
}

std::string to_table(const BettiReport& report, bool abs_weight) {
  std::vector<std::vector<std::string>> cells = {{"m"}, {"SpaD"}, {"KerD"}, {"Bett"}};
  for (const auto& r : report.rows) {
    cells[0].push_back(std::to_string(r.m));
    cells[1].push_back(std::to_string(r.dim));
    cells[2].push_back(std::to_string(r.ker));
    cells[3].push_back(std::to_string(r.betti));
  }
  std::vector<std::size_t> width(cells[0].size(), 0);
  for (const auto& row : cells)
    for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
  std::ostringstream out;
  int w = abs_weight ? std::abs(report.weight) : report.weight;
  out << kind_name(report.kind) << " weight " << w;
  if (abs_weight && report.weight < 0) out << " (signed " << report.weight << ")";
  out << ", " << describe_algebra(report.algebra) << ", mode " << mode_name(report.mode);
  if (const auto* r = std::get_if<Randomized>(&report.mode)) out << " seed " << r->seed << " trials " << r->trials;
  out << '\n';
  for (const auto& row : cells) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << ' ';
      out << std::string(width[i] - row[i].size(), ' ') << row[i];
    }
    out << '\n';
  }
  out << "Euler " << report.euler << '\n';
  return out.str();
}

}  // namespace superhom
