#include "tc/planner.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>

namespace tc {

std::string CellComplexDescription::point(int k) const {
  auto it = points.find(k);
  return it != points.end() ? it->second : "v" + std::to_string(k);
}

std::string CellComplexDescription::path(int k, int l) const {
  auto it = paths.find({k, l});
  return it != paths.end() ? it->second
                           : "g" + std::to_string(k) + "_" + std::to_string(l);
}

void CellComplexDescription::validate() const {
  if (dimension < 0)
    throw std::invalid_argument("cell complex: negative dimension");
  if (cells.size() != static_cast<std::size_t>(dimension) + 1)
    throw std::invalid_argument("cell complex: need one cell count per dimension 0.." +
                                std::to_string(dimension));
  for (long c : cells)
    if (c < 1) throw std::invalid_argument("cell complex: every dimension needs >= 1 cell");
  for (const auto& [k, label] : points) {
    if (k < 0 || k > dimension)
      throw std::invalid_argument("cell complex: point index out of range");
    if (label.empty()) throw std::invalid_argument("cell complex: empty point label");
  }
  for (const auto& [kl, label] : paths) {
    if (kl.first < 0 || kl.first > dimension || kl.second < 0 || kl.second > dimension)
      throw std::invalid_argument("cell complex: path index out of range");
    if (label.empty()) throw std::invalid_argument("cell complex: empty path label");
  }
}

PlannerTable synthesize(const CellComplexDescription& d) {
  d.validate();
  const int n = d.dimension;
  PlannerTable table;
  table.dimension = n;
  for (int i = 0; i <= 2 * n; ++i) {
    PlannerDomain dom;
    dom.index = i;
    for (int k = std::max(0, i - n); k <= std::min(i, n); ++k) {
      const int l = i - k;
      dom.blocks.push_back({k, l, d.point(k), d.path(k, l), d.point(l)});
    }
    table.domains.push_back(std::move(dom));
  }
  return table;
}

CellComplexDescription standard_connected_sum_description(int n, int g) {
  if (n < 1) throw std::invalid_argument("standard description: n >= 1 required");
  if (g < 1) throw std::invalid_argument("standard description: g >= 1 required");
  CellComplexDescription d;
  d.dimension = n;
  d.cells.assign(n + 1, g);
  d.cells.front() = 1;
  d.cells.back() = 1;
  return d;
}

CellComplexDescription parse_description(std::istream& in) {
  CellComplexDescription d;
  bool have_dimension = false, have_cells = false;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string key;
    if (!(ls >> key)) continue;
    auto fail = [&](const std::string& msg) {
      throw std::invalid_argument("description line " + std::to_string(lineno) + ": " + msg);
    };
    if (key == "dimension") {
      if (!(ls >> d.dimension)) fail("expected an integer dimension");
      have_dimension = true;
    } else if (key == "cells") {
      long c;
      d.cells.clear();
      while (ls >> c) d.cells.push_back(c);
      if (d.cells.empty()) fail("expected cell counts");
      have_cells = true;
    } else if (key == "point") {
      int k;
      std::string label;
      if (!(ls >> k >> label)) fail("expected \"point <k> <label>\"");
      d.points[k] = label;
    } else if (key == "path") {
      int k, l;
      std::string label;
      if (!(ls >> k >> l >> label)) fail("expected \"path <k> <l> <label>\"");
      d.paths[{k, l}] = label;
    } else {
      fail("unknown keyword \"" + key + "\"");
    }
  }
  if (!have_dimension) throw std::invalid_argument("description: missing \"dimension\"");
  if (!have_cells) throw std::invalid_argument("description: missing \"cells\"");
  d.validate();
  return d;
}

CellComplexDescription load_description(const std::string& file) {
  std::ifstream in(file);
  if (!in) throw std::invalid_argument("cannot open description file " + file);
  return parse_description(in);
}

std::string PlannerTable::to_text() const {
  std::ostringstream out;
  out << "planner for a " << dimension << "-complex: " << domains.size()
      << " domains\n";
  for (const auto& dom : domains) {
    out << "F" << dom.index << ":\n";
    for (const auto& r : dom.blocks)
      out << "  V^" << r.k << " x V^" << r.l << ": contract to " << r.contract_to
          << ", run " << r.path << ", expand from " << r.expand_from << "\n";
  }
  return out.str();
}

std::string PlannerTable::to_json() const {
  nlohmann::json j;
  j["dimension"] = dimension;
  j["domains"] = nlohmann::json::array();
  for (const auto& dom : domains) {
    nlohmann::json jd;
    jd["index"] = dom.index;
    jd["blocks"] = nlohmann::json::array();
    for (const auto& r : dom.blocks)
      jd["blocks"].push_back({{"k", r.k},
                              {"l", r.l},
                              {"contract_to", r.contract_to},
                              {"path", r.path},
                              {"expand_from", r.expand_from}});
    j["domains"].push_back(std::move(jd));
  }
  return j.dump(2);
}

TcBracket tc_bracket(int n, int g, const CertifyOptions& opts) {
  if (n < 3)
    throw std::invalid_argument(
        "tc_bracket: n >= 3 required (n = 2 is settled surface territory, n < 2 "
        "degenerate)");
  if (g < 2) throw std::invalid_argument("tc_bracket: g >= 2 required");
  TcBracket out;
  const auto table = synthesize(standard_connected_sum_description(n, g));
  out.upper = static_cast<int>(table.domains.size()) - 1;
  const auto report = certify(n, g, opts);
  out.verdict = report.verdict;
  out.lower = report.verdict == Verdict::verified ? 2 * n : 0;
  out.optimal = out.lower == out.upper;
  return out;
}

}  // namespace tc
