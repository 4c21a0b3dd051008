// Copyright 2026 The hsc-plan Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hsc/solver/mps.hpp"

#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "json.hpp"

namespace hsc {
namespace {

constexpr std::uint64_t kNameSpace = 78364164096ULL;  // 36^7

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string base36(std::uint64_t v) {
  static const char digits[] = "0123456789ABCDEFGHIJKLMNOPQRSTUVWXYZ";
  std::string s(7, '0');
  for (int i = 6; i >= 0; --i) {
    s[static_cast<size_t>(i)] = digits[v % 36];
    v /= 36;
  }
  return s;
}

std::string short_name(char prefix, const std::string& key,
                       std::unordered_set<std::string>& used) {
  std::uint64_t h = fnv1a(key) % kNameSpace;
  while (true) {
    std::string name = prefix + base36(h);
    if (used.insert(name).second) return name;
    h = (h + 1) % kNameSpace;
  }
}

std::string num(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string pad8(const std::string& s) {
  return s.size() >= 8 ? s : s + std::string(8 - s.size(), ' ');
}

void field_line(std::ostream& out, const std::string& a, const std::string& b, double v) {
  out << "    " << pad8(a) << "  " << pad8(b) << "  " << num(v) << '\n';
}

void bound_line(std::ostream& out, const char* type, const std::string& col, double v,
                bool with_value = true) {
  out << ' ' << type << " BND       " << pad8(col);
  if (with_value) out << "  " << num(v);
  out << '\n';
}

// Fixed columns: name at 5, 'MARKER' at 15, INTORG/INTEND at 40.
void marker_line(std::ostream& out, int index, bool open) {
  char name[16];
  std::snprintf(name, sizeof name, "MARK%04d", index % 10000);
  out << "    " << name << "  'MARKER'                 " << (open ? "'INTORG'" : "'INTEND'")
      << '\n';
}

}  // namespace

std::string MpsNameMap::to_json() const {
  nlohmann::ordered_json j;
  j["objective"] = "COST";
  j["columns"] = nlohmann::ordered_json::array();
  for (size_t i = 0; i < column_names.size(); ++i) {
    j["columns"].push_back({column_names[i], column_keys[i]});
  }
  j["rows"] = nlohmann::ordered_json::array();
  for (size_t i = 0; i < row_names.size(); ++i) {
    j["rows"].push_back({row_names[i], row_keys[i]});
  }
  return j.dump(1) + "\n";
}

MpsNameMap MpsNameMap::from_json(const std::string& text) {
  MpsNameMap map;
  const auto j = nlohmann::json::parse(text);
  for (const auto& pair : j.at("columns")) {
    map.column_names.push_back(pair.at(0).get<std::string>());
    map.column_keys.push_back(pair.at(1).get<std::string>());
  }
  for (const auto& pair : j.at("rows")) {
    map.row_names.push_back(pair.at(0).get<std::string>());
    map.row_keys.push_back(pair.at(1).get<std::string>());
  }
  return map;
}

MpsNameMap make_name_map(const MilpInstance& inst) {
  MpsNameMap map;
  std::unordered_set<std::string> used{"COST"};
  for (const Variable& v : inst.vars.all()) {
    map.column_keys.push_back(v.key);
    map.column_names.push_back(short_name('X', v.key, used));
  }
  for (const Row& r : inst.rows) {
    map.row_keys.push_back(r.name);
    map.row_names.push_back(short_name('R', r.name, used));
  }
  return map;
}

MpsNameMap write_mps(const MilpInstance& inst, std::ostream& out) {
  const MpsNameMap names = make_name_map(inst);
  const int n = inst.num_cols();
  std::string title = inst.name.empty() ? "HSC" : inst.name;
  for (char& c : title) {
    if (c == ' ') c = '_';
  }
  out << "NAME          " << title << '\n';
  out << "ROWS\n";
  out << " N  COST\n";
  for (size_t r = 0; r < inst.rows.size(); ++r) {
    const char* sense = inst.rows[r].sense == RowSense::kEqual       ? "E"
                        : inst.rows[r].sense == RowSense::kLessEqual ? "L"
                                                                     : "G";
    out << ' ' << sense << "  " << names.row_names[r] << '\n';
  }

  // Column-major view of the rows.
  std::vector<std::vector<std::pair<int, double>>> cols(static_cast<size_t>(n));
  for (size_t r = 0; r < inst.rows.size(); ++r) {
    const Row& row = inst.rows[r];
    for (size_t k = 0; k < row.cols.size(); ++k) {
      cols[static_cast<size_t>(row.cols[k])].emplace_back(static_cast<int>(r), row.coefs[k]);
    }
  }
  out << "COLUMNS\n";
  bool in_int = false;
  int marker = 0;
  for (int j = 0; j < n; ++j) {
    const Variable& v = inst.vars[j];
    if (v.integer != in_int) {
      marker_line(out, marker++, v.integer);
      in_int = v.integer;
    }
    const std::string& cn = names.column_names[static_cast<size_t>(j)];
    if (v.cost != 0.0 || cols[static_cast<size_t>(j)].empty()) field_line(out, cn, "COST", v.cost);
    for (const auto& [r, a] : cols[static_cast<size_t>(j)]) {
      field_line(out, cn, names.row_names[static_cast<size_t>(r)], a);
    }
  }
  if (in_int) {
    marker_line(out, marker++, false);
  }

  out << "RHS\n";
  if (inst.objective_offset != 0.0) field_line(out, "RHS", "COST", -inst.objective_offset);
  for (size_t r = 0; r < inst.rows.size(); ++r) {
    if (inst.rows[r].rhs != 0.0) field_line(out, "RHS", names.row_names[r], inst.rows[r].rhs);
  }
  bool any_range = false;
  for (const Row& r : inst.rows) any_range = any_range || r.has_range;
  if (any_range) {
    out << "RANGES\n";
    for (size_t r = 0; r < inst.rows.size(); ++r) {
      if (inst.rows[r].has_range) field_line(out, "RNG", names.row_names[r], inst.rows[r].range);
    }
  }
  out << "BOUNDS\n";
  for (int j = 0; j < n; ++j) {
    const Variable& v = inst.vars[j];
    const std::string& cn = names.column_names[static_cast<size_t>(j)];
    const bool lo_inf = std::isinf(v.lower);
    const bool hi_inf = std::isinf(v.upper);
    if (!lo_inf && !hi_inf && v.lower == v.upper) {
      bound_line(out, "FX", cn, v.lower);
      continue;
    }
    if (lo_inf && hi_inf) {
      bound_line(out, "FR", cn, 0.0, false);
      continue;
    }
    if (lo_inf) {
      bound_line(out, "MI", cn, 0.0, false);
    } else if (v.lower != 0.0 || (v.lower == 0.0 && std::signbit(v.lower))) {
      bound_line(out, "LO", cn, v.lower);
    }
    if (!hi_inf) {
      bound_line(out, "UP", cn, v.upper);
    } else if (v.integer) {
      bound_line(out, "PL", cn, 0.0, false);
    }
  }
  out << "ENDATA\n";
  return names;
}

MilpInstance read_mps(std::istream& in, const MpsNameMap* names) {
  enum class Section { kNone, kName, kRows, kColumns, kRhs, kRanges, kBounds, kEnd };
  Section sec = Section::kNone;
  MilpInstance inst;
  std::unordered_map<std::string, int> row_index;
  std::unordered_map<std::string, int> col_index;
  std::string objective_row;
  std::vector<std::vector<std::pair<int, double>>> row_terms;
  std::vector<bool> bounded_lo;
  bool in_int = false;

  std::unordered_map<std::string, std::string> col_key, row_key;
  if (names != nullptr) {
    for (size_t i = 0; i < names->column_names.size(); ++i) {
      col_key[names->column_names[i]] = names->column_keys[i];
    }
    for (size_t i = 0; i < names->row_names.size(); ++i) {
      row_key[names->row_names[i]] = names->row_keys[i];
    }
  }

  long lineno = 0;
  std::string line;
  auto parse_num = [&](const std::string& s) {
    double v = 0.0;
    auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
      throw MpsParseError(lineno, "bad number '" + s + "'");
    }
    return v;
  };
  auto find_row = [&](const std::string& name) {
    auto it = row_index.find(name);
    if (it == row_index.end()) throw MpsParseError(lineno, "unknown row '" + name + "'");
    return it->second;
  };
  auto find_col = [&](const std::string& name) {
    auto it = col_index.find(name);
    if (it == col_index.end()) throw MpsParseError(lineno, "unknown column '" + name + "'");
    return it->second;
  };

  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '*') continue;
    std::istringstream ss(line);
    std::vector<std::string> tok;
    for (std::string t; ss >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    if (line[0] != ' ') {
      const std::string& head = tok[0];
      if (head == "NAME") {
        sec = Section::kName;
        if (tok.size() > 1) inst.name = tok[1];
      } else if (head == "ROWS") {
        sec = Section::kRows;
      } else if (head == "COLUMNS") {
        sec = Section::kColumns;
      } else if (head == "RHS") {
        sec = Section::kRhs;
      } else if (head == "RANGES") {
        sec = Section::kRanges;
      } else if (head == "BOUNDS") {
        sec = Section::kBounds;
      } else if (head == "ENDATA") {
        sec = Section::kEnd;
        break;
      } else {
        throw MpsParseError(lineno, "unknown section '" + head + "'");
      }
      continue;
    }
    switch (sec) {
      case Section::kRows: {
        if (tok.size() != 2) throw MpsParseError(lineno, "ROWS entry needs type and name");
        if (tok[0] == "N") {
          if (objective_row.empty()) objective_row = tok[1];
          continue;
        }
        RowSense sense;
        if (tok[0] == "E") {
          sense = RowSense::kEqual;
        } else if (tok[0] == "L") {
          sense = RowSense::kLessEqual;
        } else if (tok[0] == "G") {
          sense = RowSense::kGreaterEqual;
        } else {
          throw MpsParseError(lineno, "bad row type '" + tok[0] + "'");
        }
        if (!row_index.emplace(tok[1], static_cast<int>(inst.rows.size())).second) {
          throw MpsParseError(lineno, "duplicate row '" + tok[1] + "'");
        }
        Row r;
        auto it = row_key.find(tok[1]);
        r.name = it == row_key.end() ? tok[1] : it->second;
        r.sense = sense;
        inst.rows.push_back(std::move(r));
        row_terms.emplace_back();
        break;
      }
      case Section::kColumns: {
        if (tok.size() >= 3 && tok[1] == "'MARKER'") {
          if (tok[2] == "'INTORG'") {
            in_int = true;
          } else if (tok[2] == "'INTEND'") {
            in_int = false;
          } else {
            throw MpsParseError(lineno, "bad marker '" + tok[2] + "'");
          }
          continue;
        }
        if (tok.size() != 3 && tok.size() != 5) {
          throw MpsParseError(lineno, "COLUMNS entry needs 3 or 5 fields");
        }
        int j;
        auto it = col_index.find(tok[0]);
        if (it == col_index.end()) {
          auto kt = col_key.find(tok[0]);
          j = inst.vars.add(kt == col_key.end() ? tok[0] : kt->second, 0.0, kInf, 0.0,
                            in_int);
          col_index.emplace(tok[0], j);
          bounded_lo.push_back(false);
        } else {
          j = it->second;
        }
        for (size_t f = 1; f + 1 < tok.size(); f += 2) {
          const double v = parse_num(tok[f + 1]);
          if (tok[f] == objective_row) {
            inst.vars[j].cost = v;
          } else {
            row_terms[static_cast<size_t>(find_row(tok[f]))].emplace_back(j, v);
          }
        }
        break;
      }
      case Section::kRhs:
      case Section::kRanges: {
        if (tok.size() != 3 && tok.size() != 5) {
          throw MpsParseError(lineno, "entry needs 3 or 5 fields");
        }
        for (size_t f = 1; f + 1 < tok.size(); f += 2) {
          const double v = parse_num(tok[f + 1]);
          if (sec == Section::kRhs) {
            if (tok[f] == objective_row) {
              inst.objective_offset = -v;
            } else {
              inst.rows[static_cast<size_t>(find_row(tok[f]))].rhs = v;
            }
          } else {
            Row& r = inst.rows[static_cast<size_t>(find_row(tok[f]))];
            r.range = v;
            r.has_range = true;
          }
        }
        break;
      }
      case Section::kBounds: {
        if (tok.size() < 3) throw MpsParseError(lineno, "BOUNDS entry too short");
        const std::string& type = tok[0];
        const int j = find_col(tok[2]);
        Variable& v = inst.vars[j];
        const bool needs_value = !(type == "FR" || type == "MI" || type == "PL" || type == "BV");
        if (needs_value && tok.size() != 4) throw MpsParseError(lineno, "bound needs a value");
        const double val = needs_value ? parse_num(tok[3]) : 0.0;
        if (type == "UP") {
          v.upper = val;
        } else if (type == "LO") {
          v.lower = val;
        } else if (type == "FX") {
          v.lower = val;
          v.upper = val;
        } else if (type == "FR") {
          v.lower = -kInf;
          v.upper = kInf;
        } else if (type == "MI") {
          v.lower = -kInf;
        } else if (type == "PL") {
          v.upper = kInf;
        } else if (type == "BV") {
          v.lower = 0.0;
          v.upper = 1.0;
          v.integer = true;
        } else if (type == "LI") {
          v.lower = val;
          v.integer = true;
        } else if (type == "UI") {
          v.upper = val;
          v.integer = true;
        } else {
          throw MpsParseError(lineno, "unknown bound type '" + type + "'");
        }
        break;
      }
      case Section::kName:
      case Section::kNone:
      case Section::kEnd:
        throw MpsParseError(lineno, "data outside a section");
    }
  }
  if (sec != Section::kEnd) throw MpsParseError(lineno, "missing ENDATA");
  for (size_t r = 0; r < inst.rows.size(); ++r) {
    Row& row = inst.rows[r];
    for (const auto& [c, a] : row_terms[r]) {
      row.cols.push_back(c);
      row.coefs.push_back(a);
    }
  }
  for (int j = 0; j < inst.vars.size(); ++j) {
    if (inst.vars[j].lower > inst.vars[j].upper) {
      throw MpsParseError(lineno, "column " + inst.vars[j].key + " has lower > upper");
    }
  }
  return inst;
}

}  // namespace hsc
