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

// Case bundles on disk: network.json, catalog.json, timegrid.json and
// scenario.json in one directory, plus the "zone,timestep,value" CSV series
// the scenario names. See docs/data-formats.md.

#ifndef HSC_IO_CASE_IO_HPP_
#define HSC_IO_CASE_IO_HPP_

#include <filesystem>
#include <iosfwd>
#include <string>

#include "hsc/core/model.hpp"

namespace hsc {

/// Malformed or inconsistent case file. line is 0 when not applicable.
class CaseFormatError : public InputError {
 public:
  CaseFormatError(const std::string& file, long line, const std::string& what);
  const std::string& file() const { return file_; }
  long line() const { return line_; }

 private:
  std::string file_;
  long line_;
};

struct CaseBundle {
  Network network;
  TechnologyCatalog catalog;
  TimeGrid grid;
  Scenario scenario;

  bool operator==(const CaseBundle&) const = default;
};

/// Loads and validates a bundle. Demand is either an absolute series or
/// average zone demand times a normalized refuelling profile.
CaseBundle load_case(const std::filesystem::path& root);

/// Writes a bundle that load_case reads back unchanged (absolute demand).
void save_case(const CaseBundle& bundle, const std::filesystem::path& root);

std::string network_to_json(const Network& network);
Network network_from_json(const std::string& text, double step_hours,
                          const std::string& file = "network.json");
std::string catalog_to_json(const TechnologyCatalog& catalog);
TechnologyCatalog catalog_from_json(const std::string& text,
                                    const std::string& file = "catalog.json");
std::string timegrid_to_json(const TimeGrid& grid);
TimeGrid timegrid_from_json(const std::string& text, const std::string& file = "timegrid.json");

/// Every (zone, timestep) must appear exactly once.
ZoneSeries read_zone_series(std::istream& in, const Network& network, int steps,
                            const std::string& file);
void write_zone_series(std::ostream& out, const ZoneSeries& series, const Network& network);

/// Shortest decimal that reads back to the same double.
std::string format_number(double v);

}  // namespace hsc

#endif  // HSC_IO_CASE_IO_HPP_
