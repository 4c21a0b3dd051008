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

// Result tables written after a solve and audit.

#ifndef HSC_IO_RESULTS_HPP_
#define HSC_IO_RESULTS_HPP_

#include <filesystem>
#include <string>
#include <vector>

#include "hsc/audit/audit.hpp"
#include "hsc/io/case_io.hpp"
#include "hsc/solver/solution.hpp"

namespace hsc {

/// System capacity mix columns, in file order.
std::vector<std::string> capacity_columns();
/// Values aligned with capacity_columns().
std::vector<double> capacity_row(const AuditReport& report, const TechnologyCatalog& catalog);

/// Writes capacity.csv, cost_breakdown.csv, dispatch_<zone>.csv,
/// solution.csv and audit.json into out_dir. Returns the files written.
std::vector<std::filesystem::path> save_results(const Solution& solution,
                                                const AuditReport& report,
                                                const CaseBundle& bundle,
                                                const std::filesystem::path& out_dir);

}  // namespace hsc

#endif  // HSC_IO_RESULTS_HPP_
