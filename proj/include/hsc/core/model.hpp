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

// Domain records for the hydrogen supply-chain planning model: zones and
// transport paths, technology parameter records, the representative-period
// time grid and the scenario (prices, demand, policy knobs).
//
// Units follow the model nomenclature: tonne-H2, tonne/hour, MWh_e, MMBtu,
// miles, $ (nominal), years. All records are plain values and immutable
// once a case is loaded.

#ifndef HSC_CORE_MODEL_HPP_
#define HSC_CORE_MODEL_HPP_

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hsc {

inline constexpr double kHoursPerYear = 8760.0;
inline constexpr double kDefaultTruckSpeedMph = 40.0;
inline constexpr double kDefaultDiscountRate = 0.07;
inline constexpr double kDefaultLostLoadCost = 1e7;

/// Thrown for malformed domain data that cannot be turned into a model.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Zone {
  std::string id;
  std::string name;
  bool allow_central_smr = true;
  std::vector<std::string> eligible_generation;
  std::vector<std::string> eligible_storage;

  bool operator==(const Zone&) const = default;
};

/// Directed transport path z -> z'. travel_delay is in timesteps.
struct Path {
  std::string from_zone;
  std::string to_zone;
  double distance = 0.0;  // miles
  int travel_delay = 1;

  bool operator==(const Path&) const = default;
};

struct Network {
  std::vector<Zone> zones;
  std::vector<Path> paths;

  // Index of a zone id, or -1.
  int zone_index(std::string_view id) const;
  bool operator==(const Network&) const = default;
};

/// ceil(distance / speed / step_hours), at least one step.
int default_travel_delay(double distance_miles, double step_hours,
                         double speed_mph = kDefaultTruckSpeedMph);

enum class GenerationKind { kElectrolyzer, kSmr, kSmrCcs, kOther };

std::string_view to_string(GenerationKind kind);
GenerationKind generation_kind_from_string(std::string_view s);

struct GenerationTech {
  std::string id;
  GenerationKind kind = GenerationKind::kOther;
  double unit_capacity = 0.0;       // tonne/hour per unit
  double unit_capex = 0.0;          // $ per unit
  double electricity_rate = 0.0;    // MWh_e / tonne
  double gas_rate = 0.0;            // MMBtu / tonne
  double emission_rate = 0.0;       // tCO2 / tH2
  double min_output_frac = 0.0;
  double max_output_frac = 1.0;
  int min_up_hours = 0;
  int min_down_hours = 0;
  double lifetime_years = 1.0;

  // Central natural-gas reformers are barred from zones with
  // allow_central_smr == false.
  bool is_central() const {
    return kind == GenerationKind::kSmr || kind == GenerationKind::kSmrCcs;
  }
  bool operator==(const GenerationTech&) const = default;
};

struct StorageTech {
  std::string id;
  double capex_per_tonne = 0.0;          // $/tonne
  double charge_efficiency = 1.0;
  double min_soc_frac = 0.0;             // cushion gas share
  double compressor_capex = 0.0;         // $/(tonne/hour)
  double compressor_electricity = 0.0;   // MWh_e/tonne
  double lifetime_years = 1.0;

  bool operator==(const StorageTech&) const = default;
};

struct TruckType {
  std::string id;
  double cargo_capacity = 0.0;       // tonne per truck
  double unit_capex = 0.0;           // $ per truck
  double opex_per_mile = 0.0;        // $/mile
  double boiloff_frac = 0.0;
  double emission_rate = 0.0;        // tCO2/(tH2*mile)
  double station_capex = 0.0;        // $/(tonne/hour)
  double station_electricity = 0.0;  // MWh_e/tonne
  double lifetime_years = 1.0;

  bool operator==(const TruckType&) const = default;
};

struct PipelineType {
  std::string id;
  double max_flow = 0.0;             // tonne/hour per line
  double capex_per_mile = 0.0;       // $/mile
  double linepack_per_mile = 0.0;    // tonne/mile
  double min_linepack_frac = 0.0;
  double comp_capex_per_mile = 0.0;  // $/mile
  double comp_capex_fixed = 0.0;     // $
  double comp_elec_per_mile = 0.0;   // MWh_e/(tonne*mile)
  double comp_elec_fixed = 0.0;      // MWh_e/tonne
  double lifetime_years = 1.0;

  bool operator==(const PipelineType&) const = default;
};

struct TechnologyCatalog {
  std::vector<GenerationTech> generation;
  std::vector<StorageTech> storage;
  std::vector<TruckType> trucks;
  std::vector<PipelineType> pipelines;

  const GenerationTech* find_generation(std::string_view id) const;
  const StorageTech* find_storage(std::string_view id) const;
  bool operator==(const TechnologyCatalog&) const = default;
};

struct Period {
  std::string name;
  int first = 0;   // global index of the first step
  int length = 0;  // number of steps

  bool operator==(const Period&) const = default;
};

/// Representative periods laid end to end on one global step index.
/// weight[t] is the annual scaling factor Omega_t; sum(weight) * step_hours
/// reconstructs a year.
class TimeGrid {
 public:
  TimeGrid() = default;
  TimeGrid(double step_hours, std::vector<Period> periods,
           std::vector<double> weights);

  // One period of `length` steps weighted uniformly to fill a year.
  static TimeGrid uniform(int length, double step_hours = 1.0,
                          int periods = 1);

  double step_hours() const { return step_hours_; }
  int size() const { return static_cast<int>(weights_.size()); }
  const std::vector<Period>& periods() const { return periods_; }
  const std::vector<double>& weights() const { return weights_; }
  double weight(int t) const { return weights_[static_cast<size_t>(t)]; }

  int period_of(int t) const { return period_of_[static_cast<size_t>(t)]; }
  bool is_period_start(int t) const;
  // Previous step with wrap-around inside the owning period.
  int cyclic_prev(int t) const;
  int period_first(int t) const { return periods_[period_of(t)].first; }
  int period_last(int t) const {
    const Period& p = periods_[period_of(t)];
    return p.first + p.length - 1;
  }
  double represented_hours() const;

  bool operator==(const TimeGrid& o) const {
    return step_hours_ == o.step_hours_ && periods_ == o.periods_ &&
           weights_ == o.weights_;
  }

 private:
  double step_hours_ = 1.0;
  std::vector<Period> periods_;
  std::vector<double> weights_;
  std::vector<int> period_of_;
};

/// zones x steps matrix, row-major by zone.
class ZoneSeries {
 public:
  ZoneSeries() = default;
  ZoneSeries(int zones, int steps, double fill = 0.0)
      : zones_(zones), steps_(steps),
        data_(static_cast<size_t>(zones) * static_cast<size_t>(steps), fill) {}

  int zones() const { return zones_; }
  int steps() const { return steps_; }
  double at(int z, int t) const { return data_[index(z, t)]; }
  double& at(int z, int t) { return data_[index(z, t)]; }
  double max() const;
  double zone_max(int z) const;
  bool empty() const { return data_.empty(); }
  const std::vector<double>& raw() const { return data_; }

  bool operator==(const ZoneSeries&) const = default;

 private:
  size_t index(int z, int t) const {
    return static_cast<size_t>(z) * static_cast<size_t>(steps_) +
           static_cast<size_t>(t);
  }
  int zones_ = 0;
  int steps_ = 0;
  std::vector<double> data_;
};

enum class TruckMode { kRelaxed, kInteger, kFixedRouteExisting };

std::string_view to_string(TruckMode mode);
TruckMode truck_mode_from_string(std::string_view s);

struct Scenario {
  std::string name = "base";
  double carbon_price = 0.0;                      // $/tCO2
  double lost_load_cost = kDefaultLostLoadCost;   // $/tonne
  double discount_rate = kDefaultDiscountRate;
  double pipeline_cost_factor = 1.0;
  std::optional<double> electrolyzer_capex_override;  // $ per unit
  TruckMode truck_mode = TruckMode::kRelaxed;
  ZoneSeries electricity_price;  // $/MWh_e
  ZoneSeries gas_price;          // $/MMBtu
  ZoneSeries demand;             // tonne/hour

  bool operator==(const Scenario&) const = default;
};

/// Capital recovery factor r(1+r)^L / ((1+r)^L - 1); 1/L at r = 0.
double annuity_factor(double lifetime_years, double discount_rate);

/// Unit capex for a generation tech after the scenario's electrolyzer
/// override is applied.
double effective_unit_capex(const GenerationTech& tech,
                            const Scenario& scenario);

/// $ per unit for an electrolyzer priced in $/kW_e.
double electrolyzer_unit_capex_from_kw(const GenerationTech& tech,
                                       double dollars_per_kw);

struct Diagnostic {
  std::string code;
  std::string message;
};

std::vector<Diagnostic> validate_timegrid(const TimeGrid& grid);
std::vector<Diagnostic> validate_network(const Network& network,
                                         const TechnologyCatalog& catalog,
                                         const Scenario& scenario);
// Adds the series-length checks that need the grid.
std::vector<Diagnostic> validate_case(const Network& network,
                                      const TechnologyCatalog& catalog,
                                      const TimeGrid& grid,
                                      const Scenario& scenario);

// Generation techs a zone may build: listed as eligible, and not central
// SMR in a zone that forbids it.
bool generation_allowed(const Zone& zone, const GenerationTech& tech);
bool storage_allowed(const Zone& zone, const StorageTech& tech);

}  // namespace hsc

#endif  // HSC_CORE_MODEL_HPP_
