# Copyright 2026 The hsc-plan Authors
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Writes the bundled case directories under data/.

Demand, distances and the catalog are literature tables. Electricity prices,
the refuelling profile and the gas price are synthetic placeholders for
inputs without tabulated values. Output is deterministic.
"""

import json
import math
import random
from pathlib import Path

HERE = Path(__file__).resolve().parent

# LDV + HDV average demand, tonne/hour.
DEMAND = {
    "z1": 25 + 6,
    "z2": 159 + 33,
    "z3": 57 + 12,
    "z4": 123 + 21,
    "z5": 39 + 9,
    "z6": 55 + 46,
}

# Road distance, miles (upper triangle).
DISTANCE = {
    ("z1", "z2"): 317, ("z1", "z3"): 504, ("z1", "z4"): 602, ("z1", "z5"): 487,
    ("z1", "z6"): 608, ("z2", "z3"): 199, ("z2", "z4"): 297, ("z2", "z5"): 179,
    ("z2", "z6"): 340, ("z3", "z4"): 99, ("z3", "z5"): 158, ("z3", "z6"): 333,
    ("z4", "z5"): 216, ("z4", "z6"): 358, ("z5", "z6"): 186,
}

NO_CENTRAL_SMR = {"z2", "z4"}

GAS_PRICE = 9.0  # $/MMBtu
HOURS_PER_WEEK = 168


def catalog(with_pipelines=True, trucks=("gas_truck", "liquid_truck"),
            generation=("electrolyzer", "smr", "smr_ccs")):
    gen = [
        {"id": "electrolyzer", "kind": "electrolyzer", "unit_capacity": 0.06,
         "unit_capex": 3e6, "electricity_rate": 53.0, "gas_rate": 0.0,
         "emission_rate": 0.0, "min_output_frac": 0.0, "max_output_frac": 1.0,
         "min_up_hours": 0, "min_down_hours": 0, "lifetime_years": 10.0},
        {"id": "smr", "kind": "smr", "unit_capacity": 9.2, "unit_capex": 161e6,
         "electricity_rate": 0.0, "gas_rate": 146.0, "emission_rate": 10.0,
         "min_output_frac": 0.0, "max_output_frac": 1.0, "min_up_hours": 0,
         "min_down_hours": 0, "lifetime_years": 25.0},
        {"id": "smr_ccs", "kind": "smr_ccs", "unit_capacity": 9.2,
         "unit_capex": 296e6, "electricity_rate": 0.0, "gas_rate": 160.0,
         "emission_rate": 1.0, "min_output_frac": 0.0, "max_output_frac": 1.0,
         "min_up_hours": 0, "min_down_hours": 0, "lifetime_years": 25.0},
    ]
    storage = [
        {"id": "gas_tank", "capex_per_tonne": 0.58e6, "charge_efficiency": 1.0,
         "min_soc_frac": 0.0, "compressor_capex": 0.5e6,
         "compressor_electricity": 2.0, "lifetime_years": 12.0},
    ]
    all_trucks = {
        "gas_truck": {"id": "gas_truck", "cargo_capacity": 0.3, "unit_capex": 0.3e6,
                      "opex_per_mile": 1.5, "boiloff_frac": 0.03, "emission_rate": 0.0,
                      "station_capex": 1.5e6, "station_electricity": 1.0,
                      "lifetime_years": 12.0},
        "liquid_truck": {"id": "liquid_truck", "cargo_capacity": 4.0,
                         "unit_capex": 0.8e6, "opex_per_mile": 1.5, "boiloff_frac": 0.0,
                         "emission_rate": 0.0, "station_capex": 32e6,
                         "station_electricity": 11.0, "lifetime_years": 12.0},
    }
    pipes = [
        {"id": "pipe8", "max_flow": 4.0, "capex_per_mile": 2.8e6,
         "linepack_per_mile": 0.3, "min_linepack_frac": 0.0,
         "comp_capex_per_mile": 700.0, "comp_capex_fixed": 0.75e6,
         "comp_elec_per_mile": 1.0, "comp_elec_fixed": 1.0, "lifetime_years": 40.0},
    ]
    return {
        "generation": [g for g in gen if g["id"] in generation],
        "storage": storage,
        "trucks": [all_trucks[t] for t in trucks],
        "pipelines": pipes if with_pipelines else [],
    }


def refuelling_profile(hours):
    """Diurnal refuelling shape: night trough, morning and late-afternoon peaks.

    Normalized to mean 1 over the horizon.
    """
    raw = []
    for t in range(hours):
        h = t % 24
        day = (t // 24) % 7
        v = (0.35
             + 0.55 * math.exp(-((h - 8.0) / 2.5) ** 2)
             + 0.75 * math.exp(-((h - 17.0) / 3.0) ** 2)
             + 0.25 * math.exp(-((h - 12.5) / 3.0) ** 2))
        if day >= 5:
            v *= 0.85
        raw.append(v)
    mean = sum(raw) / hours
    return [round(v / mean, 6) for v in raw]


def electricity_prices(zones, weeks, seed):
    """Hourly $/MWh with a midday solar dip, evening peaks and windy lows.

    Each week carries a short high-price spell around hours 33-47 and a long
    one from hour 111 to the end, and enough near-zero hours to give the
    duration curve a long flat tail.
    """
    rng = random.Random(seed)
    out = {}
    for zi, z in enumerate(zones):
        series = []
        for w in range(weeks):
            wind = [rng.random() for _ in range(HOURS_PER_WEEK // 6 + 1)]
            scale = 0.85 + 0.3 * rng.random()
            for h in range(HOURS_PER_WEEK):
                hod = h % 24
                p = 42.0
                p -= 28.0 * max(0.0, math.cos((hod - 13.0) / 12.0 * math.pi)) ** 2
                p += 18.0 * math.exp(-((hod - 19.0) / 2.0) ** 2)
                w_lo, w_hi = wind[h // 6], wind[h // 6 + 1]
                gust = w_lo + (w_hi - w_lo) * (h % 6) / 6.0
                if gust > 0.6:
                    p -= 45.0 * (gust - 0.6) / 0.4
                if 33 <= h <= 47:
                    p += 25.0
                if h >= 111:
                    p += 15.0
                p *= scale * (1.0 + 0.04 * zi)
                p += rng.uniform(-2.0, 2.0)
                series.append(round(max(0.0, p), 2))
        out[z] = series
    return out


def write_series(path, zones, values):
    lines = ["zone,timestep,value"]
    for z in zones:
        for t, v in enumerate(values[z]):
            lines.append(f"{z},{t},{v!r}")
    path.write_text("\n".join(lines) + "\n")


def write_json(path, obj):
    path.write_text(json.dumps(obj, indent=2) + "\n")


def write_case(name, zones, weeks, cat, scenario_name, seed, extra_paths=None):
    root = HERE / name
    root.mkdir(parents=True, exist_ok=True)
    network = {"zones": [], "paths": []}
    for z in zones:
        network["zones"].append({
            "id": z,
            "name": "Zone " + z[1:],
            "allow_central_smr": z not in NO_CENTRAL_SMR,
            "eligible_generation": [g["id"] for g in cat["generation"]],
            "eligible_storage": [s["id"] for s in cat["storage"]],
        })
    for a in zones:
        for b in zones:
            if a == b:
                continue
            d = DISTANCE.get((a, b)) or DISTANCE[(b, a)]
            network["paths"].append({"from": a, "to": b, "distance": float(d)})
    write_json(root / "network.json", network)
    write_json(root / "catalog.json", cat)

    hours = weeks * HOURS_PER_WEEK
    weight = 8760.0 / hours
    write_json(root / "timegrid.json", {
        "step_hours": 1.0,
        "periods": [{"name": f"week{w + 1:02d}", "length": HOURS_PER_WEEK,
                     "weight": weight} for w in range(weeks)],
    })

    profile = refuelling_profile(hours)
    write_series(root / "refuelling_profile.csv", zones, {z: profile for z in zones})
    write_series(root / "electricity_price.csv", zones,
                 electricity_prices(zones, weeks, seed))
    write_series(root / "gas_price.csv", zones, {z: [GAS_PRICE] * hours for z in zones})
    scenario = {
        "name": scenario_name,
        "carbon_price": 100.0,
        "lost_load_cost": 1e7,
        "discount_rate": 0.07,
        "pipeline_cost_factor": 1.0,
        "truck_mode": "relaxed",
        "electricity_price": "electricity_price.csv",
        "gas_price": "gas_price.csv",
        "demand": {"average": {z: float(DEMAND[z]) for z in zones},
                   "profile": "refuelling_profile.csv"},
    }
    if any(g["kind"] == "electrolyzer" for g in cat["generation"]):
        scenario["electrolyzer_capex_per_kw"] = 300.0
    write_json(root / "scenario.json", scenario)


def main():
    all_zones = list(DEMAND)
    write_case("northeast", all_zones, 20, catalog(), "northeast-base", seed=2019)
    write_case("northeast-mini", ["z3", "z4"], 1,
               catalog(with_pipelines=False, trucks=("gas_truck",),
                       generation=("smr", "smr_ccs")),
               "northeast-mini", seed=7)


if __name__ == "__main__":
    main()
