#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "failcast/bayesnet.hpp"
#include "failcast/types.hpp"
#include "failcast/weibull.hpp"

namespace failcast {

struct UnitProfile {
  Day manufacture = 0;
  double cycles_per_day = 0.0;
};

struct FleetConfig {
  int n_units = 1000;
  int n_parts = 9;
  int dtcs_per_part = 4;
  std::vector<WeibullParams> true_params;  // one per part

  // Lead-gap ratio range: each (part, dtc) draws one r from U(r_low, r_high).
  double r_low = 0.1;
  double r_high = 0.5;
  double occurrence_noise = 2000.0;  // sigma1 in cycles, shared across (part, dtc)

  // Units are split round-robin across manufacture_years, uniform within the
  // year, unless explicit per-unit dates are given.
  std::vector<int> manufacture_years = {2010, 2011, 2012};
  std::vector<Day> manufacture_dates;  // optional override, size n_units

  double accrual_per_day = 100000.0 / (3.0 * 365.25);  // ~100k miles in 3 years
  double accrual_jitter = 0.2;                         // per-unit uniform +-20%
  double service_interval_days = 182.625;              // six months

  Window observation_window{days_from_civil_constant(2010), days_from_civil_constant(2013) - 1,
                            WindowKind::Observation};
  std::uint64_t seed = 0;

  void validate() const;  // throws ConfigError

 private:
  static constexpr Day days_from_civil_constant(int year) {
    // days since 1970-01-01 of year-01-01 for years >= 1970 (leap-aware)
    Day d = 0;
    for (int y = 1970; y < year; ++y)
      d += (y % 4 == 0 && (y % 100 != 0 || y % 400 == 0)) ? 366 : 365;
    return d;
  }
};

// Everything the generator knows and the event log hides.
struct GroundTruth {
  std::vector<UnitProfile> units;                         // [unit-1]
  std::vector<std::vector<Cycles>> fail_cycles;           // [unit-1][part-1], exact
  std::vector<std::vector<Day>> fail_dates;               // [unit-1][part-1]
  std::vector<std::vector<std::vector<Cycles>>> occ_cycles;  // [unit-1][part-1][dtc-1]
  std::vector<std::vector<double>> true_r;                // [part-1][dtc-1]

  Cycles fail(int unit, int part) const { return fail_cycles[unit - 1][part - 1]; }
  Day fail_date(int unit, int part) const { return fail_dates[unit - 1][part - 1]; }
  Cycles occurrence(int unit, int part, int dtc) const {
    return occ_cycles[unit - 1][part - 1][dtc - 1];
  }
};

// Per-unit manufacture dates and accrual rates, reproducible from the config
// alone (dedicated RNG stream). simulate_fleet uses exactly these profiles.
std::vector<UnitProfile> unit_profiles(const FleetConfig& config);

// Generates the fleet: failures via Weibull inverse-transform sampling, DTC
// occurrences from N(f - f*r, sigma1) truncated into [0, f], service visits on
// failure dates and a six-month cadence. Only events dated inside the
// observation window enter the EventLog; the full truth is returned alongside.
std::pair<EventLog, GroundTruth> simulate_fleet(const FleetConfig& config);

// One draw per instance straight from the dependency model: f ~ Weibull,
// i ~ N(f - f*r, sigma1) in [0, f], s ~ N((f - i)*m + i, sigma2) in [i, f].
// Test-support generator; enforces the d <= s <= p ordering by truncation.
struct DependencyTriple {
  Cycles f = 0, i = 0, s = 0;
};
std::vector<DependencyTriple> sample_dependency_triples(const WeibullParams& weibull,
                                                        const DependencyParams& dep, std::size_t n,
                                                        std::uint64_t seed);

}  // namespace failcast
