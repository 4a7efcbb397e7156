#include "failcast/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

#include "failcast/errors.hpp"

namespace failcast {

namespace {

struct FirstEvent {
  Cycles cycles = 0;
  Day date = 0;
  std::size_t order = 0;
  bool set = false;

  void offer(Cycles c, Day d, std::size_t ord) {
    if (!set || c < cycles || (c == cycles && (d < date || (d == date && ord < order)))) {
      cycles = c;
      date = d;
      order = ord;
      set = true;
    }
  }
};

}  // namespace

PartDataset assemble_sets(const EventLog& events, const Window& window, int part, int dtc) {
  if (window.kind != WindowKind::Observation)
    throw DataError("assemble_sets: window must be an observation window");
  if (!(window.start < window.end)) throw DataError("assemble_sets: empty window");

  std::map<int, FirstEvent> failed;  // unit -> first in-window failure
  for (std::size_t idx = 0; idx < events.failures.size(); ++idx) {
    const auto& r = events.failures[idx];
    if (r.part != part || !window.contains(r.date)) continue;
    if (!(r.cycles > 0) || !std::isfinite(r.cycles))
      throw DataError("failure record for unit " + std::to_string(r.unit) + " has non-positive cycles");
    failed[r.unit].offer(r.cycles, r.date, idx);
  }

  std::map<int, FirstEvent> occurred;  // unit -> first in-window DTC occurrence
  for (std::size_t idx = 0; idx < events.occurrences.size(); ++idx) {
    const auto& r = events.occurrences[idx];
    if (r.part != part || r.dtc != dtc || !window.contains(r.date)) continue;
    if (!(r.cycles >= 0) || !std::isfinite(r.cycles))
      throw DataError("occurrence record for unit " + std::to_string(r.unit) + " has negative cycles");
    occurred[r.unit].offer(r.cycles, r.date, idx);
  }

  std::map<int, FirstEvent> observed;  // unit -> first in-window service observation
  for (std::size_t idx = 0; idx < events.observations.size(); ++idx) {
    const auto& r = events.observations[idx];
    if (r.part != part || r.dtc != dtc || !window.contains(r.date)) continue;
    if (!(r.cycles >= 0) || !std::isfinite(r.cycles))
      throw DataError("observation record for unit " + std::to_string(r.unit) + " has negative cycles");
    observed[r.unit].offer(r.cycles, r.date, idx);
  }

  PartDataset ds;
  ds.part = part;
  ds.dtc = dtc;

  for (const auto& [unit, f] : failed) {
    auto occ = occurred.find(unit);
    auto obs = observed.find(unit);
    if (occ == occurred.end())
      throw DataError("unit " + std::to_string(unit) + " failed part " + std::to_string(part) +
                      " without an occurrence record for DTC " + std::to_string(dtc));
    if (obs == observed.end())
      throw DataError("unit " + std::to_string(unit) + " failed part " + std::to_string(part) +
                      " without an observation record for DTC " + std::to_string(dtc));
    const Cycles d = occ->second.cycles, s = obs->second.cycles, p = f.cycles;
    if (!(d <= s && s <= p))
      throw DataError("ordering violation for unit " + std::to_string(unit) + ": d=" +
                      std::to_string(d) + " s=" + std::to_string(s) + " p=" + std::to_string(p));
    ds.failed_units.push_back(unit);
    ds.fail.push_back(p);
    ds.ind.push_back(d);
    ds.serv.push_back(s);
  }

  // Primed sets: occurrence and observation both in window, failure absent.
  for (const auto& [unit, occ] : occurred) {
    if (failed.count(unit)) continue;
    auto obs = observed.find(unit);
    if (obs == observed.end()) continue;
    const Cycles d = occ.cycles, s = obs->second.cycles;
    if (!(d <= s))
      throw DataError("ordering violation for future unit " + std::to_string(unit) + ": d=" +
                      std::to_string(d) + " s=" + std::to_string(s));
    ds.future_units.push_back(unit);
    ds.ind_prime.push_back(d);
    ds.serv_prime.push_back(s);
  }

  return ds;
}

ValidationReport validate_ordering(const PartDataset& ds) {
  ValidationReport report;
  for (std::size_t i = 0; i < ds.n(); ++i) {
    const Cycles d = ds.ind[i], s = ds.serv[i], p = ds.fail[i];
    if (!(d <= s && s <= p))
      report.violations.push_back({static_cast<int>(i), false, d, s, p});
  }
  for (std::size_t i = 0; i < ds.n_prime(); ++i) {
    const Cycles d = ds.ind_prime[i], s = ds.serv_prime[i];
    if (!(d <= s)) report.violations.push_back({static_cast<int>(i), true, d, s, 0});
  }
  return report;
}

}  // namespace failcast
