#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

namespace failcast {

// Usage cycles (miles in the vehicle instantiation). Event records carry
// cycles quantized to 3 fractional digits so the in-memory log and its CSV
// form hold identical values.
using Cycles = double;

// Days since 1970-01-01. Events are day-granular.
using Day = std::int32_t;

inline Cycles quantize_cycles(double x) { return std::round(x * 1000.0) / 1000.0; }

enum class WindowKind { Observation, Forecast };

// Closed interval [start, end] in days.
struct Window {
  Day start = 0;
  Day end = 0;
  WindowKind kind = WindowKind::Observation;

  bool contains(Day d) const { return d >= start && d <= end; }
  int length_days() const { return static_cast<int>(end - start); }
};

// First failure of `part` in `unit`, at `cycles` of accrued usage.
struct FailureRecord {
  int unit = 0;  // 1..n
  int part = 0;  // 1..m
  Cycles cycles = 0;
  Day date = 0;
};

// First tele-diagnostic occurrence of DTC `dtc` of `part` in `unit`.
// DTC indices are per part; a DTC never spans parts.
struct DtcOccurrenceRecord {
  int unit = 0;
  int part = 0;
  int dtc = 0;  // 1..r
  Cycles cycles = 0;
  Day date = 0;
};

// First service-station observation of the DTC.
struct ServiceObservationRecord {
  int unit = 0;
  int part = 0;
  int dtc = 0;
  Cycles cycles = 0;
  Day date = 0;
};

struct EventLog {
  std::vector<FailureRecord> failures;
  std::vector<DtcOccurrenceRecord> occurrences;
  std::vector<ServiceObservationRecord> observations;
};

}  // namespace failcast
