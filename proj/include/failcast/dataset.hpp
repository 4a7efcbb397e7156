#pragma once

#include <cstddef>
#include <vector>

#include "failcast/types.hpp"

namespace failcast {

// The per-(part, DTC) view of an observation window. Index-aligned vectors:
// fail[i], ind[i], serv[i] belong to failed_units[i]; ind_prime[i] and
// serv_prime[i] belong to future_units[i] (units whose DTC occurred and was
// observed inside the window while the part failure itself lies beyond it).
struct PartDataset {
  int part = 0;
  int dtc = 0;

  std::vector<int> failed_units;
  std::vector<Cycles> fail;
  std::vector<Cycles> ind;
  std::vector<Cycles> serv;

  std::vector<int> future_units;
  std::vector<Cycles> ind_prime;
  std::vector<Cycles> serv_prime;

  std::size_t n() const { return fail.size(); }
  std::size_t n_prime() const { return serv_prime.size(); }
};

struct OrderingViolation {
  int index = 0;      // position in the aligned vectors
  bool primed = false;
  Cycles d = 0, s = 0, p = 0;  // p unset for primed pairs
};

struct ValidationReport {
  std::vector<OrderingViolation> violations;
  bool valid() const { return violations.empty(); }
};

// Builds the dataset for (part, dtc) from the raw log. "First time" ties are
// broken by lowest cycles, then earliest date, then record order. Throws
// DataError when a failed unit lacks an occurrence or observation record, or
// when a triple violates d <= s <= p.
PartDataset assemble_sets(const EventLog& events, const Window& window, int part, int dtc);

// Reports every index where d <= s <= p fails (or d' <= s' on primed pairs).
ValidationReport validate_ordering(const PartDataset& ds);

}  // namespace failcast
