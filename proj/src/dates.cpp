#include "failcast/dates.hpp"

#include <cstdio>

#include "failcast/errors.hpp"

namespace failcast {

std::string format_iso_date(Day d) {
  int y, m, dd;
  civil_from_days(d, y, m, dd);
  char buf[16];
  std::snprintf(buf, sizeof buf, "%04d-%02d-%02d", y, m, dd);
  return buf;
}

Day parse_iso_date(const std::string& s) {
  int y = 0, m = 0, d = 0;
  char extra = 0;
  if (s.size() != 10 || std::sscanf(s.c_str(), "%4d-%2d-%2d%c", &y, &m, &d, &extra) != 3)
    throw ConfigError("invalid ISO date: '" + s + "' (expected YYYY-MM-DD)");
  if (m < 1 || m > 12 || d < 1 || d > 31)
    throw ConfigError("invalid ISO date: '" + s + "'");
  return days_from_civil(y, m, d);
}

}  // namespace failcast
