#pragma once

#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

namespace udw::csv {

// 17 significant digits round-trips every double exactly.
inline std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

inline void comment(std::ostream& os, const std::string& text) { os << "# " << text << "\n"; }

inline void row(std::ostream& os, const std::vector<std::string>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) os << ",";
    os << cells[i];
  }
  os << "\n";
}

inline void numeric_row(std::ostream& os, const std::vector<double>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) os << ",";
    os << fmt(cells[i]);
  }
  os << "\n";
}

}  // namespace udw::csv
