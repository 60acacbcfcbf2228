#pragma once

// Versioned, byte-deterministic CSV emission: fixed column order, 17
// significant digits, one header comment line carrying the schema version.

#include <string>
#include <vector>

#include "hatom/trajectory.hpp"

namespace hatom::io {

// Generic column table -> CSV string. `units` must be parallel to `names`.
std::string csv_table(const std::string& kind, const std::vector<std::string>& names,
                      const std::vector<std::string>& units,
                      const std::vector<std::vector<double>>& columns);

// TrajectoryRecord with the standard hybrid/oracle column set (3-vector
// components plus energy, norm, and any populations as pop_<n> columns).
std::string trajectory_csv(const std::string& kind, const TrajectoryRecord& rec);

void write_text_file(const std::string& path, const std::string& content);

} // namespace hatom::io
