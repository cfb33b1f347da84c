#pragma once

#include <filesystem>
#include <ostream>
#include <vector>

#include "zaqlms/experiment.hpp"

namespace zaqlms {

/// Writes `iteration,<algo>_mse,<algo>_mse_db,...` followed by one LF-terminated
/// row per iteration. Reals use the shortest representation that round-trips.
/// Throws std::invalid_argument for an empty list or unequal curve lengths.
void write_csv(const std::vector<LearningCurve>& curves, std::ostream& out);

/// write_csv into `<path>.tmp` then rename over path, so path is either the
/// previous file or the complete new one. Throws IoError on failure.
void emit_csv(const std::vector<LearningCurve>& curves, const std::filesystem::path& path);

}  // namespace zaqlms
