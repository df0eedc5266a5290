#pragma once

#include <string>

#include "aifnav/model.hpp"

namespace aifnav {

// Versioned self-describing JSON snapshot of a model: dimensions, normalized
// likelihood/transition matrices and per-state metadata. Used by the
// transition-plot dump and for offline analysis.
std::string model_to_json(const GenerativeModel& model);

}  // namespace aifnav
