#pragma once

#include <string>

namespace aifnav {

// Shortest decimal form that round-trips the double exactly; all emitted
// files go through this so identical runs produce identical bytes.
std::string format_double(double v);

}  // namespace aifnav
