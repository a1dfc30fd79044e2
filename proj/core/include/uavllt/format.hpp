#pragma once

#include <string>

namespace uavllt {

/// Shortest round-trip decimal form; "inf" / "-inf" / "nan" for non-finite values.
std::string format_double(double v);

} // namespace uavllt
