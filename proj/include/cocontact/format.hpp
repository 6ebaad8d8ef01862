#pragma once

#include <string>

namespace cocontact {

/// Shortest round-trip decimal rendering used by every emitted artifact, so
/// reruns are byte-identical and parsed values reproduce the doubles.
std::string g17(double v);

}  // namespace cocontact
