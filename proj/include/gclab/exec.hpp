#pragma once

namespace gclab {

/// Selects the OpenMP kernel or the serial reference loop. Both produce
/// identical results; the serial path exists for testing and benchmarking.
enum class Exec { serial, parallel };

}  // namespace gclab
