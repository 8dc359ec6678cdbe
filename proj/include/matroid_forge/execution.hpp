#pragma once

namespace matroid_forge {

/// Selects between the OpenMP kernels and their serial reference versions.
/// Both produce identical results; the serial path exists for testing and benchmarking.
enum class Exec { serial, parallel };

}  // namespace matroid_forge
